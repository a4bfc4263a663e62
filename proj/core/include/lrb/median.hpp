#pragma once

#include <cstdint>
#include <vector>

#include "lrb/covectors.hpp"
#include "lrb/graph.hpp"
#include "lrb/lrb.hpp"
#include "lrb/simplicial.hpp"

namespace lrb {

inline constexpr int kMaxMedianVertices = 40;
inline constexpr int kMaxCubeDim = 8;

// CAT(0) cube complex recovered from its 1-skeleton.
struct MedianComplex {
  Graph graph;
  std::vector<std::pair<int, int>> edges;  // graph.edges()
  std::vector<int> edge_class;             // per edge, Theta-class index
  int num_classes = 0;
  // halfspace[c][v]: Plus on the side containing vertex 0, Minus otherwise.
  std::vector<std::vector<Sign>> halfspace;
  std::vector<Covector> vertex_covector;
  // cubes[k] holds the k-cubes as covectors with exactly k zeros.
  std::vector<std::vector<Covector>> cubes;
  // Theta from squares agrees with the Djokovic-Winkler relation.
  bool theta_consistent = false;

  std::vector<std::int64_t> f_vector() const;
  // Two hyperplanes cross iff some square uses both.
  Graph crossing_graph() const;
  // Vertices of the cube with covector x.
  std::vector<int> cube_vertices(const Covector& x) const;
};

struct Cat0Result {
  MedianComplex complex;
  CovectorSet covectors;
  Lrb lrb;
};

// Throws NotConnected, NotMedian (witness triple) or TooLarge.
Cat0Result cat0_from_median_graph(const Graph& g);

}  // namespace lrb
