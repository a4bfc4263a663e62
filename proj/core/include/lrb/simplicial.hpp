#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrb/graph.hpp"
#include "lrb/linalg.hpp"
#include "lrb/poset.hpp"

namespace lrb {

// A face is a strictly increasing vector of vertex indices.
using Simplex = std::vector<int>;

// Finite abstract simplicial complex on the vertex set 0..n-1.  Every vertex
// is a face; the empty face is implicit.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(int n);

  static SimplicialComplex from_facets(int n, const std::vector<Simplex>& facets);
  // `faces` must already be closed under taking subsets.
  static SimplicialComplex from_closed_faces(int n, std::vector<Simplex> faces);

  int num_vertices() const { return n_; }
  int dim() const { return static_cast<int>(faces_.size()) - 1; }
  const std::vector<Simplex>& faces(int d) const;
  std::size_t count(int d) const { return faces(d).size(); }
  long index_of(const Simplex& s) const;  // -1 if absent
  bool contains(const Simplex& s) const { return index_of(s) >= 0; }
  std::vector<Simplex> facets() const;
  std::vector<std::int64_t> f_vector() const;

  SimplicialComplex induced(const std::vector<int>& vs) const;
  SimplicialComplex link(const Simplex& s) const;

  std::vector<std::string> labels;

 private:
  void add_closed(std::vector<Simplex> faces);

  int n_ = 0;
  std::vector<std::vector<Simplex>> faces_;
};

// Augmented chain complex.  dims[i] is the rank of C_{low+i}; d[i] maps
// C_{low+i} to C_{low+i-1} (d[0] has zero rows).
struct ChainComplex {
  int low = -1;
  std::vector<long> dims;
  std::vector<SparseMatrix> d;

  int high() const { return low + static_cast<int>(dims.size()) - 1; }
  bool squares_to_zero() const;
};

// Coefficients: a field, or the integers when the optional is empty.
using Coefficients = std::optional<Field>;
inline constexpr Coefficients kIntegers = std::nullopt;
std::string to_string(const Coefficients& c);

struct HomologyResult {
  Coefficients coeffs;
  int low = -1;
  std::vector<long> betti;                      // betti[i] is degree low+i
  std::vector<std::vector<Integer>> torsion;    // integers only

  long rank(int degree) const;
  bool has_torsion(int degree) const;
  bool vanishes(int degree) const { return rank(degree) == 0 && !has_torsion(degree); }
  bool acyclic() const;
  // Highest degree with nonzero group, or nullopt if acyclic.
  std::optional<int> top_nonzero() const;
};

ChainComplex augmented_chain_complex(const SimplicialComplex& k);
HomologyResult homology(const ChainComplex& c, const Coefficients& ring);
HomologyResult reduced_homology(const SimplicialComplex& k, const Coefficients& ring);
// Cohomology obtained from homology by universal coefficients.
HomologyResult reduced_cohomology(const SimplicialComplex& k, const Coefficients& ring);
HomologyResult cohomology_from_homology(const HomologyResult& h);

SimplicialComplex order_complex(const Poset& p);
// Order complex of the sub-poset on `elems`; vertex i is elems[i].
SimplicialComplex order_complex(const Poset& p, const std::vector<int>& elems);
SimplicialComplex clique_complex(const Graph& g);
// Vertex i is sets[i]; faces are subfamilies with a common element.
SimplicialComplex nerve(const std::vector<std::vector<int>>& sets);

int leray_number(const SimplicialComplex& k, const Coefficients& ring);

bool cohen_macaulay(const SimplicialComplex& k, const Coefficients& ring);

struct CmIntervalFailure {
  int x = 0;
  int y = 0;
  std::string ring;
};
struct CmIntervalReport {
  bool all_pass = true;
  int intervals_checked = 0;
  std::vector<CmIntervalFailure> failures;
};
// Cohen-Macaulay test of the order complex of every open interval (x, y),
// x < y, over Q, F2, F3 and the integers.
CmIntervalReport cm_open_intervals(const Poset& p);

}  // namespace lrb
