#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lrb/linalg.hpp"
#include "lrb/lrb.hpp"

namespace lrb {

struct Quiver {
  int vertices = 0;
  std::vector<std::pair<int, int>> arrows;  // (source, target)
  std::vector<std::string> vertex_names;
};

// Arrow indices, composed left to right: the target of path[i] is the
// source of path[i+1].
using Path = std::vector<int>;

struct Relation {
  std::vector<std::pair<Path, Rational>> terms;
};

// Paths of length k in the quiver.
std::vector<Path> paths_of_length(const Quiver& q, int k);

// dim of (kQ/I)_k for k = 0, 1, ... until no paths remain, where I is the
// ideal generated by homogeneous length-2 relations.  Throws NotAcyclic or
// NotQuadratic.
std::vector<long> path_algebra_quotient_dims(const Quiver& q, const std::vector<Relation>& rels);

// Homology-CW test of every contraction B_{>=X}, plus connectivity.
struct CwLrbReport {
  bool connected = false;
  bool passes = false;
  int dim = -1;
  std::vector<int> failing_supports;
  std::string reason;
};
CwLrbReport is_cw_lrb(const Lrb& b);

// Quiver = Hasse diagram of Lambda; one relation per rank-2 interval, the
// sum of its length-2 paths.
struct QuiverPresentation {
  Quiver quiver;
  std::vector<Relation> relations;
  std::vector<std::pair<int, int>> relation_intervals;
  std::vector<long> quotient_dims;
  long total = 0;
  bool dimension_matches = false;  // total == |B|
};
// Throws NotCwLrb.
QuiverPresentation quiver_presentation_cw(const Lrb& b);
// Presentation data without the CW precondition.
QuiverPresentation hasse_presentation(const Lrb& b);

struct QuadraticDual {
  Quiver quiver;                   // opposite quiver
  std::vector<Relation> relations;  // orthogonal complement in degree 2
  std::vector<long> dims;
  std::vector<long> interval_counts;  // pairs X <= Y by rank of [X, Y]
  long total = 0;
  long pairs = 0;  // #{(X, Y) : X <= Y}
  bool matches = false;
};
// Throws NotCwLrb.
QuadraticDual quadratic_dual_dims(const Lrb& b);

struct IncidenceCertificate {
  bool thin = false;
  bool cartan_is_zeta = false;
  bool passes() const { return thin && cartan_is_zeta; }
};
IncidenceCertificate incidence_algebra_certificate(const Lrb& b);

}  // namespace lrb
