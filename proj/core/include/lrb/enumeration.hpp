#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lrb/lrb.hpp"
#include "lrb/median.hpp"

namespace lrb {

// Fiber sizes of the support map against sums of |mu| over Lambda.
struct CellCountReport {
  std::vector<std::int64_t> direct;        // |sigma^{-1}(X)| per support
  std::vector<std::int64_t> mobius_side;   // sum_{Y >= X} |mu(X, Y)|
  std::vector<std::int64_t> f;             // cells of Sigma(B) by dimension
  std::vector<std::int64_t> f_mobius;      // sum_{dim X = k, Y >= X} |mu(X, Y)|
  std::int64_t minimal_ideal = 0;
  std::int64_t minimal_ideal_mobius = 0;   // sum_X |mu(0, X)|
  std::int64_t euler = 0;                  // of Sigma(B); 1 when acyclic
  bool match() const {
    return direct == mobius_side && f == f_mobius && minimal_ideal == minimal_ideal_mobius &&
           euler == 1;
  }
};

// Throws PreconditionError "NotCwLrb" unless b is a connected CW LRB.
CellCountReport cell_counts_vs_mobius(const Lrb& b);

// Flag counts keyed by the set of dimensions J.
struct FlagReport {
  std::map<std::vector<int>, std::int64_t> direct;       // chains in B
  std::map<std::vector<int>, std::int64_t> mobius_side;  // products over chains in Lambda
  bool match() const { return direct == mobius_side; }
};

FlagReport flag_vector_vs_mobius(const Lrb& b);

struct Cat0FReport {
  std::vector<std::int64_t> f;          // cube census of K
  std::vector<std::int64_t> clique_f;   // f_{-1}, f_0, ... of Cliq(crossing graph)
  std::vector<std::int64_t> formula;    // sum_i C(i, k) f_{i-1}
  bool match() const { return f == formula; }
};

Cat0FReport cat0_f_identity(const MedianComplex& mc);

}  // namespace lrb
