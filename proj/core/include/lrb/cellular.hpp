#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lrb/linalg.hpp"
#include "lrb/poset.hpp"
#include "lrb/simplicial.hpp"

namespace lrb {

// Homological stand-in for the CW poset condition: the poset is graded and
// for every element s of height h the order complex of the strict lower set
// has the integral reduced homology of an (h-1)-sphere.  Verdicts produced
// here are labelled "homology-CW".
struct CwReport {
  bool graded = false;
  bool passes = false;
  int dim = -1;
  std::optional<int> witness;  // element whose lower set fails
  std::string reason;
};

CwReport homology_cw_report(const Poset& p);

// Cellular chain complex of a homology-CW poset.  Cells are the poset
// elements graded by height.  Each cell c carries a relative fundamental cycle
// z_c: a +-1 combination of the full flags ending at c, signed so that the
// lexicographically smallest flag has coefficient +1.
struct CellularComplex {
  using Flag = std::vector<int>;

  int dim = -1;
  std::vector<std::vector<int>> cells;  // cells[q], increasing element order
  std::vector<int> position;            // element -> index inside cells[height]
  std::vector<int> height;
  std::vector<std::map<Flag, int>> cycle;  // per element
  // boundary[q] maps C_q to C_{q-1}; boundary[0] is the augmentation.
  std::vector<SparseMatrix> boundary;
  bool diamonds_ok = false;
  bool squares_to_zero = false;

  // Augmented chain complex with C_{-1} = Z.
  ChainComplex chain_complex() const;
  std::vector<long> ranks() const;
  int incidence(int c, int a) const;  // [c : a]
};

// Throws PreconditionError "NotCwProxy" if the proxy fails and Error
// "SignSolveFailed" if the flags of some lower set do not form a
// pseudomanifold with a +-1 cycle.
CellularComplex cellular_chain_complex(const Poset& p);

}  // namespace lrb
