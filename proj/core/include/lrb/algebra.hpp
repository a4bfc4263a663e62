#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrb/linalg.hpp"
#include "lrb/lrb.hpp"

namespace lrb {

// Elements of QB as coefficient vectors indexed by B.
using AlgebraElement = QVector;

AlgebraElement basis_element(const Lrb& b, int a);
AlgebraElement multiply(const Lrb& b, const AlgebraElement& x, const AlgebraElement& y);
bool is_zero(const AlgebraElement& x);

struct IdempotentSystem {
  std::vector<int> choice;           // e_X per support
  std::vector<AlgebraElement> eta;   // eta_X per support
  AlgebraElement eta_sum;
  bool idempotent = false;           // eta_X^2 = eta_X
  bool orthogonal = false;           // eta_X eta_Y = 0 for X != Y
  bool right_identity = false;       // a * sum = a for all a
  bool annihilation = false;         // a eta_X = 0 unless sigma(a) >= X

  bool all_pass() const { return idempotent && orthogonal && right_identity && annihilation; }
};

// eta_X = e_X - sum_{Y<X} e_X eta_Y, bottom-up.  An empty choice means the
// band's own representatives.
IdempotentSystem eta_idempotents(const Lrb& b, std::vector<int> choice = {});

// sum eta_X when it is a two-sided identity.
std::optional<AlgebraElement> identity_element(const Lrb& b);
std::optional<AlgebraElement> identity_element(const Lrb& b, const IdempotentSystem& sys);

struct RadicalInfo {
  std::vector<AlgebraElement> basis;  // b - e_{sigma(b)}, b not a representative
  long dim = 0;
  int nilpotency = 0;                 // least m with J^m = 0
  std::vector<long> power_dims;       // dim J^1, J^2, ..., last entry 0
  int bound = 0;                      // 1 + elements in a longest chain of Lambda
  bool spans_kernel = false;          // span equals ker of the support map
};

RadicalInfo radical(const Lrb& b);

// Left module of finite dimension; action[a] is the matrix of a.
struct ModuleAction {
  int dim = 0;
  std::vector<SparseMatrix> action;
  std::vector<std::string> basis_names;

  // action(ab) = action(a) action(b) for all a, b.
  bool is_module(const Lrb& b) const;
};

// kL_X: a.b = ab if sigma(a) >= X and 0 otherwise.
ModuleAction schutzenberger_module(const Lrb& b, int x);
// dim kB eta_X and rank of b -> b eta_X on L_X; both equal |L_X| for the
// isomorphism kL_X = kB eta_X.
struct SchutzenbergerCheck {
  long dim_eta_ideal = 0;
  long rank_on_class = 0;
  long class_size = 0;
  bool passes() const { return dim_eta_ideal == class_size && rank_on_class == class_size; }
};
SchutzenbergerCheck schutzenberger_vs_eta(const Lrb& b, int x, const IdempotentSystem& sys);

// Simple module k_X.
ModuleAction simple_module(const Lrb& b, int x);

// Multiplicity of each simple k_Z, from traces of e_W by Mobius inversion.
// Throws NegativeMultiplicity.
std::vector<std::int64_t> composition_multiplicities(const Lrb& b, const ModuleAction& m);

// Trace of a square integer matrix.
std::int64_t trace(const SparseMatrix& m);

}  // namespace lrb
