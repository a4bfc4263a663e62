#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lrb/algebra.hpp"
#include "lrb/ext.hpp"
#include "lrb/lrb.hpp"
#include "lrb/simplicial.hpp"

namespace lrb {

// Augmented complex of kB-modules.  modules[0] is the simple module in
// degree -1; modules[i] sits in degree i-1 and d[i] maps it to modules[i-1].
struct ModuleComplex {
  int target = 0;  // support X of the resolved simple module
  std::vector<ModuleAction> modules;
  std::vector<SparseMatrix> d;

  bool module_maps = false;      // d commutes with every generator
  bool actions_valid = false;    // each degree is a module
  bool squares_to_zero = false;
  bool exact_q = false;
  bool exact_f2 = false;
  bool torsion_free = false;     // integral homology vanishes

  std::vector<long> ranks() const;  // degrees 0, 1, ...
  ChainComplex chain_complex() const;
  bool exact() const { return exact_q && exact_f2 && torsion_free; }
  bool certified() const { return module_maps && actions_valid && squares_to_zero && exact(); }
};

// Runs every certificate on `c`.
void certify(const Lrb& b, ModuleComplex& c);

struct MultiplicityCertificate {
  // counts[q][Y]: q-simplices of the order complex of e_Y B_{>=X} with e_Y
  // as a vertex.
  std::vector<std::vector<std::int64_t>> counts;
  bool ranks_match = false;        // sum_Y counts * |L_Y| = rank C_q
  bool characters_match = false;   // composition factors agree
};

struct OrderComplexResolution {
  ModuleComplex complex;
  MultiplicityCertificate multiplicities;
};

// Chains of B_{>=X}; a acts by a[v0..vq] = [av0..avq], degenerate chains
// and elements with support not above X act by 0.  Throws NotConnected.
OrderComplexResolution order_complex_resolution(const Lrb& b, int x);

struct MinimalityCertificate {
  // hom[q][Y] = dim Hom(C_q, k_Y) from the model e_Y C_q / k[de_Y B] C_q.
  std::vector<std::vector<long>> hom;
  bool coboundaries_vanish = false;
  bool hom_matches_ext = false;
  bool decomposition_matches = false;  // C_q = sum_{rk[X,Y]=q} kL_Y
  bool minimal() const { return coboundaries_vanish && hom_matches_ext && decomposition_matches; }
};

struct CellularResolution {
  ModuleComplex complex;
  MinimalityCertificate minimality;
};

// Cellular chain complex of B_{>=X} with the transported action.  Throws
// NotConnected or NotCwProxy.
CellularResolution minimal_cellular_resolution(const Lrb& b, int x);

// Elements whose left stabilizer is not commutative (empty when geometric).
std::vector<int> non_geometric_witnesses(const Lrb& b);

struct CrosscutResolution {
  ModuleComplex complex;
  SimplicialComplex crosscut;
  bool degree0_is_projective_cover = false;  // C_0 = kL_X
};

// Complex of subsets of L_X with a common upper bound.  Throws
// NotConnected or NotGeometric.
CrosscutResolution geometric_crosscut_resolution(const Lrb& b, int x);

struct RightCoverCertificate {
  long quotient_dim = 0;  // dim kB / kR
  bool covers_boundary = false;
  bool connected = false;
};
// Throws NotMonoid, NotRightIdeal, or ConditionFailed naming the failing
// condition.
RightCoverCertificate right_projective_cover(const Lrb& b, const std::vector<int>& region);

struct InjectiveEnvelope {
  ModuleAction module;
  std::vector<int> basis;         // elements of e_X B outside R
  long socle_dim = 0;
  bool socle_is_simple_x = false;  // spanned by the indicator of e_X, acting as k_X
  std::vector<std::int64_t> multiplicities;
};
// Maps e_X B -> k vanishing on R with (bf)(a) = f(ab).  Throws
// HemisphereInvalid when R fails the cover conditions inside e_X B.
InjectiveEnvelope injective_envelope(const Lrb& b, int x, const std::vector<int>& region);

struct NecklaceReport {
  int n = 0;
  std::int64_t by_partitions = 0;  // ordered set partitions with n in the first block
  std::int64_t by_mobius = 0;      // sum over set partitions of |mu(X, 1)|
  bool match() const { return by_partitions == by_mobius; }
};
NecklaceReport necklace_count(int n);

}  // namespace lrb
