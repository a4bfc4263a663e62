#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrb/linalg.hpp"
#include "lrb/lrb.hpp"
#include "lrb/poset.hpp"

namespace lrb {

// Entries of sign vectors.  Zero < Plus < Minus is the canonical order used
// when sorting covectors, so the zero vector sorts first.
enum class Sign : std::int8_t { Zero = 0, Plus = 1, Minus = 2, I = 3, J = 4 };
enum class Alphabet { L, Ltilde };

using Covector = std::vector<Sign>;

char to_char(Sign s);
Sign sign_from_char(char c);
std::string to_string(const Covector& x);
Covector covector_from_string(const std::string& s);
std::string to_string(Alphabet a);

Covector compose(const Covector& x, const Covector& y, Alphabet a = Alphabet::L);
std::vector<int> zero_set(const Covector& x);
std::vector<int> separation_set(const Covector& x, const Covector& y);
Covector negate(const Covector& x);

struct CovectorSet {
  std::vector<std::string> ground;
  Alphabet alphabet = Alphabet::L;
  std::vector<Covector> vectors;  // sorted, distinct

  int ground_size() const { return static_cast<int>(ground.size()); }
  long find(const Covector& x) const;  // -1 if absent
  bool contains(const Covector& x) const { return find(x) >= 0; }
  static CovectorSet make(std::vector<std::string> ground, std::vector<Covector> vs,
                          Alphabet a = Alphabet::L);
};

// The band of a composition-closed covector set; element i is vectors[i].
Lrb covector_lrb(const CovectorSet& cs);

struct Arrangement {
  int dim = 0;
  std::vector<QVector> forms;
  QVector constants;

  std::size_t size() const { return forms.size(); }
  bool is_central() const;
  bool is_essential() const;
  void validate() const;  // ZeroForm, DuplicateHyperplane, DimensionMismatch
};

inline constexpr int kMaxHyperplanes = 9;

// Is there x in Q^d with sgn(f_i(x) - c_i) = pattern_i for every i?
bool sign_feasible(int dim, const std::vector<QVector>& forms, const QVector& constants,
                   const Covector& pattern);
// Same question with the extra strict condition g(x) > 0.
bool sign_feasible_with(int dim, const std::vector<QVector>& forms, const QVector& constants,
                        const Covector& pattern, const QVector& g);

struct FaceBand {
  CovectorSet covectors;
  Lrb lrb;
};

FaceBand face_monoid_central(const Arrangement& arr);
FaceBand face_semigroup_affine(const Arrangement& arr);

struct AxiomFailure {
  std::string axiom;
  std::string witness;
};

struct AxiomReport {
  bool om0 = false;          // zero vector
  bool om1 = false;          // symmetry
  bool om2 = false;          // composition
  bool om3 = false;          // strong elimination
  bool fs = false;           // face symmetry
  bool right_ideal = false;  // right ideal of L^E
  std::vector<AxiomFailure> failures;

  bool oriented_matroid() const { return om0 && om1 && om2 && om3; }
  bool com() const { return fs && om3; }
  bool lopsided() const { return right_ideal && om3; }
  bool strong_elimination_system() const { return om2 && om3; }
};

AxiomReport check_axioms(const CovectorSet& cs);

// Topes: the minimal elements of the natural order (the minimal ideal).
std::vector<Covector> topes(const CovectorSet& cs);
// Maximal elements among the nonzero covectors.
std::vector<Covector> cocircuits(const CovectorSet& cs);
// Closure of `gens` under composition, with the zero vector added.
CovectorSet generated_by(const std::vector<std::string>& ground, const std::vector<Covector>& gens);

struct LexExtension {
  std::vector<Covector> cocircuits;     // of the original
  std::vector<Sign> sigma;              // per cocircuit
  std::vector<Covector> new_cocircuits;
  CovectorSet extension;                // ground gains element "p" at the end
  bool generic = false;
  AxiomReport axioms;                   // of the extension
  std::vector<Covector> hemisphere;     // pi of {x : x_p = +}
};

LexExtension lexicographic_extension(const CovectorSet& cs, const std::vector<int>& order,
                                     const std::vector<Sign>& alphas);

struct Hemisphere {
  QVector form;
  std::vector<int> region;       // element indices of the face monoid
  bool generic = false;
  bool covers_boundary = false;  // BR = dB
  bool region_connected = false;
  std::uint64_t seed = 0;
  int attempts = 0;
  std::string method;            // "random" or "epsilon"
};

// True iff g vanishes on no nonzero flat of the central arrangement.
bool is_generic_form(const Arrangement& arr, const CovectorSet& faces, const QVector& g);
// R(H) for a supplied form; the form must be generic.
Hemisphere visual_hemisphere_with_form(const Arrangement& arr, const FaceBand& fb,
                                       const QVector& g);
// Seeded search for a generic form, then R(H).  Throws GenericSearchExhausted.
Hemisphere visual_hemisphere_realizable(const Arrangement& arr, const FaceBand& fb,
                                        std::uint64_t seed);
// Cover conditions for a proper right ideal R of a monoid: BR = dB and R is
// a connected band.
struct CoverCheck {
  bool right_ideal = false;
  bool proper = false;
  bool covers_boundary = false;
  bool connected = false;
  bool passes() const { return right_ideal && proper && covers_boundary && connected; }
};
CoverCheck check_cover_conditions(const Lrb& b, const std::vector<int>& region);

// Ordered set partitions of [n], blocks listed by increasing coordinate.
using OrderedPartition = std::vector<std::vector<int>>;
std::vector<OrderedPartition> ordered_set_partitions(int n);
std::string to_string(const OrderedPartition& p);
OrderedPartition braid_product(const OrderedPartition& p, const OrderedPartition& q);
Lrb braid_face_monoid(int n);
// Ordered partitions in which i < j in the poset puts i in an earlier block.
Lrb ranking_com(const Poset& p);
// x_i - x_j for i < j with x_n = 0, an essential realization in Q^{n-1}.
Arrangement braid_arrangement(int n);
// Covector of an ordered partition against braid_arrangement(n).
Covector braid_covector(const OrderedPartition& p, int n);

Arrangement boolean_arrangement(int n);

}  // namespace lrb
