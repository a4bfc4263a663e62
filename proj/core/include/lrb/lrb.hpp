#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrb/graph.hpp"
#include "lrb/poset.hpp"

namespace lrb {

inline constexpr int kMaxTableSize = 5000;

// Raw multiplication table; table[a*n+b] = ab.
struct SemigroupTable {
  int n = 0;
  std::vector<int> table;
  std::vector<std::string> names;

  int at(int a, int b) const { return table[static_cast<std::size_t>(a) * n + b]; }
  bool operator==(const SemigroupTable& o) const { return n == o.n && table == o.table; }
};

// Support semilattice data.  Supports are numbered by first appearance of an
// element with that support; X <= Y iff Be_X is contained in Be_Y.
struct Support {
  Poset lam;
  std::vector<int> sigma;               // element -> support
  std::vector<std::vector<int>> classes;  // L_X in increasing element order
  std::vector<int> meet;                // |Lam| x |Lam|
  std::vector<std::int64_t> mobius;     // |Lam| x |Lam|
  std::vector<int> rep;                 // chosen e_X

  int size() const { return lam.size(); }
  int meet_of(int x, int y) const { return meet[static_cast<std::size_t>(x) * size() + y]; }
  std::int64_t mu(int x, int y) const { return mobius[static_cast<std::size_t>(x) * size() + y]; }
};

class Lrb {
 public:
  // Throws Error with kind NotAssociative, NotIdempotent, NotLeftRegular,
  // TableOutOfRange or TableTooLarge; the detail names a witness.
  static Lrb validate(SemigroupTable t);

  int size() const { return t_.n; }
  int mul(int a, int b) const { return t_.at(a, b); }
  const SemigroupTable& table() const { return t_; }
  const std::vector<std::string>& names() const { return t_.names; }
  std::string name(int a) const { return t_.names[a]; }

  std::optional<int> identity() const { return identity_; }
  bool is_monoid() const { return identity_.has_value(); }

  // Natural order: e <= f iff fe = e.
  const Poset& order() const { return order_; }
  bool leq(int e, int f) const { return mul(f, e) == e; }

  const Support& support() const { return support_; }
  const Poset& lambda() const { return support_.lam; }
  int num_supports() const { return support_.size(); }
  int sigma(int a) const { return support_.sigma[a]; }
  const std::vector<int>& lclass(int x) const { return support_.classes[x]; }
  int rep(int x) const { return support_.rep[x]; }

  // Same band with e_X the largest element of each class.
  Lrb with_rotated_representatives() const;

  // sigma^{-1}(Lam_{>=X}), increasing element order.
  std::vector<int> contraction_elements(int x) const;
  // eB = {b : b <= e}, increasing element order.
  std::vector<int> principal_down(int e) const;

 private:
  SemigroupTable t_;
  std::optional<int> identity_;
  Poset order_;
  Support support_;
};

// A sub-band together with its embedding into the parent.
struct Restriction {
  Lrb lrb;
  std::vector<int> embed;
};

Restriction contraction(const Lrb& b, int x);
Restriction deletion(const Lrb& b, int a);
// Restriction of the table to a multiplicatively closed subset.
Restriction subsemigroup(const Lrb& b, const std::vector<int>& elems);

// Vertices L_X; x ~ y when some b satisfies bx = x and by = y.
Graph connectivity_graph(const Lrb& b, int x);
bool is_connected(const Lrb& b);
// Direct check on the order complex of B_{>=X}, used as a cross-check.
bool order_complex_connected(const Lrb& b, int x);

// L-classes ordered by a linear extension of Lam (height, then index).
std::vector<std::vector<int>> principal_series(const Lrb& b);

// Some bijection phi with phi(ab) = phi(a)phi(b), if one exists.
std::optional<std::vector<int>> find_isomorphism(const Lrb& a, const Lrb& b);

}  // namespace lrb
