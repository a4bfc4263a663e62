#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lrb/graph.hpp"
#include "lrb/lrb.hpp"

namespace lrb {

inline constexpr int kMaxFreeLetters = 7;
inline constexpr int kMaxFpcVertices = 6;

Lrb trivial_lrb();          // {0}
Lrb table_L();              // 0, +, -
Lrb table_Ltilde();         // 0, +, -, i, j
Lrb left_zero(int n);       // xy = x
Lrb chain_semilattice(int n);  // {0..n-1} under min

Lrb free_lrb(const std::vector<std::string>& alphabet);
// B(G): the free partially commutative left regular band monoid, letters
// commuting exactly along edges of G.  Element names are normal-form words,
// "1" for the identity.
Lrb free_partially_commutative(const Graph& g);
// Number of elements of B(G) counted as acyclic orientations of the induced
// subgraphs of the complement of G.
long fpc_size_by_orientations(const Graph& g);

// `independents` must be hereditary and satisfy exchange.
Lrb matroid_lrb(const std::vector<std::string>& ground,
                const std::vector<std::vector<std::string>>& independents);

Lrb ladder(int n);

// B * B': elements of b first, then of bp; b'b = b = bb' for b in B.
Lrb join(const Lrb& b, const Lrb& bp);
// S(B): elements of b followed by two new absorbing elements.
Lrb suspension(const Lrb& b, const std::pair<std::string, std::string>& new_names = {"+", "-"});
// Index of (a, a') is a * |B'| + a'.
Lrb product(const Lrb& b, const Lrb& bp);
// B^1: always a new identity, appended last and named "1".
Lrb adjoin_identity(const Lrb& b);

}  // namespace lrb
