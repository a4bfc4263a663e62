#pragma once

#include <cstdint>
#include <vector>

#include "lrb/graph.hpp"
#include "lrb/linalg.hpp"
#include "lrb/lrb.hpp"
#include "lrb/simplicial.hpp"

namespace lrb {

// dims[n][x * size + y] = dim Ext^n(k_x, k_y).
struct ExtTable {
  Field field = Field::Q;
  int size = 0;
  std::vector<std::vector<long>> dims;

  int max_degree() const { return static_cast<int>(dims.size()) - 1; }
  long at(int n, int x, int y) const {
    if (n < 0 || n > max_degree()) return 0;
    return dims[n][static_cast<std::size_t>(x) * size + y];
  }
  bool operator==(const ExtTable& o) const { return size == o.size && dims == o.dims; }
};

// {b < e_Y : sigma(b) >= X}, the vertex set of the complex computing Ext.
std::vector<int> ext_vertex_set(const Lrb& b, int x, int y);
SimplicialComplex ext_complex(const Lrb& b, int x, int y);

// Ext^n(k_X, k_Y) = reduced H^{n-1} of the order complex of the elements
// strictly below e_Y with support at least X.  Throws NotConnected.
ExtTable ext_table(const Lrb& b, Field f);

// Table indexed by subsets of the vertex set (bitmasks) from clique
// complexes of induced subgraphs.
ExtTable fpc_ext_table(const Graph& g, Field f);
// Vertex subset (bitmask) for each support of B(G), read off from the
// letters: v belongs to X iff e_X a_v = e_X.
std::vector<unsigned> fpc_support_masks(const Graph& g, const Lrb& fpc);
// ext_table(B(G)) relabelled through fpc_support_masks.
ExtTable relabel(const ExtTable& t, const std::vector<unsigned>& masks, int new_size);

// Arrow multiplicities X -> Y, from Ext^1.
std::vector<std::vector<long>> quiver(const Lrb& b, Field f = Field::Q);
int global_dimension(const Lrb& b, Field f = Field::Q);

// Largest n with reduced H^{n-1}(order complex of the elements strictly
// below e_Y) nonzero for some Y.  Throws NotMonoid.
int cohomological_dimension(const Lrb& b, const Coefficients& ring);
struct CdReport {
  int value = 0;
  bool used_b1 = false;  // computed on B with an identity adjoined
};
CdReport cohomological_dimension_report(const Lrb& b, const Coefficients& ring);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

// C[X][Y] = multiplicity of k_X in kL_Y.
IntMatrix cartan_by_characters(const Lrb& b);
IntMatrix cartan_by_mobius(const Lrb& b);
IntMatrix cartan_by_modules(const Lrb& b);
bool is_unipotent_lower_triangular(const Lrb& b, const IntMatrix& c);
std::int64_t entry_sum(const IntMatrix& c);

}  // namespace lrb
