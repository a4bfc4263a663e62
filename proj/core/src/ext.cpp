#include "lrb/ext.hpp"

#include <algorithm>

#include "lrb/algebra.hpp"
#include "lrb/constructions.hpp"
#include "lrb/error.hpp"

namespace lrb {

namespace {

void require_connected(const Lrb& b) {
  if (!is_connected(b)) throw PreconditionError("NotConnected", "the algebra is not unital");
}

}  // namespace

std::vector<int> ext_vertex_set(const Lrb& b, int x, int y) {
  const int ey = b.rep(y);
  std::vector<int> out;
  for (int a = 0; a < b.size(); ++a) {
    if (b.order().lt(a, ey) && b.lambda().leq(x, b.sigma(a))) out.push_back(a);
  }
  return out;
}

SimplicialComplex ext_complex(const Lrb& b, int x, int y) {
  return order_complex(b.order(), ext_vertex_set(b, x, y));
}

ExtTable ext_table(const Lrb& b, Field f) {
  require_connected(b);
  const int m = b.num_supports();
  ExtTable t;
  t.field = f;
  t.size = m;
  auto put = [&](int n, int x, int y, long v) {
    while (static_cast<int>(t.dims.size()) <= n) {
      t.dims.emplace_back(static_cast<std::size_t>(m) * m, 0);
    }
    t.dims[n][static_cast<std::size_t>(x) * m + y] = v;
  };
  put(0, 0, 0, 0);
  for (int x = 0; x < m; ++x) {
    put(0, x, x, 1);
    for (int y = 0; y < m; ++y) {
      if (!b.lambda().lt(x, y)) continue;
      const HomologyResult h = reduced_homology(ext_complex(b, x, y), Coefficients(f));
      for (std::size_t i = 0; i < h.betti.size(); ++i) {
        const int n = h.low + static_cast<int>(i) + 1;
        if (h.betti[i] != 0 && n >= 0) put(n, x, y, h.betti[i]);
      }
    }
  }
  while (t.dims.size() > 1 &&
         std::all_of(t.dims.back().begin(), t.dims.back().end(), [](long v) { return v == 0; })) {
    t.dims.pop_back();
  }
  return t;
}

ExtTable fpc_ext_table(const Graph& g, Field f) {
  const int n = g.size();
  if (n > kMaxFpcVertices) throw Error("GraphTooLarge", std::to_string(n));
  const int m = 1 << n;
  ExtTable t;
  t.field = f;
  t.size = m;
  t.dims.emplace_back(static_cast<std::size_t>(m) * m, 0);
  auto put = [&](int deg, int x, int y, long v) {
    while (static_cast<int>(t.dims.size()) <= deg) {
      t.dims.emplace_back(static_cast<std::size_t>(m) * m, 0);
    }
    t.dims[deg][static_cast<std::size_t>(x) * m + y] = v;
  };
  for (int x = 0; x < m; ++x) {
    put(0, x, x, 1);
    for (int y = 0; y < m; ++y) {
      if ((x & y) != y || x == y) continue;  // need X strictly containing Y
      std::vector<int> vs;
      for (int v = 0; v < n; ++v) {
        if ((x >> v & 1) && !(y >> v & 1)) vs.push_back(v);
      }
      const HomologyResult h = reduced_homology(clique_complex(g.induced(vs)), Coefficients(f));
      for (std::size_t i = 0; i < h.betti.size(); ++i) {
        const int deg = h.low + static_cast<int>(i) + 1;
        if (h.betti[i] != 0 && deg >= 1) put(deg, x, y, h.betti[i]);
      }
    }
  }
  return t;
}

std::vector<unsigned> fpc_support_masks(const Graph& g, const Lrb& fpc) {
  std::vector<int> letter(g.size(), -1);
  for (int v = 0; v < g.size(); ++v) {
    for (int a = 0; a < fpc.size(); ++a) {
      if (fpc.name(a) == g.labels[v]) letter[v] = a;
    }
    if (letter[v] < 0) throw Error("UnknownLetter", g.labels[v]);
  }
  std::vector<unsigned> masks(fpc.num_supports(), 0);
  for (int x = 0; x < fpc.num_supports(); ++x) {
    const int e = fpc.rep(x);
    for (int v = 0; v < g.size(); ++v) {
      if (fpc.mul(e, letter[v]) == e) masks[x] |= 1U << v;
    }
  }
  return masks;
}

ExtTable relabel(const ExtTable& t, const std::vector<unsigned>& masks, int new_size) {
  ExtTable out;
  out.field = t.field;
  out.size = new_size;
  for (const auto& layer : t.dims) {
    std::vector<long> d(static_cast<std::size_t>(new_size) * new_size, 0);
    for (int x = 0; x < t.size; ++x) {
      for (int y = 0; y < t.size; ++y) {
        d[static_cast<std::size_t>(masks[x]) * new_size + masks[y]] =
            layer[static_cast<std::size_t>(x) * t.size + y];
      }
    }
    out.dims.push_back(std::move(d));
  }
  return out;
}

std::vector<std::vector<long>> quiver(const Lrb& b, Field f) {
  const ExtTable t = ext_table(b, f);
  std::vector<std::vector<long>> q(t.size, std::vector<long>(t.size, 0));
  for (int x = 0; x < t.size; ++x) {
    for (int y = 0; y < t.size; ++y) q[x][y] = t.at(1, x, y);
  }
  return q;
}

int global_dimension(const Lrb& b, Field f) {
  const ExtTable t = ext_table(b, f);
  for (int n = t.max_degree(); n >= 0; --n) {
    if (std::any_of(t.dims[n].begin(), t.dims[n].end(), [](long v) { return v != 0; })) return n;
  }
  return 0;
}

int cohomological_dimension(const Lrb& b, const Coefficients& ring) {
  if (!b.is_monoid()) throw PreconditionError("NotMonoid", "pass B with an identity adjoined");
  int best = 0;
  for (int y = 0; y < b.num_supports(); ++y) {
    std::vector<int> below = b.order().strictly_below(b.rep(y));
    const HomologyResult h = reduced_cohomology(order_complex(b.order(), below), ring);
    for (std::size_t i = 0; i < h.betti.size(); ++i) {
      const int deg = h.low + static_cast<int>(i);
      if (!h.vanishes(deg)) best = std::max(best, deg + 1);
    }
  }
  return best;
}

CdReport cohomological_dimension_report(const Lrb& b, const Coefficients& ring) {
  CdReport r;
  if (b.is_monoid()) {
    r.value = cohomological_dimension(b, ring);
  } else {
    r.used_b1 = true;
    r.value = cohomological_dimension(adjoin_identity(b), ring);
  }
  return r;
}

IntMatrix cartan_by_characters(const Lrb& b) {
  require_connected(b);
  const Support& s = b.support();
  const int m = s.size();
  IntMatrix c(m, std::vector<std::int64_t>(m, 0));
  std::vector<std::vector<int>> down(m);
  for (int z = 0; z < m; ++z) down[z] = b.principal_down(s.rep[z]);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      std::int64_t sum = 0;
      for (int z = 0; z < m; ++z) {
        if (!s.lam.leq(z, x)) continue;
        std::int64_t count = 0;
        for (int a : down[z]) count += b.sigma(a) == y ? 1 : 0;
        sum += count * s.mu(z, x);
      }
      c[x][y] = sum;
    }
  }
  return c;
}

IntMatrix cartan_by_mobius(const Lrb& b) {
  require_connected(b);
  const Support& s = b.support();
  const int m = s.size();
  IntMatrix c(m, std::vector<std::int64_t>(m, 0));
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (s.lam.leq(y, x)) c[x][y] = std::abs(s.mu(y, x));
    }
  }
  return c;
}

IntMatrix cartan_by_modules(const Lrb& b) {
  require_connected(b);
  const int m = b.num_supports();
  IntMatrix c(m, std::vector<std::int64_t>(m, 0));
  for (int y = 0; y < m; ++y) {
    const auto mult = composition_multiplicities(b, schutzenberger_module(b, y));
    for (int x = 0; x < m; ++x) c[x][y] = mult[x];
  }
  return c;
}

bool is_unipotent_lower_triangular(const Lrb& b, const IntMatrix& c) {
  const Poset& lam = b.lambda();
  for (int x = 0; x < lam.size(); ++x) {
    for (int y = 0; y < lam.size(); ++y) {
      if (x == y && c[x][y] != 1) return false;
      if (x != y && !lam.leq(y, x) && c[x][y] != 0) return false;
    }
  }
  return true;
}

std::int64_t entry_sum(const IntMatrix& c) {
  std::int64_t s = 0;
  for (const auto& row : c) {
    for (auto v : row) s += v;
  }
  return s;
}

}  // namespace lrb
