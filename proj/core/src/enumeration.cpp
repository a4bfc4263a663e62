#include "lrb/enumeration.hpp"

#include <cstdlib>

#include "lrb/error.hpp"
#include "lrb/quiver.hpp"
#include "lrb/simplicial.hpp"

namespace lrb {

namespace {

void require_cw(const Lrb& b) {
  const CwLrbReport cw = is_cw_lrb(b);
  if (!cw.connected) throw PreconditionError("NotCwLrb", "not connected");
  if (!cw.passes) throw PreconditionError("NotCwLrb", cw.reason);
}

std::int64_t abs_mu(const std::vector<std::int64_t>& mu, int n, int x, int y) {
  return std::llabs(mu[static_cast<std::size_t>(x) * n + y]);
}

}  // namespace

CellCountReport cell_counts_vs_mobius(const Lrb& b) {
  require_cw(b);
  const Poset& lam = b.lambda();
  const int m = lam.size();
  const auto mu = lam.mobius();
  CellCountReport r;
  r.direct.assign(m, 0);
  r.mobius_side.assign(m, 0);
  for (int a = 0; a < b.size(); ++a) ++r.direct[b.sigma(a)];
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      if (lam.leq(x, y)) r.mobius_side[x] += abs_mu(mu, m, x, y);
    }
  }
  r.f = f_vector(b.order());
  r.f_mobius.assign(lam.length() + 1, 0);
  for (int x = 0; x < m; ++x) r.f_mobius[lam.heights()[x]] += r.mobius_side[x];
  const int bottom = *lam.minimum();
  r.minimal_ideal = r.direct[bottom];
  for (int x = 0; x < m; ++x) r.minimal_ideal_mobius += abs_mu(mu, m, bottom, x);
  r.euler = euler_characteristic(b.order());
  return r;
}

FlagReport flag_vector_vs_mobius(const Lrb& b) {
  require_cw(b);
  FlagReport r;
  r.direct = flag_vector(b.order());
  const Poset& lam = b.lambda();
  const int m = lam.size();
  const auto mu = lam.mobius();
  // Chains X_1 < ... < X_k, each step contributing sum_{X_i <= Y <= X_{i+1}} |mu|.
  std::vector<int> dims;
  auto rec = [&](auto&& self, int x, std::int64_t acc) -> void {
    dims.push_back(lam.heights()[x]);
    std::int64_t tail = 0;
    for (int y = 0; y < m; ++y) {
      if (lam.leq(x, y)) tail += abs_mu(mu, m, x, y);
    }
    r.mobius_side[dims] += acc * tail;
    for (int z = 0; z < m; ++z) {
      if (!lam.lt(x, z)) continue;
      std::int64_t step = 0;
      for (int y = 0; y < m; ++y) {
        if (lam.leq(x, y) && lam.leq(y, z)) step += abs_mu(mu, m, x, y);
      }
      self(self, z, acc * step);
    }
    dims.pop_back();
  };
  for (int x = 0; x < m; ++x) rec(rec, x, 1);
  return r;
}

Cat0FReport cat0_f_identity(const MedianComplex& mc) {
  Cat0FReport r;
  r.f = mc.f_vector();
  const SimplicialComplex cliq = clique_complex(mc.crossing_graph());
  r.clique_f.push_back(1);
  for (std::int64_t v : cliq.f_vector()) r.clique_f.push_back(v);
  // clique_f[i] = f_{i-1}, the number of i-cliques.
  const int top = static_cast<int>(r.clique_f.size()) - 1;
  for (int k = 0; k <= top; ++k) {
    std::int64_t s = 0;
    for (int i = k; i <= top; ++i) {
      std::int64_t c = 1;
      for (int j = 0; j < k; ++j) c = c * (i - j) / (j + 1);
      s += c * r.clique_f[i];
    }
    r.formula.push_back(s);
  }
  while (r.formula.size() > 1 && r.formula.back() == 0) r.formula.pop_back();
  return r;
}

}  // namespace lrb
