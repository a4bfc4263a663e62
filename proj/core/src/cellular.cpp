#include "lrb/cellular.hpp"

#include <algorithm>
#include <deque>

#include "lrb/error.hpp"

namespace lrb {

CwReport homology_cw_report(const Poset& p) {
  CwReport rep;
  rep.graded = p.is_graded();
  if (!rep.graded) {
    rep.reason = "not graded";
    return rep;
  }
  rep.dim = p.length();
  for (int s = 0; s < p.size(); ++s) {
    const int h = p.heights()[s];
    const HomologyResult hr = reduced_homology(order_complex(p, p.strictly_below(s)), kIntegers);
    bool sphere = true;
    for (std::size_t i = 0; i < hr.betti.size(); ++i) {
      const int q = hr.low + static_cast<int>(i);
      const long want = q == h - 1 ? 1 : 0;
      if (hr.betti[i] != want || !hr.torsion[i].empty()) sphere = false;
    }
    if (h - 1 > hr.low + static_cast<int>(hr.betti.size()) - 1) sphere = false;
    if (!sphere) {
      rep.witness = s;
      rep.reason = "lower set of element " + std::to_string(s) +
                   " is not a homology " + std::to_string(h - 1) + "-sphere";
      return rep;
    }
  }
  rep.passes = true;
  return rep;
}

namespace {

void full_flags(const Poset& p, int c, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  cur.push_back(c);
  if (p.lower_covers(c).empty()) {
    out.emplace_back(cur.rbegin(), cur.rend());
  } else {
    for (int a : p.lower_covers(c)) full_flags(p, a, cur, out);
  }
  cur.pop_back();
}

}  // namespace

CellularComplex cellular_chain_complex(const Poset& p) {
  const CwReport rep = homology_cw_report(p);
  if (!rep.passes) throw PreconditionError("NotCwProxy", rep.reason);

  CellularComplex cc;
  const int n = p.size();
  cc.dim = rep.dim;
  cc.height = p.heights();
  cc.cells.assign(cc.dim + 1, {});
  cc.position.assign(n, -1);
  for (int e = 0; e < n; ++e) {
    cc.position[e] = static_cast<int>(cc.cells[cc.height[e]].size());
    cc.cells[cc.height[e]].push_back(e);
  }
  cc.cycle.assign(n, {});

  for (int q = 0; q <= cc.dim; ++q) {
    for (int c : cc.cells[q]) {
      std::vector<std::vector<int>> flags;
      std::vector<int> cur;
      full_flags(p, c, cur, flags);
      std::sort(flags.begin(), flags.end());
      if (q == 0) {
        cc.cycle[c][flags[0]] = 1;
        continue;
      }
      // Solve for signs w on the lower flags (each flag minus c) making the
      // augmented boundary vanish.  Every ridge must lie in two flags.
      std::map<std::vector<int>, std::vector<std::pair<int, int>>> ridges;
      for (std::size_t f = 0; f < flags.size(); ++f) {
        for (int i = 0; i < q; ++i) {
          std::vector<int> r;
          for (int t = 0; t < q; ++t) {
            if (t != i) r.push_back(flags[f][t]);
          }
          ridges[r].emplace_back(static_cast<int>(f), (i % 2 == 0) ? 1 : -1);
        }
      }
      std::vector<std::vector<std::pair<int, int>>> nbr(flags.size());
      for (const auto& [r, inc] : ridges) {
        if (inc.size() != 2) {
          throw Error("SignSolveFailed", "ridge in " + std::to_string(inc.size()) +
                                             " flags below element " + std::to_string(c));
        }
        // w[a]*s_a + w[b]*s_b = 0
        const int rel = -inc[0].second * inc[1].second;
        nbr[inc[0].first].emplace_back(inc[1].first, rel);
        nbr[inc[1].first].emplace_back(inc[0].first, rel);
      }
      std::vector<int> w(flags.size(), 0);
      w[0] = 1;
      std::deque<int> queue{0};
      while (!queue.empty()) {
        const int f = queue.front();
        queue.pop_front();
        for (auto [g, rel] : nbr[f]) {
          if (w[g] == 0) {
            w[g] = w[f] * rel;
            queue.push_back(g);
          } else if (w[g] != w[f] * rel) {
            throw Error("SignSolveFailed", "inconsistent orientation below " + std::to_string(c));
          }
        }
      }
      if (std::find(w.begin(), w.end(), 0) != w.end()) {
        throw Error("SignSolveFailed", "flag graph disconnected below " + std::to_string(c));
      }
      for (std::size_t f = 0; f < flags.size(); ++f) cc.cycle[c][flags[f]] = w[f];
    }
  }

  // Incidences read off the boundary of the fundamental cycles:
  // d z_c = (-1)^q w_c, and w_c restricted to flags ending at a equals
  // [c:a] z_a.
  cc.boundary.assign(cc.dim + 1, {});
  cc.boundary[0] = SparseMatrix(1, static_cast<int>(cc.cells[0].size()));
  for (std::size_t j = 0; j < cc.cells[0].size(); ++j) cc.boundary[0].add(0, static_cast<int>(j), 1);
  for (int q = 1; q <= cc.dim; ++q) {
    SparseMatrix m(static_cast<int>(cc.cells[q - 1].size()), static_cast<int>(cc.cells[q].size()));
    const int parity = (q % 2 == 0) ? 1 : -1;
    for (int c : cc.cells[q]) {
      std::map<int, int> coeff;
      for (const auto& [flag, s] : cc.cycle[c]) {
        std::vector<int> g(flag.begin(), flag.end() - 1);
        const int a = g.back();
        const int za = cc.cycle[a].at(g);
        const int val = parity * s * za;
        auto [it, fresh] = coeff.emplace(a, val);
        if (!fresh && it->second != val) {
          throw Error("SignSolveFailed", "incidence not constant on cell " + std::to_string(a));
        }
      }
      for (auto [a, v] : coeff) m.add(cc.position[a], cc.position[c], v);
    }
    m.normalize();
    cc.boundary[q] = std::move(m);
  }

  cc.squares_to_zero = true;
  for (int q = 1; q <= cc.dim; ++q) {
    if (!(cc.boundary[q - 1] * cc.boundary[q]).is_zero()) cc.squares_to_zero = false;
  }
  cc.diamonds_ok = true;
  for (int c = 0; c < n; ++c) {
    const int q = cc.height[c];
    if (q < 2) continue;
    for (int a : p.strictly_below(c)) {
      if (cc.height[a] != q - 2) continue;
      int total = 0;
      int middle = 0;
      for (int b : p.open_interval(a, c)) {
        total += cc.incidence(c, b) * cc.incidence(b, a);
        ++middle;
      }
      if (middle != 2 || total != 0) cc.diamonds_ok = false;
    }
  }
  return cc;
}

ChainComplex CellularComplex::chain_complex() const {
  ChainComplex c;
  c.low = -1;
  c.dims.push_back(1);
  c.d.emplace_back(0, 1);
  for (int q = 0; q <= dim; ++q) {
    c.dims.push_back(static_cast<long>(cells[q].size()));
    c.d.push_back(boundary[q]);
  }
  return c;
}

std::vector<long> CellularComplex::ranks() const {
  std::vector<long> r;
  for (const auto& layer : cells) r.push_back(static_cast<long>(layer.size()));
  return r;
}

int CellularComplex::incidence(int c, int a) const {
  const int q = height[c];
  if (q == 0 || height[a] != q - 1) return 0;
  return static_cast<int>(boundary[q].at(position[a], position[c]));
}

}  // namespace lrb
