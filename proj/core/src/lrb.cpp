#include "lrb/lrb.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lrb/error.hpp"
#include "lrb/simplicial.hpp"

namespace lrb {

namespace {

std::string pair_str(const SemigroupTable& t, int a, int b) {
  return "(" + t.names[a] + "," + t.names[b] + ")";
}

// Light's associativity test against a generating set.
std::vector<int> greedy_generators(const SemigroupTable& t) {
  std::vector<char> in(t.n, 0);
  std::vector<int> gens;
  std::vector<int> elems;
  for (int g = 0; g < t.n; ++g) {
    if (in[g]) continue;
    gens.push_back(g);
    std::vector<int> frontier{g};
    in[g] = 1;
    elems.push_back(g);
    // Close under multiplication by everything obtained so far.
    while (!frontier.empty()) {
      std::vector<int> next;
      const std::vector<int> cur = elems;
      for (int x : frontier) {
        for (int y : cur) {
          for (int z : {t.at(x, y), t.at(y, x)}) {
            if (!in[z]) {
              in[z] = 1;
              elems.push_back(z);
              next.push_back(z);
            }
          }
        }
      }
      frontier = std::move(next);
    }
  }
  return gens;
}

void check_associative(const SemigroupTable& t) {
  const int n = t.n;
  std::vector<int> mids(n);
  std::iota(mids.begin(), mids.end(), 0);
  if (n > 600) mids = greedy_generators(t);
  for (int a = 0; a < n; ++a) {
    for (int b : mids) {
      const int ab = t.at(a, b);
      for (int c = 0; c < n; ++c) {
        if (t.at(ab, c) != t.at(a, t.at(b, c))) {
          throw Error("NotAssociative", "(" + t.names[a] + "," + t.names[b] + "," + t.names[c] + ")");
        }
      }
    }
  }
}

}  // namespace

Lrb Lrb::validate(SemigroupTable t) {
  if (t.n <= 0) throw Error("EmptyTable", "a semigroup needs at least one element");
  if (t.n > kMaxTableSize) throw Error("TableTooLarge", std::to_string(t.n));
  if (t.table.size() != static_cast<std::size_t>(t.n) * t.n) {
    throw Error("TableOutOfRange", "table has " + std::to_string(t.table.size()) + " entries");
  }
  for (int v : t.table) {
    if (v < 0 || v >= t.n) throw Error("TableOutOfRange", std::to_string(v));
  }
  if (t.names.empty()) {
    for (int a = 0; a < t.n; ++a) t.names.push_back(std::to_string(a));
  }
  if (static_cast<int>(t.names.size()) != t.n) throw Error("TableOutOfRange", "name count");
  const int n = t.n;
  for (int a = 0; a < n; ++a) {
    if (t.at(a, a) != a) throw Error("NotIdempotent", t.names[a]);
  }
  check_associative(t);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = t.at(a, b);
      if (t.at(ab, a) != ab) throw Error("NotLeftRegular", pair_str(t, a, b));
    }
  }

  Lrb out;
  out.t_ = std::move(t);
  const SemigroupTable& tt = out.t_;
  for (int e = 0; e < n && !out.identity_; ++e) {
    bool id = true;
    for (int a = 0; a < n && id; ++a) id = tt.at(e, a) == a && tt.at(a, e) == a;
    if (id) out.identity_ = e;
  }

  std::vector<char> leq(static_cast<std::size_t>(n) * n, 0);
  for (int e = 0; e < n; ++e) {
    for (int f = 0; f < n; ++f) leq[static_cast<std::size_t>(e) * n + f] = tt.at(f, e) == e;
  }
  out.order_ = Poset::from_leq(n, std::move(leq), false);
  out.order_.labels = tt.names;

  Support& s = out.support_;
  s.sigma.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (std::size_t x = 0; x < s.classes.size(); ++x) {
      const int r = s.classes[x][0];
      if (tt.at(a, r) == a && tt.at(r, a) == r) {
        s.sigma[a] = static_cast<int>(x);
        break;
      }
    }
    if (s.sigma[a] < 0) {
      s.sigma[a] = static_cast<int>(s.classes.size());
      s.classes.push_back({});
    }
    s.classes[s.sigma[a]].push_back(a);
  }
  const int m = static_cast<int>(s.classes.size());
  s.rep.resize(m);
  for (int x = 0; x < m; ++x) s.rep[x] = s.classes[x][0];
  std::vector<char> lleq(static_cast<std::size_t>(m) * m, 0);
  s.meet.assign(static_cast<std::size_t>(m) * m, 0);
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const int ex = s.rep[x];
      const int ey = s.rep[y];
      lleq[static_cast<std::size_t>(x) * m + y] = tt.at(ex, ey) == ex;
      s.meet[static_cast<std::size_t>(x) * m + y] = s.sigma[tt.at(ex, ey)];
    }
  }
  s.lam = Poset::from_leq(m, std::move(lleq));
  for (int x = 0; x < m; ++x) s.lam.labels.push_back(tt.names[s.rep[x]]);
  s.mobius = s.lam.mobius();
  return out;
}

Lrb Lrb::with_rotated_representatives() const {
  Lrb out = *this;
  for (int x = 0; x < num_supports(); ++x) out.support_.rep[x] = support_.classes[x].back();
  return out;
}

std::vector<int> Lrb::contraction_elements(int x) const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    if (lambda().leq(x, sigma(a))) out.push_back(a);
  }
  return out;
}

std::vector<int> Lrb::principal_down(int e) const {
  std::vector<int> out;
  for (int a = 0; a < size(); ++a) {
    if (leq(a, e)) out.push_back(a);
  }
  return out;
}

Restriction subsemigroup(const Lrb& b, const std::vector<int>& elems) {
  const int m = static_cast<int>(elems.size());
  std::vector<int> pos(b.size(), -1);
  for (int i = 0; i < m; ++i) pos[elems[i]] = i;
  SemigroupTable t;
  t.n = m;
  t.table.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    t.names.push_back(b.name(elems[i]));
    for (int j = 0; j < m; ++j) {
      const int p = pos[b.mul(elems[i], elems[j])];
      if (p < 0) throw Error("NotClosed", b.name(elems[i]) + "*" + b.name(elems[j]));
      t.table[static_cast<std::size_t>(i) * m + j] = p;
    }
  }
  return {Lrb::validate(std::move(t)), elems};
}

Restriction contraction(const Lrb& b, int x) {
  if (x < 0 || x >= b.num_supports()) {
    throw Error("UnknownSupportElement", std::to_string(x));
  }
  return subsemigroup(b, b.contraction_elements(x));
}

Restriction deletion(const Lrb& b, int a) {
  if (a < 0 || a >= b.size()) throw Error("UnknownElement", std::to_string(a));
  std::vector<int> elems;
  for (int c = 0; c < b.size(); ++c) elems.push_back(b.mul(a, c));
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return subsemigroup(b, elems);
}

Graph connectivity_graph(const Lrb& b, int x) {
  const auto& lx = b.lclass(x);
  Graph g(static_cast<int>(lx.size()));
  for (std::size_t i = 0; i < lx.size(); ++i) g.labels[i] = b.name(lx[i]);
  for (std::size_t i = 0; i < lx.size(); ++i) {
    for (std::size_t j = i + 1; j < lx.size(); ++j) {
      for (int c = 0; c < b.size(); ++c) {
        if (b.mul(c, lx[i]) == lx[i] && b.mul(c, lx[j]) == lx[j]) {
          g.add_edge(static_cast<int>(i), static_cast<int>(j));
          break;
        }
      }
    }
  }
  return g;
}

bool is_connected(const Lrb& b) {
  for (int x = 0; x < b.num_supports(); ++x) {
    if (!connectivity_graph(b, x).is_connected()) return false;
  }
  return true;
}

bool order_complex_connected(const Lrb& b, int x) {
  const auto elems = b.contraction_elements(x);
  // Comparability graph components = components of the order complex.
  Graph g(static_cast<int>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (b.order().comparable(elems[i], elems[j])) {
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return g.is_connected();
}

std::vector<std::vector<int>> principal_series(const Lrb& b) {
  std::vector<std::vector<int>> out;
  for (int x : b.lambda().linear_extension()) out.push_back(b.lclass(x));
  return out;
}

namespace {

struct Invariant {
  std::vector<long> v;
  bool operator<(const Invariant& o) const { return v < o.v; }
  bool operator==(const Invariant& o) const { return v == o.v; }
};

Invariant element_invariant(const Lrb& b, int a) {
  long below = 0;
  long above = 0;
  long left_ideal = 0;
  long right_ideal = 0;
  for (int c = 0; c < b.size(); ++c) {
    if (b.leq(c, a)) ++below;
    if (b.leq(a, c)) ++above;
    if (b.mul(c, a) == c) ++left_ideal;   // c in Ba
    if (b.mul(a, c) == c) ++right_ideal;  // c in aB
  }
  return {{below, above, left_ideal, right_ideal,
           static_cast<long>(b.lclass(b.sigma(a)).size()), b.order().heights()[a],
           b.identity() == a ? 1L : 0L}};
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Lrb& a, const Lrb& b) {
  const int n = a.size();
  if (n != b.size() || a.num_supports() != b.num_supports()) return std::nullopt;
  std::vector<Invariant> ia(n);
  std::vector<Invariant> ib(n);
  for (int x = 0; x < n; ++x) {
    ia[x] = element_invariant(a, x);
    ib[x] = element_invariant(b, x);
  }
  {
    auto sa = ia;
    auto sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (!(sa == sb)) return std::nullopt;
  }
  std::vector<std::vector<int>> cand(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (ia[x] == ib[y]) cand[x].push_back(y);
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return cand[x].size() < cand[y].size(); });

  std::vector<int> phi(n, -1);
  std::vector<int> inv(n, -1);
  std::vector<int> trail;

  // Assign x -> y and close under products; false on conflict.
  auto assign = [&](int x0, int y0) -> bool {
    std::vector<std::pair<int, int>> work{{x0, y0}};
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      if (phi[x] >= 0) {
        if (phi[x] != y) return false;
        continue;
      }
      if (inv[y] >= 0 || !(ia[x] == ib[y])) return false;
      phi[x] = y;
      inv[y] = x;
      trail.push_back(x);
      for (int z = 0; z < n; ++z) {
        if (phi[z] < 0) continue;
        work.emplace_back(a.mul(x, z), b.mul(y, phi[z]));
        work.emplace_back(a.mul(z, x), b.mul(phi[z], y));
      }
    }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      const int x = trail.back();
      trail.pop_back();
      inv[phi[x]] = -1;
      phi[x] = -1;
    }
  };
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    while (k < order.size() && phi[order[k]] >= 0) ++k;
    if (k == order.size()) return true;
    const int x = order[k];
    for (int y : cand[x]) {
      if (inv[y] >= 0) continue;
      const std::size_t mark = trail.size();
      if (assign(x, y) && self(self, k + 1)) return true;
      undo(mark);
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return phi;
}

}  // namespace lrb
