#include "lrb/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "lrb/error.hpp"

namespace lrb {

namespace {

SemigroupTable blank(int n) {
  SemigroupTable t;
  t.n = n;
  t.table.assign(static_cast<std::size_t>(n) * n, 0);
  t.names.resize(n);
  return t;
}

void set(SemigroupTable& t, int a, int b, int v) { t.table[static_cast<std::size_t>(a) * t.n + b] = v; }

}  // namespace

Lrb trivial_lrb() {
  SemigroupTable t = blank(1);
  t.names[0] = "0";
  return Lrb::validate(std::move(t));
}

Lrb table_L() {
  SemigroupTable t;
  t.n = 3;
  t.names = {"0", "+", "-"};
  t.table = {0, 1, 2,
             1, 1, 1,
             2, 2, 2};
  return Lrb::validate(std::move(t));
}

Lrb table_Ltilde() {
  SemigroupTable t;
  t.n = 5;
  t.names = {"0", "+", "-", "i", "j"};
  t.table = {0, 1, 2, 3, 4,
             1, 1, 1, 3, 4,
             2, 2, 2, 3, 4,
             3, 3, 3, 3, 3,
             4, 4, 4, 4, 4};
  return Lrb::validate(std::move(t));
}

Lrb left_zero(int n) {
  SemigroupTable t = blank(n);
  for (int a = 0; a < n; ++a) {
    t.names[a] = "z" + std::to_string(a);
    for (int b = 0; b < n; ++b) set(t, a, b, a);
  }
  return Lrb::validate(std::move(t));
}

Lrb chain_semilattice(int n) {
  SemigroupTable t = blank(n);
  for (int a = 0; a < n; ++a) {
    t.names[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) set(t, a, b, std::min(a, b));
  }
  return Lrb::validate(std::move(t));
}

Lrb free_lrb(const std::vector<std::string>& alphabet) {
  const int k = static_cast<int>(alphabet.size());
  if (k == 0) throw Error("EmptyAlphabet", "free band needs at least one letter");
  if (k > kMaxFreeLetters) throw Error("AlphabetTooLarge", std::to_string(k));
  // Repetition-free words, shortest first.
  std::vector<std::vector<int>> words{{}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (int c = 0; c < k; ++c) {
      if (std::find(words[i].begin(), words[i].end(), c) != words[i].end()) continue;
      auto w = words[i];
      w.push_back(c);
      words.push_back(std::move(w));
    }
  }
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);
  const int n = static_cast<int>(words.size());
  SemigroupTable t = blank(n);
  for (int a = 0; a < n; ++a) {
    std::string nm;
    for (int c : words[a]) nm += alphabet[c];
    t.names[a] = nm.empty() ? "1" : nm;
    for (int b = 0; b < n; ++b) {
      std::vector<int> w = words[a];
      for (int c : words[b]) {
        if (std::find(w.begin(), w.end(), c) == w.end()) w.push_back(c);
      }
      set(t, a, b, index.at(w));
    }
  }
  return Lrb::validate(std::move(t));
}

namespace {

// Element of B(G): content mask plus, for each non-edge {x,y} of G inside the
// content, which of x, y comes first.  before[x] has bit y set iff x precedes y.
struct FpcElement {
  unsigned content = 0;
  std::vector<unsigned> before;
  bool operator<(const FpcElement& o) const {
    return std::tie(content, before) < std::tie(o.content, o.before);
  }
};

FpcElement fpc_mul(const Graph& g, const FpcElement& u, const FpcElement& v) {
  const int n = g.size();
  FpcElement w;
  w.content = u.content | v.content;
  w.before.assign(n, 0);
  const unsigned fresh = v.content & ~u.content;
  for (int x = 0; x < n; ++x) {
    if (u.content >> x & 1U) {
      w.before[x] = u.before[x];
      for (int y = 0; y < n; ++y) {
        if ((fresh >> y & 1U) && !g.adjacent(x, y)) w.before[x] |= 1U << y;
      }
    } else if (fresh >> x & 1U) {
      w.before[x] = v.before[x] & fresh;
    }
  }
  return w;
}

std::string fpc_name(const Graph& g, const FpcElement& e) {
  // Lexicographically least linear extension of the orientation.
  const int n = g.size();
  unsigned left = e.content;
  std::string s;
  while (left) {
    for (int x = 0; x < n; ++x) {
      if (!(left >> x & 1U)) continue;
      bool minimal = true;
      for (int y = 0; y < n; ++y) {
        if ((left >> y & 1U) && (e.before[y] >> x & 1U)) minimal = false;
      }
      if (minimal) {
        s += g.labels[x];
        left &= ~(1U << x);
        break;
      }
    }
  }
  return s.empty() ? "1" : s;
}

}  // namespace

Lrb free_partially_commutative(const Graph& g) {
  const int n = g.size();
  if (n > kMaxFpcVertices) throw Error("GraphTooLarge", std::to_string(n));
  std::vector<FpcElement> elems;
  std::map<FpcElement, int> index;
  auto intern = [&](const FpcElement& e) {
    auto [it, fresh] = index.emplace(e, static_cast<int>(elems.size()));
    if (fresh) elems.push_back(e);
    return it->second;
  };
  FpcElement one;
  one.before.assign(n, 0);
  intern(one);
  std::vector<int> gens;
  for (int x = 0; x < n; ++x) {
    FpcElement e = one;
    e.content = 1U << x;
    gens.push_back(intern(e));
  }
  // Right multiplication by generators reaches every element.
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int gi : gens) intern(fpc_mul(g, elems[i], elems[gi]));
  }
  const int m = static_cast<int>(elems.size());
  SemigroupTable t = blank(m);
  for (int a = 0; a < m; ++a) {
    t.names[a] = fpc_name(g, elems[a]);
    for (int b = 0; b < m; ++b) {
      auto it = index.find(fpc_mul(g, elems[a], elems[b]));
      if (it == index.end()) throw Error("NotClosed", "FPC product escaped the closure");
      set(t, a, b, it->second);
    }
  }
  return Lrb::validate(std::move(t));
}

long fpc_size_by_orientations(const Graph& g) {
  const Graph h = g.complement();
  const int n = h.size();
  long total = 0;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : h.edges()) {
      if ((mask >> u & 1U) && (mask >> v & 1U)) es.emplace_back(u, v);
    }
    // Count acyclic orientations of the induced subgraph by brute force.
    for (unsigned o = 0; o < (1U << es.size()); ++o) {
      std::vector<unsigned> succ(n, 0);
      for (std::size_t i = 0; i < es.size(); ++i) {
        auto [u, v] = es[i];
        if (o >> i & 1U) {
          succ[u] |= 1U << v;
        } else {
          succ[v] |= 1U << u;
        }
      }
      // Repeatedly strip sources.
      unsigned left = mask;
      bool progress = true;
      while (left && progress) {
        progress = false;
        for (int x = 0; x < n; ++x) {
          if (!(left >> x & 1U)) continue;
          bool has_in = false;
          for (int y = 0; y < n; ++y) {
            if ((left >> y & 1U) && (succ[y] >> x & 1U)) has_in = true;
          }
          if (!has_in) {
            left &= ~(1U << x);
            progress = true;
          }
        }
      }
      if (left == 0) ++total;
    }
  }
  return total;
}

Lrb matroid_lrb(const std::vector<std::string>& ground,
                const std::vector<std::vector<std::string>>& independents) {
  const int k = static_cast<int>(ground.size());
  if (k > 10) throw Error("GroundTooLarge", std::to_string(k));
  std::map<std::string, int> pos;
  for (int i = 0; i < k; ++i) pos[ground[i]] = i;
  std::set<unsigned> ind;
  for (const auto& s : independents) {
    unsigned m = 0;
    for (const auto& e : s) {
      auto it = pos.find(e);
      if (it == pos.end()) throw Error("NotAMatroid", "unknown element " + e);
      m |= 1U << it->second;
    }
    ind.insert(m);
  }
  auto show = [&](unsigned m) {
    std::string s = "{";
    for (int i = 0; i < k; ++i) {
      if (m >> i & 1U) s += (s.size() > 1 ? "," : "") + ground[i];
    }
    return s + "}";
  };
  if (!ind.count(0)) throw Error("NotAMatroid", "empty set must be independent");
  for (unsigned a : ind) {
    for (int i = 0; i < k; ++i) {
      if ((a >> i & 1U) && !ind.count(a & ~(1U << i))) {
        throw Error("NotAMatroid", "not hereditary at " + show(a));
      }
    }
  }
  for (unsigned a : ind) {
    for (unsigned b : ind) {
      if (__builtin_popcount(a) >= __builtin_popcount(b)) continue;
      bool ok = false;
      for (int i = 0; i < k && !ok; ++i) {
        if ((b >> i & 1U) && !(a >> i & 1U) && ind.count(a | (1U << i))) ok = true;
      }
      if (!ok) throw Error("NotAMatroid", "exchange fails for " + show(a) + " and " + show(b));
    }
  }
  std::vector<std::vector<int>> words{{}};
  for (std::size_t i = 0; i < words.size(); ++i) {
    unsigned m = 0;
    for (int c : words[i]) m |= 1U << c;
    for (int c = 0; c < k; ++c) {
      if ((m >> c & 1U) || !ind.count(m | (1U << c))) continue;
      auto w = words[i];
      w.push_back(c);
      words.push_back(std::move(w));
    }
  }
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);
  const int n = static_cast<int>(words.size());
  SemigroupTable t = blank(n);
  for (int a = 0; a < n; ++a) {
    std::string nm;
    for (int c : words[a]) nm += (nm.empty() ? "" : ".") + ground[c];
    t.names[a] = nm.empty() ? "()" : "(" + nm + ")";
    for (int b = 0; b < n; ++b) {
      std::vector<int> w = words[a];
      unsigned m = 0;
      for (int c : w) m |= 1U << c;
      for (int c : words[b]) {
        if (!(m >> c & 1U) && ind.count(m | (1U << c))) {
          w.push_back(c);
          m |= 1U << c;
        }
      }
      set(t, a, b, index.at(w));
    }
  }
  return Lrb::validate(std::move(t));
}

Lrb ladder(int n) {
  if (n < 0) throw Error("BadArgument", "ladder index must be nonnegative");
  const int m = 2 * n + 1;
  SemigroupTable t = blank(m);
  auto level = [](int i) { return (i + 1) / 2; };
  t.names[0] = "0";
  for (int i = 1; i < m; ++i) {
    t.names[i] = (i % 2 == 1 ? "+" : "-") + std::to_string(level(i));
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) set(t, a, b, level(a) < level(b) ? b : a);
  }
  return Lrb::validate(std::move(t));
}

Lrb join(const Lrb& b, const Lrb& bp) {
  const int n = b.size();
  const int np = bp.size();
  SemigroupTable t = blank(n + np);
  for (int a = 0; a < n; ++a) t.names[a] = b.name(a);
  for (int a = 0; a < np; ++a) t.names[n + a] = bp.name(a);
  for (int x = 0; x < n + np; ++x) {
    for (int y = 0; y < n + np; ++y) {
      int v;
      if (x < n && y < n) {
        v = b.mul(x, y);
      } else if (x >= n && y >= n) {
        v = n + bp.mul(x - n, y - n);
      } else {
        v = x < n ? x : y;
      }
      set(t, x, y, v);
    }
  }
  return Lrb::validate(std::move(t));
}

Lrb suspension(const Lrb& b, const std::pair<std::string, std::string>& new_names) {
  const int n = b.size();
  SemigroupTable t = blank(n + 2);
  for (int a = 0; a < n; ++a) t.names[a] = b.name(a);
  t.names[n] = new_names.first;
  t.names[n + 1] = new_names.second;
  for (int x = 0; x < n + 2; ++x) {
    for (int y = 0; y < n + 2; ++y) {
      int v;
      if (x >= n) {
        v = x;
      } else if (y >= n) {
        v = y;
      } else {
        v = b.mul(x, y);
      }
      set(t, x, y, v);
    }
  }
  return Lrb::validate(std::move(t));
}

Lrb product(const Lrb& b, const Lrb& bp) {
  const int n = b.size();
  const int np = bp.size();
  SemigroupTable t = blank(n * np);
  for (int a = 0; a < n; ++a) {
    for (int ap = 0; ap < np; ++ap) {
      t.names[a * np + ap] = "(" + b.name(a) + "," + bp.name(ap) + ")";
      for (int c = 0; c < n; ++c) {
        for (int cp = 0; cp < np; ++cp) {
          set(t, a * np + ap, c * np + cp, b.mul(a, c) * np + bp.mul(ap, cp));
        }
      }
    }
  }
  return Lrb::validate(std::move(t));
}

Lrb adjoin_identity(const Lrb& b) {
  const int n = b.size();
  SemigroupTable t = blank(n + 1);
  for (int a = 0; a < n; ++a) t.names[a] = b.name(a);
  t.names[n] = "1";
  for (int x = 0; x <= n; ++x) {
    for (int y = 0; y <= n; ++y) {
      set(t, x, y, x == n ? y : (y == n ? x : b.mul(x, y)));
    }
  }
  return Lrb::validate(std::move(t));
}

}  // namespace lrb
