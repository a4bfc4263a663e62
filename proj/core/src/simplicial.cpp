#include "lrb/simplicial.hpp"

#include <algorithm>
#include <set>

#include "lrb/error.hpp"

namespace lrb {

SimplicialComplex::SimplicialComplex(int n) : n_(n) {
  labels.resize(n);
  for (int v = 0; v < n; ++v) labels[v] = std::to_string(v);
  if (n > 0) {
    faces_.emplace_back();
    for (int v = 0; v < n; ++v) faces_[0].push_back({v});
  }
}

void SimplicialComplex::add_closed(std::vector<Simplex> faces) {
  for (auto& s : faces) {
    if (s.empty()) continue;
    const std::size_t d = s.size() - 1;
    if (faces_.size() <= d) faces_.resize(d + 1);
    faces_[d].push_back(std::move(s));
  }
  for (auto& layer : faces_) {
    std::sort(layer.begin(), layer.end());
    layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
  }
}

SimplicialComplex SimplicialComplex::from_facets(int n, const std::vector<Simplex>& facets) {
  SimplicialComplex k(n);
  std::vector<Simplex> all;
  for (Simplex f : facets) {
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw Error("BadFacet", "repeated vertex");
    }
    for (int v : f) {
      if (v < 0 || v >= n) throw Error("BadFacet", "vertex out of range");
    }
    if (f.size() > 24) throw Error("FacetTooLarge", std::to_string(f.size()));
    const std::uint32_t full = (std::uint32_t{1} << f.size()) - 1;
    for (std::uint32_t m = 1; m <= full; ++m) {
      Simplex s;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (m >> i & 1U) s.push_back(f[i]);
      }
      all.push_back(std::move(s));
    }
  }
  k.add_closed(std::move(all));
  return k;
}

SimplicialComplex SimplicialComplex::from_closed_faces(int n, std::vector<Simplex> faces) {
  SimplicialComplex k(n);
  k.add_closed(std::move(faces));
  return k;
}

const std::vector<Simplex>& SimplicialComplex::faces(int d) const {
  static const std::vector<Simplex> kNone;
  if (d < 0 || d >= static_cast<int>(faces_.size())) return kNone;
  return faces_[d];
}

long SimplicialComplex::index_of(const Simplex& s) const {
  const auto& layer = faces(static_cast<int>(s.size()) - 1);
  auto it = std::lower_bound(layer.begin(), layer.end(), s);
  if (it == layer.end() || *it != s) return -1;
  return it - layer.begin();
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dim(); ++d) {
    for (const auto& s : faces_[d]) {
      bool maximal = true;
      if (d < dim()) {
        for (const auto& t : faces_[d + 1]) {
          if (std::includes(t.begin(), t.end(), s.begin(), s.end())) {
            maximal = false;
            break;
          }
        }
      }
      if (maximal) out.push_back(s);
    }
  }
  return out;
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
  std::vector<std::int64_t> f;
  for (const auto& layer : faces_) f.push_back(static_cast<std::int64_t>(layer.size()));
  return f;
}

SimplicialComplex SimplicialComplex::induced(const std::vector<int>& vs) const {
  std::vector<int> pos(n_, -1);
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
  std::vector<Simplex> keep;
  for (const auto& layer : faces_) {
    for (const auto& s : layer) {
      Simplex t;
      bool ok = true;
      for (int v : s) {
        if (pos[v] < 0) {
          ok = false;
          break;
        }
        t.push_back(pos[v]);
      }
      if (ok) {
        std::sort(t.begin(), t.end());
        keep.push_back(std::move(t));
      }
    }
  }
  SimplicialComplex k = from_closed_faces(static_cast<int>(vs.size()), std::move(keep));
  for (std::size_t i = 0; i < vs.size(); ++i) k.labels[i] = labels[vs[i]];
  return k;
}

SimplicialComplex SimplicialComplex::link(const Simplex& s) const {
  // Faces disjoint from s whose union with s is a face.
  std::vector<Simplex> raw;
  std::vector<char> used(n_, 0);
  for (const auto& layer : faces_) {
    for (const auto& t : layer) {
      if (t.size() < s.size()) continue;
      if (!std::includes(t.begin(), t.end(), s.begin(), s.end())) continue;
      Simplex r;
      std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(r));
      if (r.empty()) continue;
      for (int v : r) used[v] = 1;
      raw.push_back(std::move(r));
    }
  }
  std::vector<int> vs;
  for (int v = 0; v < n_; ++v) {
    if (used[v]) vs.push_back(v);
  }
  std::vector<int> pos(n_, -1);
  for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
  for (auto& r : raw) {
    for (int& v : r) v = pos[v];
  }
  SimplicialComplex k = from_closed_faces(static_cast<int>(vs.size()), std::move(raw));
  for (std::size_t i = 0; i < vs.size(); ++i) k.labels[i] = labels[vs[i]];
  return k;
}

bool ChainComplex::squares_to_zero() const {
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (!(d[i - 1] * d[i]).is_zero()) return false;
  }
  return true;
}

std::string to_string(const Coefficients& c) { return c ? to_string(*c) : "Z"; }

long HomologyResult::rank(int degree) const {
  const int i = degree - low;
  if (i < 0 || i >= static_cast<int>(betti.size())) return 0;
  return betti[i];
}

bool HomologyResult::has_torsion(int degree) const {
  const int i = degree - low;
  if (i < 0 || i >= static_cast<int>(torsion.size())) return false;
  return !torsion[i].empty();
}

bool HomologyResult::acyclic() const { return !top_nonzero().has_value(); }

std::optional<int> HomologyResult::top_nonzero() const {
  for (int i = static_cast<int>(betti.size()) - 1; i >= 0; --i) {
    if (!vanishes(low + i)) return low + i;
  }
  return std::nullopt;
}

ChainComplex augmented_chain_complex(const SimplicialComplex& k) {
  ChainComplex c;
  c.low = -1;
  c.dims.push_back(1);
  c.d.emplace_back(0, 1);
  for (int q = 0; q <= k.dim(); ++q) {
    const auto& layer = k.faces(q);
    c.dims.push_back(static_cast<long>(layer.size()));
    const long rows = q == 0 ? 1 : static_cast<long>(k.count(q - 1));
    SparseMatrix m(static_cast<int>(rows), static_cast<int>(layer.size()));
    for (std::size_t j = 0; j < layer.size(); ++j) {
      if (q == 0) {
        m.add(0, static_cast<int>(j), 1);
        continue;
      }
      const Simplex& s = layer[j];
      Simplex f(s.size() - 1);
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::size_t w = 0;
        for (std::size_t t = 0; t < s.size(); ++t) {
          if (t != i) f[w++] = s[t];
        }
        m.add(static_cast<int>(k.index_of(f)), static_cast<int>(j), (i % 2 == 0) ? 1 : -1);
      }
    }
    m.normalize();
    c.d.push_back(std::move(m));
  }
  return c;
}

HomologyResult homology(const ChainComplex& c, const Coefficients& ring) {
  HomologyResult h;
  h.coeffs = ring;
  h.low = c.low;
  const std::size_t n = c.dims.size();
  std::vector<long> r(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) r[i] = rank(c.d[i], ring.value_or(Field::Q));
  h.betti.resize(n);
  h.torsion.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    h.betti[i] = c.dims[i] - r[i] - r[i + 1];
    if (!ring && i + 1 < n) {
      for (const Integer& v : smith_invariants(c.d[i + 1])) {
        if (abs(v) > 1) h.torsion[i].push_back(abs(v));
      }
    }
  }
  return h;
}

HomologyResult reduced_homology(const SimplicialComplex& k, const Coefficients& ring) {
  return homology(augmented_chain_complex(k), ring);
}

HomologyResult cohomology_from_homology(const HomologyResult& h) {
  HomologyResult out = h;
  if (!h.coeffs) {
    // H^q = free part of H_q plus torsion of H_{q-1}.
    for (std::size_t i = 0; i < h.torsion.size(); ++i) {
      out.torsion[i] = i == 0 ? std::vector<Integer>{} : h.torsion[i - 1];
    }
    if (!h.torsion.empty() && !h.torsion.back().empty()) {
      out.betti.push_back(0);
      out.torsion.push_back(h.torsion.back());
    }
  }
  return out;
}

HomologyResult reduced_cohomology(const SimplicialComplex& k, const Coefficients& ring) {
  return cohomology_from_homology(reduced_homology(k, ring));
}

SimplicialComplex order_complex(const Poset& p) {
  std::vector<int> all(p.size());
  for (int i = 0; i < p.size(); ++i) all[i] = i;
  return order_complex(p, all);
}

SimplicialComplex order_complex(const Poset& p, const std::vector<int>& elems) {
  const int m = static_cast<int>(elems.size());
  std::vector<std::vector<int>> above(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (p.lt(elems[i], elems[j])) above[i].push_back(j);
    }
  }
  std::vector<Simplex> chains;
  Simplex cur;
  auto rec = [&](auto&& self, int i) -> void {
    cur.push_back(i);
    Simplex s = cur;
    std::sort(s.begin(), s.end());
    chains.push_back(std::move(s));
    for (int j : above[i]) self(self, j);
    cur.pop_back();
  };
  for (int i = 0; i < m; ++i) rec(rec, i);
  SimplicialComplex k = SimplicialComplex::from_closed_faces(m, std::move(chains));
  for (int i = 0; i < m; ++i) {
    k.labels[i] = p.labels.empty() ? std::to_string(elems[i]) : p.labels[elems[i]];
  }
  return k;
}

SimplicialComplex clique_complex(const Graph& g) {
  const int n = g.size();
  std::vector<Simplex> faces;
  Simplex cur;
  auto rec = [&](auto&& self, int last) -> void {
    for (int v = last + 1; v < n; ++v) {
      bool ok = true;
      for (int u : cur) {
        if (!g.adjacent(u, v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      cur.push_back(v);
      faces.push_back(cur);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, -1);
  SimplicialComplex k = SimplicialComplex::from_closed_faces(n, std::move(faces));
  k.labels = g.labels;
  return k;
}

SimplicialComplex nerve(const std::vector<std::vector<int>>& sets) {
  const int n = static_cast<int>(sets.size());
  std::vector<std::vector<int>> sorted = sets;
  for (auto& s : sorted) {
    std::sort(s.begin(), s.end());
    if (s.empty()) throw Error("EmptySet", "nerve vertices must be nonempty sets");
  }
  std::vector<Simplex> faces;
  Simplex cur;
  auto rec = [&](auto&& self, int last, const std::vector<int>& common) -> void {
    for (int v = last + 1; v < n; ++v) {
      std::vector<int> next;
      if (cur.empty()) {
        next = sorted[v];
      } else {
        std::set_intersection(common.begin(), common.end(), sorted[v].begin(), sorted[v].end(),
                              std::back_inserter(next));
      }
      if (next.empty()) continue;
      cur.push_back(v);
      faces.push_back(cur);
      self(self, v, next);
      cur.pop_back();
    }
  };
  rec(rec, -1, {});
  return SimplicialComplex::from_closed_faces(n, std::move(faces));
}

int leray_number(const SimplicialComplex& k, const Coefficients& ring) {
  const int n = k.num_vertices();
  if (n > 16) throw Error("TooManyVertices", std::to_string(n) + " > 16");
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> w;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1U) w.push_back(v);
    }
    const auto top = reduced_cohomology(k.induced(w), ring).top_nonzero();
    if (top) best = std::max(best, *top + 1);
  }
  return best;
}

bool cohen_macaulay(const SimplicialComplex& k, const Coefficients& ring) {
  std::vector<Simplex> all{Simplex{}};
  for (int d = 0; d <= k.dim(); ++d) {
    for (const auto& s : k.faces(d)) all.push_back(s);
  }
  for (const auto& s : all) {
    const SimplicialComplex lk = s.empty() ? k : k.link(s);
    const HomologyResult h = reduced_homology(lk, ring);
    for (int q = -1; q < lk.dim(); ++q) {
      if (!h.vanishes(q)) return false;
    }
  }
  return true;
}

CmIntervalReport cm_open_intervals(const Poset& p) {
  CmIntervalReport rep;
  std::vector<Coefficients> rings{Field::Q, Field::F2, Field::F3, kIntegers};
  for (int x = 0; x < p.size(); ++x) {
    for (int y = 0; y < p.size(); ++y) {
      if (!p.lt(x, y)) continue;
      ++rep.intervals_checked;
      const SimplicialComplex k = order_complex(p, p.open_interval(x, y));
      for (const auto& r : rings) {
        if (!cohen_macaulay(k, r)) {
          rep.all_pass = false;
          rep.failures.push_back({x, y, to_string(r)});
        }
      }
    }
  }
  return rep;
}

}  // namespace lrb
