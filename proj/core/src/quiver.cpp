#include "lrb/quiver.hpp"

#include <map>

#include "lrb/cellular.hpp"
#include "lrb/error.hpp"
#include "lrb/ext.hpp"

namespace lrb {

std::vector<Path> paths_of_length(const Quiver& q, int k) {
  std::vector<Path> out;
  if (k == 0) return out;
  for (std::size_t a = 0; a < q.arrows.size(); ++a) out.push_back({static_cast<int>(a)});
  for (int len = 1; len < k; ++len) {
    std::vector<Path> next;
    for (const auto& p : out) {
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].first == q.arrows[p.back()].second) {
          Path r = p;
          r.push_back(static_cast<int>(a));
          next.push_back(std::move(r));
        }
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<long> path_algebra_quotient_dims(const Quiver& q, const std::vector<Relation>& rels) {
  // Acyclic: no path longer than the vertex count.
  if (!paths_of_length(q, q.vertices + 1).empty()) throw Error("NotAcyclic", "quiver has a cycle");
  std::vector<std::pair<int, int>> ends;
  for (const auto& r : rels) {
    int s = -1;
    int t = -1;
    for (const auto& [p, c] : r.terms) {
      if (p.size() != 2) throw Error("NotQuadratic", "relation term of length " + std::to_string(p.size()));
      const int ps = q.arrows[p.front()].first;
      const int pt = q.arrows[p.back()].second;
      if (s < 0) {
        s = ps;
        t = pt;
      } else if (ps != s || pt != t) {
        throw Error("NotQuadratic", "relation terms with different endpoints");
      }
    }
    ends.emplace_back(s, t);
  }
  std::vector<long> dims{q.vertices};
  for (int k = 1;; ++k) {
    const auto paths = paths_of_length(q, k);
    if (paths.empty()) break;
    std::map<Path, int> index;
    for (std::size_t i = 0; i < paths.size(); ++i) index[paths[i]] = static_cast<int>(i);
    QSpan ideal(static_cast<int>(paths.size()));
    if (k >= 2) {
      for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        if (ends[ri].first < 0) continue;
        for (int i = 0; i <= k - 2; ++i) {
          // prefixes of length i ending at the source, suffixes starting at the target
          std::vector<Path> pre{Path{}};
          std::vector<Path> suf{Path{}};
          if (i > 0) {
            pre.clear();
            for (const auto& p : paths_of_length(q, i)) {
              if (q.arrows[p.back()].second == ends[ri].first) pre.push_back(p);
            }
          }
          if (k - 2 - i > 0) {
            suf.clear();
            for (const auto& p : paths_of_length(q, k - 2 - i)) {
              if (q.arrows[p.front()].first == ends[ri].second) suf.push_back(p);
            }
          }
          for (const auto& p : pre) {
            for (const auto& s : suf) {
              QVector v(paths.size());
              for (const auto& [mid, c] : rels[ri].terms) {
                Path full = p;
                full.insert(full.end(), mid.begin(), mid.end());
                full.insert(full.end(), s.begin(), s.end());
                v[index.at(full)] += c;
              }
              ideal.add(std::move(v));
            }
          }
        }
      }
    }
    dims.push_back(static_cast<long>(paths.size()) - ideal.dim());
  }
  return dims;
}

CwLrbReport is_cw_lrb(const Lrb& b) {
  CwLrbReport r;
  r.connected = is_connected(b);
  r.passes = r.connected;
  if (!r.connected) r.reason = "not connected";
  for (int x = 0; x < b.num_supports(); ++x) {
    const CwReport c = homology_cw_report(b.order().induced(b.contraction_elements(x)));
    if (!c.passes) {
      r.passes = false;
      r.failing_supports.push_back(x);
      if (r.reason.empty()) r.reason = "contraction " + std::to_string(x) + ": " + c.reason;
    }
  }
  const CwReport whole = homology_cw_report(b.order());
  r.dim = whole.dim;
  return r;
}

QuiverPresentation hasse_presentation(const Lrb& b) {
  const Poset& lam = b.lambda();
  QuiverPresentation p;
  p.quiver.vertices = lam.size();
  for (int x = 0; x < lam.size(); ++x) p.quiver.vertex_names.push_back(b.name(b.rep(x)));
  std::map<std::pair<int, int>, int> arrow;
  for (const auto& [x, y] : lam.covers()) {
    arrow[{x, y}] = static_cast<int>(p.quiver.arrows.size());
    p.quiver.arrows.emplace_back(x, y);
  }
  for (int x = 0; x < lam.size(); ++x) {
    for (int y = 0; y < lam.size(); ++y) {
      if (!lam.lt(x, y) || lam.heights()[y] - lam.heights()[x] != 2) continue;
      Relation r;
      for (int z : lam.open_interval(x, y)) {
        r.terms.push_back({Path{arrow.at({x, z}), arrow.at({z, y})}, Rational(1)});
      }
      p.relations.push_back(std::move(r));
      p.relation_intervals.emplace_back(x, y);
    }
  }
  p.quotient_dims = path_algebra_quotient_dims(p.quiver, p.relations);
  for (long d : p.quotient_dims) p.total += d;
  p.dimension_matches = p.total == b.size();
  return p;
}

QuiverPresentation quiver_presentation_cw(const Lrb& b) {
  const CwLrbReport cw = is_cw_lrb(b);
  if (!cw.passes) throw PreconditionError("NotCwLrb", cw.reason);
  return hasse_presentation(b);
}

QuadraticDual quadratic_dual_dims(const Lrb& b) {
  const CwLrbReport cw = is_cw_lrb(b);
  if (!cw.passes) throw PreconditionError("NotCwLrb", cw.reason);
  const QuiverPresentation pres = hasse_presentation(b);
  const Quiver& q = pres.quiver;
  QuadraticDual d;
  d.quiver.vertices = q.vertices;
  d.quiver.vertex_names = q.vertex_names;
  for (const auto& [s, t] : q.arrows) d.quiver.arrows.emplace_back(t, s);

  // Length-2 paths (a, b) of Q pair with (b*, a*) in the opposite quiver.
  const auto p2 = paths_of_length(q, 2);
  std::map<Path, int> index;
  for (std::size_t i = 0; i < p2.size(); ++i) index[p2[i]] = static_cast<int>(i);
  QMatrix rel_rows;
  for (const auto& r : pres.relations) {
    QVector v(p2.size());
    for (const auto& [p, c] : r.terms) v[index.at(p)] += c;
    rel_rows.push_back(std::move(v));
  }
  std::vector<QVector> perp;
  if (rel_rows.empty()) {
    for (std::size_t i = 0; i < p2.size(); ++i) {
      QVector e(p2.size());
      e[i] = 1;
      perp.push_back(std::move(e));
    }
  } else {
    perp = nullspace(rel_rows, static_cast<int>(p2.size()));
  }
  for (const auto& w : perp) {
    Relation r;
    for (std::size_t i = 0; i < p2.size(); ++i) {
      if (sgn(w[i]) != 0) r.terms.push_back({Path{p2[i][1], p2[i][0]}, w[i]});
    }
    // Split by endpoints so every relation stays homogeneous.
    std::map<std::pair<int, int>, Relation> parts;
    for (auto& t : r.terms) {
      const int s = d.quiver.arrows[t.first[0]].first;
      const int e = d.quiver.arrows[t.first[1]].second;
      parts[{s, e}].terms.push_back(t);
    }
    for (auto& [k, part] : parts) d.relations.push_back(std::move(part));
  }
  d.dims = path_algebra_quotient_dims(d.quiver, d.relations);
  for (long v : d.dims) d.total += v;

  const Poset& lam = b.lambda();
  for (int x = 0; x < lam.size(); ++x) {
    for (int y = 0; y < lam.size(); ++y) {
      if (!lam.leq(x, y)) continue;
      const int rk = lam.heights()[y] - lam.heights()[x];
      if (static_cast<int>(d.interval_counts.size()) <= rk) d.interval_counts.resize(rk + 1, 0);
      ++d.interval_counts[rk];
      ++d.pairs;
    }
  }
  std::vector<long> dims = d.dims;
  while (!dims.empty() && dims.back() == 0) dims.pop_back();
  d.matches = dims == d.interval_counts && d.total == d.pairs;
  return d;
}

IncidenceCertificate incidence_algebra_certificate(const Lrb& b) {
  IncidenceCertificate c;
  const Poset& lam = b.lambda();
  c.thin = is_thin(lam);
  const IntMatrix cartan = cartan_by_characters(b);
  c.cartan_is_zeta = true;
  for (int x = 0; x < lam.size(); ++x) {
    for (int y = 0; y < lam.size(); ++y) {
      if (cartan[x][y] != (lam.leq(y, x) ? 1 : 0)) c.cartan_is_zeta = false;
    }
  }
  return c;
}

}  // namespace lrb
