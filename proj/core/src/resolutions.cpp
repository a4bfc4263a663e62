#include "lrb/resolutions.hpp"

#include <algorithm>
#include <set>

#include "lrb/cellular.hpp"
#include "lrb/constructions.hpp"
#include "lrb/covectors.hpp"
#include "lrb/error.hpp"

namespace lrb {

namespace {

void require_connected(const Lrb& b) {
  if (!is_connected(b)) throw PreconditionError("NotConnected", "the algebra is not unital");
}

// Sorts v in place and returns the sign of the sorting permutation, or 0 if
// v has a repeated entry.
int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] == v[i - 1]) return 0;
  }
  return sign;
}

// Action of B on the chains of a simplicial complex whose vertex i is the
// element verts[i]; elements with support not above x act by zero.
std::vector<ModuleAction> simplicial_actions(const Lrb& b, int x, const SimplicialComplex& k,
                                             const std::vector<int>& verts) {
  std::vector<int> pos(b.size(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);
  std::vector<ModuleAction> out;
  for (int q = 0; q <= k.dim(); ++q) {
    const auto& faces = k.faces(q);
    ModuleAction m;
    m.dim = static_cast<int>(faces.size());
    for (const auto& f : faces) {
      std::string name;
      for (int v : f) name += (name.empty() ? "" : ",") + b.name(verts[v]);
      m.basis_names.push_back("[" + name + "]");
    }
    for (int a = 0; a < b.size(); ++a) {
      SparseMatrix mat(m.dim, m.dim);
      if (b.lambda().leq(x, b.sigma(a))) {
        for (int j = 0; j < m.dim; ++j) {
          std::vector<int> img;
          for (int v : faces[j]) img.push_back(pos[b.mul(a, verts[v])]);
          if (std::find(img.begin(), img.end(), -1) != img.end()) {
            throw Error("ActionEscapes", "image leaves the vertex set");
          }
          const int s = sort_sign(img);
          if (s == 0) continue;
          const long i = k.index_of(img);
          if (i < 0) throw Error("ActionEscapes", "image is not a face");
          mat.add(static_cast<int>(i), j, s);
        }
      }
      mat.normalize();
      m.action.push_back(std::move(mat));
    }
    out.push_back(std::move(m));
  }
  return out;
}

bool all_acyclic(const ChainComplex& cc, const Coefficients& ring) {
  return homology(cc, ring).acyclic();
}

}  // namespace

std::vector<long> ModuleComplex::ranks() const {
  std::vector<long> r;
  for (std::size_t i = 1; i < modules.size(); ++i) r.push_back(modules[i].dim);
  return r;
}

ChainComplex ModuleComplex::chain_complex() const {
  ChainComplex c;
  c.low = -1;
  for (const auto& m : modules) c.dims.push_back(m.dim);
  c.d = d;
  return c;
}

void certify(const Lrb& b, ModuleComplex& c) {
  c.actions_valid = std::all_of(c.modules.begin(), c.modules.end(),
                                [&](const ModuleAction& m) { return m.is_module(b); });
  c.module_maps = true;
  c.squares_to_zero = true;
  for (std::size_t i = 1; i < c.modules.size(); ++i) {
    for (int a = 0; a < b.size() && c.module_maps; ++a) {
      if (!(c.d[i] * c.modules[i].action[a] == c.modules[i - 1].action[a] * c.d[i])) {
        c.module_maps = false;
      }
    }
    if (i >= 2 && !(c.d[i - 1] * c.d[i]).is_zero()) c.squares_to_zero = false;
  }
  const ChainComplex cc = c.chain_complex();
  c.exact_q = all_acyclic(cc, Coefficients(Field::Q));
  c.exact_f2 = all_acyclic(cc, Coefficients(Field::F2));
  c.torsion_free = all_acyclic(cc, kIntegers);
}

OrderComplexResolution order_complex_resolution(const Lrb& b, int x) {
  require_connected(b);
  if (x < 0 || x >= b.num_supports()) throw Error("UnknownSupportElement", std::to_string(x));
  const std::vector<int> elems = b.contraction_elements(x);
  const SimplicialComplex k = order_complex(b.order(), elems);
  const ChainComplex aug = augmented_chain_complex(k);

  OrderComplexResolution r;
  ModuleComplex& c = r.complex;
  c.target = x;
  c.modules.push_back(simple_module(b, x));
  for (auto& m : simplicial_actions(b, x, k, elems)) c.modules.push_back(std::move(m));
  c.d = aug.d;
  certify(b, c);

  // Schutzenberger multiplicities from simplex counts.
  const int m = b.num_supports();
  auto& cert = r.multiplicities;
  cert.ranks_match = true;
  cert.characters_match = true;
  std::vector<std::vector<std::int64_t>> cols(m);
  for (int y = 0; y < m; ++y) {
    if (b.lambda().leq(x, y)) cols[y] = composition_multiplicities(b, schutzenberger_module(b, y));
  }
  for (int q = 0; q <= k.dim(); ++q) {
    std::vector<std::int64_t> counts(m, 0);
    std::int64_t rank = 0;
    std::vector<std::int64_t> expected(m, 0);
    for (int y = 0; y < m; ++y) {
      if (!b.lambda().leq(x, y)) continue;
      const SimplicialComplex below = ext_complex(b, x, y);
      counts[y] = q == 0 ? 1 : static_cast<std::int64_t>(below.count(q - 1));
      if (q > 0 && below.num_vertices() == 0) counts[y] = 0;
      rank += counts[y] * static_cast<std::int64_t>(b.lclass(y).size());
      for (int z = 0; z < m; ++z) expected[z] += counts[y] * cols[y][z];
    }
    cert.counts.push_back(counts);
    if (rank != c.modules[q + 1].dim) cert.ranks_match = false;
    if (composition_multiplicities(b, c.modules[q + 1]) != expected) cert.characters_match = false;
  }
  return r;
}

CellularResolution minimal_cellular_resolution(const Lrb& b, int x) {
  require_connected(b);
  if (x < 0 || x >= b.num_supports()) throw Error("UnknownSupportElement", std::to_string(x));
  const std::vector<int> elems = b.contraction_elements(x);
  const Poset p = b.order().induced(elems);
  const CellularComplex cw = cellular_chain_complex(p);
  std::vector<int> pos(b.size(), -1);
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);

  CellularResolution r;
  ModuleComplex& c = r.complex;
  c.target = x;
  c.modules.push_back(simple_module(b, x));
  for (int q = 0; q <= cw.dim; ++q) {
    const auto& cells = cw.cells[q];
    ModuleAction m;
    m.dim = static_cast<int>(cells.size());
    for (int cell : cells) m.basis_names.push_back(b.name(elems[cell]));
    for (int a = 0; a < b.size(); ++a) {
      SparseMatrix mat(m.dim, m.dim);
      if (b.lambda().leq(x, b.sigma(a))) {
        for (int j = 0; j < m.dim; ++j) {
          const int cell = cells[j];
          const int image = pos[b.mul(a, elems[cell])];
          if (cw.height[image] != q) continue;  // collapses to a lower cell
          // a carries z_cell onto +-z_image; read the sign off every flag.
          int sign = 0;
          for (const auto& [flag, coeff] : cw.cycle[cell]) {
            CellularComplex::Flag moved;
            for (int v : flag) moved.push_back(pos[b.mul(a, elems[v])]);
            auto it = cw.cycle[image].find(moved);
            if (it == cw.cycle[image].end()) throw Error("SignSolveFailed", "flag leaves the cell");
            const int s = coeff * it->second;
            if (sign != 0 && s != sign) throw Error("SignSolveFailed", "inconsistent transport");
            sign = s;
          }
          mat.add(cw.position[image], j, sign);
        }
      }
      mat.normalize();
      m.action.push_back(std::move(mat));
    }
    c.modules.push_back(std::move(m));
  }
  c.d = cw.boundary;
  c.d.insert(c.d.begin(), SparseMatrix(0, 1));
  certify(b, c);

  // Minimality through Hom into each simple k_Y.
  auto& cert = r.minimality;
  const int nsup = b.num_supports();
  const ExtTable ext = ext_table(b, Field::Q);
  cert.coboundaries_vanish = true;
  cert.hom_matches_ext = true;
  cert.decomposition_matches = true;
  std::vector<std::vector<std::int64_t>> cols(nsup);
  for (int y = 0; y < nsup; ++y) cols[y] = composition_multiplicities(b, schutzenberger_module(b, y));
  const Poset& lam = b.lambda();
  for (int q = 0; q <= cw.dim; ++q) {
    const ModuleAction& mq = c.modules[q + 1];
    std::vector<long> hom(nsup, 0);
    for (int y = 0; y < nsup; ++y) {
      const int ey = b.rep(y);
      SparseMatrix w(mq.dim, 0);
      for (int a : b.order().strictly_below(ey)) w = SparseMatrix::hconcat(w, mq.action[a]);
      const long rv = rank(mq.action[ey], Field::Q);
      const long rw = rank(w, Field::Q);
      hom[y] = rv - rw;
      if (hom[y] != ext.at(q, x, y)) cert.hom_matches_ext = false;
      if (q >= 1) {
        const ModuleAction& prev = c.modules[q];
        SparseMatrix wp(prev.dim, 0);
        for (int a : b.order().strictly_below(ey)) wp = SparseMatrix::hconcat(wp, prev.action[a]);
        const SparseMatrix image = c.d[q + 1] * mq.action[ey];
        if (rank(SparseMatrix::hconcat(wp, image), Field::Q) != rank(wp, Field::Q)) {
          cert.coboundaries_vanish = false;
        }
      }
    }
    cert.hom.push_back(hom);
    std::vector<std::int64_t> expected(nsup, 0);
    for (int y = 0; y < nsup; ++y) {
      if (lam.leq(x, y) && lam.heights()[y] - lam.heights()[x] == q) {
        for (int z = 0; z < nsup; ++z) expected[z] += cols[y][z];
      }
    }
    if (composition_multiplicities(b, mq) != expected) cert.decomposition_matches = false;
  }
  return r;
}

std::vector<int> non_geometric_witnesses(const Lrb& b) {
  std::vector<int> out;
  for (int a = 0; a < b.size(); ++a) {
    std::vector<int> stab;
    for (int c = 0; c < b.size(); ++c) {
      if (b.mul(c, a) == a) stab.push_back(c);
    }
    bool commutative = true;
    for (int u : stab) {
      for (int v : stab) {
        if (b.mul(u, v) != b.mul(v, u)) commutative = false;
      }
    }
    if (!commutative) out.push_back(a);
  }
  return out;
}

CrosscutResolution geometric_crosscut_resolution(const Lrb& b, int x) {
  require_connected(b);
  if (x < 0 || x >= b.num_supports()) throw Error("UnknownSupportElement", std::to_string(x));
  const auto bad = non_geometric_witnesses(b);
  if (!bad.empty()) {
    throw PreconditionError("NotGeometric", "stabilizer of " + b.name(bad[0]) + " is not commutative");
  }
  const std::vector<int>& lx = b.lclass(x);
  std::vector<Simplex> facets;
  for (int u = 0; u < b.size(); ++u) {
    Simplex s;
    for (std::size_t i = 0; i < lx.size(); ++i) {
      if (b.mul(u, lx[i]) == lx[i]) s.push_back(static_cast<int>(i));
    }
    if (!s.empty()) facets.push_back(std::move(s));
  }
  CrosscutResolution r;
  r.crosscut = SimplicialComplex::from_facets(static_cast<int>(lx.size()), facets);
  const ChainComplex aug = augmented_chain_complex(r.crosscut);
  ModuleComplex& c = r.complex;
  c.target = x;
  c.modules.push_back(simple_module(b, x));
  for (auto& m : simplicial_actions(b, x, r.crosscut, lx)) c.modules.push_back(std::move(m));
  c.d = aug.d;
  certify(b, c);
  // Degree 0 is kL_X itself: same action matrices up to the basis order.
  const ModuleAction kl = schutzenberger_module(b, x);
  r.degree0_is_projective_cover = c.modules.size() > 1 && c.modules[1].dim == kl.dim;
  for (int a = 0; a < b.size() && r.degree0_is_projective_cover; ++a) {
    if (!(c.modules[1].action[a] == kl.action[a])) r.degree0_is_projective_cover = false;
  }
  return r;
}

RightCoverCertificate right_projective_cover(const Lrb& b, const std::vector<int>& region) {
  if (!b.is_monoid()) throw PreconditionError("NotMonoid", "right projective covers need a monoid");
  std::vector<char> in(b.size(), 0);
  for (int r : region) {
    if (r < 0 || r >= b.size()) throw Error("UnknownElement", std::to_string(r));
    in[r] = 1;
  }
  for (int r : region) {
    for (int a = 0; a < b.size(); ++a) {
      if (!in[b.mul(r, a)]) {
        throw Error("NotRightIdeal", b.name(r) + "*" + b.name(a) + " leaves R");
      }
    }
  }
  const CoverCheck chk = check_cover_conditions(b, region);
  if (!chk.proper) throw Error("ConditionFailed", "proper");
  if (!chk.covers_boundary) throw Error("ConditionFailed", "covers_boundary");
  if (!chk.connected) throw Error("ConditionFailed", "connected");
  RightCoverCertificate c;
  c.quotient_dim = b.size() - static_cast<long>(std::set<int>(region.begin(), region.end()).size());
  c.covers_boundary = chk.covers_boundary;
  c.connected = chk.connected;
  return c;
}

InjectiveEnvelope injective_envelope(const Lrb& b, int x, const std::vector<int>& region) {
  require_connected(b);
  if (x < 0 || x >= b.num_supports()) throw Error("UnknownSupportElement", std::to_string(x));
  const int e = b.rep(x);
  const Restriction del = deletion(b, e);
  std::vector<int> local(b.size(), -1);
  for (std::size_t i = 0; i < del.embed.size(); ++i) local[del.embed[i]] = static_cast<int>(i);
  std::vector<int> lr;
  std::vector<char> in(b.size(), 0);
  for (int r : region) {
    if (r < 0 || r >= b.size() || local[r] < 0) {
      throw Error("HemisphereInvalid", "R is not inside e_X B");
    }
    lr.push_back(local[r]);
    in[r] = 1;
  }
  std::sort(lr.begin(), lr.end());
  if (!check_cover_conditions(del.lrb, lr).passes()) {
    throw Error("HemisphereInvalid", "cover conditions fail inside e_X B");
  }
  InjectiveEnvelope env;
  for (int c : del.embed) {
    if (!in[c]) env.basis.push_back(c);
  }
  std::vector<int> pos(b.size(), -1);
  for (std::size_t i = 0; i < env.basis.size(); ++i) pos[env.basis[i]] = static_cast<int>(i);
  ModuleAction& m = env.module;
  m.dim = static_cast<int>(env.basis.size());
  for (int c : env.basis) m.basis_names.push_back("d_" + b.name(c));
  for (int a = 0; a < b.size(); ++a) {
    SparseMatrix mat(m.dim, m.dim);
    for (int i = 0; i < m.dim; ++i) {
      const int t = b.mul(env.basis[i], a);
      if (pos[t] >= 0) mat.add(i, pos[t], 1);  // (a d_t)(c) = [ca = t]
    }
    mat.normalize();
    m.action.push_back(std::move(mat));
  }
  // Socle = vectors killed by the radical, spanned by b - e_{sigma(b)}.
  QMatrix rows;
  for (int a = 0; a < b.size(); ++a) {
    const SparseMatrix diff = m.action[a] - m.action[b.rep(b.sigma(a))];
    for (int i = 0; i < m.dim; ++i) {
      QVector row(m.dim);
      bool any = false;
      for (int j = 0; j < m.dim; ++j) {
        const std::int64_t v = diff.at(i, j);
        if (v != 0) {
          row[j] = Rational(static_cast<long>(v));
          any = true;
        }
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  std::vector<QVector> soc;
  if (rows.empty()) {
    for (int j = 0; j < m.dim; ++j) {
      QVector v(m.dim);
      v[j] = 1;
      soc.push_back(std::move(v));
    }
  } else {
    soc = nullspace(rows, m.dim);
  }
  env.socle_dim = static_cast<long>(soc.size());
  env.socle_is_simple_x = false;
  if (soc.size() == 1 && pos[e] >= 0) {
    bool indicator = true;
    for (int j = 0; j < m.dim; ++j) {
      if ((j == pos[e]) != (sgn(soc[0][j]) != 0)) indicator = false;
    }
    bool acts = true;
    for (int a = 0; a < b.size(); ++a) {
      const std::int64_t expect = b.lambda().leq(x, b.sigma(a)) ? 1 : 0;
      for (int i = 0; i < m.dim; ++i) {
        if (m.action[a].at(i, pos[e]) != (i == pos[e] ? expect : 0)) acts = false;
      }
    }
    env.socle_is_simple_x = indicator && acts;
  }
  env.multiplicities = composition_multiplicities(b, m);
  return env;
}

NecklaceReport necklace_count(int n) {
  if (n < 1 || n > 5) throw Error("BadArgument", "necklace count needs 1 <= n <= 5");
  NecklaceReport r;
  r.n = n;
  for (const auto& p : ordered_set_partitions(n)) {
    if (std::find(p[0].begin(), p[0].end(), n - 1) != p[0].end()) ++r.by_partitions;
  }
  // Set partitions as block labels in restricted growth form.
  std::vector<std::vector<int>> parts;
  std::vector<int> a(n, 0);
  auto rec = [&](auto&& self, int i, int maxb) -> void {
    if (i == n) {
      parts.push_back(a);
      return;
    }
    for (int v = 0; v <= maxb + 1; ++v) {
      a[i] = v;
      self(self, i + 1, std::max(maxb, v));
    }
  };
  a[0] = 0;
  rec(rec, 1, 0);
  const int m = static_cast<int>(parts.size());
  // p <= q iff p refines q.
  std::vector<char> leq(static_cast<std::size_t>(m) * m, 0);
  int top = -1;
  for (int i = 0; i < m; ++i) {
    if (*std::max_element(parts[i].begin(), parts[i].end()) == 0) top = i;
    for (int j = 0; j < m; ++j) {
      bool refines = true;
      for (int u = 0; u < n && refines; ++u) {
        for (int v = 0; v < n && refines; ++v) {
          if (parts[i][u] == parts[i][v] && parts[j][u] != parts[j][v]) refines = false;
        }
      }
      leq[static_cast<std::size_t>(i) * m + j] = refines ? 1 : 0;
    }
  }
  const Poset pi = Poset::from_leq(m, std::move(leq), false);
  const auto mu = pi.mobius();
  for (int i = 0; i < m; ++i) r.by_mobius += std::abs(mu[static_cast<std::size_t>(i) * m + top]);
  return r;
}

}  // namespace lrb
