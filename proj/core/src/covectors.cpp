#include "lrb/covectors.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "lrb/error.hpp"

namespace lrb {

char to_char(Sign s) {
  switch (s) {
    case Sign::Zero: return '0';
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    case Sign::I: return 'i';
    case Sign::J: return 'j';
  }
  return '?';
}

Sign sign_from_char(char c) {
  switch (c) {
    case '0': return Sign::Zero;
    case '+': return Sign::Plus;
    case '-': return Sign::Minus;
    case 'i': return Sign::I;
    case 'j': return Sign::J;
    default: throw Error("BadSign", std::string(1, c));
  }
}

std::string to_string(const Covector& x) {
  std::string s;
  for (Sign e : x) s += to_char(e);
  return s;
}

Covector covector_from_string(const std::string& s) {
  Covector x;
  for (char c : s) x.push_back(sign_from_char(c));
  return x;
}

std::string to_string(Alphabet a) { return a == Alphabet::L ? "L" : "Ltilde"; }

namespace {

bool extended(Sign s) { return s == Sign::I || s == Sign::J; }

Sign opposite(Sign s) {
  if (s == Sign::Plus) return Sign::Minus;
  if (s == Sign::Minus) return Sign::Plus;
  return s;
}

Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

Covector compose(const Covector& x, const Covector& y, Alphabet a) {
  if (x.size() != y.size()) throw Error("LengthMismatch", to_string(x) + " vs " + to_string(y));
  Covector z(x.size());
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (a == Alphabet::L && (extended(x[e]) || extended(y[e]))) {
      throw Error("AlphabetMismatch", "extended entry in a standard covector");
    }
    if (x[e] == Sign::Zero) {
      z[e] = y[e];
    } else if (extended(x[e])) {
      z[e] = x[e];
    } else {
      z[e] = extended(y[e]) ? y[e] : x[e];
    }
  }
  return z;
}

std::vector<int> zero_set(const Covector& x) {
  std::vector<int> z;
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (x[e] == Sign::Zero) z.push_back(static_cast<int>(e));
  }
  return z;
}

std::vector<int> separation_set(const Covector& x, const Covector& y) {
  if (x.size() != y.size()) throw Error("LengthMismatch", to_string(x) + " vs " + to_string(y));
  std::vector<int> s;
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (extended(x[e]) || extended(y[e])) throw Error("AlphabetMismatch", "separation set");
    if (x[e] != Sign::Zero && y[e] == opposite(x[e])) s.push_back(static_cast<int>(e));
  }
  return s;
}

Covector negate(const Covector& x) {
  Covector z(x.size());
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (extended(x[e])) throw Error("AlphabetMismatch", "negation of i or j is undefined");
    z[e] = opposite(x[e]);
  }
  return z;
}

long CovectorSet::find(const Covector& x) const {
  auto it = std::lower_bound(vectors.begin(), vectors.end(), x);
  if (it == vectors.end() || *it != x) return -1;
  return it - vectors.begin();
}

CovectorSet CovectorSet::make(std::vector<std::string> ground, std::vector<Covector> vs,
                              Alphabet a) {
  CovectorSet cs;
  cs.ground = std::move(ground);
  cs.alphabet = a;
  for (const auto& x : vs) {
    if (x.size() != cs.ground.size()) throw Error("LengthMismatch", to_string(x));
    for (Sign s : x) {
      if (a == Alphabet::L && extended(s)) throw Error("AlphabetMismatch", to_string(x));
    }
  }
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
    throw Error("DuplicateCovector", to_string(*std::adjacent_find(vs.begin(), vs.end())));
  }
  cs.vectors = std::move(vs);
  return cs;
}

Lrb covector_lrb(const CovectorSet& cs) {
  const int n = static_cast<int>(cs.vectors.size());
  SemigroupTable t;
  t.n = n;
  t.table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    t.names.push_back(to_string(cs.vectors[a]));
    for (int b = 0; b < n; ++b) {
      const Covector z = compose(cs.vectors[a], cs.vectors[b], cs.alphabet);
      const long k = cs.find(z);
      if (k < 0) {
        throw Error("NotClosedUnderComposition",
                    to_string(cs.vectors[a]) + "*" + to_string(cs.vectors[b]));
      }
      t.table[static_cast<std::size_t>(a) * n + b] = static_cast<int>(k);
    }
  }
  return Lrb::validate(std::move(t));
}

// ---------------------------------------------------------------------------
// Arrangements and exact feasibility.

bool Arrangement::is_central() const {
  for (const auto& c : constants) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool Arrangement::is_essential() const { return rank(QMatrix(forms)) == dim; }

void Arrangement::validate() const {
  if (constants.size() != forms.size()) throw Error("DimensionMismatch", "constants vs forms");
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (static_cast<int>(forms[i].size()) != dim) {
      throw Error("DimensionMismatch", "form " + std::to_string(i));
    }
    bool zero = true;
    for (const auto& v : forms[i]) zero = zero && sgn(v) == 0;
    if (zero) throw Error("ZeroForm", std::to_string(i));
  }
  for (std::size_t i = 0; i < forms.size(); ++i) {
    for (std::size_t j = i + 1; j < forms.size(); ++j) {
      QMatrix m{forms[i], forms[j]};
      m[0].push_back(constants[i]);
      m[1].push_back(constants[j]);
      if (rank(m) == 1) {
        throw Error("DuplicateHyperplane", std::to_string(i) + "," + std::to_string(j));
      }
    }
  }
}

namespace {

// a.t + b > 0 stored as [a..., b].  Fourier-Motzkin on strict inequalities.
bool strict_system_feasible(std::vector<QVector> ineqs, int nvars) {
  for (int k = nvars - 1; k >= -1; --k) {
    std::set<QVector> uniq;
    for (auto& q : ineqs) {
      int lead = -1;
      for (int j = 0; j <= k; ++j) {
        if (sgn(q[j]) != 0) {
          lead = j;
          break;
        }
      }
      if (lead < 0) {
        if (sgn(q.back()) <= 0) return false;
        continue;
      }
      const Rational scale = abs(q[lead]);
      for (auto& v : q) v /= scale;
      uniq.insert(q);
    }
    if (k < 0) return true;
    std::vector<QVector> pos;
    std::vector<QVector> neg;
    std::vector<QVector> rest;
    for (const auto& q : uniq) {
      const int s = sgn(q[k]);
      (s > 0 ? pos : s < 0 ? neg : rest).push_back(q);
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        QVector c(p.size());
        const Rational wp = -n[k];
        const Rational wn = p[k];
        for (std::size_t j = 0; j < c.size(); ++j) c[j] = wp * p[j] + wn * n[j];
        c[k] = 0;
        rest.push_back(std::move(c));
      }
    }
    // Drop the eliminated coordinate.
    for (auto& q : rest) q.erase(q.begin() + k);
    ineqs = std::move(rest);
  }
  return true;
}

}  // namespace

bool sign_feasible_with(int dim, const std::vector<QVector>& forms, const QVector& constants,
                        const Covector& pattern, const QVector& g) {
  if (forms.size() != constants.size() || pattern.size() > forms.size()) {
    throw Error("DimensionMismatch", "forms, constants and pattern disagree");
  }
  QMatrix eq;
  QVector rhs;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (static_cast<int>(forms[i].size()) != dim) throw Error("DimensionMismatch", "form width");
    if (extended(pattern[i])) throw Error("AlphabetMismatch", "feasibility pattern");
    if (pattern[i] == Sign::Zero) {
      eq.push_back(forms[i]);
      rhs.push_back(constants[i]);
    }
  }
  QVector x0(dim);
  std::vector<QVector> basis;
  if (eq.empty()) {
    for (int j = 0; j < dim; ++j) {
      QVector e(dim);
      e[j] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    auto sol = solve(eq, rhs, dim);
    if (!sol) return false;
    x0 = *sol;
    basis = nullspace(eq, dim);
  }
  const int k = static_cast<int>(basis.size());
  std::vector<QVector> ineqs;
  auto add = [&](const QVector& f, const Rational& c, int s) {
    QVector q(k + 1);
    for (int j = 0; j < k; ++j) q[j] = s * dot(f, basis[j]);
    q[k] = s * (dot(f, x0) - c);
    ineqs.push_back(std::move(q));
  };
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] != Sign::Zero) add(forms[i], constants[i], pattern[i] == Sign::Plus ? 1 : -1);
  }
  if (!g.empty()) add(g, Rational(0), 1);
  return strict_system_feasible(std::move(ineqs), k);
}

bool sign_feasible(int dim, const std::vector<QVector>& forms, const QVector& constants,
                   const Covector& pattern) {
  if (pattern.size() != forms.size()) throw Error("DimensionMismatch", "pattern length");
  return sign_feasible_with(dim, forms, constants, pattern, {});
}

namespace {

std::vector<std::string> default_ground(std::size_t n) {
  std::vector<std::string> g;
  for (std::size_t i = 0; i < n; ++i) g.push_back("H" + std::to_string(i + 1));
  return g;
}

// All feasible patterns, extending prefixes only while feasible.
std::vector<Covector> enumerate_faces(int dim, const std::vector<QVector>& forms,
                                      const QVector& constants, const QVector& g) {
  std::vector<Covector> out;
  Covector cur;
  auto rec = [&](auto&& self) -> void {
    if (!sign_feasible_with(dim, forms, constants, cur, g)) return;
    if (cur.size() == forms.size()) {
      out.push_back(cur);
      return;
    }
    for (Sign s : {Sign::Zero, Sign::Plus, Sign::Minus}) {
      cur.push_back(s);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace

FaceBand face_monoid_central(const Arrangement& arr) {
  arr.validate();
  if (!arr.is_central()) throw Error("NotCentral", "nonzero constant term");
  if (static_cast<int>(arr.size()) > kMaxHyperplanes) {
    throw Error("TooManyHyperplanes", std::to_string(arr.size()));
  }
  auto faces = enumerate_faces(arr.dim, arr.forms, arr.constants, {});
  CovectorSet cs = CovectorSet::make(default_ground(arr.size()), std::move(faces));
  Lrb b = covector_lrb(cs);
  return {std::move(cs), std::move(b)};
}

FaceBand face_semigroup_affine(const Arrangement& arr) {
  arr.validate();
  if (static_cast<int>(arr.size()) > kMaxHyperplanes) {
    throw Error("TooManyHyperplanes", std::to_string(arr.size()));
  }
  // Homogenize: f_i(x) - c_i t in dimension d+1, keep t > 0.
  std::vector<QVector> forms;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    QVector f = arr.forms[i];
    f.push_back(-arr.constants[i]);
    forms.push_back(std::move(f));
  }
  QVector t(arr.dim + 1);
  t[arr.dim] = 1;
  QVector zeros(arr.size());
  auto faces = enumerate_faces(arr.dim + 1, forms, zeros, t);
  CovectorSet cs = CovectorSet::make(default_ground(arr.size()), std::move(faces));
  Lrb b = covector_lrb(cs);
  return {std::move(cs), std::move(b)};
}

// ---------------------------------------------------------------------------
// Axioms.

AxiomReport check_axioms(const CovectorSet& cs) {
  if (cs.alphabet != Alphabet::L) throw Error("AlphabetMismatch", "axioms need the L alphabet");
  AxiomReport r;
  const auto& v = cs.vectors;
  const int ne = cs.ground_size();
  auto fail = [&](const char* ax, std::string w) { r.failures.push_back({ax, std::move(w)}); };

  r.om0 = cs.contains(Covector(ne, Sign::Zero));
  if (!r.om0) fail("OM0", "zero vector missing");

  r.om1 = true;
  for (const auto& x : v) {
    if (!cs.contains(negate(x))) {
      r.om1 = false;
      fail("OM1", "-(" + to_string(x) + ") missing");
      break;
    }
  }

  r.om2 = true;
  for (std::size_t a = 0; a < v.size() && r.om2; ++a) {
    for (std::size_t b = 0; b < v.size(); ++b) {
      const Covector z = compose(v[a], v[b]);
      if (!cs.contains(z)) {
        r.om2 = false;
        fail("OM2", to_string(v[a]) + "*" + to_string(v[b]) + "=" + to_string(z) + " missing");
        break;
      }
    }
  }

  r.fs = true;
  for (std::size_t a = 0; a < v.size() && r.fs; ++a) {
    for (std::size_t b = 0; b < v.size(); ++b) {
      const Covector z = compose(v[a], negate(v[b]));
      if (!cs.contains(z)) {
        r.fs = false;
        fail("FS", to_string(v[a]) + "*-(" + to_string(v[b]) + ") missing");
        break;
      }
    }
  }

  r.om3 = true;
  for (std::size_t a = 0; a < v.size() && r.om3; ++a) {
    for (std::size_t b = 0; b < v.size() && r.om3; ++b) {
      const auto sep = separation_set(v[a], v[b]);
      if (sep.empty()) continue;
      const Covector xy = compose(v[a], v[b]);
      std::vector<char> in_sep(ne, 0);
      for (int e : sep) in_sep[e] = 1;
      for (int e : sep) {
        bool found = false;
        for (const auto& z : v) {
          if (z[e] != Sign::Zero) continue;
          bool ok = true;
          for (int f = 0; f < ne && ok; ++f) {
            if (!in_sep[f] && z[f] != xy[f]) ok = false;
          }
          if (ok) {
            found = true;
            break;
          }
        }
        if (!found) {
          r.om3 = false;
          fail("OM3", "x=" + to_string(v[a]) + " y=" + to_string(v[b]) + " e=" + cs.ground[e]);
          break;
        }
      }
    }
  }

  r.right_ideal = true;
  for (const auto& x : v) {
    for (int e : zero_set(x)) {
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        Covector y = x;
        y[e] = s;
        if (r.right_ideal && !cs.contains(y)) {
          r.right_ideal = false;
          fail("RightIdeal", to_string(x) + " filled at " + cs.ground[e] + " gives " +
                                 to_string(y) + " missing");
        }
      }
    }
  }
  return r;
}

std::vector<Covector> topes(const CovectorSet& cs) {
  std::vector<Covector> out;
  for (const auto& x : cs.vectors) {
    bool minimal = true;
    for (const auto& y : cs.vectors) {
      // y <= x iff xy = y
      if (y != x && compose(x, y, cs.alphabet) == y) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

std::vector<Covector> cocircuits(const CovectorSet& cs) {
  const Covector zero(cs.ground_size(), Sign::Zero);
  std::vector<Covector> out;
  for (const auto& x : cs.vectors) {
    if (x == zero) continue;
    bool maximal = true;
    for (const auto& y : cs.vectors) {
      // x < y iff yx = x
      if (y != zero && y != x && compose(y, x, cs.alphabet) == x) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

CovectorSet generated_by(const std::vector<std::string>& ground, const std::vector<Covector>& gens) {
  std::set<Covector> all(gens.begin(), gens.end());
  all.insert(Covector(ground.size(), Sign::Zero));
  std::vector<Covector> frontier(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Covector> next;
    const std::vector<Covector> snapshot(all.begin(), all.end());
    for (const auto& x : frontier) {
      for (const auto& y : snapshot) {
        for (const Covector& z : {compose(x, y), compose(y, x)}) {
          if (all.insert(z).second) next.push_back(z);
        }
      }
    }
    frontier = std::move(next);
  }
  return CovectorSet::make(ground, std::vector<Covector>(all.begin(), all.end()));
}

LexExtension lexicographic_extension(const CovectorSet& cs, const std::vector<int>& order,
                                     const std::vector<Sign>& alphas) {
  if (order.empty() || order.size() != alphas.size()) {
    throw Error("BadArgument", "need a nonempty ordered subset with one sign each");
  }
  for (Sign a : alphas) {
    if (a != Sign::Plus && a != Sign::Minus) throw Error("BadArgument", "signs must be + or -");
  }
  const AxiomReport ax = check_axioms(cs);
  if (!ax.oriented_matroid()) {
    throw Error("NotOrientedMatroid",
                ax.failures.empty() ? "" : ax.failures[0].axiom + ": " + ax.failures[0].witness);
  }
  LexExtension out;
  out.cocircuits = cocircuits(cs);
  auto sig = [&](const Covector& y) {
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Sign s = y[order[i]];
      if (s == Sign::Zero) continue;
      return s == alphas[i] ? Sign::Plus : Sign::Minus;  // alpha_i * y_{e_i}
    }
    return Sign::Zero;
  };
  const Lrb band = covector_lrb(cs);
  const Poset& lam = band.lambda();
  const Covector zero(cs.ground_size(), Sign::Zero);
  const int top_h = lam.heights()[band.sigma(static_cast<int>(cs.find(zero)))];
  auto rho = [&](const Covector& x) {
    return top_h - lam.heights()[band.sigma(static_cast<int>(cs.find(x)))];
  };

  out.generic = true;
  std::set<Covector> fresh;
  for (const auto& y : out.cocircuits) {
    const Sign s = sig(y);
    out.sigma.push_back(s);
    if (s == Sign::Zero) out.generic = false;
    Covector z = y;
    z.push_back(s);
    fresh.insert(z);
  }
  for (std::size_t a = 0; a < out.cocircuits.size(); ++a) {
    for (std::size_t b = 0; b < out.cocircuits.size(); ++b) {
      const Sign sa = out.sigma[a];
      const Sign sb = out.sigma[b];
      if (sa == Sign::Zero || sb != opposite(sa)) continue;
      if (!separation_set(out.cocircuits[a], out.cocircuits[b]).empty()) continue;
      const Covector y = compose(out.cocircuits[a], out.cocircuits[b]);
      if (rho(y) != 2) continue;
      Covector z = y;
      z.push_back(Sign::Zero);
      fresh.insert(z);
    }
  }
  out.new_cocircuits.assign(fresh.begin(), fresh.end());
  std::vector<std::string> ground = cs.ground;
  ground.push_back("p");
  out.extension = generated_by(ground, out.new_cocircuits);
  out.axioms = check_axioms(out.extension);
  std::set<Covector> hemi;
  for (const auto& x : out.extension.vectors) {
    if (x.back() == Sign::Plus) hemi.insert(Covector(x.begin(), x.end() - 1));
  }
  out.hemisphere.assign(hemi.begin(), hemi.end());
  return out;
}

// ---------------------------------------------------------------------------
// Visual hemispheres.

bool is_generic_form(const Arrangement& arr, const CovectorSet& faces, const QVector& g) {
  bool nonzero = false;
  for (const auto& v : g) nonzero = nonzero || sgn(v) != 0;
  if (!nonzero) return false;
  std::set<std::vector<int>> flats;
  const Covector zero(arr.size(), Sign::Zero);
  for (const auto& x : faces.vectors) {
    if (x != zero) flats.insert(zero_set(x));
  }
  for (const auto& z : flats) {
    QMatrix m;
    for (int i : z) m.push_back(arr.forms[i]);
    const long r0 = rank(m);
    m.push_back(g);
    if (rank(m) == r0) return false;
  }
  return true;
}

CoverCheck check_cover_conditions(const Lrb& b, const std::vector<int>& region) {
  CoverCheck c;
  std::vector<char> in(b.size(), 0);
  for (int r : region) in[r] = 1;
  c.right_ideal = true;
  for (int r : region) {
    for (int x = 0; x < b.size(); ++x) {
      if (!in[b.mul(r, x)]) c.right_ideal = false;
    }
  }
  const auto id = b.identity();
  c.proper = !region.empty() && static_cast<int>(region.size()) < b.size() && (!id || !in[*id]);
  // BR = dB, where dB = B minus the identity.
  std::vector<char> br(b.size(), 0);
  for (int x = 0; x < b.size(); ++x) {
    for (int r : region) br[b.mul(x, r)] = 1;
  }
  c.covers_boundary = id.has_value();
  for (int x = 0; x < b.size() && c.covers_boundary; ++x) {
    const bool boundary = x != *id;
    if (static_cast<bool>(br[x]) != boundary) c.covers_boundary = false;
  }
  c.connected = false;
  if (c.right_ideal && !region.empty()) {
    std::vector<int> sorted = region;
    std::sort(sorted.begin(), sorted.end());
    try {
      c.connected = is_connected(subsemigroup(b, sorted).lrb);
    } catch (const Error&) {
      c.connected = false;
    }
  }
  return c;
}

Hemisphere visual_hemisphere_with_form(const Arrangement& arr, const FaceBand& fb,
                                       const QVector& g) {
  Hemisphere h;
  h.form = g;
  h.generic = is_generic_form(arr, fb.covectors, g);
  if (!h.generic) throw Error("HemisphereInvalid", "form vanishes on a nonzero flat");
  for (std::size_t i = 0; i < fb.covectors.vectors.size(); ++i) {
    if (sign_feasible_with(arr.dim, arr.forms, arr.constants, fb.covectors.vectors[i], g)) {
      h.region.push_back(static_cast<int>(i));
    }
  }
  const CoverCheck c = check_cover_conditions(fb.lrb, h.region);
  h.covers_boundary = c.covers_boundary && c.right_ideal && c.proper;
  h.region_connected = c.connected;
  h.method = "given";
  return h;
}

Hemisphere visual_hemisphere_realizable(const Arrangement& arr, const FaceBand& fb,
                                        std::uint64_t seed) {
  if (!arr.is_central() || !arr.is_essential()) {
    throw Error("NotEssential", "visual hemispheres need an essential central arrangement");
  }
  std::mt19937_64 rng(seed);
  int attempts = 0;
  long bound = 1;
  for (int t = 0; t < 32; ++t, bound = std::min(bound * 2, 1L << 20)) {
    ++attempts;
    std::uniform_int_distribution<long> dist(-bound, bound);
    QVector g(arr.dim);
    for (auto& v : g) v = Rational(dist(rng));
    if (is_generic_form(arr, fb.covectors, g)) {
      Hemisphere h = visual_hemisphere_with_form(arr, fb, g);
      h.seed = seed;
      h.attempts = attempts;
      h.method = "random";
      return h;
    }
  }
  // Lexicographic fallback sum eps^i f_i with eps below 1/(n C + 1).
  Rational c = 1;
  for (const auto& f : arr.forms) {
    for (const auto& v : f) c = std::max(c, Rational(abs(v)));
  }
  Rational eps = 1 / (Rational(static_cast<long>(arr.size())) * c + 1);
  for (int t = 0; t < 64; ++t, eps /= 2) {
    ++attempts;
    QVector g(arr.dim);
    Rational p = 1;
    for (const auto& f : arr.forms) {
      p *= eps;
      for (int j = 0; j < arr.dim; ++j) g[j] += p * f[j];
    }
    if (is_generic_form(arr, fb.covectors, g)) {
      Hemisphere h = visual_hemisphere_with_form(arr, fb, g);
      h.seed = seed;
      h.attempts = attempts;
      h.method = "epsilon";
      return h;
    }
  }
  throw Error("GenericSearchExhausted", std::to_string(attempts) + " attempts");
}

// ---------------------------------------------------------------------------
// Braid arrangement and ranking COMs.

std::vector<OrderedPartition> ordered_set_partitions(int n) {
  std::vector<OrderedPartition> out;
  // Assign each element a block index; keep surjective assignments.
  std::vector<int> block(n, 0);
  for (int k = 1; k <= n; ++k) {
    std::fill(block.begin(), block.end(), 0);
    while (true) {
      std::vector<char> used(k, 0);
      for (int b : block) used[b] = 1;
      if (std::all_of(used.begin(), used.end(), [](char u) { return u != 0; })) {
        OrderedPartition p(k);
        for (int i = 0; i < n; ++i) p[block[i]].push_back(i);
        out.push_back(std::move(p));
      }
      int i = n - 1;
      while (i >= 0 && block[i] == k - 1) block[i--] = 0;
      if (i < 0) break;
      ++block[i];
    }
  }
  std::sort(out.begin(), out.end(), [](const OrderedPartition& a, const OrderedPartition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::string to_string(const OrderedPartition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += "|";
    for (int e : p[i]) s += std::to_string(e + 1);
  }
  return s;
}

OrderedPartition braid_product(const OrderedPartition& p, const OrderedPartition& q) {
  OrderedPartition out;
  for (const auto& a : p) {
    for (const auto& b : q) {
      std::vector<int> c;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
      if (!c.empty()) out.push_back(std::move(c));
    }
  }
  return out;
}

namespace {

Lrb partition_band(const std::vector<OrderedPartition>& parts) {
  std::map<OrderedPartition, int> index;
  for (std::size_t i = 0; i < parts.size(); ++i) index[parts[i]] = static_cast<int>(i);
  const int n = static_cast<int>(parts.size());
  SemigroupTable t;
  t.n = n;
  t.table.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    t.names.push_back(to_string(parts[a]));
    for (int b = 0; b < n; ++b) {
      auto it = index.find(braid_product(parts[a], parts[b]));
      if (it == index.end()) throw Error("NotClosed", "ordered partition product");
      t.table[static_cast<std::size_t>(a) * n + b] = it->second;
    }
  }
  return Lrb::validate(std::move(t));
}

}  // namespace

Lrb braid_face_monoid(int n) {
  if (n < 1 || n > 5) throw Error("BadArgument", "braid size must be in 1..5");
  return partition_band(ordered_set_partitions(n));
}

Lrb ranking_com(const Poset& p) {
  const int n = p.size();
  if (n < 1 || n > 5) throw Error("BadArgument", "ranking poset size must be in 1..5");
  std::vector<OrderedPartition> keep;
  for (auto& part : ordered_set_partitions(n)) {
    std::vector<int> blk(n);
    for (std::size_t b = 0; b < part.size(); ++b) {
      for (int e : part[b]) blk[e] = static_cast<int>(b);
    }
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        if (p.lt(i, j) && blk[i] >= blk[j]) ok = false;
      }
    }
    if (ok) keep.push_back(std::move(part));
  }
  return partition_band(keep);
}

Arrangement braid_arrangement(int n) {
  if (n < 2) throw Error("BadArgument", "braid arrangement needs n >= 2");
  Arrangement a;
  a.dim = n - 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      QVector f(n - 1);
      f[i] = 1;
      if (j < n - 1) f[j] = -1;
      a.forms.push_back(std::move(f));
      a.constants.push_back(0);
    }
  }
  return a;
}

Covector braid_covector(const OrderedPartition& p, int n) {
  std::vector<int> blk(n);
  for (std::size_t b = 0; b < p.size(); ++b) {
    for (int e : p[b]) blk[e] = static_cast<int>(b);
  }
  Covector x;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      x.push_back(blk[i] == blk[j] ? Sign::Zero : (blk[i] < blk[j] ? Sign::Minus : Sign::Plus));
    }
  }
  return x;
}

Arrangement boolean_arrangement(int n) {
  Arrangement a;
  a.dim = n;
  for (int i = 0; i < n; ++i) {
    QVector f(n);
    f[i] = 1;
    a.forms.push_back(std::move(f));
    a.constants.push_back(0);
  }
  return a;
}

}  // namespace lrb
