#include "lrb/algebra.hpp"

#include "lrb/error.hpp"

namespace lrb {

AlgebraElement basis_element(const Lrb& b, int a) {
  AlgebraElement x(b.size());
  x[a] = 1;
  return x;
}

AlgebraElement multiply(const Lrb& b, const AlgebraElement& x, const AlgebraElement& y) {
  AlgebraElement z(b.size());
  for (int i = 0; i < b.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < b.size(); ++j) {
      if (sgn(y[j]) != 0) z[b.mul(i, j)] += x[i] * y[j];
    }
  }
  return z;
}

bool is_zero(const AlgebraElement& x) {
  for (const auto& v : x) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

IdempotentSystem eta_idempotents(const Lrb& b, std::vector<int> choice) {
  const Support& s = b.support();
  const int m = s.size();
  if (choice.empty()) choice = s.rep;
  if (static_cast<int>(choice.size()) != m) throw Error("BadChoice", "one element per support");
  for (int x = 0; x < m; ++x) {
    if (b.sigma(choice[x]) != x) throw Error("BadChoice", "element has the wrong support");
  }
  IdempotentSystem sys;
  sys.choice = choice;
  sys.eta.assign(m, AlgebraElement(b.size()));
  for (int x : s.lam.linear_extension()) {
    const AlgebraElement ex = basis_element(b, choice[x]);
    AlgebraElement acc = ex;
    for (int y : s.lam.strictly_below(x)) {
      const AlgebraElement t = multiply(b, ex, sys.eta[y]);
      for (int i = 0; i < b.size(); ++i) acc[i] -= t[i];
    }
    sys.eta[x] = std::move(acc);
  }
  sys.eta_sum.assign(b.size(), 0);
  for (const auto& e : sys.eta) {
    for (int i = 0; i < b.size(); ++i) sys.eta_sum[i] += e[i];
  }
  sys.idempotent = true;
  sys.orthogonal = true;
  for (int x = 0; x < m; ++x) {
    for (int y = 0; y < m; ++y) {
      const AlgebraElement p = multiply(b, sys.eta[x], sys.eta[y]);
      if (x == y) {
        if (p != sys.eta[x]) sys.idempotent = false;
      } else if (!is_zero(p)) {
        sys.orthogonal = false;
      }
    }
  }
  sys.right_identity = true;
  sys.annihilation = true;
  for (int a = 0; a < b.size(); ++a) {
    const AlgebraElement ea = basis_element(b, a);
    if (multiply(b, ea, sys.eta_sum) != ea) sys.right_identity = false;
    for (int x = 0; x < m; ++x) {
      if (!s.lam.leq(x, b.sigma(a)) && !is_zero(multiply(b, ea, sys.eta[x]))) {
        sys.annihilation = false;
      }
    }
  }
  return sys;
}

std::optional<AlgebraElement> identity_element(const Lrb& b, const IdempotentSystem& sys) {
  for (int a = 0; a < b.size(); ++a) {
    const AlgebraElement ea = basis_element(b, a);
    if (multiply(b, sys.eta_sum, ea) != ea || multiply(b, ea, sys.eta_sum) != ea) {
      return std::nullopt;
    }
  }
  return sys.eta_sum;
}

std::optional<AlgebraElement> identity_element(const Lrb& b) {
  return identity_element(b, eta_idempotents(b));
}

RadicalInfo radical(const Lrb& b) {
  const int n = b.size();
  RadicalInfo r;
  for (int a = 0; a < n; ++a) {
    const int e = b.rep(b.sigma(a));
    if (a == e) continue;
    AlgebraElement v(n);
    v[a] = 1;
    v[e] = -1;
    r.basis.push_back(std::move(v));
  }
  r.dim = static_cast<long>(r.basis.size());
  // n + 1 where n counts the elements of a longest chain in Lambda.
  r.bound = b.lambda().length() + 2;

  // ker sigma: coefficient sums vanish on every L-class.
  {
    QSpan span(n);
    for (const auto& v : r.basis) span.add(v);
    bool inside = true;
    for (const auto& v : r.basis) {
      for (int x = 0; x < b.num_supports(); ++x) {
        Rational sum = 0;
        for (int a : b.lclass(x)) sum += v[a];
        if (sgn(sum) != 0) inside = false;
      }
    }
    r.spans_kernel = inside && span.dim() == n - b.num_supports();
  }

  std::vector<AlgebraElement> power = r.basis;
  long dim = r.dim;
  int m = 1;
  r.power_dims.push_back(dim);
  while (dim > 0) {
    QSpan next(n);
    for (const auto& x : power) {
      for (const auto& y : r.basis) {
        AlgebraElement z = multiply(b, x, y);
        if (!is_zero(z)) next.add(std::move(z));
      }
    }
    power = next.rows();
    dim = next.dim();
    ++m;
    r.power_dims.push_back(dim);
  }
  r.nilpotency = r.dim == 0 ? 1 : m;
  return r;
}

bool ModuleAction::is_module(const Lrb& b) const {
  if (static_cast<int>(action.size()) != b.size()) return false;
  for (int x = 0; x < b.size(); ++x) {
    for (int y = 0; y < b.size(); ++y) {
      if (!(action[b.mul(x, y)] == action[x] * action[y])) return false;
    }
  }
  return true;
}

ModuleAction schutzenberger_module(const Lrb& b, int x) {
  if (x < 0 || x >= b.num_supports()) throw Error("UnknownSupportElement", std::to_string(x));
  const auto& cls = b.lclass(x);
  std::vector<int> pos(b.size(), -1);
  for (std::size_t i = 0; i < cls.size(); ++i) pos[cls[i]] = static_cast<int>(i);
  ModuleAction m;
  m.dim = static_cast<int>(cls.size());
  for (int a : cls) m.basis_names.push_back(b.name(a));
  for (int a = 0; a < b.size(); ++a) {
    SparseMatrix mat(m.dim, m.dim);
    if (b.lambda().leq(x, b.sigma(a))) {
      for (int i = 0; i < m.dim; ++i) mat.add(pos[b.mul(a, cls[i])], i, 1);
    }
    mat.normalize();
    m.action.push_back(std::move(mat));
  }
  return m;
}

SchutzenbergerCheck schutzenberger_vs_eta(const Lrb& b, int x, const IdempotentSystem& sys) {
  SchutzenbergerCheck c;
  c.class_size = static_cast<long>(b.lclass(x).size());
  QSpan all(b.size());
  for (int a = 0; a < b.size(); ++a) all.add(multiply(b, basis_element(b, a), sys.eta[x]));
  c.dim_eta_ideal = all.dim();
  QSpan cls(b.size());
  for (int a : b.lclass(x)) cls.add(multiply(b, basis_element(b, a), sys.eta[x]));
  c.rank_on_class = cls.dim();
  return c;
}

ModuleAction simple_module(const Lrb& b, int x) {
  ModuleAction m;
  m.dim = 1;
  m.basis_names = {"1"};
  for (int a = 0; a < b.size(); ++a) {
    SparseMatrix mat(1, 1);
    if (b.lambda().leq(x, b.sigma(a))) mat.add(0, 0, 1);
    mat.normalize();
    m.action.push_back(std::move(mat));
  }
  return m;
}

std::int64_t trace(const SparseMatrix& m) {
  std::int64_t t = 0;
  for (int c = 0; c < m.cols && c < m.rows; ++c) t += m.at(c, c);
  return t;
}

std::vector<std::int64_t> composition_multiplicities(const Lrb& b, const ModuleAction& m) {
  const Support& s = b.support();
  const int k = s.size();
  std::vector<std::int64_t> chi(k);
  for (int w = 0; w < k; ++w) chi[w] = trace(m.action[s.rep[w]]);
  // chi(e_W) = sum_{Z <= W} m_Z, so m_Z = sum_{W <= Z} mu(W, Z) chi(e_W).
  std::vector<std::int64_t> mult(k, 0);
  for (int z = 0; z < k; ++z) {
    for (int w = 0; w < k; ++w) {
      if (s.lam.leq(w, z)) mult[z] += s.mu(w, z) * chi[w];
    }
    if (mult[z] < 0) {
      throw Error("NegativeMultiplicity", "support " + std::to_string(z) + " gets " +
                                              std::to_string(mult[z]));
    }
  }
  return mult;
}

}  // namespace lrb
