#include "lrb/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "lrb/error.hpp"

namespace lrb {

std::string to_string(Field f) {
  switch (f) {
    case Field::Q: return "Q";
    case Field::F2: return "F2";
    case Field::F3: return "F3";
  }
  return "?";
}

Field field_from_string(const std::string& s) {
  if (s == "Q") return Field::Q;
  if (s == "F2") return Field::F2;
  if (s == "F3") return Field::F3;
  throw Error("UnknownField", s);
}

int characteristic(Field f) {
  switch (f) {
    case Field::Q: return 0;
    case Field::F2: return 2;
    case Field::F3: return 3;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// SparseMatrix

void SparseMatrix::normalize() {
  for (auto& c : col) {
    std::sort(c.begin(), c.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, std::int64_t>> out;
    for (const auto& [r, v] : c) {
      if (!out.empty() && out.back().first == r) {
        out.back().second += v;
      } else {
        out.emplace_back(r, v);
      }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& e) { return e.second == 0; }),
              out.end());
    c = std::move(out);
  }
}

std::int64_t SparseMatrix::at(int r, int c) const {
  for (const auto& [i, v] : col[c]) {
    if (i == r) return v;
  }
  return 0;
}

bool SparseMatrix::is_zero() const {
  for (const auto& c : col) {
    for (const auto& e : c) {
      if (e.second != 0) return false;
    }
  }
  return true;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t s = 0;
  for (const auto& c : col) s += c.size();
  return s;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols, rows);
  for (int j = 0; j < cols; ++j) {
    for (const auto& [i, v] : col[j]) t.col[i].emplace_back(j, v);
  }
  return t;  // columns are produced in increasing row order already
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (cols != rhs.rows) throw Error("DimensionMismatch", "matrix product");
  SparseMatrix out(rows, rhs.cols);
  std::vector<std::int64_t> acc(rows, 0);
  std::vector<int> touched;
  for (int j = 0; j < rhs.cols; ++j) {
    touched.clear();
    for (const auto& [k, v] : rhs.col[j]) {
      for (const auto& [i, w] : col[k]) {
        if (acc[i] == 0) touched.push_back(i);
        acc[i] += v * w;
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (int i : touched) {
      if (acc[i] != 0) out.col[j].emplace_back(i, acc[i]);
      acc[i] = 0;
    }
  }
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& rhs) const {
  if (rows != rhs.rows || cols != rhs.cols) {
    throw Error("DimensionMismatch", "matrix difference");
  }
  SparseMatrix out(rows, cols);
  for (int j = 0; j < cols; ++j) {
    out.col[j] = col[j];
    for (const auto& [i, v] : rhs.col[j]) out.col[j].emplace_back(i, -v);
  }
  out.normalize();
  return out;
}

bool SparseMatrix::operator==(const SparseMatrix& rhs) const {
  if (rows != rhs.rows || cols != rhs.cols) return false;
  return (*this - rhs).is_zero();
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.col[i].emplace_back(i, 1);
  return m;
}

SparseMatrix SparseMatrix::hconcat(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows != b.rows) throw Error("DimensionMismatch", "hconcat");
  SparseMatrix m(a.rows, a.cols + b.cols);
  for (int j = 0; j < a.cols; ++j) m.col[j] = a.col[j];
  for (int j = 0; j < b.cols; ++j) m.col[a.cols + j] = b.col[j];
  return m;
}

SparseMatrix SparseMatrix::select_columns(const std::vector<int>& cs) const {
  SparseMatrix m(rows, static_cast<int>(cs.size()));
  for (std::size_t j = 0; j < cs.size(); ++j) m.col[j] = col[cs[j]];
  return m;
}

// ---------------------------------------------------------------------------
// Rank by column reduction, keyed on the lowest (largest-row) entry.

namespace {

struct ModOps {
  int p;
  using T = int;
  T from(std::int64_t v) const {
    std::int64_t r = v % p;
    return static_cast<int>(r < 0 ? r + p : r);
  }
  bool zero(T v) const { return v == 0; }
  T inv(T a) const {
    // p is tiny; brute force.
    for (int x = 1; x < p; ++x) {
      if ((a * x) % p == 1) return x;
    }
    throw std::logic_error("no inverse");
  }
  T div(T a, T b) const { return (a * inv(b)) % p; }
  T sub_mul(T a, T f, T b) const {  // a - f*b
    int r = (a - (f * b) % p) % p;
    return r < 0 ? r + p : r;
  }
};

struct RatOps {
  using T = Rational;
  T from(std::int64_t v) const { return T(static_cast<long>(v)); }
  bool zero(const T& v) const { return sgn(v) == 0; }
  T div(const T& a, const T& b) const { return a / b; }
  T sub_mul(const T& a, const T& f, const T& b) const { return a - f * b; }
};

template <class Ops>
long column_rank(const SparseMatrix& m, const Ops& ops) {
  using T = typename Ops::T;
  using Col = std::vector<std::pair<int, T>>;
  std::vector<Col> reduced(m.cols);
  std::vector<int> pivot_of_row(m.rows, -1);
  long rank = 0;
  Col c;
  Col tmp;
  for (int j = 0; j < m.cols; ++j) {
    c.clear();
    for (const auto& [i, v] : m.col[j]) {
      T t = ops.from(v);
      if (!ops.zero(t)) c.emplace_back(i, t);
    }
    std::sort(c.begin(), c.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    while (!c.empty()) {
      const int low = c.back().first;
      const int p = pivot_of_row[low];
      if (p < 0) break;
      const Col& pc = reduced[p];
      const T factor = ops.div(c.back().second, pc.back().second);
      tmp.clear();
      std::size_t a = 0;
      std::size_t b = 0;
      while (a < c.size() || b < pc.size()) {
        if (b == pc.size() || (a < c.size() && c[a].first < pc[b].first)) {
          tmp.push_back(c[a++]);
        } else if (a == c.size() || pc[b].first < c[a].first) {
          T z = ops.from(0);
          T v = ops.sub_mul(z, factor, pc[b].second);
          if (!ops.zero(v)) tmp.emplace_back(pc[b].first, v);
          ++b;
        } else {
          T v = ops.sub_mul(c[a].second, factor, pc[b].second);
          if (!ops.zero(v)) tmp.emplace_back(c[a].first, v);
          ++a;
          ++b;
        }
      }
      std::swap(c, tmp);
    }
    if (!c.empty()) {
      pivot_of_row[c.back().first] = j;
      reduced[j] = c;
      ++rank;
    }
  }
  return rank;
}

}  // namespace

long rank(const SparseMatrix& m, Field f) {
  if (m.rows == 0 || m.cols == 0) return 0;
  switch (f) {
    case Field::Q: return column_rank(m, RatOps{});
    case Field::F2: return column_rank(m, ModOps{2});
    case Field::F3: return column_rank(m, ModOps{3});
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Smith normal form over Z.

namespace {

void dense_smith(std::vector<std::vector<Integer>>& a, std::vector<Integer>& out) {
  const std::size_t nr = a.size();
  if (nr == 0) return;
  const std::size_t nc = a[0].size();
  for (std::size_t t = 0; t < std::min(nr, nc); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto find_min = [&](std::size_t& pi, std::size_t& pj) {
      bool found = false;
      Integer best;
      for (std::size_t i = t; i < nr; ++i) {
        for (std::size_t j = t; j < nc; ++j) {
          if (sgn(a[i][j]) == 0) continue;
          Integer v = abs(a[i][j]);
          if (!found || v < best) {
            best = v;
            pi = i;
            pj = j;
            found = true;
          }
        }
      }
      return found;
    };
    std::size_t pi = 0;
    std::size_t pj = 0;
    if (!find_min(pi, pj)) break;
    for (;;) {
      std::swap(a[t], a[pi]);
      for (std::size_t i = 0; i < nr; ++i) std::swap(a[i][t], a[i][pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < nc; ++j) a[i][j] -= q * a[t][j];
        if (sgn(a[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < nr; ++i) a[i][j] -= q * a[i][t];
        if (sgn(a[t][j]) != 0) clean = false;
      }
      if (!clean) {
        // A smaller remainder appeared in row or column t; restart with it.
        Integer best = abs(a[t][t]);
        pi = t;
        pj = t;
        for (std::size_t i = t + 1; i < nr; ++i) {
          if (sgn(a[i][t]) != 0 && abs(a[i][t]) < best) {
            best = abs(a[i][t]);
            pi = i;
            pj = t;
          }
        }
        for (std::size_t j = t + 1; j < nc; ++j) {
          if (sgn(a[t][j]) != 0 && abs(a[t][j]) < best) {
            best = abs(a[t][j]);
            pi = t;
            pj = j;
          }
        }
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < nr && divides; ++i) {
        for (std::size_t j = t + 1; j < nc; ++j) {
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < nc; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
      pi = t;
      pj = t;
    }
    out.push_back(abs(a[t][t]));
  }
}

}  // namespace

std::vector<Integer> smith_invariants(const SparseMatrix& m) {
  std::vector<std::map<int, Integer>> row(m.rows);
  std::vector<std::set<int>> colrows(m.cols);
  for (int c = 0; c < m.cols; ++c) {
    for (const auto& [r, v] : m.col[c]) {
      if (v == 0) continue;
      row[r][c] += Integer(static_cast<long>(v));
      colrows[c].insert(r);
    }
  }
  std::vector<Integer> inv;
  // Eliminate unit pivots first; they do not change the nontrivial factors.
  for (;;) {
    int br = -1;
    int bc = -1;
    std::size_t best = 0;
    for (int c = 0; c < m.cols; ++c) {
      for (int r : colrows[c]) {
        const Integer& v = row[r].at(c);
        if (v != 1 && v != -1) continue;
        const std::size_t cost = (row[r].size() - 1) * (colrows[c].size() - 1);
        if (br < 0 || cost < best) {
          br = r;
          bc = c;
          best = cost;
        }
        if (best == 0) break;
      }
      if (br >= 0 && best == 0) break;
    }
    if (br < 0) break;
    const Integer pv = row[br].at(bc);
    const std::vector<int> others(colrows[bc].begin(), colrows[bc].end());
    const auto prow = row[br];
    for (int r : others) {
      if (r == br) continue;
      const Integer factor = row[r].at(bc) * pv;
      for (const auto& [c, v] : prow) {
        Integer nv = row[r][c] - factor * v;
        if (sgn(nv) == 0) {
          row[r].erase(c);
          colrows[c].erase(r);
        } else {
          row[r][c] = nv;
          colrows[c].insert(r);
        }
      }
    }
    for (const auto& [c, v] : prow) colrows[c].erase(br);
    row[br].clear();
    inv.emplace_back(1);
  }
  std::vector<int> rs;
  std::set<int> cs;
  for (int r = 0; r < m.rows; ++r) {
    if (!row[r].empty()) {
      rs.push_back(r);
      for (const auto& e : row[r]) cs.insert(e.first);
    }
  }
  if (!rs.empty()) {
    std::vector<int> cl(cs.begin(), cs.end());
    std::vector<std::vector<Integer>> dense(rs.size(), std::vector<Integer>(cl.size()));
    for (std::size_t i = 0; i < rs.size(); ++i) {
      for (std::size_t j = 0; j < cl.size(); ++j) {
        auto it = row[rs[i]].find(cl[j]);
        if (it != row[rs[i]].end()) dense[i][j] = it->second;
      }
    }
    dense_smith(dense, inv);
  }
  std::sort(inv.begin(), inv.end());
  return inv;
}

// ---------------------------------------------------------------------------
// Dense rational elimination.

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMatrix& a, int ncols) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    const Rational lead = a[r][c];
    for (int j = c; j < ncols; ++j) a[r][j] /= lead;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (int j = c; j < ncols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

long rank(QMatrix rows) {
  if (rows.empty()) return 0;
  const int nc = static_cast<int>(rows[0].size());
  return static_cast<long>(rref(rows, nc).size());
}

std::vector<QVector> nullspace(const QMatrix& a, int ncols) {
  QMatrix m = a;
  const std::vector<int> piv = rref(m, ncols);
  std::vector<char> is_pivot(ncols, 0);
  for (int c : piv) is_pivot[c] = 1;
  std::vector<QVector> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(ncols);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b, int ncols) {
  QMatrix m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  const std::vector<int> piv = rref(m, ncols + 1);
  if (!piv.empty() && piv.back() == ncols) return std::nullopt;
  QVector x(ncols);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = m[i][ncols];
  return x;
}

void QSpan::reduce(QVector& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int p = pivots_[r];
    if (sgn(v[p]) == 0) continue;
    const Rational c = v[p];
    const QVector& row = rows_[r];
    for (int j = p; j < ncols_; ++j) {
      if (sgn(row[j]) != 0) v[j] -= c * row[j];
    }
  }
}

bool QSpan::add(QVector v) {
  reduce(v);
  int p = 0;
  while (p < ncols_ && sgn(v[p]) == 0) ++p;
  if (p == ncols_) return false;
  const Rational c = v[p];
  for (int j = p; j < ncols_; ++j) v[j] /= c;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool QSpan::contains(QVector v) const {
  reduce(v);
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

}  // namespace lrb
