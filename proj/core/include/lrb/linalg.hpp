#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lrb {

using Rational = mpq_class;
using Integer = mpz_class;

enum class Field { Q, F2, F3 };

std::string to_string(Field f);
Field field_from_string(const std::string& s);
int characteristic(Field f);  // 0 for Q
inline constexpr Field kAllFields[] = {Field::Q, Field::F2, Field::F3};

// Column-major sparse integer matrix.  Entries of each column are kept sorted
// by row with no explicit zeros once normalize() has run.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, std::int64_t>>> col;

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), col(c) {}

  void add(int r, int c, std::int64_t v) { col[c].emplace_back(r, v); }
  void normalize();
  std::int64_t at(int r, int c) const;
  bool is_zero() const;
  std::size_t nnz() const;

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  SparseMatrix operator-(const SparseMatrix& rhs) const;
  bool operator==(const SparseMatrix& rhs) const;

  static SparseMatrix identity(int n);
  // [A | B] with equal row counts.
  static SparseMatrix hconcat(const SparseMatrix& a, const SparseMatrix& b);
  SparseMatrix select_columns(const std::vector<int>& cs) const;
};

// Rank over Q or over F_p.
long rank(const SparseMatrix& m, Field f);

// Nonzero invariant factors of the Smith normal form over Z, in divisibility
// order.  Only entries with absolute value > 1 are interesting as torsion.
std::vector<Integer> smith_invariants(const SparseMatrix& m);

// Dense rational helpers for small systems.
using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row-major

long rank(QMatrix rows);
// Basis of {x : A x = 0}, A given row-major with `ncols` columns.
std::vector<QVector> nullspace(const QMatrix& a, int ncols);
// Some x with A x = b, if one exists.
std::optional<QVector> solve(const QMatrix& a, const QVector& b, int ncols);

// Incrementally grown row space in echelon form.
class QSpan {
 public:
  explicit QSpan(int ncols = 0) : ncols_(ncols) {}
  // Adds v; returns false when v already lies in the span.
  bool add(QVector v);
  bool contains(QVector v) const;
  long dim() const { return static_cast<long>(rows_.size()); }
  int ncols() const { return ncols_; }
  const std::vector<QVector>& rows() const { return rows_; }

 private:
  void reduce(QVector& v) const;
  int ncols_;
  std::vector<QVector> rows_;  // pivot entry 1
  std::vector<int> pivots_;
};

}  // namespace lrb
