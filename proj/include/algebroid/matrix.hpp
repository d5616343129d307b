#ifndef ALGEBROID_MATRIX_HPP
#define ALGEBROID_MATRIX_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "algebroid/rational.hpp"

namespace algebroid {

/// Sparse matrix over the rationals. Rows are ordered maps column -> value;
/// absent entries are zero. Exterior-algebra differentials are mostly zeros,
/// so this is the storage of record; elimination works directly on rows.
class MatrixQ {
 public:
  MatrixQ() : rows_(0), cols_(0) {}
  MatrixQ(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

  static MatrixQ identity(int n) {
    MatrixQ m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  static MatrixQ zero(int rows, int cols) { return MatrixQ(rows, cols); }

  static MatrixQ from_rows(const std::vector<QVec>& rows, int cols) {
    MatrixQ m(static_cast<int>(rows.size()), cols);
    for (int i = 0; i < m.rows_; ++i)
      for (int j = 0; j < cols; ++j)
        if (rows[i][j] != 0) m.set(i, j, rows[i][j]);
    return m;
  }

  /// Columns are the given vectors.
  static MatrixQ from_cols(const std::vector<QVec>& cols, int dim) {
    MatrixQ m(dim, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j)
      for (int i = 0; i < dim; ++i)
        if (cols[j][i] != 0) m.set(i, j, cols[j][i]);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational at(int i, int j) const {
    auto it = data_[i].find(j);
    return it == data_[i].end() ? Rational(0) : it->second;
  }

  void set(int i, int j, const Rational& v) {
    if (v == 0)
      data_[i].erase(j);
    else
      data_[i][j] = v;
  }

  void add(int i, int j, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = data_[i].emplace(j, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) data_[i].erase(it);
    }
  }

  const std::map<int, Rational>& row(int i) const { return data_[i]; }

  QVec apply(const QVec& x) const {
    QVec y(rows_, Rational(0));
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) y[i] += v * x[j];
    return y;
  }

  MatrixQ transpose() const {
    MatrixQ t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) t.set(j, i, v);
    return t;
  }

  MatrixQ operator*(const MatrixQ& b) const {
    MatrixQ c(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i)
      for (const auto& [k, v] : data_[i])
        for (const auto& [j, w] : b.data_[k]) c.add(i, j, v * w);
    return c;
  }

  MatrixQ operator+(const MatrixQ& b) const {
    MatrixQ c = *this;
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : b.data_[i]) c.add(i, j, v);
    return c;
  }

  MatrixQ operator-(const MatrixQ& b) const {
    MatrixQ c = *this;
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : b.data_[i]) c.add(i, j, -v);
    return c;
  }

  MatrixQ operator*(const Rational& s) const {
    MatrixQ c(rows_, cols_);
    if (s == 0) return c;
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) c.set(i, j, v * s);
    return c;
  }

  bool is_zero() const {
    for (const auto& r : data_)
      if (!r.empty()) return false;
    return true;
  }

  bool operator==(const MatrixQ& b) const {
    return rows_ == b.rows_ && cols_ == b.cols_ && data_ == b.data_;
  }

  /// Rows of this matrix as dense vectors.
  std::vector<QVec> dense_rows() const {
    std::vector<QVec> out(rows_, QVec(cols_, Rational(0)));
    for (int i = 0; i < rows_; ++i)
      for (const auto& [j, v] : data_[i]) out[i][j] = v;
    return out;
  }

 private:
  int rows_, cols_;
  std::vector<std::map<int, Rational>> data_;
};

inline QVec zero_vec(int n) { return QVec(n, Rational(0)); }

inline QVec unit_vec(int n, int i) {
  QVec v(n, Rational(0));
  v[i] = 1;
  return v;
}

inline bool is_zero(const QVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline QVec vadd(const QVec& a, const QVec& b) {
  QVec c(a);
  for (size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

inline QVec vsub(const QVec& a, const QVec& b) {
  QVec c(a);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

inline QVec vscale(const Rational& s, const QVec& a) {
  QVec c(a);
  for (auto& x : c) x *= s;
  return c;
}

inline void vaxpy(QVec& a, const Rational& s, const QVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
}

/// Row echelon form with unit pivots, zeros above and below (RREF).
/// Deterministic: columns scanned left to right, first unprocessed row with a
/// nonzero entry becomes the pivot row.
struct Echelon {
  std::vector<QVec> rows;  // nonzero rows only, reduced
  std::vector<int> pivots; // pivot column per row, strictly increasing
  int cols = 0;
};

inline Echelon echelonize(std::vector<QVec> rows, int cols) {
  Echelon e;
  e.cols = cols;
  size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    Rational inv = Rational(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (int j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

inline Echelon echelonize(const MatrixQ& m) { return echelonize(m.dense_rows(), m.cols()); }

inline int rank(const MatrixQ& m) { return static_cast<int>(echelonize(m).rows.size()); }

/// Basis of {v : m v = 0}, echelonized deterministically (leading-one pivot
/// order).
inline std::vector<QVec> kernel_basis(const MatrixQ& m) {
  Echelon e = echelonize(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    QVec v = zero_vec(m.cols());
    v[c] = 1;
    for (size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][c];
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  return echelonize(std::move(basis), m.cols()).rows;
}

/// Deterministic particular solution of m x = b (free variables zero), or
/// nullopt when the system is inconsistent.
inline std::optional<QVec> solve_linear(const MatrixQ& m, const QVec& b) {
  std::vector<QVec> rows = m.dense_rows();
  for (int i = 0; i < m.rows(); ++i) rows[i].push_back(b[i]);
  Echelon e = echelonize(std::move(rows), m.cols() + 1);
  QVec x = zero_vec(m.cols());
  for (size_t r = 0; r < e.rows.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;  // 0 = 1 row
    x[e.pivots[r]] = e.rows[r][m.cols()];
  }
  return x;
}

/// Solve m x = b for several right-hand sides at once (nullopt if any fails).
inline std::optional<MatrixQ> solve_many(const MatrixQ& m, const MatrixQ& rhs) {
  MatrixQ x(m.cols(), rhs.cols());
  for (int j = 0; j < rhs.cols(); ++j) {
    QVec b(m.rows());
    for (int i = 0; i < m.rows(); ++i) b[i] = rhs.at(i, j);
    auto s = solve_linear(m, b);
    if (!s) return std::nullopt;
    for (int i = 0; i < m.cols(); ++i)
      if ((*s)[i] != 0) x.set(i, j, (*s)[i]);
  }
  return x;
}

/// Echelon basis of the span of the given vectors.
inline std::vector<QVec> span_basis(const std::vector<QVec>& vecs, int dim) {
  if (vecs.empty()) return {};
  (void)dim;
  Echelon e = echelonize(vecs, static_cast<int>(vecs[0].size()));
  return e.rows;
}

inline bool in_span(const std::vector<QVec>& basis, const QVec& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  MatrixQ m = MatrixQ::from_cols(basis, static_cast<int>(v.size()));
  return solve_linear(m, v).has_value();
}

/// Intersection of two subspaces given by spanning sets.
inline std::vector<QVec> span_intersection(const std::vector<QVec>& a,
                                           const std::vector<QVec>& b, int dim) {
  if (a.empty() || b.empty()) return {};
  // x = A u = B w  <=>  (u, w) in ker [A | -B]; report A u.
  MatrixQ m(dim, static_cast<int>(a.size() + b.size()));
  for (size_t j = 0; j < a.size(); ++j)
    for (int i = 0; i < dim; ++i)
      if (a[j][i] != 0) m.set(i, static_cast<int>(j), a[j][i]);
  for (size_t j = 0; j < b.size(); ++j)
    for (int i = 0; i < dim; ++i)
      if (b[j][i] != 0) m.set(i, static_cast<int>(a.size() + j), -b[j][i]);
  std::vector<QVec> out;
  for (const auto& k : kernel_basis(m)) {
    QVec x = zero_vec(dim);
    for (size_t j = 0; j < a.size(); ++j) vaxpy(x, k[j], a[j]);
    if (!is_zero(x)) out.push_back(std::move(x));
  }
  return span_basis(out, dim);
}

/// Basis of {x : m x in span(target)}.
inline std::vector<QVec> preimage_basis(const MatrixQ& m, const std::vector<QVec>& target) {
  int n = m.cols();
  MatrixQ aug(m.rows(), n + static_cast<int>(target.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (const auto& [j, v] : m.row(i)) aug.set(i, j, v);
  for (size_t t = 0; t < target.size(); ++t)
    for (int i = 0; i < m.rows(); ++i)
      if (target[t][i] != 0) aug.set(i, n + static_cast<int>(t), -target[t][i]);
  std::vector<QVec> out;
  for (const auto& k : kernel_basis(aug)) out.push_back(QVec(k.begin(), k.begin() + n));
  return span_basis(out, n);
}

/// Subquotient Z/B with chosen representatives. Houses the generic pattern
/// E = Z / B used by every cohomology computation here.
struct Subquotient {
  int ambient_dim = 0;
  std::vector<QVec> cycle_basis;           // echelon basis of Z
  std::vector<QVec> boundary_basis;        // echelon basis of B
  std::vector<QVec> representative_basis;  // projects to a basis of Z/B

  int dim() const { return static_cast<int>(representative_basis.size()); }

  /// Coordinates of the class of v in the representative basis.
  /// Requires v in Z; throws otherwise.
  QVec coords(const QVec& v) const {
    std::vector<QVec> cols = boundary_basis;
    cols.insert(cols.end(), representative_basis.begin(), representative_basis.end());
    if (cols.empty()) {
      if (!is_zero(v)) throw Error(ErrorCode::Internal, "vector not in cycle space");
      return {};
    }
    MatrixQ m = MatrixQ::from_cols(cols, ambient_dim);
    auto s = solve_linear(m, v);
    if (!s) throw Error(ErrorCode::Internal, "vector not in cycle space");
    QVec out(representative_basis.size());
    for (size_t i = 0; i < representative_basis.size(); ++i)
      out[i] = (*s)[boundary_basis.size() + i];
    return out;
  }

  bool is_boundary(const QVec& v) const { return is_zero(coords(v)); }
};

/// Build the subquotient span(cycles)/span(boundaries). Checks boundaries lie
/// inside the cycle span. Representatives: sweep the echelonized cycle basis
/// in order, keeping vectors independent modulo the boundaries (lexicographic
/// pivot completion), then reduce them against the boundary echelon.
inline Subquotient subquotient(const std::vector<QVec>& cycles,
                               const std::vector<QVec>& boundaries, int ambient_dim) {
  Subquotient sq;
  sq.ambient_dim = ambient_dim;
  sq.cycle_basis = span_basis(cycles, ambient_dim);
  sq.boundary_basis = span_basis(boundaries, ambient_dim);
  for (const auto& b : sq.boundary_basis)
    if (!in_span(sq.cycle_basis, b))
      throw Error(ErrorCode::BoundaryNotInCycles, "boundary escapes cycle space");

  std::vector<QVec> accum = sq.boundary_basis;
  std::vector<QVec> reps;
  for (const auto& z : sq.cycle_basis) {
    if (in_span(span_basis(accum, ambient_dim), z)) continue;
    accum.push_back(z);
    reps.push_back(z);
  }
  // Reduce representatives modulo the boundary span for stable output.
  Echelon be = echelonize(sq.boundary_basis, ambient_dim);
  for (auto& r : reps) {
    for (size_t i = 0; i < be.rows.size(); ++i) {
      Rational f = r[be.pivots[i]];
      if (f != 0)
        for (int j = 0; j < ambient_dim; ++j) r[j] -= f * be.rows[i][j];
    }
  }
  sq.representative_basis = std::move(reps);
  return sq;
}

}  // namespace algebroid

#endif
