#ifndef ALGEBROID_BASE_ALGEBRA_HPP
#define ALGEBROID_BASE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "algebroid/matrix.hpp"

namespace algebroid {

/// Finite-dimensional commutative unital algebra over Q, by structure
/// constants. Plays the role of the functions on one chart at desk scale.
struct BaseAlgebra {
  int dim = 1;
  std::vector<std::string> labels;
  // mult[i][j] = basis_i * basis_j as a vector of length dim.
  std::vector<std::vector<QVec>> mult;
  QVec unit;

  static BaseAlgebra rationals() {
    BaseAlgebra r;
    r.dim = 1;
    r.labels = {"1"};
    r.mult = {{QVec{Rational(1)}}};
    r.unit = QVec{Rational(1)};
    return r;
  }

  bool is_trivial() const { return dim == 1; }

  QVec multiply(const QVec& a, const QVec& b) const {
    QVec out = zero_vec(dim);
    for (int i = 0; i < dim; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < dim; ++j) {
        if (b[j] == 0) continue;
        vaxpy(out, a[i] * b[j], mult[i][j]);
      }
    }
    return out;
  }

  /// Matrix of multiplication by a on the underlying Q-space.
  MatrixQ mult_matrix(const QVec& a) const {
    MatrixQ m(dim, dim);
    for (int j = 0; j < dim; ++j) {
      QVec col = multiply(a, unit_vec(dim, j));
      for (int i = 0; i < dim; ++i)
        if (col[i] != 0) m.set(i, j, col[i]);
    }
    return m;
  }

  std::vector<std::string> validate() const {
    std::vector<std::string> issues;
    if (static_cast<int>(mult.size()) != dim) {
      issues.push_back("mult tensor has wrong shape");
      return issues;
    }
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (mult[i][j] != mult[j][i])
          issues.push_back("commutativity fails at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) {
          QVec lhs = multiply(multiply(unit_vec(dim, i), unit_vec(dim, j)), unit_vec(dim, k));
          QVec rhs = multiply(unit_vec(dim, i), multiply(unit_vec(dim, j), unit_vec(dim, k)));
          if (lhs != rhs)
            issues.push_back("associativity fails at (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")");
        }
    for (int i = 0; i < dim; ++i) {
      if (multiply(unit, unit_vec(dim, i)) != unit_vec(dim, i))
        issues.push_back("unit fails on basis " + std::to_string(i));
    }
    return issues;
  }
};

/// A derivation of the base algebra: d x d matrix satisfying Leibniz on basis
/// products.
struct Derivation {
  MatrixQ matrix;

  static Derivation zero(int dim) { return Derivation{MatrixQ(dim, dim)}; }

  QVec operator()(const QVec& f) const { return matrix.apply(f); }

  bool check_leibniz(const BaseAlgebra& R) const {
    for (int i = 0; i < R.dim; ++i)
      for (int j = 0; j < R.dim; ++j) {
        QVec lhs = matrix.apply(R.mult[i][j]);
        QVec rhs = vadd(R.multiply(matrix.apply(unit_vec(R.dim, i)), unit_vec(R.dim, j)),
                        R.multiply(unit_vec(R.dim, i), matrix.apply(unit_vec(R.dim, j))));
        if (lhs != rhs) return false;
      }
    return true;
  }
};

/// Linear conditions cutting out Der(R) inside d x d matrices; basis of the
/// solution space in the flattened (row-major) coordinates.
inline std::vector<QVec> derivation_space_basis(const BaseAlgebra& R) {
  int d = R.dim;
  // Unknown matrix M (d*d entries, row-major). Condition per (i,j):
  // M (e_i e_j) - (M e_i) e_j - e_i (M e_j) = 0.
  std::vector<QVec> rows;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int c = 0; c < d; ++c) {
        QVec row = zero_vec(d * d);
        // M applied to mult[i][j], component c: sum_k M[c][k] mult[i][j][k]
        for (int k = 0; k < d; ++k) row[c * d + k] += R.mult[i][j][k];
        // (M e_i) e_j component c: sum_k M[k][i] * (e_k e_j)[c]
        for (int k = 0; k < d; ++k) row[k * d + i] -= R.mult[k][j][c];
        for (int k = 0; k < d; ++k) row[k * d + j] -= R.mult[i][k][c];
        rows.push_back(std::move(row));
      }
  MatrixQ m = MatrixQ::from_rows(rows, d * d);
  return kernel_basis(m);
}

/// Module over a BaseAlgebra presented by its underlying Q-space and the
/// action of each algebra basis element.
struct RModule {
  BaseAlgebra base;
  int dim_q = 0;
  std::vector<MatrixQ> action;  // one dim_q x dim_q matrix per base basis index

  /// Rank-n Q-vector space over the constant base.
  static RModule constant(int n) {
    RModule m;
    m.base = BaseAlgebra::rationals();
    m.dim_q = n;
    m.action = {MatrixQ::identity(n)};
    return m;
  }

  /// Free module R^rank: Q-dim rank*base.dim, basis (u, e) ordered u-major.
  static RModule free_module(const BaseAlgebra& R, int rank) {
    RModule m;
    m.base = R;
    m.dim_q = rank * R.dim;
    m.action.resize(R.dim);
    for (int e = 0; e < R.dim; ++e) {
      MatrixQ a(m.dim_q, m.dim_q);
      for (int u = 0; u < rank; ++u) {
        MatrixQ me = R.mult_matrix(unit_vec(R.dim, e));
        for (int i = 0; i < R.dim; ++i)
          for (const auto& [j, v] : me.row(i)) a.set(u * R.dim + i, u * R.dim + j, v);
      }
      m.action[e] = a;
    }
    return m;
  }

  /// Submodule spanned by the given Q-vectors (must be action-stable).
  /// Returns the submodule in its own coordinates plus the inclusion columns.
  static RModule submodule(const RModule& M, const std::vector<QVec>& span,
                           std::vector<QVec>* inclusion = nullptr) {
    auto basis = span_basis(span, M.dim_q);
    RModule s;
    s.base = M.base;
    s.dim_q = static_cast<int>(basis.size());
    s.action.assign(M.base.dim, MatrixQ(s.dim_q, s.dim_q));
    MatrixQ cols = MatrixQ::from_cols(basis, M.dim_q);
    for (int e = 0; e < M.base.dim; ++e) {
      for (int j = 0; j < s.dim_q; ++j) {
        QVec img = M.action[e].apply(basis[j]);
        auto c = solve_linear(cols, img);
        if (!c) throw Error(ErrorCode::Internal, "submodule span not action-stable");
        for (int i = 0; i < s.dim_q; ++i)
          if ((*c)[i] != 0) s.action[e].set(i, j, (*c)[i]);
      }
    }
    if (inclusion) *inclusion = basis;
    return s;
  }

  MatrixQ act_matrix(const QVec& f) const {
    MatrixQ out(dim_q, dim_q);
    for (int e = 0; e < base.dim; ++e)
      if (f[e] != 0) out = out + action[e] * f[e];
    return out;
  }

  QVec act(const QVec& f, const QVec& v) const { return act_matrix(f).apply(v); }

  std::vector<std::string> validate() const {
    std::vector<std::string> issues;
    MatrixQ u(dim_q, dim_q);
    for (int e = 0; e < base.dim; ++e)
      if (base.unit[e] != 0) u = u + action[e] * base.unit[e];
    if (!(u == MatrixQ::identity(dim_q))) issues.push_back("unit does not act as identity");
    for (int i = 0; i < base.dim; ++i)
      for (int j = 0; j < base.dim; ++j) {
        MatrixQ lhs = action[i] * action[j];
        MatrixQ rhs = act_matrix(base.mult[i][j]);
        if (!(lhs == rhs))
          issues.push_back("action not multiplicative at (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
      }
    return issues;
  }
};

}  // namespace algebroid

#endif
