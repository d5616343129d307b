#ifndef ALGEBROID_FORMS_HPP
#define ALGEBROID_FORMS_HPP

#include <vector>

#include "algebroid/combinatorics.hpp"
#include "algebroid/connection.hpp"

namespace algebroid {

/// Omega^p_B(M): alternating R-multilinear p-forms on B with values in M,
/// stored on strictly increasing tuples of the module basis of B. Basis
/// ordering is lexicographic tuples (outer) times the M basis (inner).
struct FormSpace {
  int p = 0;
  int rank = 0;   // rank of B
  int dim_m = 0;  // Q-dimension of M

  FormSpace() = default;
  FormSpace(int degree, const LieRinehart& B, const RModule& M)
      : p(degree), rank(B.rank), dim_m(M.dim_q) {
    if (degree < 0) throw Error(ErrorCode::DegreeOutOfRange, "negative form degree");
  }

  int tuples() const { return static_cast<int>(binomial(rank, p)); }
  int dim() const { return tuples() * dim_m; }

  int index(const std::vector<int>& tuple, int m) const {
    return tuple_rank(tuple, rank) * dim_m + m;
  }

  /// The M-value of a cochain on a strictly increasing tuple.
  QVec value(const QVec& xi, const std::vector<int>& tuple) const {
    QVec out(dim_m);
    int base = tuple_rank(tuple, rank) * dim_m;
    for (int m = 0; m < dim_m; ++m) out[m] = xi[base + m];
    return out;
  }

  void set_value(QVec& xi, const std::vector<int>& tuple, const QVec& v) const {
    int base = tuple_rank(tuple, rank) * dim_m;
    for (int m = 0; m < dim_m; ++m) xi[base + m] = v[m];
  }

  /// Alternating evaluation on an arbitrary basis-index tuple.
  QVec eval(const QVec& xi, std::vector<int> tuple) const {
    int sign = sort_sign(tuple);
    if (sign == 0) return zero_vec(dim_m);
    QVec v = value(xi, tuple);
    return sign == 1 ? v : vscale(Rational(-1), v);
  }
};

inline FormSpace form_space(const LieRinehart& B, const RModule& M, int p) {
  return FormSpace(p, B, M);
}

/// Evaluate xi with a general Q-vector in the first slot and basis indices in
/// the remaining ones, extending R-multilinearly through the module action.
inline QVec eval_with_vector(const FormSpace& fs, const LieRinehart& B, const RModule& M,
                             const QVec& xi, const QVec& x, const std::vector<int>& rest) {
  QVec out = zero_vec(M.dim_q);
  for (int u = 0; u < B.rank; ++u) {
    QVec f = B.r_coefficient(x, u);
    if (is_zero(f)) continue;
    std::vector<int> tuple;
    tuple.push_back(u);
    tuple.insert(tuple.end(), rest.begin(), rest.end());
    QVec v = fs.eval(xi, tuple);
    if (is_zero(v)) continue;
    vaxpy(out, Rational(1), M.act(f, v));
  }
  return out;
}

/// Matrix of the twisted differential d_alpha : Omega^p_B(M) -> Omega^{p+1}:
///   (d xi)(s_1..s_{p+1}) = sum_i (-1)^{i-1} alpha(s_i) xi(.. ^s_i ..)
///                        + sum_{i<j} (-1)^{i+j} xi([s_i,s_j], .. ^s_i ^s_j ..).
inline MatrixQ ce_differential(const LieRinehart& B, const Connection& alpha, const RModule& M,
                               int p) {
  if (!(alpha.target.dim_q == M.dim_q) || alpha.algebroid.rank != B.rank)
    throw Error(ErrorCode::ConnectionMismatch, "connection does not act on the coefficients");
  FormSpace src(p, B, M), dst(p + 1, B, M);
  MatrixQ d(dst.dim(), src.dim());
  auto targets = increasing_tuples(B.rank, p + 1);
  for (const auto& S : targets) {
    int trow = tuple_rank(S, B.rank) * M.dim_q;
    // First sum.
    for (int i = 0; i < p + 1; ++i) {
      int sign = (i % 2 == 0) ? 1 : -1;
      std::vector<int> U = drop_positions(S, {i});
      int scol = tuple_rank(U, B.rank) * M.dim_q;
      const MatrixQ& op = alpha.ops[S[i]].matrix;
      for (int r = 0; r < M.dim_q; ++r)
        for (const auto& [c, v] : op.row(r)) d.add(trow + r, scol + c, sign * v);
    }
    // Second sum.
    for (int i = 0; i < p + 1; ++i)
      for (int j = i + 1; j < p + 1; ++j) {
        int sign = ((i + j) % 2 == 0) ? 1 : -1;  // (-1)^{(i+1)+(j+1)} = (-1)^{i+j}
        QVec x = B.bracket_basis[S[i]][S[j]];
        std::vector<int> U = drop_positions(S, {i, j});
        for (int u = 0; u < B.rank; ++u) {
          QVec f = B.r_coefficient(x, u);
          if (is_zero(f)) continue;
          std::vector<int> tuple;
          tuple.push_back(u);
          tuple.insert(tuple.end(), U.begin(), U.end());
          std::vector<int> sorted = tuple;
          int s2 = sort_sign(sorted);
          if (s2 == 0) continue;
          int scol = tuple_rank(sorted, B.rank) * M.dim_q;
          MatrixQ act = M.act_matrix(f);
          for (int r = 0; r < M.dim_q; ++r)
            for (const auto& [c, v] : act.row(r)) d.add(trow + r, scol + c, sign * s2 * v);
        }
      }
  }
  return d;
}

/// Cup with an End(M)-valued 2-form:
///   (F cup xi)(s_1..s_{p+2}) = sum_{i<j} (-1)^{i+j+1} F(s_i,s_j) xi(.. ^i ^j ..),
/// signed so that d_alpha^2 = F_alpha cup (checked by the test suite).
inline MatrixQ cup_curvature_matrix(const Curvature& F, const LieRinehart& B, const RModule& M,
                                    int p) {
  FormSpace src(p, B, M), dst(p + 2, B, M);
  MatrixQ out(dst.dim(), src.dim());
  for (const auto& S : increasing_tuples(B.rank, p + 2)) {
    int trow = tuple_rank(S, B.rank) * M.dim_q;
    for (int i = 0; i < p + 2; ++i)
      for (int j = i + 1; j < p + 2; ++j) {
        int sign = ((i + j) % 2 == 0) ? -1 : 1;  // (-1)^{(i+1)+(j+1)+1}
        std::vector<int> U = drop_positions(S, {i, j});
        int scol = tuple_rank(U, B.rank) * M.dim_q;
        const MatrixQ& f = F.value[S[i]][S[j]];
        for (int r = 0; r < M.dim_q; ++r)
          for (const auto& [c, v] : f.row(r)) out.add(trow + r, scol + c, sign * v);
      }
  }
  return out;
}

/// Graded bracket of L-valued forms by the shuffle formula:
///   [xi, eta](b_1..b_{p+q}) = sum_{(p,q)-shuffles} (-1)^sigma
///       [xi(b_{sigma(1..p)}), eta(b_{sigma(p+1..p+q)})].
inline QVec graded_bracket(const LieRinehart& B, const LieRinehart& L, int p, int q,
                           const QVec& xi, const QVec& eta) {
  RModule LM = L.as_module();
  FormSpace fp(p, B, LM), fq(q, B, LM), ft(p + q, B, LM);
  QVec out = zero_vec(ft.dim());
  auto sh = shuffles(p, q);
  for (const auto& S : increasing_tuples(B.rank, p + q)) {
    QVec v = zero_vec(LM.dim_q);
    for (const auto& s : sh) {
      std::vector<int> a, b;
      for (int i : s.first) a.push_back(S[i]);
      for (int i : s.second) b.push_back(S[i]);
      QVec xv = fp.value(xi, a);  // blocks of an increasing tuple stay increasing
      QVec ev = fq.value(eta, b);
      if (is_zero(xv) || is_zero(ev)) continue;
      QVec br = L.bracket(xv, ev);
      vaxpy(v, Rational(s.sign), br);
    }
    ft.set_value(out, S, v);
  }
  return out;
}

/// ad_phi as a connection shift: alpha + ad_phi for phi in Omega^1_B(L).
inline Connection connection_plus_ad(const Connection& alpha, const LieRinehart& L,
                                     const QVec& phi) {
  Connection out = alpha;
  FormSpace f1(1, alpha.algebroid, alpha.target);
  for (int u = 0; u < alpha.algebroid.rank; ++u) {
    QVec val = f1.value(phi, {u});
    out.ops[u].matrix = out.ops[u].matrix + L.ad(val);
  }
  return out;
}

/// The endomorphism-valued 2-form ad_rho for rho in Omega^2_B(L).
inline Curvature ad_of_two_form(const LieRinehart& B, const LieRinehart& L, const QVec& rho) {
  RModule LM = L.as_module();
  FormSpace f2(2, B, LM);
  Curvature F;
  F.rank = B.rank;
  F.value.assign(B.rank, std::vector<MatrixQ>(B.rank, MatrixQ(LM.dim_q, LM.dim_q)));
  for (int u = 0; u < B.rank; ++u)
    for (int v = 0; v < B.rank; ++v) {
      if (u == v) continue;
      QVec val = f2.eval(rho, {u, v});
      F.value[u][v] = L.ad(val);
    }
  return F;
}

/// Restrict a connection to an action-stable subspace of its target (e.g.
/// the centre). Throws if the subspace is not preserved.
inline Connection restrict_connection(const Connection& alpha, const RModule& sub,
                                      const std::vector<QVec>& inclusion) {
  Connection out;
  out.algebroid = alpha.algebroid;
  out.target = sub;
  MatrixQ cols = MatrixQ::from_cols(inclusion, alpha.target.dim_q);
  for (const auto& op : alpha.ops) {
    MatrixQ m(sub.dim_q, sub.dim_q);
    for (int j = 0; j < sub.dim_q; ++j) {
      QVec img = op.matrix.apply(inclusion[j]);
      auto c = solve_linear(cols, img);
      if (!c) throw Error(ErrorCode::Internal, "connection does not preserve the subspace");
      for (int i = 0; i < sub.dim_q; ++i)
        if ((*c)[i] != 0) m.set(i, j, (*c)[i]);
    }
    out.ops.push_back({m, op.symbol});
  }
  return out;
}

/// Push a cochain through a Q-linear map on coefficients.
inline QVec map_coefficients(const FormSpace& src, const FormSpace& dst, const QVec& xi,
                             const MatrixQ& f) {
  QVec out = zero_vec(dst.dim());
  for (int t = 0; t < src.tuples(); ++t) {
    QVec v(src.dim_m);
    for (int m = 0; m < src.dim_m; ++m) v[m] = xi[t * src.dim_m + m];
    QVec w = f.apply(v);
    for (int m = 0; m < dst.dim_m; ++m) out[t * dst.dim_m + m] = w[m];
  }
  return out;
}

}  // namespace algebroid

#endif
