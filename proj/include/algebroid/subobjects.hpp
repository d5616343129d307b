#ifndef ALGEBROID_SUBOBJECTS_HPP
#define ALGEBROID_SUBOBJECTS_HPP

#include <string>
#include <vector>

#include "algebroid/forms.hpp"

namespace algebroid {

/// Flatten a first-order operator (X, sigma) on L into one vector:
/// n*n entries of X row-major, then d*d entries of sigma.
inline QVec flatten_op(const FirstOrderOp& op, int n, int d) {
  QVec v = zero_vec(n * n + d * d);
  for (int r = 0; r < n; ++r)
    for (const auto& [c, val] : op.matrix.row(r)) v[r * n + c] = val;
  for (int r = 0; r < d; ++r)
    for (const auto& [c, val] : op.symbol.matrix.row(r)) v[n * n + r * d + c] = val;
  return v;
}

inline FirstOrderOp unflatten_op(const QVec& v, int n, int d) {
  FirstOrderOp op = FirstOrderOp::zero(n, d);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (v[r * n + c] != 0) op.matrix.set(r, c, v[r * n + c]);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      if (v[n * n + r * d + c] != 0) op.symbol.matrix.set(r, c, v[n * n + r * d + c]);
  return op;
}

/// The canonical subobjects of a totally intransitive L: the centre Z(L),
/// the R-linear bracket derivations Der_O(L), the first-order bracket
/// derivations Der_D(L), the inner derivations ad(L), and the quotient
/// Out_D(L) = Der_D(L)/ad(L).
struct CanonicalSubobjects {
  RModule center;                       // Z(L) with restricted action
  std::vector<QVec> center_inclusion;   // basis of Z(L) inside L
  std::vector<QVec> der_o_basis;        // flattened (X, 0)
  std::vector<QVec> der_d_basis;        // flattened (X, sigma)
  std::vector<QVec> ad_image;           // flattened ad_l
  Subquotient out_d;                    // Der_D / ad
  int n = 0, d = 0;                     // dim_q(L), dim(R)

  int dim_center() const { return center.dim_q; }
  int dim_der_o() const { return static_cast<int>(der_o_basis.size()); }
  int dim_der_d() const { return static_cast<int>(der_d_basis.size()); }
  int dim_ad() const { return static_cast<int>(span_basis(ad_image, n * n + d * d).size()); }
  int dim_out_d() const { return out_d.dim(); }
};

inline CanonicalSubobjects canonical_subobjects(const LieRinehart& L) {
  if (!L.anchor_is_zero())
    throw Error(ErrorCode::NotTotallyIntransitive, "canonical subobjects need zero anchor");
  CanonicalSubobjects cs;
  int n = L.dim_q();
  int d = L.base.dim;
  cs.n = n;
  cs.d = d;
  RModule LM = L.as_module();

  // Z(L) = ker ad.
  cs.center_inclusion = kernel_basis(L.ad_map());
  cs.center = RModule::submodule(LM, cs.center_inclusion, &cs.center_inclusion);

  // Linear conditions: unknown (X, sigma), flattened length n*n + d*d.
  int len = n * n + d * d;
  std::vector<QVec> rows;
  auto xat = [&](int r, int c) { return r * n + c; };
  auto sat = [&](int r, int c) { return n * n + r * d + c; };

  // sigma is a derivation of R: sigma(e_i e_j) = sigma(e_i) e_j + e_i sigma(e_j).
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int c = 0; c < d; ++c) {
        QVec row = zero_vec(len);
        for (int k = 0; k < d; ++k) row[sat(c, k)] += L.base.mult[i][j][k];
        for (int k = 0; k < d; ++k) row[sat(k, i)] -= L.base.mult[k][j][c];
        for (int k = 0; k < d; ++k) row[sat(k, j)] -= L.base.mult[i][k][c];
        rows.push_back(std::move(row));
      }
  // First-order identity: X act_e - act_e X = act(sigma(e)) for each base e.
  for (int e = 0; e < d; ++e) {
    const MatrixQ& ae = LM.action[e];
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        QVec row = zero_vec(len);
        for (int k = 0; k < n; ++k) {
          Rational v = ae.at(k, c);
          if (v != 0) row[xat(r, k)] += v;
          Rational w = ae.at(r, k);
          if (w != 0) row[xat(k, c)] -= w;
        }
        // -(act(sigma e))_{rc} = -sum_k sigma[k][e] (act_k)_{rc}
        for (int k = 0; k < d; ++k) {
          Rational v = LM.action[k].at(r, c);
          if (v != 0) row[sat(k, e)] -= v;
        }
        rows.push_back(std::move(row));
      }
  }
  // Bracket derivation on Q-basis pairs: X[l,l'] = [Xl,l'] + [l,Xl'].
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      QVec br = L.bracket(unit_vec(n, a), unit_vec(n, b));
      MatrixQ ad_a = L.ad(unit_vec(n, a));
      MatrixQ ad_b = L.ad(unit_vec(n, b));
      for (int c = 0; c < n; ++c) {
        QVec row = zero_vec(len);
        for (int k = 0; k < n; ++k)
          if (br[k] != 0) row[xat(c, k)] += br[k];
        // -[X e_a, e_b]_c = +(ad_b (X e_a))_c ; [e_a, X e_b]_c = (ad_a (X e_b))_c
        for (int k = 0; k < n; ++k) {
          Rational v = ad_b.at(c, k);
          if (v != 0) row[xat(k, a)] += v;
          Rational w = ad_a.at(c, k);
          if (w != 0) row[xat(k, b)] -= w;
        }
        rows.push_back(std::move(row));
      }
    }

  MatrixQ sys = MatrixQ::from_rows(rows, len);
  cs.der_d_basis = kernel_basis(sys);

  // Der_O: the sigma = 0 slice.
  {
    std::vector<QVec> rows_o = rows;
    for (int i = 0; i < d * d; ++i) {
      QVec row = zero_vec(len);
      row[n * n + i] = 1;
      rows_o.push_back(std::move(row));
    }
    cs.der_o_basis = kernel_basis(MatrixQ::from_rows(rows_o, len));
  }

  for (int j = 0; j < n; ++j) {
    FirstOrderOp op{L.ad(unit_vec(n, j)), Derivation::zero(d)};
    cs.ad_image.push_back(flatten_op(op, n, d));
  }
  cs.out_d = subquotient(cs.der_d_basis, cs.ad_image, len);
  return cs;
}

/// Structural checks: ad subset Der_O subset Der_D, bracket closure, ad an
/// ideal in Der_D, Z(L) an R-submodule. Returns human-readable failures.
inline std::vector<std::string> check_subobject_structure(const LieRinehart& L,
                                                          const CanonicalSubobjects& cs) {
  std::vector<std::string> issues;
  int len = cs.n * cs.n + cs.d * cs.d;
  auto derD = span_basis(cs.der_d_basis, len);
  auto derO = span_basis(cs.der_o_basis, len);
  for (const auto& v : cs.ad_image)
    if (!in_span(derO, v)) issues.push_back("ad(L) escapes Der_O(L)");
  for (const auto& v : derO)
    if (!in_span(derD, v)) issues.push_back("Der_O(L) escapes Der_D(L)");
  auto comm_in = [&](const std::vector<QVec>& a, const std::vector<QVec>& b,
                     const std::vector<QVec>& target, const char* msg) {
    for (const auto& x : a)
      for (const auto& y : b) {
        FirstOrderOp ox = unflatten_op(x, cs.n, cs.d);
        FirstOrderOp oy = unflatten_op(y, cs.n, cs.d);
        QVec c = flatten_op(ox.commutator(oy), cs.n, cs.d);
        if (!in_span(target, c)) {
          issues.push_back(msg);
          return;
        }
      }
  };
  comm_in(derD, derD, derD, "Der_D not closed under commutator");
  comm_in(derO, derO, derO, "Der_O not closed under commutator");
  auto adsp = span_basis(cs.ad_image, len);
  if (!adsp.empty()) comm_in(derD, adsp, adsp, "ad(L) is not an ideal in Der_D");
  // Z(L) stability under the module action is built into RModule::submodule;
  // re-check membership anyway.
  for (const auto& z : cs.center_inclusion)
    for (int e = 0; e < cs.d; ++e) {
      QVec img = L.as_module().action[e].apply(z);
      if (!in_span(cs.center_inclusion, img)) issues.push_back("Z(L) is not an R-submodule");
    }
  return issues;
}

}  // namespace algebroid

#endif
