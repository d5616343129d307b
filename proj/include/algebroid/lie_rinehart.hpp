#ifndef ALGEBROID_LIE_RINEHART_HPP
#define ALGEBROID_LIE_RINEHART_HPP

#include <string>
#include <vector>

#include "algebroid/base_algebra.hpp"

namespace algebroid {

/// Lie-Rinehart algebra, free of finite rank over its base, with bracket
/// structure constants on the module basis and an anchor valued in
/// derivations of the base.
///
/// The full bracket on the underlying Q-space is derived from the structure
/// constants through the Leibniz rule
///   [f b_u, g b_v] = fg [b_u, b_v] + f a(b_u)(g) b_v - g a(b_v)(f) b_u.
struct LieRinehart {
  BaseAlgebra base;
  int rank = 0;
  // bracket_basis[u][v] = [b_u, b_v] as a Q-vector of length rank*base.dim.
  std::vector<std::vector<QVec>> bracket_basis;
  std::vector<Derivation> anchor_basis;  // anchor of each b_u

  int dim_q() const { return rank * base.dim; }

  static LieRinehart abelian(const BaseAlgebra& R, int rank) {
    LieRinehart l;
    l.base = R;
    l.rank = rank;
    l.bracket_basis.assign(rank, std::vector<QVec>(rank, zero_vec(rank * R.dim)));
    l.anchor_basis.assign(rank, Derivation::zero(R.dim));
    return l;
  }

  /// Plain Lie algebra over Q: constant base, given structure constants.
  static LieRinehart lie_algebra(int rank, const std::vector<std::vector<QVec>>& brackets) {
    LieRinehart l = abelian(BaseAlgebra::rationals(), rank);
    l.bracket_basis = brackets;
    return l;
  }

  RModule as_module() const { return RModule::free_module(base, rank); }

  /// Coordinates (u, e) u-major. Extract the R-coefficient of b_u from x.
  QVec r_coefficient(const QVec& x, int u) const {
    QVec f(base.dim);
    for (int e = 0; e < base.dim; ++e) f[e] = x[u * base.dim + e];
    return f;
  }

  QVec from_r_coefficients(const std::vector<QVec>& coeffs) const {
    QVec x = zero_vec(dim_q());
    for (int u = 0; u < rank; ++u)
      for (int e = 0; e < base.dim; ++e) x[u * base.dim + e] = coeffs[u][e];
    return x;
  }

  /// Multiply x by a base element f (module structure).
  QVec scale(const QVec& f, const QVec& x) const {
    QVec out = zero_vec(dim_q());
    for (int u = 0; u < rank; ++u) {
      QVec c = base.multiply(f, r_coefficient(x, u));
      for (int e = 0; e < base.dim; ++e) out[u * base.dim + e] = c[e];
    }
    return out;
  }

  Derivation anchor(const QVec& x) const {
    MatrixQ m(base.dim, base.dim);
    for (int u = 0; u < rank; ++u) {
      QVec f = r_coefficient(x, u);
      if (is_zero(f)) continue;
      m = m + (base.mult_matrix(f) * anchor_basis[u].matrix);
    }
    return Derivation{m};
  }

  /// Full derived bracket on arbitrary Q-vectors.
  QVec bracket(const QVec& x, const QVec& y) const {
    QVec out = zero_vec(dim_q());
    for (int u = 0; u < rank; ++u) {
      QVec f = r_coefficient(x, u);
      if (is_zero(f)) continue;
      for (int v = 0; v < rank; ++v) {
        QVec g = r_coefficient(y, v);
        if (is_zero(g)) continue;
        // fg [b_u, b_v]
        QVec fg = base.multiply(f, g);
        vaxpy(out, Rational(1), scale(fg, bracket_basis[u][v]));
        // f a(b_u)(g) b_v
        QVec d1 = base.multiply(f, anchor_basis[u].matrix.apply(g));
        for (int e = 0; e < base.dim; ++e) out[v * base.dim + e] += d1[e];
        // - g a(b_v)(f) b_u
        QVec d2 = base.multiply(g, anchor_basis[v].matrix.apply(f));
        for (int e = 0; e < base.dim; ++e) out[u * base.dim + e] -= d2[e];
      }
    }
    return out;
  }

  bool anchor_is_zero() const {
    for (const auto& a : anchor_basis)
      if (!a.matrix.is_zero()) return false;
    return true;
  }

  /// Matrix of ad_x on the underlying Q-space.
  MatrixQ ad(const QVec& x) const {
    MatrixQ m(dim_q(), dim_q());
    for (int j = 0; j < dim_q(); ++j) {
      QVec col = bracket(x, unit_vec(dim_q(), j));
      for (int i = 0; i < dim_q(); ++i)
        if (col[i] != 0) m.set(i, j, col[i]);
    }
    return m;
  }

  /// ad as a linear map L -> End(L), flattened row-major; columns indexed by
  /// the Q-basis of L.
  MatrixQ ad_map() const {
    int n = dim_q();
    MatrixQ m(n * n, n);
    for (int j = 0; j < n; ++j) {
      MatrixQ aj = ad(unit_vec(n, j));
      for (int r = 0; r < n; ++r)
        for (const auto& [c, v] : aj.row(r)) m.set(r * n + c, j, v);
    }
    return m;
  }
};

struct ValidationReport {
  std::vector<std::string> failures;
  bool valid() const { return failures.empty(); }
};

/// Checks Jacobi on basis triples, skew-symmetry, the Leibniz rule on
/// (basis, base-basis, basis) triples, and that the anchor is a bracket
/// homomorphism onto commutators. Failures are data, not errors.
inline ValidationReport validate_lie_rinehart(const LieRinehart& L) {
  ValidationReport rep;
  for (const auto& issue : L.base.validate()) rep.failures.push_back("base: " + issue);
  int n = L.dim_q();
  auto basis = [&](int u) { return unit_vec(n, u * L.base.dim) ; };
  // Skew-symmetry on module basis (unit coefficient embedding).
  for (int u = 0; u < L.rank; ++u)
    for (int v = 0; v < L.rank; ++v) {
      QVec lhs = L.bracket_basis[u][v];
      QVec rhs = vscale(Rational(-1), L.bracket_basis[v][u]);
      if (lhs != rhs)
        rep.failures.push_back("skew-symmetry fails at (" + std::to_string(u) + "," +
                               std::to_string(v) + ")");
    }
  (void)basis;
  // Embed basis b_u as unit * b_u in Q-coordinates.
  auto emb = [&](int u) {
    QVec x = zero_vec(n);
    for (int e = 0; e < L.base.dim; ++e) x[u * L.base.dim + e] = L.base.unit[e];
    return x;
  };
  // Jacobi on basis triples (with the full derived bracket).
  for (int u = 0; u < L.rank; ++u)
    for (int v = u + 1; v < L.rank; ++v)
      for (int w = v + 1; w < L.rank; ++w) {
        QVec s = L.bracket(L.bracket(emb(u), emb(v)), emb(w));
        s = vadd(s, L.bracket(L.bracket(emb(v), emb(w)), emb(u)));
        s = vadd(s, L.bracket(L.bracket(emb(w), emb(u)), emb(v)));
        if (!is_zero(s))
          rep.failures.push_back("Jacobi fails at (" + std::to_string(u) + "," +
                                 std::to_string(v) + "," + std::to_string(w) + ")");
      }
  // Leibniz: [b_u, f b_v] = f [b_u, b_v] + a(b_u)(f) b_v, f over base basis.
  for (int u = 0; u < L.rank; ++u)
    for (int e = 0; e < L.base.dim; ++e)
      for (int v = 0; v < L.rank; ++v) {
        QVec f = unit_vec(L.base.dim, e);
        QVec lhs = L.bracket(emb(u), L.scale(f, emb(v)));
        QVec rhs = L.scale(f, L.bracket(emb(u), emb(v)));
        QVec df = L.anchor_basis[u].matrix.apply(f);
        for (int c = 0; c < L.base.dim; ++c) rhs[v * L.base.dim + c] += df[c];
        if (lhs != rhs)
          rep.failures.push_back("Leibniz fails at (b" + std::to_string(u) + ", f" +
                                 std::to_string(e) + ", b" + std::to_string(v) + ")");
      }
  // Anchor derivations and bracket homomorphism.
  for (int u = 0; u < L.rank; ++u)
    if (!L.anchor_basis[u].check_leibniz(L.base))
      rep.failures.push_back("anchor of b" + std::to_string(u) + " is not a derivation");
  for (int u = 0; u < L.rank; ++u)
    for (int v = 0; v < L.rank; ++v) {
      MatrixQ lhs = L.anchor(L.bracket(emb(u), emb(v))).matrix;
      MatrixQ rhs = L.anchor_basis[u].matrix * L.anchor_basis[v].matrix -
                    L.anchor_basis[v].matrix * L.anchor_basis[u].matrix;
      if (!(lhs == rhs))
        rep.failures.push_back("anchor homomorphism fails at (" + std::to_string(u) + "," +
                               std::to_string(v) + ")");
    }
  return rep;
}

/// Heisenberg algebra heis3 over Q: [e1,e2] = e3.
inline LieRinehart heisenberg3() {
  LieRinehart l = LieRinehart::abelian(BaseAlgebra::rationals(), 3);
  l.bracket_basis[0][1] = unit_vec(3, 2);
  l.bracket_basis[1][0] = vscale(Rational(-1), unit_vec(3, 2));
  return l;
}

/// sl2 over Q: basis (h, e, f); [h,e] = 2e, [h,f] = -2f, [e,f] = h.
inline LieRinehart sl2() {
  LieRinehart l = LieRinehart::abelian(BaseAlgebra::rationals(), 3);
  auto set = [&](int u, int v, const QVec& val) {
    l.bracket_basis[u][v] = val;
    l.bracket_basis[v][u] = vscale(Rational(-1), val);
  };
  set(0, 1, vscale(Rational(2), unit_vec(3, 1)));
  set(0, 2, vscale(Rational(-2), unit_vec(3, 2)));
  set(1, 2, unit_vec(3, 0));
  return l;
}

}  // namespace algebroid

#endif
