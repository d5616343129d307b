#ifndef ALGEBROID_EXTENSION_ENGINE_HPP
#define ALGEBROID_EXTENSION_ENGINE_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "algebroid/cohomology.hpp"
#include "algebroid/forms.hpp"
#include "algebroid/subobjects.hpp"

namespace algebroid {

/// A coupling of B: a totally intransitive L together with an outer action
/// of B on L, presented by representative first-order operators modulo
/// inner derivations.
struct Coupling {
  LieRinehart B;
  LieRinehart L;
  std::vector<FirstOrderOp> outer;  // representative in Der_D(L) per B-basis
  CanonicalSubobjects sub;          // computed once from L

  int dim_l() const { return L.dim_q(); }
};

inline Coupling make_coupling(const LieRinehart& B, const LieRinehart& L,
                              std::vector<FirstOrderOp> outer) {
  Coupling c;
  c.B = B;
  c.L = L;
  c.outer = std::move(outer);
  c.sub = canonical_subobjects(L);
  return c;
}

/// Trivial coupling (zero outer action); needs the anchor of B to be zero.
inline Coupling trivial_coupling(const LieRinehart& B, const LieRinehart& L) {
  std::vector<FirstOrderOp> outer(B.rank, FirstOrderOp::zero(L.dim_q(), L.base.dim));
  return make_coupling(B, L, outer);
}

inline std::vector<std::string> validate_coupling(const Coupling& c) {
  std::vector<std::string> issues;
  int n = c.L.dim_q(), d = c.L.base.dim;
  int len = n * n + d * d;
  auto derD = span_basis(c.sub.der_d_basis, len);
  auto adsp = span_basis(c.sub.ad_image, len);
  for (int u = 0; u < c.B.rank; ++u) {
    if (!in_span(derD, flatten_op(c.outer[u], n, d)))
      issues.push_back("outer representative " + std::to_string(u) + " is not in Der_D(L)");
    if (!(c.outer[u].symbol.matrix == c.B.anchor_basis[u].matrix))
      issues.push_back("outer symbol " + std::to_string(u) + " differs from the anchor of B");
  }
  // Bracket compatibility modulo ad(L).
  auto op_of = [&](const QVec& x) {
    FirstOrderOp out = FirstOrderOp::zero(n, d);
    RModule LM = c.L.as_module();
    for (int u = 0; u < c.B.rank; ++u) {
      QVec f = c.B.r_coefficient(x, u);
      if (is_zero(f)) continue;
      out.matrix = out.matrix + LM.act_matrix(f) * c.outer[u].matrix;
      out.symbol.matrix = out.symbol.matrix + c.L.base.mult_matrix(f) * c.outer[u].symbol.matrix;
    }
    return out;
  };
  auto emb = [&](int u) {
    QVec x = zero_vec(c.B.dim_q());
    for (int e = 0; e < c.B.base.dim; ++e) x[u * c.B.base.dim + e] = c.B.base.unit[e];
    return x;
  };
  for (int u = 0; u < c.B.rank; ++u)
    for (int v = u + 1; v < c.B.rank; ++v) {
      FirstOrderOp comm = c.outer[u].commutator(c.outer[v]);
      FirstOrderOp br = op_of(c.B.bracket(emb(u), emb(v)));
      QVec diff = flatten_op(comm - br, n, d);
      if (!in_span(adsp, diff))
        issues.push_back("outer action fails bracket compatibility mod ad at (" +
                         std::to_string(u) + "," + std::to_string(v) + ")");
    }
  return issues;
}

/// A lifting pair (alpha, rho): a Der_D-valued connection over the coupling
/// together with a 2-form absorbing its curvature, ad_rho = F_alpha.
struct LiftingPair {
  Connection alpha;
  QVec rho;  // in Omega^2_B(L) coordinates
};

inline std::vector<std::string> validate_lifting_pair(const Coupling& c, const LiftingPair& p) {
  std::vector<std::string> issues;
  int n = c.L.dim_q(), d = c.L.base.dim;
  int len = n * n + d * d;
  auto derD = span_basis(c.sub.der_d_basis, len);
  auto adsp = span_basis(c.sub.ad_image, len);
  for (int u = 0; u < c.B.rank; ++u) {
    FirstOrderOp op = p.alpha.ops[u];
    if (!in_span(derD, flatten_op(op, n, d)))
      issues.push_back("alpha(" + std::to_string(u) + ") is not in Der_D(L)");
    QVec diff = flatten_op(op - c.outer[u], n, d);
    if (!in_span(adsp, diff))
      issues.push_back("alpha(" + std::to_string(u) + ") does not lift the coupling");
  }
  Curvature F = curvature(p.alpha);
  Curvature adr = ad_of_two_form(c.B, c.L, p.rho);
  for (int u = 0; u < c.B.rank; ++u)
    for (int v = 0; v < c.B.rank; ++v)
      if (!(F.value[u][v] == adr.value[u][v]))
        issues.push_back("ad_rho != F_alpha at (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
  return issues;
}

/// Deterministic lift: project each outer representative to the chosen
/// representative space of Out_D(L), then solve ad_rho = F_alpha.
inline LiftingPair lift_coupling(const Coupling& c) {
  int n = c.L.dim_q(), d = c.L.base.dim;
  LiftingPair p;
  p.alpha.algebroid = c.B;
  p.alpha.target = c.L.as_module();
  for (int u = 0; u < c.B.rank; ++u) {
    QVec flat = flatten_op(c.outer[u], n, d);
    QVec coords = c.sub.out_d.coords(flat);  // throws if not in Der_D
    QVec rep = zero_vec(n * n + d * d);
    for (size_t j = 0; j < coords.size(); ++j)
      vaxpy(rep, coords[j], c.sub.out_d.representative_basis[j]);
    p.alpha.ops.push_back(unflatten_op(rep, n, d));
  }
  Curvature F = curvature(p.alpha);
  MatrixQ ad = c.L.ad_map();
  FormSpace f2(2, c.B, p.alpha.target);
  p.rho = zero_vec(f2.dim());
  for (const auto& pair : increasing_tuples(c.B.rank, 2)) {
    QVec target = zero_vec(n * n);
    const MatrixQ& Fm = F.value[pair[0]][pair[1]];
    for (int r = 0; r < n; ++r)
      for (const auto& [cc, v] : Fm.row(r)) target[r * n + cc] = v;
    auto sol = solve_linear(ad, target);
    if (!sol) throw Error(ErrorCode::NoRhoSolution, "curvature is not inner; corrupted coupling");
    f2.set_value(p.rho, pair, *sol);
  }
  return p;
}

/// lambda = d_alpha rho, asserted to take values in Z(L).
inline QVec obstruction_cochain(const Coupling& c, const LiftingPair& p) {
  RModule LM = c.L.as_module();
  MatrixQ d2 = ce_differential(c.B, p.alpha, LM, 2);
  QVec lambda = d2.apply(p.rho);
  FormSpace f3(3, c.B, LM);
  for (const auto& t : increasing_tuples(c.B.rank, 3)) {
    QVec v = f3.value(lambda, t);
    if (!in_span(c.sub.center_inclusion, v))
      throw Error(ErrorCode::CenterEscape, "obstruction cochain escapes the centre");
  }
  return lambda;
}

/// Restriction of a lift to the centre; independent of the lift since inner
/// derivations act trivially there.
inline Connection center_connection(const Coupling& c, const LiftingPair& p) {
  return restrict_connection(p.alpha, c.sub.center, c.sub.center_inclusion);
}

/// Convert an Omega^k_B(L) cochain with central values to Z(L) coordinates.
inline QVec to_center_coords(const Coupling& c, int k, const QVec& xi) {
  RModule LM = c.L.as_module();
  FormSpace fl(k, c.B, LM), fz(k, c.B, c.sub.center);
  if (c.sub.center.dim_q == 0) {
    if (!is_zero(xi)) throw Error(ErrorCode::CenterEscape, "nonzero cochain with trivial centre");
    return zero_vec(fz.dim());
  }
  MatrixQ cols = MatrixQ::from_cols(c.sub.center_inclusion, LM.dim_q);
  QVec out = zero_vec(fz.dim());
  for (int t = 0; t < fl.tuples(); ++t) {
    QVec v(LM.dim_q);
    for (int m = 0; m < LM.dim_q; ++m) v[m] = xi[t * LM.dim_q + m];
    auto s = solve_linear(cols, v);
    if (!s) throw Error(ErrorCode::CenterEscape, "cochain value outside the centre");
    for (int m = 0; m < c.sub.center.dim_q; ++m) out[t * c.sub.center.dim_q + m] = (*s)[m];
  }
  return out;
}

inline QVec from_center_coords(const Coupling& c, int k, const QVec& xi) {
  RModule LM = c.L.as_module();
  FormSpace fl(k, c.B, LM), fz(k, c.B, c.sub.center);
  QVec out = zero_vec(fl.dim());
  for (int t = 0; t < fz.tuples(); ++t)
    for (int m = 0; m < c.sub.center.dim_q; ++m) {
      Rational v = xi[t * c.sub.center.dim_q + m];
      if (v == 0) continue;
      for (int i = 0; i < LM.dim_q; ++i) out[t * LM.dim_q + i] += v * c.sub.center_inclusion[m][i];
    }
  return out;
}

/// The obstruction class [lambda] in H^3(B; Z(L)).
struct ObstructionClass {
  Subquotient h3;
  QVec coords;  // in h3's representative basis
  bool zero() const { return is_zero(coords); }
};

inline ObstructionClass obstruction_class(const Coupling& c) {
  LiftingPair p = lift_coupling(c);
  QVec lambda = obstruction_cochain(c, p);
  QVec lz = to_center_coords(c, 3, lambda);
  Connection za = center_connection(c, p);
  ObstructionClass out;
  out.h3 = cohomology(c.B, za, c.sub.center, 3);
  out.coords = out.h3.coords(lz);
  return out;
}

/// (alpha + ad_phi, rho + d_alpha phi + [phi,phi]/2): the standard move
/// between lifting pairs; leaves lambda unchanged.
inline LiftingPair change_lifting_pair(const Coupling& c, const LiftingPair& p, const QVec& phi) {
  LiftingPair q;
  q.alpha = connection_plus_ad(p.alpha, c.L, phi);
  RModule LM = c.L.as_module();
  MatrixQ d1 = ce_differential(c.B, p.alpha, LM, 1);
  QVec rho = p.rho;
  vaxpy(rho, Rational(1), d1.apply(phi));
  vaxpy(rho, Rational(1, 2), graded_bracket(c.B, c.L, 1, 1, phi, phi));
  q.rho = rho;
  return q;
}

/// Residual of d_{alpha'} eta - d_alpha eta - [phi, eta] for alpha' - alpha
/// = ad_phi; must vanish identically.
inline QVec differential_shift_check(const Coupling& c, const Connection& alpha,
                                     const Connection& alpha_prime, const QVec& phi, int p,
                                     const QVec& eta) {
  RModule LM = c.L.as_module();
  QVec lhs = ce_differential(c.B, alpha_prime, LM, p).apply(eta);
  QVec rhs = ce_differential(c.B, alpha, LM, p).apply(eta);
  QVec res = vsub(lhs, rhs);
  return vsub(res, graded_bracket(c.B, c.L, 1, p, phi, eta));
}

/// Lie-Rinehart structure on B + L with the split bracket.
struct ExtensionStructure {
  LieRinehart total;
  MatrixQ injection;   // L -> total
  MatrixQ projection;  // total -> B
  LiftingPair pair;    // the defining (alpha, rho)
};

struct JacobiFailure {
  QVec lambda;                 // the obstruction cochain
  std::vector<int> triple;     // one violating B-basis triple
};

/// Assemble the bracket [.,.]_{alpha,rho} on B + L. Returns the extension
/// when the Jacobiator vanishes, otherwise the failure witness.
inline std::variant<ExtensionStructure, JacobiFailure> build_extension(const Coupling& c,
                                                                       const LiftingPair& p) {
  const LieRinehart& B = c.B;
  const LieRinehart& L = c.L;
  int rB = B.rank, rL = L.rank, d = B.base.dim;
  LieRinehart A = LieRinehart::abelian(B.base, rB + rL);
  RModule LM = L.as_module();
  FormSpace f2(2, B, LM);
  auto embed_b = [&](const QVec& x) {
    QVec out = zero_vec(A.dim_q());
    for (int i = 0; i < rB * d; ++i) out[i] = x[i];
    return out;
  };
  auto embed_l = [&](const QVec& x) {
    QVec out = zero_vec(A.dim_q());
    for (int i = 0; i < rL * d; ++i) out[rB * d + i] = x[i];
    return out;
  };
  for (int u = 0; u < rB; ++u)
    for (int v = 0; v < rB; ++v) {
      QVec br = embed_b(B.bracket_basis[u][v]);
      if (u != v) {
        std::vector<int> t = {u, v};
        std::vector<int> s = t;
        int sign = sort_sign(s);
        QVec rv = vscale(Rational(sign), f2.value(p.rho, s));
        br = vadd(br, embed_l(rv));
      }
      A.bracket_basis[u][v] = br;
    }
  for (int u = 0; u < rB; ++u)
    for (int w = 0; w < rL; ++w) {
      QVec al = zero_vec(L.dim_q());
      for (int e = 0; e < d; ++e) {
        QVec img = p.alpha.ops[u].matrix.apply(unit_vec(L.dim_q(), w * d + e));
        vaxpy(al, B.base.unit[e], img);
      }
      A.bracket_basis[u][rB + w] = embed_l(al);
      A.bracket_basis[rB + w][u] = vscale(Rational(-1), A.bracket_basis[u][rB + w]);
    }
  for (int w = 0; w < rL; ++w)
    for (int x = 0; x < rL; ++x) A.bracket_basis[rB + w][rB + x] = embed_l(L.bracket_basis[w][x]);
  for (int u = 0; u < rB; ++u) A.anchor_basis[u] = B.anchor_basis[u];
  for (int w = 0; w < rL; ++w) A.anchor_basis[rB + w] = Derivation::zero(d);

  QVec lambda = ce_differential(B, p.alpha, LM, 2).apply(p.rho);
  if (!is_zero(lambda)) {
    FormSpace f3(3, B, LM);
    JacobiFailure jf;
    jf.lambda = lambda;
    for (const auto& t : increasing_tuples(B.rank, 3))
      if (!is_zero(f3.value(lambda, t))) {
        jf.triple = t;
        break;
      }
    return jf;
  }
  ExtensionStructure es;
  es.total = A;
  es.injection = MatrixQ(A.dim_q(), L.dim_q());
  for (int i = 0; i < L.dim_q(); ++i) es.injection.set(rB * d + i, i, 1);
  es.projection = MatrixQ(B.dim_q(), A.dim_q());
  for (int i = 0; i < B.dim_q(); ++i) es.projection.set(i, i, 1);
  es.pair = p;
  return es;
}

/// Recover a lifting pair from a section s: B -> total with proj . s = id.
inline LiftingPair splitting_to_pair(const Coupling& c, const ExtensionStructure& E,
                                     const MatrixQ& s) {
  const LieRinehart& B = c.B;
  const LieRinehart& L = c.L;
  MatrixQ check = E.projection * s;
  if (!(check == MatrixQ::identity(B.dim_q())))
    throw Error(ErrorCode::NotASection, "projection composed with s is not the identity");
  int rB = B.rank, d = B.base.dim;
  // L sits in total via E.injection; to read off L-components subtract the
  // B-part through s0 (the canonical inclusion) and invert the injection.
  auto to_l = [&](const QVec& a) {
    QVec l(L.dim_q());
    for (int i = 0; i < L.dim_q(); ++i) l[i] = a[rB * d + i];
    QVec bpart(B.dim_q());
    for (int i = 0; i < B.dim_q(); ++i) bpart[i] = a[i];
    if (!is_zero(bpart)) throw Error(ErrorCode::Internal, "element not in L");
    return l;
  };
  auto emb = [&](int u) {
    QVec x = zero_vec(B.dim_q());
    for (int e = 0; e < d; ++e) x[u * d + e] = B.base.unit[e];
    return x;
  };
  LiftingPair p;
  p.alpha.algebroid = B;
  p.alpha.target = L.as_module();
  for (int u = 0; u < rB; ++u) {
    QVec sb = s.apply(emb(u));
    MatrixQ m(L.dim_q(), L.dim_q());
    for (int j = 0; j < L.dim_q(); ++j) {
      QVec img = E.total.bracket(sb, E.injection.apply(unit_vec(L.dim_q(), j)));
      QVec l = to_l(img);
      for (int i = 0; i < L.dim_q(); ++i)
        if (l[i] != 0) m.set(i, j, l[i]);
    }
    p.alpha.ops.push_back({m, B.anchor_basis[u]});
  }
  FormSpace f2(2, B, p.alpha.target);
  p.rho = zero_vec(f2.dim());
  for (const auto& t : increasing_tuples(B.rank, 2)) {
    QVec v = E.total.bracket(s.apply(emb(t[0])), s.apply(emb(t[1])));
    QVec sbr = s.apply(B.bracket(emb(t[0]), emb(t[1])));
    QVec l = to_l(vsub(v, sbr));
    f2.set_value(p.rho, t, l);
  }
  return p;
}

/// gamma = rho' - rho - d_alpha phi - [phi,phi]/2 for the canonical phi with
/// alpha' - alpha = ad_phi; a d-closed central 2-form classifying the
/// difference of the extensions.
struct DifferenceClass {
  Subquotient h2;
  QVec coords;
  QVec gamma_center;  // representative in Omega^2(Z(L)) coordinates
};

/// Solve ad_{phi(b_u)} = alpha'(b_u) - alpha(b_u) per basis element.
inline QVec solve_connection_shift(const Coupling& c, const Connection& alpha,
                                   const Connection& alpha_prime) {
  int n = c.L.dim_q();
  MatrixQ ad = c.L.ad_map();
  RModule LM = c.L.as_module();
  FormSpace f1(1, c.B, LM);
  QVec phi = zero_vec(f1.dim());
  for (int u = 0; u < c.B.rank; ++u) {
    MatrixQ diff = alpha_prime.ops[u].matrix - alpha.ops[u].matrix;
    QVec target = zero_vec(n * n);
    for (int r = 0; r < n; ++r)
      for (const auto& [cc, v] : diff.row(r)) target[r * n + cc] = v;
    auto sol = solve_linear(ad, target);
    if (!sol)
      throw Error(ErrorCode::CouplingMismatch, "connection difference is not inner");
    f1.set_value(phi, {u}, *sol);
  }
  return phi;
}

inline DifferenceClass difference_class(const Coupling& c, const LiftingPair& E,
                                        const LiftingPair& Eprime) {
  RModule LM = c.L.as_module();
  QVec phi = solve_connection_shift(c, E.alpha, Eprime.alpha);
  QVec gamma = vsub(Eprime.rho, E.rho);
  vaxpy(gamma, Rational(-1), ce_differential(c.B, E.alpha, LM, 1).apply(phi));
  vaxpy(gamma, Rational(-1, 2), graded_bracket(c.B, c.L, 1, 1, phi, phi));
  DifferenceClass out;
  out.gamma_center = to_center_coords(c, 2, gamma);
  LiftingPair base = lift_coupling(c);
  Connection za = center_connection(c, base);
  // Closedness of gamma.
  MatrixQ d2 = ce_differential(c.B, za, c.sub.center, 2);
  if (!is_zero(d2.apply(out.gamma_center)))
    throw Error(ErrorCode::NotClosed, "difference form is not closed");
  out.h2 = cohomology(c.B, za, c.sub.center, 2);
  out.coords = out.h2.coords(out.gamma_center);
  return out;
}

/// Extensions are equivalent iff the difference class vanishes; the witness
/// is (phi, beta) with alpha' - alpha = ad_phi and
/// rho' - rho - d_alpha phi - [phi,phi]/2 = d beta.
inline std::optional<std::pair<QVec, QVec>> extensions_equivalent(const Coupling& c,
                                                                  const LiftingPair& E,
                                                                  const LiftingPair& Eprime) {
  RModule LM = c.L.as_module();
  QVec phi = solve_connection_shift(c, E.alpha, Eprime.alpha);
  QVec gamma = vsub(Eprime.rho, E.rho);
  vaxpy(gamma, Rational(-1), ce_differential(c.B, E.alpha, LM, 1).apply(phi));
  vaxpy(gamma, Rational(-1, 2), graded_bracket(c.B, c.L, 1, 1, phi, phi));
  QVec gz = to_center_coords(c, 2, gamma);
  LiftingPair base = lift_coupling(c);
  Connection za = center_connection(c, base);
  MatrixQ d1 = ce_differential(c.B, za, c.sub.center, 1);
  auto beta = solve_linear(d1, gz);
  if (!beta) return std::nullopt;
  return std::make_pair(phi, *beta);
}

/// Act on an extension by a closed central 2-form: rho -> rho + gamma.
inline LiftingPair torsor_action(const Coupling& c, const LiftingPair& E,
                                 const QVec& gamma_center) {
  LiftingPair base = lift_coupling(c);
  Connection za = center_connection(c, base);
  MatrixQ d2 = ce_differential(c.B, za, c.sub.center, 2);
  if (!is_zero(d2.apply(gamma_center)))
    throw Error(ErrorCode::NotClosed, "torsor action by a non-closed form");
  LiftingPair out = E;
  out.rho = vadd(out.rho, from_center_coords(c, 2, gamma_center));
  return out;
}

}  // namespace algebroid

#endif
