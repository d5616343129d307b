#ifndef ALGEBROID_CONNECTION_HPP
#define ALGEBROID_CONNECTION_HPP

#include <string>
#include <vector>

#include "algebroid/lie_rinehart.hpp"

namespace algebroid {

/// First-order operator on a module: the full matrix on the underlying
/// Q-space together with its scalar symbol, a derivation of the base. The
/// defining relation is op(f m) = f op(m) + symbol(f) m.
struct FirstOrderOp {
  MatrixQ matrix;
  Derivation symbol;

  static FirstOrderOp zero(int dim_q, int base_dim) {
    return {MatrixQ(dim_q, dim_q), Derivation::zero(base_dim)};
  }

  FirstOrderOp operator+(const FirstOrderOp& o) const {
    return {matrix + o.matrix, Derivation{symbol.matrix + o.symbol.matrix}};
  }
  FirstOrderOp operator-(const FirstOrderOp& o) const {
    return {matrix - o.matrix, Derivation{symbol.matrix - o.symbol.matrix}};
  }

  /// Commutator of first-order operators; the symbol is the commutator of
  /// symbols.
  FirstOrderOp commutator(const FirstOrderOp& o) const {
    return {matrix * o.matrix - o.matrix * matrix,
            Derivation{symbol.matrix * o.symbol.matrix - o.symbol.matrix * symbol.matrix}};
  }

  bool check_first_order(const RModule& M) const {
    for (int e = 0; e < M.base.dim; ++e) {
      // op (e . m) - e . op(m) = symbol(e) . m as matrices
      MatrixQ lhs = matrix * M.action[e] - M.action[e] * matrix;
      QVec de = symbol.matrix.apply(unit_vec(M.base.dim, e));
      MatrixQ rhs = M.act_matrix(de);
      if (!(lhs == rhs)) return false;
    }
    return true;
  }
};

/// Connection of a Lie-Rinehart algebra on a module: one first-order
/// operator per algebroid basis element, symbols matching the anchor.
struct Connection {
  LieRinehart algebroid;  // the acting B
  RModule target;         // the module M (or L)
  std::vector<FirstOrderOp> ops;  // per B-basis element

  static Connection zero(const LieRinehart& B, const RModule& M) {
    Connection c;
    c.algebroid = B;
    c.target = M;
    c.ops.assign(B.rank, FirstOrderOp::zero(M.dim_q, M.base.dim));
    return c;
  }

  /// Apply the R-linear extension to an arbitrary element of B as an
  /// operator on the target: alpha(sum f_u b_u) = sum f_u . alpha(b_u).
  FirstOrderOp op_of(const QVec& x) const {
    FirstOrderOp out = FirstOrderOp::zero(target.dim_q, target.base.dim);
    for (int u = 0; u < algebroid.rank; ++u) {
      QVec f = algebroid.r_coefficient(x, u);
      if (is_zero(f)) continue;
      out.matrix = out.matrix + target.act_matrix(f) * ops[u].matrix;
      out.symbol.matrix = out.symbol.matrix + target.base.mult_matrix(f) * ops[u].symbol.matrix;
    }
    return out;
  }

  std::vector<std::string> validate() const {
    std::vector<std::string> issues;
    if (static_cast<int>(ops.size()) != algebroid.rank) {
      issues.push_back("connection has wrong arity");
      return issues;
    }
    for (int u = 0; u < algebroid.rank; ++u) {
      if (!(ops[u].symbol.matrix == algebroid.anchor_basis[u].matrix))
        issues.push_back("symbol of op " + std::to_string(u) + " differs from the anchor");
      if (!ops[u].check_first_order(target))
        issues.push_back("op " + std::to_string(u) + " violates the first-order identity");
    }
    return issues;
  }
};

/// Curvature F(b_u, b_v) = [alpha(b_u), alpha(b_v)] - alpha([b_u, b_v]),
/// stored on basis pairs as endomorphisms of the target.
struct Curvature {
  int rank = 0;
  std::vector<std::vector<MatrixQ>> value;  // value[u][v], u,v < rank

  bool is_zero() const {
    for (const auto& row : value)
      for (const auto& m : row)
        if (!m.is_zero()) return false;
    return true;
  }
};

inline Curvature curvature(const Connection& alpha) {
  const LieRinehart& B = alpha.algebroid;
  Curvature F;
  F.rank = B.rank;
  F.value.assign(B.rank, std::vector<MatrixQ>(B.rank, MatrixQ(alpha.target.dim_q, alpha.target.dim_q)));
  for (int u = 0; u < B.rank; ++u)
    for (int v = 0; v < B.rank; ++v) {
      QVec xu = zero_vec(B.dim_q()), xv = zero_vec(B.dim_q());
      for (int e = 0; e < B.base.dim; ++e) {
        xu[u * B.base.dim + e] = B.base.unit[e];
        xv[v * B.base.dim + e] = B.base.unit[e];
      }
      FirstOrderOp comm = alpha.ops[u].commutator(alpha.ops[v]);
      FirstOrderOp br = alpha.op_of(B.bracket(xu, xv));
      F.value[u][v] = comm.matrix - br.matrix;
    }
  return F;
}

}  // namespace algebroid

#endif
