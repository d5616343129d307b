#ifndef ALGEBROID_COHOMOLOGY_HPP
#define ALGEBROID_COHOMOLOGY_HPP

#include "algebroid/forms.hpp"

namespace algebroid {

/// H^p(B; M) for a flat connection, as a subquotient with representatives.
/// Throws NotFlat carrying the first offending curvature entry.
inline Subquotient cohomology(const LieRinehart& B, const Connection& alpha, const RModule& M,
                              int p) {
  Curvature F = curvature(alpha);
  for (int u = 0; u < F.rank; ++u)
    for (int v = 0; v < F.rank; ++v)
      if (!F.value[u][v].is_zero())
        throw Error(ErrorCode::NotFlat, "curvature nonzero at basis pair (" + std::to_string(u) +
                                            "," + std::to_string(v) + ")");
  FormSpace fp(p, B, M);
  MatrixQ d_p = ce_differential(B, alpha, M, p);
  std::vector<QVec> cycles = kernel_basis(d_p);
  std::vector<QVec> boundaries;
  if (p > 0) {
    MatrixQ d_prev = ce_differential(B, alpha, M, p - 1);
    FormSpace fprev(p - 1, B, M);
    for (int j = 0; j < fprev.dim(); ++j) {
      QVec img = d_prev.apply(unit_vec(fprev.dim(), j));
      if (!is_zero(img)) boundaries.push_back(img);
    }
  }
  return subquotient(cycles, boundaries, fp.dim());
}

/// All Betti numbers of (Omega^*_B(M), d_alpha).
inline std::vector<int> cohomology_dims(const LieRinehart& B, const Connection& alpha,
                                        const RModule& M) {
  std::vector<int> dims;
  for (int p = 0; p <= B.rank; ++p) dims.push_back(cohomology(B, alpha, M, p).dim());
  return dims;
}

}  // namespace algebroid

#endif
