/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "posmap/cp_split.hpp"

#include <algorithm>
#include <cmath>

#include "posmap/eig.hpp"

namespace posmap {

CpSplit cp_split(const LinMap &phi, const Tolerances &tol) {
  if (!phi.is_self_adjoint(tol))
    throw NotSelfAdjoint("cp_split: map is not self-adjoint");
  // ||C_phi^+|| equals max(0, lambda_max(C_phi)) by orthogonality of the
  // supports; no need for the full positive-part split.
  const double lam_max = max_eigenvalue(phi.choi, tol);
  if (lam_max <= tol.psd_tol)
    throw NegativeOfCpMap("cp_split: C_phi^+ = 0, -phi is completely positive; split undefined");

  CpSplit s;
  s.c = lam_max;
  s.source = phi;
  s.phi_cp.dim_k = phi.dim_k;
  s.phi_cp.dim_h = phi.dim_h;
  s.phi_cp.choi = CMatrix::identity(phi.choi.rows()) - Complex(1.0 / lam_max, 0.0) * phi.choi;
  return s;
}

double verify_split(const CpSplit &s) {
  const LinMap &phi = s.source;
  const CMatrix one = CMatrix::identity(phi.dim_h);
  double worst = 0.0;
  for (std::size_t i = 0; i < phi.dim_k; ++i)
    for (std::size_t j = 0; j < phi.dim_k; ++j) {
      const CMatrix e = matrix_unit(phi.dim_k, i, j);
      CMatrix lhs = apply_map(phi, e);
      lhs *= Complex(1.0 / s.c, 0.0);
      CMatrix rhs = one * e.trace() - apply_map(s.phi_cp, e);
      worst = std::max(worst, (lhs - rhs).frobenius_norm());
    }
  return worst;
}

} // namespace posmap
