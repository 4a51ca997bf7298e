/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef POSMAP_CP_SPLIT_HPP
#define POSMAP_CP_SPLIT_HPP

#include "posmap/linmap.hpp"

namespace posmap {

// Canonical decomposition of a self-adjoint map phi with C_phi^+ != 0:
//   c^{-1} phi = Tr - phi_cp,   c = ||C_phi^+|| = lambda_max(C_phi) > 0,
// where phi_cp is completely positive with C_{phi_cp} = 1 - c^{-1} C_phi.
struct CpSplit {
  double c = 0.0;
  LinMap phi_cp;
  LinMap source;
};

// Throws NotSelfAdjoint when the Choi matrix is not Hermitian and
// NegativeOfCpMap when C_phi^+ = 0 (then -phi is completely positive and the
// split is undefined).
CpSplit cp_split(const LinMap &phi, const Tolerances &tol = {});

// Max over matrix units e_ij of || c^{-1} phi(e_ij) - (Tr(e_ij) 1 - phi_cp(e_ij)) ||_F.
double verify_split(const CpSplit &s);

} // namespace posmap

#endif
