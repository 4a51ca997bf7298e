/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef POSMAP_LINMAP_HPP
#define POSMAP_LINMAP_HPP

#include <vector>

#include "posmap/cmatrix.hpp"
#include "posmap/config.hpp"

namespace posmap {

// Linear map phi: B(K) -> B(H), stored as its Choi matrix
//   C_phi = sum_ij e_ij (x) phi(e_ij)   on K (x) H.
// The Choi matrix is the single source of truth; the action form is derived.
struct LinMap {
  std::size_t dim_k = 0;
  std::size_t dim_h = 0;
  CMatrix choi;

  // phi is self-adjoint (maps Hermitian to Hermitian) iff C_phi is Hermitian.
  bool is_self_adjoint(const Tolerances &tol = {}) const {
    return choi.is_hermitian(tol.herm_tol_rel * choi.frobenius_norm());
  }
};

// Build a map from its matrix-unit images. `images` holds phi(e_ij) at index
// i*dim_k + j, each dim_h x dim_h.
LinMap choi_of_action(std::size_t dim_k, std::size_t dim_h, const std::vector<CMatrix> &images);

// phi(a) = Tr_K[(a^t (x) 1) C_phi]; round-trips with choi_of_action.
CMatrix apply_map(const LinMap &phi, const CMatrix &a);

// The functional phi~(a (x) b) = Tr(phi(a) b^t). Unnormalized; it coincides
// with Tr(C_phi^t (a (x) b)).
Complex functional_pair(const LinMap &phi, const CMatrix &a, const CMatrix &b);

// Tr(C_phi C_psi) for self-adjoint maps; symmetric and real.
double pairing(const LinMap &phi, const LinMap &psi, const Tolerances &tol = {});

// phi o psi (apply psi first).
LinMap compose(const LinMap &phi, const LinMap &psi);

// t o phi; Choi matrix is the partial transpose of C_phi on the second factor.
LinMap transpose_compose(const LinMap &phi);

// phi (x) id_k : B(K (x) C^k) -> B(H (x) C^k), under the (i,u) -> i*k + u
// index convention on both sides.
LinMap tensor_id(const LinMap &phi, std::size_t k);

} // namespace posmap

#endif
