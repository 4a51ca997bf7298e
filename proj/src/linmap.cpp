/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "posmap/linmap.hpp"

#include <cmath>

namespace posmap {

LinMap choi_of_action(std::size_t dim_k, std::size_t dim_h, const std::vector<CMatrix> &images) {
  if (dim_k == 0 || dim_h == 0)
    throw InvalidInput("choi_of_action: dimensions must be positive");
  if (images.size() != dim_k * dim_k)
    throw InvalidInput("choi_of_action: expected dimK^2 basis images");
  for (const CMatrix &img : images)
    if (img.rows() != dim_h || img.cols() != dim_h)
      throw InvalidInput("choi_of_action: each image must be dimH x dimH");

  LinMap phi;
  phi.dim_k = dim_k;
  phi.dim_h = dim_h;
  phi.choi = CMatrix(dim_k * dim_h, dim_k * dim_h);
  for (std::size_t i = 0; i < dim_k; ++i)
    for (std::size_t j = 0; j < dim_k; ++j) {
      const CMatrix &img = images[i * dim_k + j];
      for (std::size_t a = 0; a < dim_h; ++a)
        for (std::size_t b = 0; b < dim_h; ++b)
          phi.choi(i * dim_h + a, j * dim_h + b) = img(a, b);
    }
  return phi;
}

CMatrix apply_map(const LinMap &phi, const CMatrix &a) {
  if (a.rows() != phi.dim_k || a.cols() != phi.dim_k)
    throw InvalidInput("apply: argument must be dimK x dimK");
  CMatrix out(phi.dim_h, phi.dim_h);
  // phi(a) = sum_{k,i} a[k,i] phi(e_ki), and phi(e_ki)[alpha,beta] is the
  // Choi entry at ((k,alpha),(i,beta)).
  for (std::size_t k = 0; k < phi.dim_k; ++k)
    for (std::size_t i = 0; i < phi.dim_k; ++i) {
      const Complex aki = a(k, i);
      if (aki == Complex(0.0, 0.0))
        continue;
      for (std::size_t alpha = 0; alpha < phi.dim_h; ++alpha)
        for (std::size_t beta = 0; beta < phi.dim_h; ++beta)
          out(alpha, beta) += aki * phi.choi(k * phi.dim_h + alpha, i * phi.dim_h + beta);
    }
  return out;
}

Complex functional_pair(const LinMap &phi, const CMatrix &a, const CMatrix &b) {
  if (b.rows() != phi.dim_h || b.cols() != phi.dim_h)
    throw InvalidInput("functional_pair: b must be dimH x dimH");
  const CMatrix img = apply_map(phi, a); // validates a
  // Tr(phi(a) b^t) = sum_{alpha,beta} phi(a)[alpha,beta] * b[alpha,beta]
  Complex acc(0.0, 0.0);
  for (std::size_t alpha = 0; alpha < phi.dim_h; ++alpha)
    for (std::size_t beta = 0; beta < phi.dim_h; ++beta)
      acc += img(alpha, beta) * b(alpha, beta);
  return acc;
}

double pairing(const LinMap &phi, const LinMap &psi, const Tolerances &tol) {
  if (phi.dim_k != psi.dim_k || phi.dim_h != psi.dim_h)
    throw InvalidInput("pairing: dimension mismatch");
  if (!phi.is_self_adjoint(tol) || !psi.is_self_adjoint(tol))
    throw NotSelfAdjoint("pairing: both maps must be self-adjoint");
  // Tr(C_phi C_psi) = sum_{u,v} C_phi[u,v] conj(C_psi[u,v]) for Hermitian C_psi.
  Complex acc(0.0, 0.0);
  const std::size_t n = phi.choi.rows();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      acc += phi.choi(u, v) * std::conj(psi.choi(u, v));
  return acc.real();
}

LinMap compose(const LinMap &phi, const LinMap &psi) {
  if (phi.dim_k != psi.dim_h)
    throw InvalidInput("compose: inner dimensions do not match");
  std::vector<CMatrix> images;
  images.reserve(psi.dim_k * psi.dim_k);
  for (std::size_t i = 0; i < psi.dim_k; ++i)
    for (std::size_t j = 0; j < psi.dim_k; ++j)
      images.push_back(apply_map(phi, apply_map(psi, matrix_unit(psi.dim_k, i, j))));
  return choi_of_action(psi.dim_k, phi.dim_h, images);
}

LinMap transpose_compose(const LinMap &phi) {
  LinMap out;
  out.dim_k = phi.dim_k;
  out.dim_h = phi.dim_h;
  out.choi = partial_transpose(phi.choi, phi.dim_k, phi.dim_h, Factor::second);
  return out;
}

LinMap tensor_id(const LinMap &phi, std::size_t k) {
  if (k == 0)
    throw InvalidInput("tensor_id: ancilla dimension must be positive");
  const std::size_t dk = phi.dim_k * k;
  const std::size_t dh = phi.dim_h * k;
  LinMap out;
  out.dim_k = dk;
  out.dim_h = dh;
  out.choi = CMatrix(dk * dh, dk * dh);
  // (phi (x) id)(e_ij (x) e_uv) = phi(e_ij) (x) e_uv. Choi entries:
  //   C[((i,u),(alpha,w)), ((j,v),(beta,x))] = phi(e_ij)[alpha,beta] delta_uw delta_vx
  for (std::size_t i = 0; i < phi.dim_k; ++i)
    for (std::size_t j = 0; j < phi.dim_k; ++j)
      for (std::size_t alpha = 0; alpha < phi.dim_h; ++alpha)
        for (std::size_t beta = 0; beta < phi.dim_h; ++beta) {
          const Complex cij = phi.choi(i * phi.dim_h + alpha, j * phi.dim_h + beta);
          if (cij == Complex(0.0, 0.0))
            continue;
          for (std::size_t u = 0; u < k; ++u)
            for (std::size_t v = 0; v < k; ++v) {
              const std::size_t row = (i * k + u) * dh + (alpha * k + u);
              const std::size_t col = (j * k + v) * dh + (beta * k + v);
              out.choi(row, col) = cij;
            }
        }
  return out;
}

} // namespace posmap
