/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef POSMAP_EIG_HPP
#define POSMAP_EIG_HPP

#include <vector>

#include "posmap/cmatrix.hpp"
#include "posmap/config.hpp"

namespace posmap {

struct EigResult {
  std::vector<double> eigenvalues; // descending
  CMatrix eigenvectors;            // orthonormal columns; M = V diag(w) V*
};

// Hermitian eigendecomposition by cyclic Jacobi rotations. Dimensions here
// stay small (<= a few hundred), so robustness wins over speed.
// Throws InvalidInput for non-square or non-Hermitian input.
EigResult hermitian_eig(const CMatrix &m, const Tolerances &tol = {});

double max_eigenvalue(const CMatrix &m, const Tolerances &tol = {});
double min_eigenvalue(const CMatrix &m, const Tolerances &tol = {});
// Operator norm max |eigenvalue| (Hermitian input).
double spectral_norm(const CMatrix &m, const Tolerances &tol = {});

// M = plus - minus with both PSD and orthogonal supports.
struct PositivePart {
  CMatrix plus;
  CMatrix minus;
};
PositivePart positive_part(const CMatrix &m, const Tolerances &tol = {});

// Frobenius projection onto the PSD cone (eigenvalue clipping).
CMatrix psd_projection(const CMatrix &m, const Tolerances &tol = {});

// m = u diag(s) w*; u is rows x r, w is cols x r, r = min(rows, cols),
// singular values descending. One-sided Jacobi, so small singular values come
// out with high relative accuracy.
struct SvdResult {
  CMatrix u;
  std::vector<double> singular_values;
  CMatrix w;
};
SvdResult svd(const CMatrix &m);

// Best rank-k approximation (truncated SVD).
CMatrix truncate_rank(const CMatrix &m, std::size_t k);

// v = sum_i coefficients[i] * left[i] (x) right[i], orthonormal factors.
// rank counts coefficients above rank_tol * s1. A zero vector yields rank 0
// and empty lists.
struct SchmidtDecomposition {
  std::vector<double> coefficients; // descending
  std::vector<std::vector<Complex>> left;
  std::vector<std::vector<Complex>> right;
  int rank = 0;
};
SchmidtDecomposition schmidt_decompose(const BipartiteVector &v, const Tolerances &tol = {});

} // namespace posmap

#endif
