/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef POSMAP_STATES_HPP
#define POSMAP_STATES_HPP

#include <cstdint>

#include "posmap/linmap.hpp"
#include "posmap/rng.hpp"

namespace posmap {

// Density operator on K (x) H: PSD with unit trace.
struct StateDensity {
  std::size_t dim_k = 0;
  std::size_t dim_h = 0;
  CMatrix rho;
  bool is_ppt = false; // partial transpose PSD within psd_tol

  // Validates PSD / trace invariants and computes the PPT flag.
  static StateDensity make(std::size_t dim_k, std::size_t dim_h, const CMatrix &rho,
                           const Tolerances &tol = {});
};

// Dykstra alternating projections onto {rho >= 0} ∩ {rho^Gamma >= 0} ∩ {Tr rho = 1}.
struct PptProjection {
  CMatrix rho;
  double residual = 0.0; // max of PSD/PPT eigenvalue deficit and trace error
  int iterations = 0;
};
PptProjection project_to_ppt_states(const CMatrix &m, std::size_t dim_k, std::size_t dim_h,
                                    int max_iter, double tol, const Tolerances &tols = {});

// Random generators (small dimensions). All deterministic in the seed.
CMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng &rng);
CMatrix random_hermitian(std::size_t n, Rng &rng);
CMatrix random_psd(std::size_t n, std::size_t rank, Rng &rng);
std::vector<Complex> random_unit_vector(std::size_t n, Rng &rng);

// Convex mixture of `terms` random product pure states.
StateDensity random_separable_state(std::size_t dim_k, std::size_t dim_h, int terms,
                                    std::uint64_t seed, const Tolerances &tol = {});
// Random density projected onto the PPT set.
StateDensity random_ppt_state(std::size_t dim_k, std::size_t dim_h, std::uint64_t seed,
                              const Tolerances &tol = {});
// Sum of `terms` maps AdV with rank(V) <= k.
LinMap random_superpositive(std::size_t dim_k, std::size_t dim_h, std::size_t k, int terms,
                            std::uint64_t seed);
// Random self-adjoint map (Hermitian Gaussian Choi matrix, unit Frobenius norm).
LinMap random_selfadjoint_map(std::size_t dim_k, std::size_t dim_h, std::uint64_t seed);
// Random completely positive map (Wishart Choi matrix, unit trace).
LinMap random_cp_map(std::size_t dim_k, std::size_t dim_h, std::uint64_t seed);

} // namespace posmap

#endif
