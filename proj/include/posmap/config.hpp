/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef POSMAP_CONFIG_HPP
#define POSMAP_CONFIG_HPP

#include <cstdint>

namespace posmap {

// Numerical tolerances. `herm_tol_rel` is relative to the Frobenius norm of
// the matrix under test; the rest are absolute.
struct Tolerances {
  double herm_tol_rel = 1e-10; // Hermiticity check, scaled by ||M||_F
  double psd_tol = 1e-9;       // eigenvalues above -psd_tol count as nonnegative
  double rank_tol = 1e-9;      // Schmidt rank: sigma_i > rank_tol * sigma_1
  double eig_tol = 1e-12;      // eigendecomposition reconstruction, scaled by ||M||
  double norm_tol = 1e-8;      // unit-vector check
  double ortho_tol = 1e-9;     // |<y, C y>| threshold in witness preconditions
  double residual_tol = 1e-9;  // off-subspace residual threshold
  double cert_margin = 1e-7;   // certified violations must exceed the bound by this
};

// Settings for the Schmidt-class see-saw optimizer.
struct OptConfig {
  int restarts = 32;
  int max_iter = 500;
  double tol = 1e-11; // stop a restart when the per-iteration gain drops below this
  std::uint64_t seed = 1;
};

// Settings for the projected ascent over PPT states.
struct PptConfig {
  int max_iter = 5000;
  int dykstra_max_iter = 200;
  double tol = 1e-9; // converged when values move less than this over `window` steps
  int window = 20;
  double step_scale = 1.0; // ascent step = step_scale / ||C||
};

} // namespace posmap

#endif
