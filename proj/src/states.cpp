/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "posmap/states.hpp"

#include <algorithm>
#include <cmath>

#include "posmap/eig.hpp"
#include "posmap/gallery.hpp"

namespace posmap {

StateDensity StateDensity::make(std::size_t dim_k, std::size_t dim_h, const CMatrix &rho,
                                const Tolerances &tol) {
  if (rho.rows() != rho.cols() || rho.rows() != dim_k * dim_h)
    throw InvalidInput("StateDensity: rho dimension does not match dimK*dimH");
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-10)
    throw InvalidInput("StateDensity: trace must equal 1 within 1e-10");
  if (min_eigenvalue(rho, tol) < -tol.psd_tol)
    throw InvalidInput("StateDensity: rho is not PSD within tolerance");
  StateDensity s;
  s.dim_k = dim_k;
  s.dim_h = dim_h;
  s.rho = rho;
  const CMatrix gamma = partial_transpose(rho, dim_k, dim_h, Factor::second);
  s.is_ppt = min_eigenvalue(gamma, tol) >= -tol.psd_tol;
  return s;
}

PptProjection project_to_ppt_states(const CMatrix &m, std::size_t dim_k, std::size_t dim_h,
                                    int max_iter, double tol, const Tolerances &tols) {
  const std::size_t d = dim_k * dim_h;
  if (m.rows() != d || m.cols() != d)
    throw InvalidInput("project_to_ppt_states: dimension mismatch");

  auto ppt_projection = [&](const CMatrix &x) {
    CMatrix g = partial_transpose(x, dim_k, dim_h, Factor::second);
    g = psd_projection(g, tols);
    return partial_transpose(g, dim_k, dim_h, Factor::second);
  };
  auto trace_projection = [&](const CMatrix &x) {
    CMatrix out = x;
    const Complex shift = (Complex(1.0, 0.0) - x.trace()) / static_cast<double>(d);
    for (std::size_t i = 0; i < d; ++i)
      out(i, i) += shift;
    return out;
  };
  auto residual_of = [&](const CMatrix &x) {
    const double e1 = min_eigenvalue(x.hermitized(), tols);
    const double e2 =
        min_eigenvalue(partial_transpose(x, dim_k, dim_h, Factor::second).hermitized(), tols);
    const double tr_err = std::abs(x.trace() - Complex(1.0, 0.0));
    return std::max({0.0, -e1, -e2, tr_err});
  };

  CMatrix x = m.hermitized();
  CMatrix p1 = CMatrix::zero(d, d), p2 = CMatrix::zero(d, d), p3 = CMatrix::zero(d, d);
  const double scale = std::max(x.frobenius_norm(), 1.0);
  CMatrix x_prev = x;
  PptProjection out;
  for (int it = 0; it < max_iter; ++it) {
    CMatrix y = psd_projection(x + p1, tols);
    p1 = x + p1 - y;
    x = y;
    y = ppt_projection(x + p2);
    p2 = x + p2 - y;
    x = y;
    y = trace_projection(x + p3);
    p3 = x + p3 - y;
    x = y;
    out.iterations = it + 1;
    // Stop when a full cycle no longer moves the iterate; feasibility is
    // verified (and repaired exactly) below.
    const double delta = (x - x_prev).frobenius_norm();
    x_prev = x;
    if (delta <= std::max(tol, 1e-15 * scale))
      break;
  }

  // Final cleanup: mixing with the maximally mixed state restores exact
  // feasibility of both PSD constraints and the trace at negligible cost.
  x = x.hermitized();
  const double e1 = min_eigenvalue(x, tols);
  const double e2 = min_eigenvalue(partial_transpose(x, dim_k, dim_h, Factor::second), tols);
  const double a = std::max({0.0, -e1, -e2});
  const double tr = x.trace().real();
  const double denom = tr + a * static_cast<double>(d);
  if (denom <= 0.0) {
    x = CMatrix::identity(d);
    x *= Complex(1.0 / static_cast<double>(d), 0.0);
  } else {
    for (std::size_t i = 0; i < d; ++i)
      x(i, i) += a;
    x *= Complex(1.0 / denom, 0.0);
  }
  out.rho = x;
  out.residual = residual_of(x);
  return out;
}

CMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng &rng) {
  CMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rng.complex_gaussian();
  return m;
}

CMatrix random_hermitian(std::size_t n, Rng &rng) {
  const CMatrix g = random_gaussian_matrix(n, n, rng);
  CMatrix h = g.hermitized();
  const double nrm = h.frobenius_norm();
  if (nrm > 0.0)
    h *= Complex(1.0 / nrm, 0.0);
  return h;
}

CMatrix random_psd(std::size_t n, std::size_t rank, Rng &rng) {
  rank = std::max<std::size_t>(1, std::min(rank, n));
  const CMatrix g = random_gaussian_matrix(n, rank, rng);
  CMatrix m = g * g.adjoint();
  return m.hermitized();
}

std::vector<Complex> random_unit_vector(std::size_t n, Rng &rng) {
  std::vector<Complex> v(n);
  double nrm = 0.0;
  while (nrm == 0.0) {
    for (std::size_t i = 0; i < n; ++i)
      v[i] = rng.complex_gaussian();
    nrm = vec_norm(v);
  }
  for (Complex &z : v)
    z /= nrm;
  return v;
}

StateDensity random_separable_state(std::size_t dim_k, std::size_t dim_h, int terms,
                                    std::uint64_t seed, const Tolerances &tol) {
  if (terms < 1)
    throw InvalidInput("random_separable_state: terms must be >= 1");
  Rng rng(seed);
  const std::size_t d = dim_k * dim_h;
  CMatrix rho(d, d);
  std::vector<double> weights(static_cast<std::size_t>(terms));
  double wsum = 0.0;
  for (double &w : weights) {
    w = -std::log(1.0 - rng.uniform());
    wsum += w;
  }
  for (int t = 0; t < terms; ++t) {
    const std::vector<Complex> x = random_unit_vector(dim_k, rng);
    const std::vector<Complex> y = random_unit_vector(dim_h, rng);
    std::vector<Complex> prod(d);
    for (std::size_t i = 0; i < dim_k; ++i)
      for (std::size_t j = 0; j < dim_h; ++j)
        prod[i * dim_h + j] = x[i] * y[j];
    const double w = weights[static_cast<std::size_t>(t)] / wsum;
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        rho(r, c) += w * prod[r] * std::conj(prod[c]);
  }
  return StateDensity::make(dim_k, dim_h, rho.hermitized(), tol);
}

StateDensity random_ppt_state(std::size_t dim_k, std::size_t dim_h, std::uint64_t seed,
                              const Tolerances &tol) {
  Rng rng(seed);
  const std::size_t d = dim_k * dim_h;
  CMatrix rho = random_psd(d, d, rng);
  rho *= Complex(1.0 / rho.trace().real(), 0.0);
  const PptProjection proj = project_to_ppt_states(rho, dim_k, dim_h, 500, 1e-12, tol);
  return StateDensity::make(dim_k, dim_h, proj.rho, tol);
}

LinMap random_superpositive(std::size_t dim_k, std::size_t dim_h, std::size_t k, int terms,
                            std::uint64_t seed) {
  if (terms < 1)
    throw InvalidInput("random_superpositive: terms must be >= 1");
  k = std::max<std::size_t>(1, std::min(k, std::min(dim_k, dim_h)));
  Rng rng(seed);
  LinMap out;
  out.dim_k = dim_k;
  out.dim_h = dim_h;
  out.choi = CMatrix(dim_k * dim_h, dim_k * dim_h);
  for (int t = 0; t < terms; ++t) {
    // V = sum of k rank-one factors, so rank(V) <= k.
    CMatrix v(dim_h, dim_k);
    for (std::size_t r = 0; r < k; ++r) {
      const std::vector<Complex> g = random_unit_vector(dim_h, rng);
      const std::vector<Complex> h = random_unit_vector(dim_k, rng);
      for (std::size_t a = 0; a < dim_h; ++a)
        for (std::size_t i = 0; i < dim_k; ++i)
          v(a, i) += g[a] * h[i];
    }
    out.choi += gallery_adv(v).choi;
  }
  const double nrm = out.choi.trace().real();
  if (nrm > 0.0)
    out.choi *= Complex(1.0 / nrm, 0.0);
  return out;
}

LinMap random_selfadjoint_map(std::size_t dim_k, std::size_t dim_h, std::uint64_t seed) {
  Rng rng(seed);
  LinMap out;
  out.dim_k = dim_k;
  out.dim_h = dim_h;
  out.choi = random_hermitian(dim_k * dim_h, rng);
  return out;
}

LinMap random_cp_map(std::size_t dim_k, std::size_t dim_h, std::uint64_t seed) {
  Rng rng(seed);
  LinMap out;
  out.dim_k = dim_k;
  out.dim_h = dim_h;
  CMatrix c = random_psd(dim_k * dim_h, dim_k * dim_h, rng);
  c *= Complex(1.0 / c.trace().real(), 0.0);
  out.choi = c;
  return out;
}

} // namespace posmap
