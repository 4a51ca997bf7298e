/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "posmap/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace posmap {

namespace {

constexpr int kMaxSweeps = 60;

double off_diagonal_norm(const CMatrix &a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j)
        s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Smaller-angle Jacobi rotation zeroing the off-diagonal of the Hermitian
// 2x2 block [[app, apq], [conj(apq), aqq]]. Returns {c, s, phase} with the
// unitary U = [[c, s], [-s*conj(phase), c*conj(phase)]] acting on (p, q).
struct Rotation {
  double c;
  double s;
  Complex phase; // e^{i arg(apq)}
};

Rotation jacobi_rotation(double app, double aqq, Complex apq) {
  const double aapq = std::abs(apq);
  Rotation rot{1.0, 0.0, Complex(1.0, 0.0)};
  if (aapq <= 0.0)
    return rot;
  rot.phase = apq / aapq;
  const double tau = (aqq - app) / (2.0 * aapq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  rot.c = 1.0 / std::sqrt(1.0 + t * t);
  rot.s = t * rot.c;
  return rot;
}

// Deterministic orthonormal completion: the standard basis vector with the
// largest residual after projecting out the columns of `u` listed in `used`.
std::vector<Complex> complete_column(const CMatrix &u, const std::vector<std::size_t> &used) {
  const std::size_t n = u.rows();
  std::vector<Complex> best(n, Complex(0.0, 0.0));
  double best_norm = -1.0;
  for (std::size_t cand = 0; cand < n; ++cand) {
    std::vector<Complex> v(n, Complex(0.0, 0.0));
    v[cand] = Complex(1.0, 0.0);
    for (std::size_t c : used) {
      Complex ip(0.0, 0.0);
      for (std::size_t i = 0; i < n; ++i)
        ip += std::conj(u(i, c)) * v[i];
      for (std::size_t i = 0; i < n; ++i)
        v[i] -= ip * u(i, c);
    }
    const double nv = vec_norm(v);
    if (nv > best_norm) {
      best_norm = nv;
      best = v;
    }
    if (best_norm > 0.9)
      break;
  }
  const double nv = vec_norm(best);
  for (Complex &z : best)
    z /= nv;
  return best;
}

} // namespace

EigResult hermitian_eig(const CMatrix &m, const Tolerances &tol) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw InvalidInput("hermitian_eig: matrix must be square and nonempty");
  const double fro = m.frobenius_norm();
  if (!m.is_hermitian(tol.herm_tol_rel * fro))
    throw InvalidInput("hermitian_eig: matrix is not Hermitian within tolerance");

  const std::size_t n = m.rows();
  CMatrix a = m.hermitized();
  CMatrix v = CMatrix::identity(n);
  const double stop = 1e-14 * std::max(fro, 1e-300);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= stop)
      break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double aapq = std::abs(apq);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        if (aapq <= 1e-300 || aapq <= 0.5e-16 * (std::abs(app) + std::abs(aqq)))
          continue;
        const Rotation r = jacobi_rotation(app, aqq, apq);
        const Complex cphase = std::conj(r.phase);
        // columns: col_p' = c*col_p - s*conj(phase)*col_q,
        //          col_q' = s*col_p + c*conj(phase)*col_q
        for (std::size_t i = 0; i < n; ++i) {
          const Complex aip = a(i, p), aiq = a(i, q);
          a(i, p) = r.c * aip - r.s * cphase * aiq;
          a(i, q) = r.s * aip + r.c * cphase * aiq;
          const Complex vip = v(i, p), viq = v(i, q);
          v(i, p) = r.c * vip - r.s * cphase * viq;
          v(i, q) = r.s * vip + r.c * cphase * viq;
        }
        // rows: row_p' = c*row_p - s*phase*row_q, row_q' = s*row_p + c*phase*row_q
        for (std::size_t j = 0; j < n; ++j) {
          const Complex apj = a(p, j), aqj = a(q, j);
          a(p, j) = r.c * apj - r.s * r.phase * aqj;
          a(q, j) = r.s * apj + r.c * r.phase * aqj;
        }
        a(p, q) = Complex(0.0, 0.0);
        a(q, p) = Complex(0.0, 0.0);
        a(p, p) = Complex(a(p, p).real(), 0.0);
        a(q, q) = Complex(a(q, q).real(), 0.0);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });

  EigResult out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    out.eigenvalues[c] = a(order[c], order[c]).real();
    for (std::size_t i = 0; i < n; ++i)
      out.eigenvectors(i, c) = v(i, order[c]);
  }
  return out;
}

double max_eigenvalue(const CMatrix &m, const Tolerances &tol) {
  return hermitian_eig(m, tol).eigenvalues.front();
}

double min_eigenvalue(const CMatrix &m, const Tolerances &tol) {
  return hermitian_eig(m, tol).eigenvalues.back();
}

double spectral_norm(const CMatrix &m, const Tolerances &tol) {
  const EigResult e = hermitian_eig(m, tol);
  return std::max(std::abs(e.eigenvalues.front()), std::abs(e.eigenvalues.back()));
}

namespace {

CMatrix assemble_from_eig(const EigResult &e, bool positive) {
  const std::size_t n = e.eigenvectors.rows();
  CMatrix out(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const double lam = e.eigenvalues[c];
    if (positive ? lam <= 0.0 : lam >= 0.0)
      continue;
    const double w = positive ? lam : -lam;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vi = e.eigenvectors(i, c);
      if (vi == Complex(0.0, 0.0))
        continue;
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += w * vi * std::conj(e.eigenvectors(j, c));
    }
  }
  return out;
}

} // namespace

PositivePart positive_part(const CMatrix &m, const Tolerances &tol) {
  const EigResult e = hermitian_eig(m, tol);
  return PositivePart{assemble_from_eig(e, true), assemble_from_eig(e, false)};
}

CMatrix psd_projection(const CMatrix &m, const Tolerances &tol) {
  return positive_part(m.hermitized(), tol).plus;
}

SvdResult svd(const CMatrix &m) {
  if (m.rows() == 0 || m.cols() == 0)
    throw InvalidInput("svd: empty matrix");
  const bool tall = m.rows() >= m.cols();
  CMatrix b = tall ? m : m.adjoint(); // rows >= cols
  const std::size_t rows = b.rows(), cols = b.cols();
  CMatrix v = CMatrix::identity(cols);

  // Hestenes one-sided Jacobi: orthogonalize column pairs.
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double alpha = 0.0, beta = 0.0;
        Complex gamma(0.0, 0.0);
        for (std::size_t i = 0; i < rows; ++i) {
          alpha += std::norm(b(i, p));
          beta += std::norm(b(i, q));
          gamma += std::conj(b(i, p)) * b(i, q);
        }
        const double agamma = std::abs(gamma);
        if (agamma <= 1e-300 || agamma <= 1e-15 * std::sqrt(alpha * beta))
          continue;
        rotated = true;
        const Rotation r = jacobi_rotation(alpha, beta, gamma);
        const Complex cphase = std::conj(r.phase);
        for (std::size_t i = 0; i < rows; ++i) {
          const Complex bip = b(i, p), biq = b(i, q);
          b(i, p) = r.c * bip - r.s * cphase * biq;
          b(i, q) = r.s * bip + r.c * cphase * biq;
        }
        for (std::size_t i = 0; i < cols; ++i) {
          const Complex vip = v(i, p), viq = v(i, q);
          v(i, p) = r.c * vip - r.s * cphase * viq;
          v(i, q) = r.s * vip + r.c * cphase * viq;
        }
      }
    }
    if (!rotated)
      break;
  }

  std::vector<double> norms(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    double s = 0.0;
    for (std::size_t i = 0; i < rows; ++i)
      s += std::norm(b(i, c));
    norms[c] = std::sqrt(s);
  }
  std::vector<std::size_t> order(cols);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

  CMatrix u_sorted(rows, cols);
  CMatrix v_sorted(cols, cols);
  std::vector<double> sigma(cols);
  std::vector<std::size_t> nonzero_cols;
  for (std::size_t c = 0; c < cols; ++c) {
    const std::size_t src = order[c];
    sigma[c] = norms[src];
    for (std::size_t i = 0; i < cols; ++i)
      v_sorted(i, c) = v(i, src);
    if (sigma[c] > 1e-300) {
      for (std::size_t i = 0; i < rows; ++i)
        u_sorted(i, c) = b(i, src) / sigma[c];
      nonzero_cols.push_back(c);
    }
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (sigma[c] > 1e-300)
      continue;
    const std::vector<Complex> fill = complete_column(u_sorted, nonzero_cols);
    for (std::size_t i = 0; i < rows; ++i)
      u_sorted(i, c) = fill[i];
    nonzero_cols.push_back(c);
  }

  SvdResult out;
  if (tall) {
    out.u = std::move(u_sorted);
    out.w = std::move(v_sorted);
  } else {
    // b held m*; m* = u_sorted diag(sigma) v_sorted*  =>  m = v_sorted diag(sigma) u_sorted*
    out.u = std::move(v_sorted);
    out.w = std::move(u_sorted);
  }
  out.singular_values = std::move(sigma);
  return out;
}

CMatrix truncate_rank(const CMatrix &m, std::size_t k) {
  if (k == 0)
    return CMatrix::zero(m.rows(), m.cols());
  const std::size_t r = std::min(m.rows(), m.cols());
  if (k >= r)
    return m;
  const SvdResult s = svd(m);
  CMatrix out(m.rows(), m.cols());
  for (std::size_t c = 0; c < k; ++c) {
    const double sv = s.singular_values[c];
    if (sv <= 0.0)
      break;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Complex ui = sv * s.u(i, c);
      if (ui == Complex(0.0, 0.0))
        continue;
      for (std::size_t j = 0; j < m.cols(); ++j)
        out(i, j) += ui * std::conj(s.w(j, c));
    }
  }
  return out;
}

SchmidtDecomposition schmidt_decompose(const BipartiteVector &v, const Tolerances &tol) {
  SchmidtDecomposition out;
  if (v.dim_k == 0 || v.dim_h == 0 || v.amplitudes.size() != v.dim_k * v.dim_h)
    throw InvalidInput("schmidt_decompose: inconsistent dimensions");
  if (v.norm() == 0.0)
    return out; // rank 0, empty lists

  const SvdResult s = svd(v.coefficient_matrix());
  const std::size_t r = s.singular_values.size();
  out.coefficients = s.singular_values;
  out.left.resize(r);
  out.right.resize(r);
  for (std::size_t c = 0; c < r; ++c) {
    out.left[c].resize(v.dim_k);
    out.right[c].resize(v.dim_h);
    for (std::size_t i = 0; i < v.dim_k; ++i)
      out.left[c][i] = s.u(i, c);
    // Y = U diag(s) W*  =>  y = sum_c s_c u_c (x) conj(w_c)
    for (std::size_t j = 0; j < v.dim_h; ++j)
      out.right[c][j] = std::conj(s.w(j, c));
  }
  const double s1 = out.coefficients.empty() ? 0.0 : out.coefficients.front();
  out.rank = 0;
  for (double sv : out.coefficients)
    if (sv > tol.rank_tol * s1)
      ++out.rank;
  return out;
}

} // namespace posmap
