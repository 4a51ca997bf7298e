/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef POSMAP_SCHMIDT_HPP
#define POSMAP_SCHMIDT_HPP

#include <optional>
#include <string>
#include <vector>

#include "posmap/cp_split.hpp"
#include "posmap/linmap.hpp"
#include "posmap/states.hpp"

namespace posmap {

// Vector y = sum_i left[i] (x) right[i] in K (x) H, Schmidt rank <= k.
// `dense` caches the expanded amplitudes.
struct SchmidtVector {
  std::size_t dim_k = 0;
  std::size_t dim_h = 0;
  std::size_t k = 0; // rank bound (the class S(k))
  std::vector<std::vector<Complex>> left;
  std::vector<std::vector<Complex>> right;
  BipartiteVector dense;

  double norm() const { return dense.norm(); }

  // Builds the dense cache from the factors and validates shapes.
  static SchmidtVector make(std::size_t dim_k, std::size_t dim_h, std::size_t k,
                            std::vector<std::vector<Complex>> left,
                            std::vector<std::vector<Complex>> right);
  // Factors a dense vector through its Schmidt decomposition, keeping at most
  // k_bound terms (the tail of the spectrum must be numerically zero).
  static SchmidtVector from_dense(const BipartiteVector &v, std::size_t k_bound,
                                  const Tolerances &tol = {});
};

// Result of maximizing <y, A y> over unit vectors in S(k).
// `value` is a achieved lower bound on the true supremum; `upper_bound` is
// lambda_max(A). They coincide when k >= min(dimK, dimH).
struct OptReport {
  double value = 0.0;
  SchmidtVector argmax;
  double upper_bound = 0.0;
  int restarts = 0;
  long long iterations = 0; // total across restarts
  bool converged = false;   // the winning restart converged
  std::uint64_t seed = 0;
  std::vector<double> best_trace; // per-iteration objective of the winning restart
};

enum class VerdictKind { CertifiedYes, CertifiedNo, HeuristicYes };
const char *to_string(VerdictKind kind);

// Three-valued decision for cone-membership queries.
//
// CertifiedNo always carries a witness whose independently re-evaluated
// objective violates the tested bound by at least cert_margin.
//
// HeuristicYes is NOT a proof: the optimizers are lower-bound methods, so a
// "yes" below full Schmidt rank only says that no violation was found.
struct Verdict {
  VerdictKind kind = VerdictKind::HeuristicYes;
  std::optional<SchmidtVector> witness;      // violating Schmidt-class vector
  std::optional<StateDensity> state_witness; // violating state (PPT tests)
  double value = 0.0;
  std::string detail;
};

// Maximize <y, A y> over unit y in S(k) by a projected power method on the
// coefficient matrix: Y <- normalize(rank_k_truncate(reshape((A + sigma) y)))
// with sigma = max(0, -lambda_min(A)) + 0.1 ||A||, which makes the objective
// nondecreasing per iteration. Restarts use seeds derived deterministically
// from cfg.seed; merging is max-by-value with lowest-restart tie-break, so the
// result does not depend on scheduling.
OptReport sup_schmidt(const CMatrix &a, std::size_t dim_k, std::size_t dim_h, std::size_t k,
                      const OptConfig &cfg = {}, const Tolerances &tol = {});

// k-positivity test: phi is k-positive iff sup over unit y in S(k) of
// <y, C_{phi_cp} y> is <= 1. CertifiedYes only when C_phi >= 0 (then phi is
// completely positive, hence k-positive for every k); CertifiedNo carries a
// re-validated witness; anything else is HeuristicYes.
Verdict is_k_positive(const LinMap &phi, std::size_t k, const OptConfig &cfg = {},
                      const Tolerances &tol = {});

// Preconditions for the witness extension at y: <y, C_phi y> = 0 within
// ortho_tol, and C_phi y has a component outside X (x) Y larger than
// residual_tol, where X = span(left), Y = span(right).
struct WitnessCheck {
  bool ok = false;
  std::vector<std::string> reasons;
  double pairing_abs = 0.0;
  double residual_norm = 0.0;
};
WitnessCheck check_witness_preconditions(const LinMap &phi, const SchmidtVector &y,
                                         const Tolerances &tol = {});

// Given Hermitian A and unit y in S(k) with <y, A y> = 1 and A y not in
// X (x) Y, produce a unit z = s x + sqrt(1-s^2) y in S(k+1) with
// <z, A z> > 1 + cert_margin, where x is a unit product vector orthogonal to
// X (x) Y. Throws WitnessInapplicable when the preconditions fail or the
// margin cannot be met.
SchmidtVector extend_witness(const CMatrix &a, const SchmidtVector &y, const Tolerances &tol = {});

// Definition-level cross-check: sample random PSD operators a on K (x) C^k
// and look for negative eigenvalues of (phi (x) id_k)(a). Violations refute
// k-positivity; absence of violations certifies nothing.
struct OracleReport {
  int violations = 0;
  double min_eigenvalue_seen = 0.0;
  int samples = 0;
};
OracleReport kpos_bruteforce_oracle(const LinMap &phi, std::size_t k, int samples,
                                    std::uint64_t seed, const Tolerances &tol = {});

} // namespace posmap

#endif
