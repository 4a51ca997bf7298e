/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef POSMAP_CONES_HPP
#define POSMAP_CONES_HPP

#include "posmap/schmidt.hpp"

namespace posmap {

// The four concrete cones of maps handled by the deciders. The partial order
// CompletelyPositive => KPositive(k) => Positive and
// CompletelyPositive => Decomposable is respected by the verdicts.
struct ConeId {
  enum class Tag { Positive, KPositive, CompletelyPositive, Decomposable };
  Tag tag = Tag::Positive;
  std::size_t k = 1; // only meaningful for KPositive

  static ConeId positive() { return {Tag::Positive, 1}; }
  static ConeId k_positive(std::size_t k) { return {Tag::KPositive, k}; }
  static ConeId completely_positive() { return {Tag::CompletelyPositive, 1}; }
  static ConeId decomposable() { return {Tag::Decomposable, 1}; }
};

// Result of maximizing Tr(rho C) over PPT states. The returned rho is always
// feasible (projected before reporting), so `value` is a rigorous lower bound
// on the supremum.
struct PptOptReport {
  double value = 0.0;
  StateDensity rho;
  double feasibility_residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Exact: phi is completely positive iff C_phi >= 0.
Verdict is_completely_positive(const LinMap &phi, const Tolerances &tol = {});

// Positivity is the k = 1 instance of the Schmidt-class test (the sup over
// separable states is attained at pure product states).
Verdict is_positive(const LinMap &phi, const OptConfig &cfg = {}, const Tolerances &tol = {});

// Projected gradient ascent with Dykstra projections onto PSD ∩ PPT ∩ trace-1.
PptOptReport ppt_sup(const CMatrix &c, std::size_t dim_k, std::size_t dim_h,
                     const PptConfig &cfg = {}, const Tolerances &tol = {});

// Decomposability test over PPT states. CertifiedYes is never issued: the
// optimizer provides lower bounds only, same honest asymmetry as the
// Schmidt-class tests.
Verdict is_decomposable(const LinMap &phi, const PptConfig &cfg = {}, const Tolerances &tol = {});

// Cone norm sup |Tr(C_phi C_psi)| over trace-normalized psi in the dual cone:
// Schmidt-class vector states for Positive/KPositive(k), all states
// (= max |eigenvalue|) for CompletelyPositive, PPT states for Decomposable.
double cone_norm(const LinMap &phi, const ConeId &cone, const OptConfig &opt = {},
                 const PptConfig &ppt = {}, const Tolerances &tol = {});

} // namespace posmap

#endif
