/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <doctest.h>

#include <cmath>

#include "posmap/cones.hpp"
#include "posmap/eig.hpp"
#include "posmap/gallery.hpp"

using namespace posmap;

TEST_CASE("complete positivity of canonical maps") {
  CHECK(is_completely_positive(gallery_trace(3)).kind == VerdictKind::CertifiedYes);
  Rng rng(3);
  const LinMap adv = gallery_adv(random_gaussian_matrix(3, 3, rng));
  CHECK(is_completely_positive(adv).kind == VerdictKind::CertifiedYes);

  const Verdict v = is_completely_positive(gallery_transpose(2));
  REQUIRE(v.kind == VerdictKind::CertifiedNo);
  CHECK(v.value == doctest::Approx(-1.0).epsilon(1e-12)); // F has eigenvalue -1
  REQUIRE(v.state_witness.has_value());
  // the witness state detects the violation: Tr(rho C) = lambda_min < 0
  Complex tr(0.0, 0.0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      tr += v.state_witness->rho(i, j) * gallery_transpose(2).choi(j, i);
  CHECK(tr.real() == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("complete positivity agrees with the split criterion") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const LinMap phi = (seed % 2 == 0) ? random_selfadjoint_map(3, 3, 900 + seed)
                                       : random_cp_map(3, 3, 900 + seed);
    const bool cp = is_completely_positive(phi).kind == VerdictKind::CertifiedYes;
    try {
      const CpSplit s = cp_split(phi);
      const bool split_cp = max_eigenvalue(s.phi_cp.choi) <= 1.0 + 1e-8;
      CHECK(cp == split_cp);
    } catch (const NegativeOfCpMap &) {
      // C_phi^+ = 0: CP only when the Choi matrix vanishes
      CHECK(cp == (spectral_norm(phi.choi) <= 1e-9));
    }
  }
}

TEST_CASE("positivity of canonical maps") {
  OptConfig cfg;
  CHECK(is_positive(gallery_choi3(), cfg).kind == VerdictKind::HeuristicYes);
  CHECK(is_positive(gallery_transpose(2), cfg).kind == VerdictKind::HeuristicYes);
  LinMap neg_id = gallery_identity(2);
  neg_id.choi *= Complex(-1.0, 0.0);
  const Verdict v = is_positive(neg_id, cfg);
  REQUIRE(v.kind == VerdictKind::CertifiedNo);
  REQUIRE(v.witness.has_value());
  CHECK(schmidt_decompose(v.witness->dense).rank == 1);
}

TEST_CASE("ppt_sup of the identity is 1") {
  const PptOptReport rep = ppt_sup(CMatrix::identity(4), 2, 2);
  CHECK(rep.value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.feasibility_residual <= 1e-8);
}

TEST_CASE("ppt_sup of 1 - F stays at 1") {
  // For PPT rho, Tr(rho F) = 2 Tr(rho^Gamma P_Omega) >= 0, so the sup is 1;
  // it is attained, e.g. at the product state e_01.
  const CMatrix a = gallery_trace(2).choi - gallery_transpose(2).choi;
  const PptOptReport rep = ppt_sup(a, 2, 2);
  CHECK(rep.value <= 1.0 + 1e-7);
  CHECK(rep.value >= 1.0 - 1e-6);
  CHECK(rep.rho.is_ppt);
}

TEST_CASE("ppt_sup certifies the Choi map as non-decomposable") {
  const CpSplit s = cp_split(gallery_choi3());
  const PptOptReport rep = ppt_sup(s.phi_cp.choi, 3, 3);
  CHECK(rep.value > 1.0 + 1e-7);
  CHECK(rep.feasibility_residual <= 1e-8);
  CHECK(rep.rho.is_ppt);
  CHECK(min_eigenvalue(rep.rho.rho) >= -1e-9);
}

TEST_CASE("ppt_sup validates input") {
  CHECK_THROWS_AS(ppt_sup(CMatrix::identity(5), 2, 2), InvalidInput);
  CMatrix bad(4, 4);
  bad(0, 1) = Complex(1.0, 0.0);
  CHECK_THROWS_AS(ppt_sup(bad, 2, 2), InvalidInput);
}

TEST_CASE("decomposability verdicts on canonical maps") {
  CHECK(is_decomposable(gallery_transpose(2)).kind == VerdictKind::HeuristicYes);
  CHECK(is_decomposable(gallery_trace(3)).kind == VerdictKind::HeuristicYes);
  const Verdict v = is_decomposable(gallery_choi3());
  REQUIRE(v.kind == VerdictKind::CertifiedNo);
  REQUIRE(v.state_witness.has_value());
  CHECK(v.state_witness->is_ppt);
  CHECK(v.value > 1.0 + 1e-7);
  // re-validate the witness against the split by hand
  const CpSplit s = cp_split(gallery_choi3());
  Complex tr(0.0, 0.0);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      tr += v.state_witness->rho(i, j) * s.phi_cp.choi(j, i);
  CHECK(tr.real() == doctest::Approx(v.value).epsilon(1e-10));
}

TEST_CASE("cone norms of the trace map are all 1") {
  const LinMap tr = gallery_trace(3);
  CHECK(cone_norm(tr, ConeId::positive()) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(cone_norm(tr, ConeId::k_positive(2)) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(cone_norm(tr, ConeId::completely_positive()) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(cone_norm(tr, ConeId::decomposable()) == doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("cone norms of the identity map") {
  for (std::size_t n : {2, 3}) {
    const LinMap id = gallery_identity(n);
    CHECK(cone_norm(id, ConeId::completely_positive()) ==
          doctest::Approx(static_cast<double>(n)).epsilon(1e-10));
    CHECK(cone_norm(id, ConeId::positive()) == doctest::Approx(1.0).epsilon(1e-7));
  }
}

TEST_CASE("cone norm monotonicity under cone inclusion") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const LinMap phi = random_selfadjoint_map(3, 3, 1200 + seed);
    const double np = cone_norm(phi, ConeId::positive());
    const double nk = cone_norm(phi, ConeId::k_positive(2));
    const double ncp = cone_norm(phi, ConeId::completely_positive());
    CHECK(np <= nk + 1e-7);
    CHECK(nk <= ncp + 1e-7);
  }
}

TEST_CASE("verdict hierarchy is consistent on the gallery and random maps") {
  OptConfig cfg;
  PptConfig ppt_cfg;
  ppt_cfg.max_iter = 600; // a smaller budget only weakens verdicts toward HeuristicYes
  std::vector<LinMap> maps{gallery_identity(3), gallery_transpose(3), gallery_trace(3),
                           gallery_choi3(), gallery_reduction(0.3, 3), gallery_reduction(1.2, 3)};
  for (std::uint64_t seed = 0; seed < 8; ++seed)
    maps.push_back(random_selfadjoint_map(3, 3, 1500 + seed));
  for (const LinMap &phi : maps) {
    const bool cp = is_completely_positive(phi).kind == VerdictKind::CertifiedYes;
    std::vector<bool> kpos;
    for (std::size_t k = 1; k <= 3; ++k)
      kpos.push_back(is_k_positive(phi, k, cfg).kind != VerdictKind::CertifiedNo);
    const bool dec = is_decomposable(phi, ppt_cfg).kind != VerdictKind::CertifiedNo;
    if (cp) {
      for (bool kp : kpos)
        CHECK(kp);
      CHECK(dec);
    }
    // k-positive (not refuted) must not be refuted at smaller k
    for (std::size_t k = 1; k + 1 < 3; ++k)
      if (kpos[k + 1])
        CHECK(kpos[k]);
  }
}
