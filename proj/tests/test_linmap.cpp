/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <doctest.h>

#include <cmath>

#include "posmap/eig.hpp"
#include "posmap/gallery.hpp"
#include "posmap/linmap.hpp"
#include "posmap/schmidt.hpp"
#include "posmap/states.hpp"

using namespace posmap;

namespace {

CMatrix diag(std::initializer_list<double> values) {
  CMatrix m(values.size(), values.size());
  std::size_t i = 0;
  for (double v : values)
    m(i, i) = Complex(v, 0.0), ++i;
  return m;
}

} // namespace

TEST_CASE("the trace map has the identity as Choi matrix") {
  std::vector<CMatrix> images;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CMatrix img = CMatrix::identity(3);
      img *= Complex(i == j ? 1.0 : 0.0, 0.0);
      images.push_back(img);
    }
  const LinMap tr = choi_of_action(3, 3, images);
  CHECK(tr.choi == CMatrix::identity(9));
  CHECK(tr.choi == gallery_trace(3).choi);
}

TEST_CASE("identity map Choi spectrum is (n, 0, ..., 0)") {
  std::vector<CMatrix> images;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      images.push_back(matrix_unit(2, i, j));
  const LinMap id = choi_of_action(2, 2, images);
  CHECK(id.choi == gallery_identity(2).choi);
  const EigResult e = hermitian_eig(id.choi);
  CHECK(e.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-13));
  for (std::size_t i = 1; i < 4; ++i)
    CHECK(std::abs(e.eigenvalues[i]) <= 1e-13);
}

TEST_CASE("zero map has zero Choi matrix") {
  std::vector<CMatrix> images(4, CMatrix(2, 2));
  CHECK(choi_of_action(2, 2, images).choi.frobenius_norm() == 0.0);
}

TEST_CASE("choi_of_action validates input") {
  CHECK_THROWS_AS(choi_of_action(2, 2, std::vector<CMatrix>(3, CMatrix(2, 2))), InvalidInput);
  CHECK_THROWS_AS(choi_of_action(2, 2, std::vector<CMatrix>(4, CMatrix(3, 3))), InvalidInput);
}

TEST_CASE("trace map applied to diag(1,2,3)") {
  const LinMap tr = gallery_trace(3);
  const CMatrix out = apply_map(tr, diag({1.0, 2.0, 3.0}));
  CHECK((out - (CMatrix::identity(3) * Complex(6.0, 0.0))).frobenius_norm() <= 1e-13);
}

TEST_CASE("Choi map applied to matrix units") {
  const LinMap phi = gallery_choi3();
  const CMatrix img11 = apply_map(phi, matrix_unit(3, 0, 0));
  CHECK((img11 - diag({1.0, 1.0, 0.0})).frobenius_norm() <= 1e-14);
  const CMatrix img22 = apply_map(phi, matrix_unit(3, 1, 1));
  CHECK((img22 - diag({0.0, 1.0, 1.0})).frobenius_norm() <= 1e-14);
}

TEST_CASE("identity map application is the identity") {
  Rng rng(21);
  const LinMap id = gallery_identity(3);
  const CMatrix a = random_hermitian(3, rng);
  CHECK((apply_map(id, a) - a).frobenius_norm() <= 1e-12);
}

TEST_CASE("apply rejects mismatched dimensions") {
  CHECK_THROWS_AS(apply_map(gallery_identity(3), CMatrix::identity(2)), InvalidInput);
}

TEST_CASE("functional pair on basic examples") {
  const LinMap id2 = gallery_identity(2);
  CHECK(functional_pair(id2, matrix_unit(2, 0, 0), matrix_unit(2, 0, 0)).real() ==
        doctest::Approx(1.0));
  const LinMap tr = gallery_trace(3);
  CHECK(functional_pair(tr, CMatrix::identity(3), CMatrix::identity(3)).real() ==
        doctest::Approx(9.0));
}

TEST_CASE("functional pair for the transpose map by 2x2 enumeration") {
  // t(e01) = e10 and b^t for b = e01 is e10, so Tr(e10 e10) = 0;
  // with b = e10 instead, Tr(e10 e01) = 1.
  const LinMap t = gallery_transpose(2);
  CHECK(std::abs(functional_pair(t, matrix_unit(2, 0, 1), matrix_unit(2, 0, 1))) <= 1e-14);
  CHECK(functional_pair(t, matrix_unit(2, 0, 1), matrix_unit(2, 1, 0)).real() ==
        doctest::Approx(1.0));
}

TEST_CASE("functional pair agrees with Tr(C^t (a (x) b)) on random inputs") {
  Rng rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const LinMap phi = random_selfadjoint_map(2, 3, 1000 + trial);
    const CMatrix a = random_gaussian_matrix(2, 2, rng);
    const CMatrix b = random_gaussian_matrix(3, 3, rng);
    const Complex lhs = functional_pair(phi, a, b);
    const CMatrix ct = phi.choi.transpose();
    const CMatrix ab = kron(a, b);
    const Complex rhs = (ct * ab).trace();
    CHECK(std::abs(lhs - rhs) <= 1e-9);
  }
}

TEST_CASE("pairing values and symmetry") {
  const LinMap tr2 = gallery_trace(2);
  CHECK(pairing(tr2, tr2) == doctest::Approx(4.0));
  const LinMap id2 = gallery_identity(2);
  CHECK(pairing(id2, id2) == doctest::Approx(4.0)); // Tr((2 P)^2) = 4
  CHECK(pairing(id2, tr2) == doctest::Approx(pairing(tr2, id2)));
}

TEST_CASE("pairing rejects non-self-adjoint maps") {
  LinMap bad;
  bad.dim_k = 2;
  bad.dim_h = 2;
  bad.choi = CMatrix(4, 4);
  bad.choi(0, 1) = Complex(1.0, 0.0);
  CHECK_THROWS_AS(pairing(bad, gallery_trace(2)), NotSelfAdjoint);
}

TEST_CASE("pairing of a positive gallery map with rank-1 superpositive maps") {
  const LinMap phi = gallery_choi3();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const LinMap psi = random_superpositive(3, 3, 1, 3, 500 + seed);
    CHECK(pairing(phi, psi) >= -1e-9);
  }
}

TEST_CASE("t o t is the identity map, Choi matrices equal") {
  const LinMap t = gallery_transpose(3);
  const LinMap tt = compose(t, t);
  CHECK(tt.choi == gallery_identity(3).choi);
}

TEST_CASE("C_{t o iota} is the swap operator") {
  const LinMap tid = transpose_compose(gallery_identity(2));
  CHECK(tid.choi == gallery_transpose(2).choi);
}

TEST_CASE("transpose_compose equals the partial transpose identity bit-exactly") {
  const LinMap phi = gallery_choi3();
  const LinMap t_phi = transpose_compose(phi);
  CHECK(t_phi.choi == partial_transpose(phi.choi, 3, 3, Factor::second));
  // and agrees with composing with the transpose gallery map
  const LinMap composed = compose(gallery_transpose(3), phi);
  CHECK((t_phi.choi - composed.choi).frobenius_norm() <= 1e-13);
}

TEST_CASE("tensor_id of the trace map acts as a partial trace on the basis") {
  const LinMap big = tensor_id(gallery_trace(2), 2);
  REQUIRE(big.dim_k == 4);
  REQUIRE(big.dim_h == 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t u = 0; u < 2; ++u)
        for (std::size_t v = 0; v < 2; ++v) {
          const CMatrix in = kron(matrix_unit(2, i, j), matrix_unit(2, u, v));
          const CMatrix expected = kron(CMatrix::identity(2) * Complex(i == j ? 1.0 : 0.0, 0.0),
                                        matrix_unit(2, u, v));
          CHECK((apply_map(big, in) - expected).frobenius_norm() <= 1e-13);
        }
}

TEST_CASE("tensor_id of the identity is the identity") {
  const LinMap big = tensor_id(gallery_identity(2), 3);
  CHECK((big.choi - gallery_identity(6).choi).frobenius_norm() <= 1e-13);
}

TEST_CASE("round trip choi_of_action(apply(phi, .)) = phi on random maps") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const LinMap phi = random_selfadjoint_map(3, 2, 2000 + seed);
    std::vector<CMatrix> images;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        images.push_back(apply_map(phi, matrix_unit(3, i, j)));
    const LinMap back = choi_of_action(3, 2, images);
    CHECK((back.choi - phi.choi).frobenius_norm() <= 1e-10);
  }
}

TEST_CASE("gallery: choi3 matches its displayed formula") {
  const LinMap phi = gallery_choi3();
  CMatrix x(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      x(i, j) = Complex(1.0 + i + 3.0 * j, 0.5 * (i == j ? 0 : 1));
  const CMatrix out = apply_map(phi, x);
  CHECK(out(0, 0) == x(0, 0) + x(2, 2));
  CHECK(out(1, 1) == x(0, 0) + x(1, 1));
  CHECK(out(2, 2) == x(1, 1) + x(2, 2));
  CHECK(out(0, 1) == -x(0, 1));
  CHECK(out(0, 2) == -x(0, 2));
  CHECK(out(1, 0) == -x(1, 0));
  CHECK(out(1, 2) == -x(1, 2));
  CHECK(out(2, 0) == -x(2, 0));
  CHECK(out(2, 1) == -x(2, 1));
}

TEST_CASE("gallery: reduction(1, n) equals Tr - iota") {
  const LinMap red = gallery_reduction(1.0, 3);
  const CMatrix expected = gallery_trace(3).choi - gallery_identity(3).choi;
  CHECK(red.choi == expected);
}

TEST_CASE("gallery: adv with V = 1 is the identity map") {
  const LinMap phi = gallery_adv(CMatrix::identity(3));
  CHECK((phi.choi - gallery_identity(3).choi).frobenius_norm() <= 1e-13);
}

TEST_CASE("gallery: unknown name raises") {
  CHECK_THROWS_AS(gallery("frobnicate"), InvalidInput);
  CHECK_THROWS_AS(gallery("adv"), InvalidInput); // V missing
}

TEST_CASE("self-adjointness is detectable on basis elements both ways") {
  const LinMap phi = gallery_choi3();
  CHECK(phi.is_self_adjoint());
  // phi(a*) = phi(a)* for all matrix units iff the Choi matrix is Hermitian
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const CMatrix img = apply_map(phi, matrix_unit(3, i, j));
      const CMatrix img_adj = apply_map(phi, matrix_unit(3, j, i)).adjoint();
      CHECK((img - img_adj).frobenius_norm() <= 1e-13);
    }
}

TEST_CASE("maps certified k-positive are certified (k-1)-positive") {
  // CertifiedYes arises exactly on the CP path, so it must be k-uniform.
  const LinMap cp = random_cp_map(3, 3, 321);
  OptConfig cfg;
  for (std::size_t k = 3; k >= 2; --k) {
    const Verdict vk = is_k_positive(cp, k, cfg);
    const Verdict vk1 = is_k_positive(cp, k - 1, cfg);
    REQUIRE(vk.kind == VerdictKind::CertifiedYes);
    REQUIRE(vk1.kind == VerdictKind::CertifiedYes);
  }
}
