/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "posmap/gallery.hpp"
#include "posmap/json_io.hpp"
#include "posmap/report.hpp"
#include "posmap/states.hpp"

using namespace posmap;

TEST_CASE("Choi JSON round trip is lossless") {
  const LinMap phi = random_selfadjoint_map(2, 3, 31);
  const std::string text = choi_to_json(phi);
  const LinMap back = choi_from_json(text);
  CHECK(back.dim_k == phi.dim_k);
  CHECK(back.dim_h == phi.dim_h);
  CHECK(back.choi == phi.choi); // bit-exact via 17 significant digits
}

TEST_CASE("malformed Choi JSON is rejected") {
  CHECK_THROWS_AS(choi_from_json("not json at all"), InvalidInput);
  CHECK_THROWS_AS(choi_from_json("{\"dim_k\":2}"), InvalidInput);
  CHECK_THROWS_AS(choi_from_json("{\"dim_k\":2,\"dim_h\":2,\"choi\":[[0,0]]}"), InvalidInput);
  CHECK_THROWS_AS(choi_from_json("{\"dim_k\":0,\"dim_h\":2,\"choi\":[]}"), InvalidInput);
  CHECK_THROWS_AS(choi_from_json("{\"dim_k\":2,\"dim_h\":2,\"choi\":[1,2,3]}"), InvalidInput);
}

TEST_CASE("matrix JSON round trip") {
  Rng rng(8);
  const CMatrix m = random_gaussian_matrix(2, 3, rng);
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
}

TEST_CASE("schmidt vector JSON round trip, factored and dense") {
  Rng rng(9);
  const SchmidtVector v = SchmidtVector::make(
      2, 3, 2, {random_unit_vector(2, rng), random_unit_vector(2, rng)},
      {random_unit_vector(3, rng), random_unit_vector(3, rng)});
  const SchmidtVector back = schmidt_vector_from_json(schmidt_vector_to_json(v));
  CHECK(back.k == v.k);
  double err = 0.0;
  for (std::size_t i = 0; i < 6; ++i)
    err += std::norm(back.dense.amplitudes[i] - v.dense.amplitudes[i]);
  CHECK(std::sqrt(err) <= 1e-12);

  // dense form
  std::string dense_json = "{\"dim_k\":2,\"dim_h\":2,\"amplitudes\":[[0.7071067811865475,0],[0,0],"
                           "[0,0],[0.7071067811865475,0]]}";
  const SchmidtVector bell = schmidt_vector_from_json(dense_json);
  CHECK(bell.left.size() == 2);
  CHECK(std::abs(bell.norm() - 1.0) <= 1e-12);
}

TEST_CASE("state JSON round trip") {
  const StateDensity s = random_separable_state(2, 2, 2, 77);
  const StateDensity back = state_from_json(state_to_json(s));
  CHECK(back.is_ppt == s.is_ppt);
  CHECK((back.rho - s.rho).frobenius_norm() <= 1e-15);
}

TEST_CASE("fnv1a is stable") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("analysis report JSON parses and witnesses re-validate") {
  const LinMap phi = gallery_choi3();
  OptConfig opt;
  opt.seed = 5;
  const AnalysisReport rep = analyze(phi, "gallery:choi3", "", opt);
  const std::string text = report_to_json(rep);
  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["schema"] == 1);
  CHECK(j["self_adjoint"] == true);
  CHECK(j["split"]["exists"] == true);
  CHECK(j["verdicts"]["completely_positive"]["kind"] == "certified_no");
  CHECK(j["verdicts"]["positive"]["kind"] == "heuristic_yes");
  CHECK(j["verdicts"]["decomposable"]["kind"] == "certified_no");
  CHECK(j["timings"].is_null());

  const CpSplit s = cp_split(phi);
  // Every certified_no k-positivity witness reproduces its violation on reload.
  for (const auto &entry : j["verdicts"]["k_positive"]) {
    if (entry["verdict"]["kind"] != "certified_no")
      continue;
    const double recorded = entry["verdict"]["value"].get<double>();
    const SchmidtVector w = schmidt_vector_from_json(entry["verdict"]["witness"].dump());
    const double replay =
        inner(w.dense.amplitudes, s.phi_cp.choi * w.dense.amplitudes).real();
    CHECK(std::abs(replay - recorded) <= 1e-9);
    CHECK(replay > 1.0 + 1e-7);
  }
  // The decomposability witness state re-validates as well.
  const StateDensity rho = state_from_json(j["verdicts"]["decomposable"]["state_witness"].dump());
  Complex tr(0.0, 0.0);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t jj = 0; jj < 9; ++jj)
      tr += rho.rho(i, jj) * s.phi_cp.choi(jj, i);
  CHECK(std::abs(tr.real() - j["verdicts"]["decomposable"]["value"].get<double>()) <= 1e-9);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  OptConfig opt;
  opt.seed = 123;
  const LinMap phi = gallery_reduction(0.55, 3);
  const std::string a = report_to_json(analyze(phi, "gallery:reduction", "", opt));
  const std::string b = report_to_json(analyze(phi, "gallery:reduction", "", opt));
  CHECK(a == b);
}

TEST_CASE("non-self-adjoint maps produce a report without verdicts") {
  LinMap bad;
  bad.dim_k = 2;
  bad.dim_h = 2;
  bad.choi = CMatrix(4, 4);
  bad.choi(0, 1) = Complex(1.0, 0.0);
  const AnalysisReport rep = analyze(bad, "file:bad.json", "deadbeef");
  CHECK_FALSE(rep.self_adjoint);
  CHECK_FALSE(rep.completely_positive.has_value());
  CHECK(rep.k_positive.empty());
  const nlohmann::json j = nlohmann::json::parse(report_to_json(rep));
  CHECK(j["self_adjoint"] == false);
  CHECK(j["verdicts"]["completely_positive"].is_null());
}
