/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "posmap/cones.hpp"
#include "posmap/eig.hpp"
#include "posmap/gallery.hpp"
#include "posmap/json_io.hpp"
#include "posmap/report.hpp"

namespace py = pybind11;
using namespace posmap;

namespace {

CMatrix matrix_from_rows(const std::vector<std::vector<Complex>> &rows) {
  if (rows.empty())
    throw InvalidInput("matrix: need at least one row");
  CMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw InvalidInput("matrix: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<Complex>> matrix_to_rows(const CMatrix &m) {
  std::vector<std::vector<Complex>> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows[i].resize(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j)
      rows[i][j] = m(i, j);
  }
  return rows;
}

GalleryParams params_of(std::size_t dim, double param, const std::optional<CMatrix> &v) {
  GalleryParams p;
  p.dim = dim;
  p.param = param;
  if (v.has_value())
    p.v = &*v;
  return p;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Positivity analysis of linear maps between matrix algebras via Choi matrices";
  m.attr("__version__") = kToolVersion;

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<NotSelfAdjoint>(m, "NotSelfAdjoint", PyExc_ValueError);
  py::register_exception<NegativeOfCpMap>(m, "NegativeOfCpMap", PyExc_ArithmeticError);
  py::register_exception<WitnessInapplicable>(m, "WitnessInapplicable", PyExc_ArithmeticError);

  py::class_<CMatrix>(m, "CMatrix")
      .def(py::init(&matrix_from_rows), py::arg("rows"))
      .def_property_readonly("rows", &CMatrix::rows)
      .def_property_readonly("cols", &CMatrix::cols)
      .def("to_rows", &matrix_to_rows)
      .def("__getitem__",
           [](const CMatrix &mat, std::pair<std::size_t, std::size_t> idx) {
             if (idx.first >= mat.rows() || idx.second >= mat.cols())
               throw py::index_error();
             return mat(idx.first, idx.second);
           })
      .def("__repr__", [](const CMatrix &mat) {
        return "CMatrix(" + std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()) + ")";
      });

  py::class_<LinMap>(m, "LinMap")
      .def_readonly("dim_k", &LinMap::dim_k)
      .def_readonly("dim_h", &LinMap::dim_h)
      .def_readonly("choi", &LinMap::choi)
      .def("is_self_adjoint", [](const LinMap &phi) { return phi.is_self_adjoint(); })
      .def("to_json", &choi_to_json)
      .def("__repr__", [](const LinMap &phi) {
        return "LinMap(B(C^" + std::to_string(phi.dim_k) + ") -> B(C^" +
               std::to_string(phi.dim_h) + "))";
      });

  py::class_<SchmidtVector>(m, "SchmidtVector")
      .def_readonly("dim_k", &SchmidtVector::dim_k)
      .def_readonly("dim_h", &SchmidtVector::dim_h)
      .def_readonly("k", &SchmidtVector::k)
      .def_readonly("left", &SchmidtVector::left)
      .def_readonly("right", &SchmidtVector::right)
      .def_property_readonly("amplitudes",
                             [](const SchmidtVector &v) { return v.dense.amplitudes; })
      .def("norm", &SchmidtVector::norm)
      .def("to_json", &schmidt_vector_to_json)
      .def_static(
          "make",
          [](std::size_t dim_k, std::size_t dim_h, std::size_t k,
             std::vector<std::vector<Complex>> left, std::vector<std::vector<Complex>> right) {
            return SchmidtVector::make(dim_k, dim_h, k, std::move(left), std::move(right));
          },
          py::arg("dim_k"), py::arg("dim_h"), py::arg("k"), py::arg("left"), py::arg("right"));

  py::class_<StateDensity>(m, "StateDensity")
      .def_readonly("dim_k", &StateDensity::dim_k)
      .def_readonly("dim_h", &StateDensity::dim_h)
      .def_readonly("rho", &StateDensity::rho)
      .def_readonly("is_ppt", &StateDensity::is_ppt)
      .def("to_json", &state_to_json);

  py::class_<CpSplit>(m, "CpSplit")
      .def_readonly("c", &CpSplit::c)
      .def_readonly("phi_cp", &CpSplit::phi_cp)
      .def_readonly("source", &CpSplit::source);

  py::class_<OptConfig>(m, "OptConfig")
      .def(py::init<>())
      .def_readwrite("restarts", &OptConfig::restarts)
      .def_readwrite("max_iter", &OptConfig::max_iter)
      .def_readwrite("tol", &OptConfig::tol)
      .def_readwrite("seed", &OptConfig::seed);

  py::class_<OptReport>(m, "OptReport")
      .def_readonly("value", &OptReport::value)
      .def_readonly("argmax", &OptReport::argmax)
      .def_readonly("upper_bound", &OptReport::upper_bound)
      .def_readonly("restarts", &OptReport::restarts)
      .def_readonly("iterations", &OptReport::iterations)
      .def_readonly("converged", &OptReport::converged)
      .def_readonly("seed", &OptReport::seed);

  py::class_<Verdict>(m, "Verdict")
      .def_property_readonly("kind", [](const Verdict &v) { return std::string(to_string(v.kind)); })
      .def_readonly("value", &Verdict::value)
      .def_readonly("detail", &Verdict::detail)
      .def_readonly("witness", &Verdict::witness)
      .def_readonly("state_witness", &Verdict::state_witness)
      .def("__repr__",
           [](const Verdict &v) { return "Verdict(" + std::string(to_string(v.kind)) + ")"; });

  py::class_<PptOptReport>(m, "PptOptReport")
      .def_readonly("value", &PptOptReport::value)
      .def_readonly("rho", &PptOptReport::rho)
      .def_readonly("feasibility_residual", &PptOptReport::feasibility_residual)
      .def_readonly("iterations", &PptOptReport::iterations)
      .def_readonly("converged", &PptOptReport::converged);

  py::class_<WitnessCheck>(m, "WitnessCheck")
      .def_readonly("ok", &WitnessCheck::ok)
      .def_readonly("reasons", &WitnessCheck::reasons)
      .def_readonly("pairing_abs", &WitnessCheck::pairing_abs)
      .def_readonly("residual_norm", &WitnessCheck::residual_norm);

  py::class_<OracleReport>(m, "OracleReport")
      .def_readonly("violations", &OracleReport::violations)
      .def_readonly("min_eigenvalue_seen", &OracleReport::min_eigenvalue_seen)
      .def_readonly("samples", &OracleReport::samples);

  m.def(
      "gallery",
      [](const std::string &name, std::size_t dim, double param, std::optional<CMatrix> v) {
        return gallery(name, params_of(dim, param, v));
      },
      py::arg("name"), py::arg("dim") = 3, py::arg("param") = 1.0,
      py::arg("v") = std::nullopt, "Build a named gallery map");
  m.def("gallery_names", [] {
    std::vector<std::string> names;
    for (const auto &e : gallery_entries())
      names.push_back(e.name);
    return names;
  });

  m.def("choi_from_json", &choi_from_json, py::arg("text"));
  m.def(
      "map_from_choi",
      [](std::size_t dim_k, std::size_t dim_h, const CMatrix &choi) {
        LinMap phi;
        phi.dim_k = dim_k;
        phi.dim_h = dim_h;
        phi.choi = choi;
        if (choi.rows() != choi.cols() || choi.rows() != dim_k * dim_h)
          throw InvalidInput("map_from_choi: Choi dimension must equal dimK*dimH");
        return phi;
      },
      py::arg("dim_k"), py::arg("dim_h"), py::arg("choi"));
  m.def("apply_map", &apply_map, py::arg("phi"), py::arg("a"));
  m.def("functional_pair", &functional_pair, py::arg("phi"), py::arg("a"), py::arg("b"));
  m.def("pairing", [](const LinMap &a, const LinMap &b) { return pairing(a, b); });
  m.def("compose", &compose);
  m.def("transpose_compose", &transpose_compose);
  m.def("tensor_id", &tensor_id, py::arg("phi"), py::arg("k"));
  m.def("kron", &kron);

  m.def("cp_split", [](const LinMap &phi) { return cp_split(phi); }, py::arg("phi"));
  m.def("verify_split", &verify_split, py::arg("split"));

  m.def(
      "sup_schmidt",
      [](const CMatrix &a, std::size_t dim_k, std::size_t dim_h, std::size_t k,
         const OptConfig &cfg) { return sup_schmidt(a, dim_k, dim_h, k, cfg); },
      py::arg("a"), py::arg("dim_k"), py::arg("dim_h"), py::arg("k"),
      py::arg("config") = OptConfig{});
  m.def(
      "is_k_positive",
      [](const LinMap &phi, std::size_t k, const OptConfig &cfg) {
        return is_k_positive(phi, k, cfg);
      },
      py::arg("phi"), py::arg("k"), py::arg("config") = OptConfig{});
  m.def(
      "is_positive",
      [](const LinMap &phi, const OptConfig &cfg) { return is_positive(phi, cfg); },
      py::arg("phi"), py::arg("config") = OptConfig{});
  m.def("is_completely_positive",
        [](const LinMap &phi) { return is_completely_positive(phi); }, py::arg("phi"));
  m.def(
      "is_decomposable", [](const LinMap &phi) { return is_decomposable(phi); }, py::arg("phi"));
  m.def(
      "ppt_sup",
      [](const CMatrix &c, std::size_t dim_k, std::size_t dim_h) {
        return ppt_sup(c, dim_k, dim_h);
      },
      py::arg("c"), py::arg("dim_k"), py::arg("dim_h"));
  m.def(
      "cone_norm",
      [](const LinMap &phi, const std::string &cone, std::size_t k) {
        if (cone == "positive")
          return cone_norm(phi, ConeId::positive());
        if (cone == "kpos")
          return cone_norm(phi, ConeId::k_positive(k));
        if (cone == "cp")
          return cone_norm(phi, ConeId::completely_positive());
        if (cone == "decomposable")
          return cone_norm(phi, ConeId::decomposable());
        throw InvalidInput("cone_norm: unknown cone '" + cone + "'");
      },
      py::arg("phi"), py::arg("cone"), py::arg("k") = 1);

  m.def(
      "check_witness_preconditions",
      [](const LinMap &phi, const SchmidtVector &y) { return check_witness_preconditions(phi, y); },
      py::arg("phi"), py::arg("y"));
  m.def(
      "extend_witness",
      [](const CMatrix &a, const SchmidtVector &y) { return extend_witness(a, y); }, py::arg("a"),
      py::arg("y"));
  m.def("kpos_bruteforce_oracle",
        [](const LinMap &phi, std::size_t k, int samples, std::uint64_t seed) {
          return kpos_bruteforce_oracle(phi, k, samples, seed);
        },
        py::arg("phi"), py::arg("k"), py::arg("samples") = 200, py::arg("seed") = 1);

  m.def("random_separable_state",
        [](std::size_t dk, std::size_t dh, int terms, std::uint64_t seed) {
          return random_separable_state(dk, dh, terms, seed);
        },
        py::arg("dim_k"), py::arg("dim_h"), py::arg("terms") = 4, py::arg("seed") = 1);
  m.def("random_ppt_state",
        [](std::size_t dk, std::size_t dh, std::uint64_t seed) {
          return random_ppt_state(dk, dh, seed);
        },
        py::arg("dim_k"), py::arg("dim_h"), py::arg("seed") = 1);
  m.def("random_superpositive", &random_superpositive, py::arg("dim_k"), py::arg("dim_h"),
        py::arg("k"), py::arg("terms") = 2, py::arg("seed") = 1);
  m.def("random_selfadjoint_map", &random_selfadjoint_map, py::arg("dim_k"), py::arg("dim_h"),
        py::arg("seed") = 1);
  m.def("random_cp_map", &random_cp_map, py::arg("dim_k"), py::arg("dim_h"), py::arg("seed") = 1);

  m.def(
      "analyze_json",
      [](const LinMap &phi, const std::string &source, const OptConfig &cfg) {
        return report_to_json(analyze(phi, source, "", cfg));
      },
      py::arg("phi"), py::arg("source") = "python", py::arg("config") = OptConfig{},
      "Full analysis, returned as a JSON report string");
}
