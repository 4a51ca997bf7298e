/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "posmap/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "posmap/eig.hpp"

namespace posmap {

using nlohmann::json;

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

namespace {

std::string complex_pair(const Complex &z) {
  return "[" + format_real(z.real()) + "," + format_real(z.imag()) + "]";
}

std::string complex_array(const std::vector<Complex> &zs) {
  std::string out = "[";
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (i)
      out += ",";
    out += complex_pair(zs[i]);
  }
  out += "]";
  return out;
}

json parse(const std::string &text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw InvalidInput("malformed JSON");
  return j;
}

std::vector<Complex> complex_list_from_json(const json &arr, std::size_t expected,
                                            const char *what) {
  if (!arr.is_array() || arr.size() != expected)
    throw InvalidInput(std::string(what) + ": expected an array of " + std::to_string(expected) +
                       " [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(expected);
  for (const json &e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw InvalidInput(std::string(what) + ": entries must be [re, im] number pairs");
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

std::size_t size_field(const json &j, const char *key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() <= 0)
    throw InvalidInput(std::string("missing or invalid positive integer field '") + key + "'");
  return static_cast<std::size_t>(j[key].get<long long>());
}

} // namespace

std::string choi_to_json(const LinMap &phi) {
  std::string out = "{\"dim_k\":" + std::to_string(phi.dim_k) +
                    ",\"dim_h\":" + std::to_string(phi.dim_h) +
                    ",\"choi\":" + complex_array(phi.choi.data()) + "}";
  return out;
}

LinMap choi_from_json(const std::string &text) {
  const json j = parse(text);
  LinMap phi;
  phi.dim_k = size_field(j, "dim_k");
  phi.dim_h = size_field(j, "dim_h");
  const std::size_t d = phi.dim_k * phi.dim_h;
  if (!j.contains("choi"))
    throw InvalidInput("choi JSON: missing 'choi' field");
  const std::vector<Complex> entries = complex_list_from_json(j["choi"], d * d, "choi");
  phi.choi = CMatrix(d, d);
  phi.choi.data() = entries;
  return phi;
}

LinMap load_choi_file(const std::string &path) { return choi_from_json(read_file(path)); }

void save_choi_file(const LinMap &phi, const std::string &path) {
  write_file(path, choi_to_json(phi) + "\n");
}

std::string matrix_to_json(const CMatrix &m) {
  return "{\"rows\":" + std::to_string(m.rows()) + ",\"cols\":" + std::to_string(m.cols()) +
         ",\"entries\":" + complex_array(m.data()) + "}";
}

CMatrix matrix_from_json(const std::string &text) {
  const json j = parse(text);
  const std::size_t rows = size_field(j, "rows");
  const std::size_t cols = size_field(j, "cols");
  if (!j.contains("entries"))
    throw InvalidInput("matrix JSON: missing 'entries' field");
  CMatrix m(rows, cols);
  m.data() = complex_list_from_json(j["entries"], rows * cols, "entries");
  return m;
}

CMatrix load_matrix_file(const std::string &path) { return matrix_from_json(read_file(path)); }

std::string schmidt_vector_to_json(const SchmidtVector &v) {
  std::string out = "{\"type\":\"schmidt_vector\",\"dim_k\":" + std::to_string(v.dim_k) +
                    ",\"dim_h\":" + std::to_string(v.dim_h) + ",\"k\":" + std::to_string(v.k) +
                    ",\"left\":[";
  for (std::size_t t = 0; t < v.left.size(); ++t) {
    if (t)
      out += ",";
    out += complex_array(v.left[t]);
  }
  out += "],\"right\":[";
  for (std::size_t t = 0; t < v.right.size(); ++t) {
    if (t)
      out += ",";
    out += complex_array(v.right[t]);
  }
  out += "]}";
  return out;
}

SchmidtVector schmidt_vector_from_json(const std::string &text, const Tolerances &tol) {
  const json j = parse(text);
  const std::size_t dim_k = size_field(j, "dim_k");
  const std::size_t dim_h = size_field(j, "dim_h");
  if (j.contains("left") || j.contains("right")) {
    if (!j.contains("left") || !j.contains("right") || !j["left"].is_array() ||
        !j["right"].is_array() || j["left"].size() != j["right"].size())
      throw InvalidInput("schmidt vector JSON: 'left' and 'right' must be arrays of equal length");
    std::vector<std::vector<Complex>> left, right;
    for (const json &e : j["left"])
      left.push_back(complex_list_from_json(e, dim_k, "left"));
    for (const json &e : j["right"])
      right.push_back(complex_list_from_json(e, dim_h, "right"));
    std::size_t k = left.size();
    if (j.contains("k"))
      k = size_field(j, "k");
    return SchmidtVector::make(dim_k, dim_h, std::max(k, left.size()), std::move(left),
                               std::move(right));
  }
  if (j.contains("amplitudes")) {
    BipartiteVector bv;
    bv.dim_k = dim_k;
    bv.dim_h = dim_h;
    bv.amplitudes = complex_list_from_json(j["amplitudes"], dim_k * dim_h, "amplitudes");
    const SchmidtDecomposition d = schmidt_decompose(bv, tol);
    std::size_t k = std::max<std::size_t>(1, static_cast<std::size_t>(d.rank));
    if (j.contains("k"))
      k = size_field(j, "k");
    return SchmidtVector::from_dense(bv, k, tol);
  }
  throw InvalidInput("schmidt vector JSON: need either left/right factors or amplitudes");
}

std::string state_to_json(const StateDensity &s) {
  return "{\"type\":\"state\",\"dim_k\":" + std::to_string(s.dim_k) +
         ",\"dim_h\":" + std::to_string(s.dim_h) +
         ",\"is_ppt\":" + (s.is_ppt ? std::string("true") : std::string("false")) +
         ",\"rho\":" + complex_array(s.rho.data()) + "}";
}

StateDensity state_from_json(const std::string &text, const Tolerances &tol) {
  const json j = parse(text);
  const std::size_t dim_k = size_field(j, "dim_k");
  const std::size_t dim_h = size_field(j, "dim_h");
  const std::size_t d = dim_k * dim_h;
  if (!j.contains("rho"))
    throw InvalidInput("state JSON: missing 'rho' field");
  CMatrix rho(d, d);
  rho.data() = complex_list_from_json(j["rho"], d * d, "rho");
  return StateDensity::make(dim_k, dim_h, rho, tol);
}

std::string fnv1a_hex(const std::string &bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InvalidInput("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw InvalidInput("cannot write file: " + path);
  out << content;
}

} // namespace posmap
