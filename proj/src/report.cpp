/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "posmap/report.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "posmap/json_io.hpp"

namespace posmap {

namespace {

std::string json_escape(const std::string &s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
    case '"':
      out += "\\\"";
      break;
    case '\\':
      out += "\\\\";
      break;
    case '\n':
      out += "\\n";
      break;
    case '\t':
      out += "\\t";
      break;
    default:
      if (static_cast<unsigned char>(c) < 0x20) {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
        out += buf;
      } else {
        out += c;
      }
    }
  }
  return out;
}

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

} // namespace

std::string verdict_to_json(const Verdict &v) {
  std::string out = "{\"kind\":\"";
  out += to_string(v.kind);
  out += "\",\"value\":" + format_real(v.value) + ",\"detail\":\"" + json_escape(v.detail) + "\"";
  out += ",\"witness\":";
  if (v.witness.has_value())
    out += schmidt_vector_to_json(*v.witness);
  else
    out += "null";
  out += ",\"state_witness\":";
  if (v.state_witness.has_value())
    out += state_to_json(*v.state_witness);
  else
    out += "null";
  out += "}";
  return out;
}

AnalysisReport analyze(const LinMap &phi, const std::string &source, const std::string &input_hash,
                       const OptConfig &opt, const PptConfig &ppt, const Tolerances &tol,
                       bool with_timings) {
  AnalysisReport rep;
  rep.source = source;
  rep.input_hash = input_hash;
  rep.dim_k = phi.dim_k;
  rep.dim_h = phi.dim_h;
  rep.seed = opt.seed;
  rep.opt = opt;
  rep.ppt = ppt;
  rep.with_timings = with_timings;
  rep.self_adjoint = phi.is_self_adjoint(tol);
  if (!rep.self_adjoint)
    return rep; // split-dependent tests are undefined for non-self-adjoint maps

  {
    Stopwatch sw;
    try {
      const CpSplit s = cp_split(phi, tol);
      rep.split_exists = true;
      rep.c = s.c;
      rep.split_residual = verify_split(s);
    } catch (const NegativeOfCpMap &) {
      rep.split_exists = false;
    }
    if (with_timings)
      rep.timings_ms.emplace_back("split", sw.elapsed_ms());
  }
  {
    Stopwatch sw;
    rep.completely_positive = is_completely_positive(phi, tol);
    if (with_timings)
      rep.timings_ms.emplace_back("completely_positive", sw.elapsed_ms());
  }
  const std::size_t kmax = std::min(phi.dim_k, phi.dim_h);
  for (std::size_t k = 1; k <= kmax; ++k) {
    Stopwatch sw;
    rep.k_positive.emplace_back(k, is_k_positive(phi, k, opt, tol));
    if (with_timings)
      rep.timings_ms.emplace_back("k_positive_" + std::to_string(k), sw.elapsed_ms());
  }
  // Positivity is the k = 1 test.
  if (!rep.k_positive.empty()) {
    rep.positive = rep.k_positive.front().second;
    if (rep.positive->kind == VerdictKind::CertifiedNo)
      rep.positive->detail += " (product-vector witness: phi is not positive)";
  }
  {
    Stopwatch sw;
    rep.decomposable = is_decomposable(phi, ppt, tol);
    if (with_timings)
      rep.timings_ms.emplace_back("decomposable", sw.elapsed_ms());
  }
  return rep;
}

std::string report_to_json(const AnalysisReport &rep) {
  std::string out = "{";
  out += "\"schema\":" + std::to_string(kReportSchema);
  out += ",\"tool\":\"posmap\",\"version\":\"" + std::string(kToolVersion) + "\"";
  out += ",\"source\":\"" + json_escape(rep.source) + "\"";
  out += ",\"input_hash\":";
  out += rep.input_hash.empty() ? "null" : ("\"" + rep.input_hash + "\"");
  out += ",\"dim_k\":" + std::to_string(rep.dim_k);
  out += ",\"dim_h\":" + std::to_string(rep.dim_h);
  out += ",\"seed\":" + std::to_string(rep.seed);
  out += ",\"optimizer\":{\"restarts\":" + std::to_string(rep.opt.restarts) +
         ",\"max_iter\":" + std::to_string(rep.opt.max_iter) + ",\"tol\":" + format_real(rep.opt.tol) +
         "}";
  out += ",\"ppt\":{\"max_iter\":" + std::to_string(rep.ppt.max_iter) +
         ",\"tol\":" + format_real(rep.ppt.tol) + "}";
  out += ",\"self_adjoint\":";
  out += rep.self_adjoint ? "true" : "false";
  out += ",\"split\":{\"exists\":";
  out += rep.split_exists ? "true" : "false";
  if (rep.split_exists)
    out += ",\"c\":" + format_real(rep.c) + ",\"residual\":" + format_real(rep.split_residual);
  out += "}";
  out += ",\"verdicts\":{";
  out += "\"completely_positive\":";
  out += rep.completely_positive ? verdict_to_json(*rep.completely_positive) : "null";
  out += ",\"positive\":";
  out += rep.positive ? verdict_to_json(*rep.positive) : "null";
  out += ",\"k_positive\":[";
  for (std::size_t i = 0; i < rep.k_positive.size(); ++i) {
    if (i)
      out += ",";
    out += "{\"k\":" + std::to_string(rep.k_positive[i].first) +
           ",\"verdict\":" + verdict_to_json(rep.k_positive[i].second) + "}";
  }
  out += "]";
  out += ",\"decomposable\":";
  out += rep.decomposable ? verdict_to_json(*rep.decomposable) : "null";
  out += "}";
  out += ",\"timings\":";
  if (rep.with_timings) {
    out += "{";
    for (std::size_t i = 0; i < rep.timings_ms.size(); ++i) {
      if (i)
        out += ",";
      out += "\"" + json_escape(rep.timings_ms[i].first) +
             "\":" + format_real(rep.timings_ms[i].second);
    }
    out += "}";
  } else {
    out += "null";
  }
  out += "}";
  return out;
}

namespace {

std::string verdict_line(const Verdict &v) {
  std::ostringstream os;
  switch (v.kind) {
  case VerdictKind::CertifiedYes:
    os << "yes (certified)";
    break;
  case VerdictKind::CertifiedNo:
    os << "no  (certified)";
    break;
  case VerdictKind::HeuristicYes:
    os << "yes (heuristic)";
    break;
  }
  os << "  [" << v.detail << "]";
  return os.str();
}

} // namespace

std::string report_to_table(const AnalysisReport &rep) {
  std::ostringstream os;
  os << "map:            " << rep.source << " (" << rep.dim_k << "x" << rep.dim_k << " -> "
     << rep.dim_h << "x" << rep.dim_h << ")\n";
  if (!rep.input_hash.empty())
    os << "input hash:     " << rep.input_hash << "\n";
  os << "self-adjoint:   " << (rep.self_adjoint ? "yes" : "no") << "\n";
  if (!rep.self_adjoint) {
    os << "analysis:       skipped (split-dependent tests require a self-adjoint map)\n";
    return os.str();
  }
  if (rep.split_exists)
    os << "split:          c = " << format_real(rep.c)
       << ", residual = " << format_real(rep.split_residual) << "\n";
  else
    os << "split:          undefined (-phi is completely positive)\n";
  if (rep.completely_positive)
    os << "completely positive:  " << verdict_line(*rep.completely_positive) << "\n";
  if (rep.positive)
    os << "positive:             " << verdict_line(*rep.positive) << "\n";
  for (const auto &[k, v] : rep.k_positive)
    os << k << "-positive:           " << verdict_line(v) << "\n";
  if (rep.decomposable)
    os << "decomposable:         " << verdict_line(*rep.decomposable) << "\n";
  if (rep.with_timings) {
    os << "timings (ms):\n";
    for (const auto &[name, ms] : rep.timings_ms)
      os << "  " << name << ": " << format_real(ms) << "\n";
  }
  os << "seed:           " << rep.seed << "\n";
  return os.str();
}

} // namespace posmap
