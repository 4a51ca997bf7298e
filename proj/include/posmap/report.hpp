/*
 * This code is part of posmap.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef POSMAP_REPORT_HPP
#define POSMAP_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "posmap/cones.hpp"

namespace posmap {

inline constexpr const char *kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

// Full analysis of one map: split, CP / positivity / k-positivity /
// decomposability verdicts, witnesses, and run metadata. Wall-clock timings
// are collected only on request so that default reports are byte-identical
// across runs with the same seed.
struct AnalysisReport {
  std::string source; // "gallery:<name>" or "file:<path>"
  std::string input_hash;
  std::size_t dim_k = 0;
  std::size_t dim_h = 0;
  bool self_adjoint = false;
  bool split_exists = false;
  double c = 0.0;
  double split_residual = 0.0;
  std::optional<Verdict> completely_positive;
  std::optional<Verdict> positive;
  std::vector<std::pair<std::size_t, Verdict>> k_positive;
  std::optional<Verdict> decomposable;
  std::uint64_t seed = 0;
  OptConfig opt;
  PptConfig ppt;
  bool with_timings = false;
  std::vector<std::pair<std::string, double>> timings_ms;
};

AnalysisReport analyze(const LinMap &phi, const std::string &source, const std::string &input_hash,
                       const OptConfig &opt = {}, const PptConfig &ppt = {},
                       const Tolerances &tol = {}, bool with_timings = false);

std::string report_to_json(const AnalysisReport &rep);
std::string report_to_table(const AnalysisReport &rep);

std::string verdict_to_json(const Verdict &v);

} // namespace posmap

#endif
