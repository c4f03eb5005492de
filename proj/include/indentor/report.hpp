// Copyright 2026 The Indentor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef INDENTOR_REPORT_HPP_
#define INDENTOR_REPORT_HPP_

#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "indentor/detector.hpp"

namespace indentor {

inline std::string FormatScore(double score) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", score);
  return buf;
}

inline nlohmann::json DeviationsToJson(const std::vector<Deviation>& devs) {
  nlohmann::json out = nlohmann::json::array();
  for (const Deviation& d : devs) {
    out.push_back({{"line", d.line}, {"expected", d.expected}, {"found", d.found}});
  }
  return out;
}

// {"file", "scores", "best", "deviations": [{"line", "expected", "found"}]}
inline nlohmann::json ReportToJson(std::string_view file,
                                   const StyleReport& report) {
  nlohmann::json scores = nlohmann::json::object();
  for (const auto& [name, score] : report.scores) scores[name] = score;
  return {{"file", std::string(file)},
          {"scores", scores},
          {"best", report.best},
          {"deviations", DeviationsToJson(report.deviations)}};
}

inline std::string ReportToText(std::string_view file,
                                const StyleReport& report) {
  std::string out;
  out += std::string(file) + ": best: " + report.best + " (" +
         std::to_string(report.observations_total) + " observations)\n";
  for (std::string_view name : kStyleNames) {
    const auto it = report.scores.find(std::string(name));
    if (it == report.scores.end()) continue;
    out += "  " + std::string(name) + ": " + FormatScore(it->second) + "\n";
  }
  for (const Deviation& d : report.deviations) {
    out += std::string(file) + ":" + std::to_string(d.line) +
           ": expected " + d.expected + ", found " + d.found + "\n";
  }
  return out;
}

// Check-mode deviations, one per differing line.
inline std::string DeviationsToText(std::string_view file,
                                    const std::vector<Deviation>& devs) {
  std::string out;
  for (const Deviation& d : devs) {
    out += std::string(file) + ":" + std::to_string(d.line) + ": expected \"" +
           d.expected + "\", found \"" + d.found + "\"\n";
  }
  out += std::string(file) + ": " + std::to_string(devs.size()) +
         (devs.size() == 1 ? " deviation\n" : " deviations\n");
  return out;
}

inline nlohmann::json CheckToJson(std::string_view file,
                                  const std::vector<Deviation>& devs) {
  return {{"file", std::string(file)},
          {"deviations", DeviationsToJson(devs)}};
}

}  // namespace indentor

#endif  // INDENTOR_REPORT_HPP_
