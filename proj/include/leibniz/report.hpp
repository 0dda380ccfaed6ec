// Copyright 2026 The Leibniz Authors
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

#ifndef LEIBNIZ_REPORT_HPP
#define LEIBNIZ_REPORT_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace leibniz {

/// Outcome of one named check suite. The rendered report is byte-identical
/// for identical inputs and seed; timings are therefore rendered separately
/// (callers usually send them to stderr).
struct SuiteResult {
  std::string name;
  bool passed = true;
  std::uint64_t checks = 0;
  /// First counterexample, multi-line, empty when passed.
  std::string counterexample;
  double seconds = 0.0;
};

inline bool all_passed(const std::vector<SuiteResult>& suites) {
  for (const auto& s : suites)
    if (!s.passed) return false;
  return true;
}

/// One line per suite: "<label> <name>: pass (<checks> checks)" or
/// "<label> <name>: FAIL ..." followed by the indented counterexample.
void render_suites(std::ostream& out, const std::vector<SuiteResult>& suites,
                   const std::string& label);

/// Timing lines, one per suite (non-deterministic; keep off the report).
void render_timings(std::ostream& out, const std::vector<SuiteResult>& suites);

}  // namespace leibniz

#endif  // LEIBNIZ_REPORT_HPP
