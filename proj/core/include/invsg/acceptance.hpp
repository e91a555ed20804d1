/*
 *   Copyright 2026 The invsg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


// The acceptance suite: reproductions of the worked examples and the
// property checks around the canonical recognizer, each reported as a
// single pass/fail line.  Shared by the command-line tool and the test
// suite.

#ifndef INVSG_ACCEPTANCE_HPP_
#define INVSG_ACCEPTANCE_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace invsg {

  struct AcceptanceOptions {
    std::uint64_t seed = 1;
    /// Cap on automaton and image sizes inside the individual checks.
    std::size_t   budget = 20'000'000;
  };

  struct CriterionResult {
    int                      id = 0;
    std::string              title;
    bool                     passed = true;
    std::vector<std::string> details;  // `key: value` lines
    double                   seconds = 0;
  };

  inline constexpr int num_criteria = 11;

  /// Runs criterion `id` in 1..num_criteria.  Never throws for a failing
  /// check; an unexpected exception is reported as a failure.
  CriterionResult run_criterion(int id, AcceptanceOptions const& options = {});

  std::vector<CriterionResult> run_acceptance(AcceptanceOptions const& options = {});

  /// `criterion N: PASS|FAIL title`, then the details indented, when
  /// `verbose`.  Timing is appended only when `timing` is set, so that the
  /// default output is reproducible byte for byte.
  std::string format_result(CriterionResult const& r, bool verbose, bool timing);

}  // namespace invsg

#endif  // INVSG_ACCEPTANCE_HPP_
