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


// Runs every acceptance criterion and prints one line per criterion.
// Exits nonzero when any criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "invsg/acceptance.hpp"

int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::string(argv[1]) == "--verbose";
  bool failed  = false;
  for (int id = 1; id <= invsg::num_criteria; ++id) {
    auto r = invsg::run_criterion(id);
    failed = failed || !r.passed;
    std::cout << invsg::format_result(r, verbose, true) << std::flush;
  }
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
