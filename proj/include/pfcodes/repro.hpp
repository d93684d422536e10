// Copyright 2026 The pfcodes Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The reproduction suite: every published result, recomputed from scratch and
// compared with its expected value. Shared by the acceptance test and the
// `repro-paper` CLI subcommand.

#ifndef PFCODES_REPRO_HPP
#define PFCODES_REPRO_HPP

#include <functional>
#include <string>
#include <vector>

namespace pfcodes::repro {

struct CheckResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string computed;
    std::string expected;
    double seconds = 0;
    /// Wall-time budget in seconds; exceeding it fails the check.
    double time_limit = 0;
};

struct Options {
    /// Directory holding the code corpus (*.json code files).
    std::string corpus_dir;
    /// Worker cap passed to search and distance; 0 uses the OpenMP default.
    int threads = 0;
};

/// Number of checks in the suite; ids run from 1 to this.
int check_count();

/// Runs one check. Exceptions are caught and reported as failures.
CheckResult run_check(int id, const Options& options);

/// Runs every check in order, calling `on_result` after each one.
std::vector<CheckResult> run_all(const Options& options,
                                 const std::function<void(const CheckResult&)>& on_result = {});

/// One line per check: "PASS [n] title: computed (expected ...) t=1.23s".
std::string format_line(const CheckResult& r);

}  // namespace pfcodes::repro

#endif  // PFCODES_REPRO_HPP
