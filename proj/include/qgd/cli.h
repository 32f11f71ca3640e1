// Copyright 2026 The qgd Authors
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

#ifndef QGD_CLI_H
#define QGD_CLI_H

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace qgd {

/// Parsed command line for one invocation of the qgd tool.
struct RunConfig {
    std::string command;
    std::string input_path;
    std::string output_path;
    std::string circuit_path;
    std::string matrix_path;
    int n = 0;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    bool minimize = true;
    bool expand = false;
    std::string format = "json";
    std::string model = "emitted";
    bool reference_compare = false;
    std::string json_path;
};

/// Exit codes: 0 success, 1 verification or residual failure, 2 input error.
constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

/// Runs one command. Data goes to `out` (or files), diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qgd

#endif
