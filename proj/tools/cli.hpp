// Copyright 2026 The qipkit Authors
//
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

#pragma once

#include <cstdint>
#include <string>

#include "qipkit/serialize.hpp"

namespace qip::cli {

/// Report builders behind the subcommands. Each returns the machine result
/// object; the human rendering and file output are derived from it, so
/// there is a single serialization path.
Json run_circuit(const std::string& path, std::size_t shots,
                 const std::string& basis, std::uint64_t seed);
Json bb84_report(std::size_t n, double delta, const std::string& eve,
                 double noise, double abort_threshold, std::uint64_t seed);
Json e91_report(std::size_t pairs, double test_fraction,
                const std::string& eve, std::uint64_t seed);
Json densecode_report();
Json teleport_report(std::size_t trials, std::uint64_t seed);
Json chsh_report(const std::string& strategy, std::size_t trials,
                 std::uint64_t seed);
Json ecc_report(const std::string& error, double alpha, double beta,
                std::uint64_t seed);
Json entropy_report(const std::string& ensemble);
Json holevo_report(const std::string& ensemble,
                   const std::string& measurement);
Json compress_report(const std::string& ensemble, std::size_t n,
                     double epsilon, const std::string& mode,
                     std::size_t trials, std::uint64_t seed);

std::string render_human(const Json& report);

/// Parse argv, run the subcommand, print the report. Exit codes: 0 on
/// success, 1 on protocol abort/repeat or runtime error, 2 on usage error.
int dispatch(int argc, const char* const* argv);

}  // namespace qip::cli
