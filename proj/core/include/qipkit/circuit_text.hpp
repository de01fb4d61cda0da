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

#include <string>

#include "qipkit/circuit.hpp"

namespace qip {

/// Parse the plain-text circuit format:
///
///   qubits 2        # header, then one statement per line
///   h 0
///   cnot 0 1
///   u2 1  0.5+0.5i 0.5+-0.5i 0.5+-0.5i 0.5+0.5i
///
/// Keywords are case-insensitive, `#` starts a comment, blank lines are
/// skipped, indices are 0-based. A u2 statement lists its 2x2 matrix
/// row-major; each entry is RE or RE+IMi. Throws ParseError with line and
/// column on malformed input; index and unitarity violations are reported
/// the same way.
Circuit parse_circuit(const std::string& text);

/// Canonical text form of a circuit; parse_circuit(format_circuit(c)) == c.
/// Gates of kind UN have no statement form and are rejected.
std::string format_circuit(const Circuit& c);

}  // namespace qip
