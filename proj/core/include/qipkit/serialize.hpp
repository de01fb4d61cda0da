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

#include <json.hpp>

#include "qipkit/state.hpp"

namespace qip {

/// JSON documents preserve insertion order so emitted output is stable.
using Json = nlohmann::ordered_json;

/// A pure state as an array of [re, im] pairs.
Json state_to_json(const PureState& psi);
PureState state_from_json(const Json& j);

/// A density matrix as a row-major array of [re, im] pairs.
Json density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const Json& j);

}  // namespace qip
