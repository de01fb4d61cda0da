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

#include "qipkit/serialize.hpp"

#include <cmath>
#include <cstddef>
#include <vector>

#include "qipkit/complex_matrix.hpp"
#include "qipkit/errors.hpp"

namespace qip {

namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
      !j[1].is_number()) {
    throw InvariantError("expected a [re, im] pair");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

Json state_to_json(const PureState& psi) {
  Json out = Json::array();
  for (Complex a : psi.amplitudes()) out.push_back(complex_to_json(a));
  return out;
}

PureState state_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw InvariantError("expected a nonempty array of [re, im] pairs");
  }
  std::vector<Complex> amps;
  amps.reserve(j.size());
  for (const Json& e : j) amps.push_back(complex_from_json(e));
  return PureState(std::move(amps));
}

Json density_to_json(const DensityMatrix& rho) {
  Json out = Json::array();
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      out.push_back(complex_to_json(rho(r, c)));
    }
  }
  return out;
}

DensityMatrix density_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw InvariantError("expected a nonempty row-major array of [re, im] pairs");
  }
  const std::size_t n = j.size();
  const auto dim = static_cast<std::size_t>(std::llround(std::sqrt(
      static_cast<double>(n))));
  if (dim * dim != n) {
    throw InvariantError("density matrix entry count is not a perfect square");
  }
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < n; ++i) {
    m(i / dim, i % dim) = complex_from_json(j[i]);
  }
  return DensityMatrix(std::move(m));
}

}  // namespace qip
