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

#include <benchmark/benchmark.h>

#include <cstddef>
#include <vector>

#include "qipkit/circuit.hpp"
#include "qipkit/complex_matrix.hpp"
#include "qipkit/measurement.hpp"
#include "qipkit/rng.hpp"
#include "qipkit/state.hpp"

namespace {

qip::ComplexMatrix random_hermitian(std::size_t n, qip::Rng& rng) {
  qip::ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      const qip::Complex z(rng.normal(), r == c ? 0.0 : rng.normal());
      m(r, c) = z;
      m(c, r) = std::conj(z);
    }
  }
  return m;
}

void BM_HermitianEigen(benchmark::State& state) {
  qip::Rng rng(1);
  const auto dim = static_cast<std::size_t>(state.range(0));
  const qip::ComplexMatrix m = random_hermitian(dim, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qip::hermitian_eigen(m));
  }
}
BENCHMARK(BM_HermitianEigen)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_ApplyCircuit(benchmark::State& state) {
  const auto qubits = static_cast<std::size_t>(state.range(0));
  qip::Rng rng(2);
  qip::Circuit c(qubits);
  for (int layer = 0; layer < 4; ++layer) {
    for (std::size_t q = 0; q < qubits; ++q) {
      c.append(qip::Gate::single(qip::GateKind::H, q));
    }
    for (std::size_t q = 0; q + 1 < qubits; ++q) {
      c.append(qip::Gate::cnot(q, q + 1));
    }
  }
  const qip::PureState in = qip::PureState::basis(std::size_t(1) << qubits, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qip::apply_circuit(c, in));
  }
}
BENCHMARK(BM_ApplyCircuit)->Arg(4)->Arg(8)->Arg(10);

void BM_MeasurementSampling(benchmark::State& state) {
  const auto qubits = static_cast<std::size_t>(state.range(0));
  qip::Rng rng(3);
  const qip::PureState psi =
      qip::random_pure(std::size_t(1) << qubits, rng);
  const auto basis = qip::computational_basis(qubits);
  const qip::OutcomeDistribution dist = qip::measure_in_basis(psi, basis);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qip::sample(dist, rng));
  }
}
BENCHMARK(BM_MeasurementSampling)->Arg(4)->Arg(8)->Arg(10);

void BM_PartialTrace(benchmark::State& state) {
  const auto qubits = static_cast<std::size_t>(state.range(0));
  qip::Rng rng(4);
  const std::size_t dim = std::size_t(1) << qubits;
  const qip::DensityMatrix rho = qip::random_density(dim, dim / 2, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qip::partial_trace(rho, dim / 2, 2, qip::Subsystem::A));
  }
}
BENCHMARK(BM_PartialTrace)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
