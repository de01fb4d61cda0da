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

#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "qipkit/circuit.hpp"
#include "qipkit/complex_matrix.hpp"
#include "qipkit/errors.hpp"
#include "qipkit/measurement.hpp"
#include "qipkit/rng.hpp"
#include "qipkit/state.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using qip::Complex;
using qip::ComplexMatrix;
using qip::DensityMatrix;
using qip::PureState;

namespace {

const Complex kOne(1.0, 0.0);
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PureState plus() { return PureState::qubit(kInvSqrt2, kInvSqrt2); }
PureState minus() { return PureState::qubit(kInvSqrt2, -kInvSqrt2); }

}  // namespace

TEST_CASE("pure state validation and accessors") {
  const PureState zero = PureState::basis(2, 0);
  CHECK(zero.dim() == 2);
  CHECK(zero.num_qubits() == 1);
  CHECK(zero.amplitude(0) == kOne);

  CHECK_THROWS_AS(PureState({kOne, kOne}), qip::InvariantError);
  CHECK_THROWS_AS(PureState::qubit(1.0, 1.0), qip::InvariantError);
  CHECK(PureState::basis(8, 5).num_qubits() == 3);
}

TEST_CASE("density_from_pure projectors") {
  const DensityMatrix rho0 = qip::density_from_pure(PureState::basis(2, 0));
  CHECK(std::abs(rho0(0, 0) - kOne) < 1e-15);
  CHECK(std::abs(rho0(1, 1)) < 1e-15);

  const DensityMatrix rhop = qip::density_from_pure(plus());
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(std::abs(rhop(r, c) - Complex(0.5, 0.0)) < 1e-12);
    }
  }

  const DensityMatrix bell = qip::density_from_pure(qip::bell_state(0, 0));
  CHECK(std::abs(bell(0, 0) - Complex(0.5, 0.0)) < 1e-12);
  CHECK(std::abs(bell(0, 3) - Complex(0.5, 0.0)) < 1e-12);
  CHECK(std::abs(bell(3, 0) - Complex(0.5, 0.0)) < 1e-12);
  CHECK(std::abs(bell(3, 3) - Complex(0.5, 0.0)) < 1e-12);
  CHECK(std::abs(bell(1, 1)) < 1e-12);
  CHECK(std::abs(bell(2, 2)) < 1e-12);
}

TEST_CASE("density_from_ensemble: distinct preparations, same matrix") {
  const qip::Ensemble computational = qip::Ensemble::of_pure(
      {PureState::basis(2, 0), PureState::basis(2, 1)}, {0.5, 0.5});
  const qip::Ensemble hadamard =
      qip::Ensemble::of_pure({plus(), minus()}, {0.5, 0.5});

  const ComplexMatrix half = Complex(0.5, 0.0) * ComplexMatrix::identity(2);
  CHECK(qip::max_abs_diff(qip::density_from_ensemble(computational).matrix(),
                          half) < 1e-12);
  CHECK(qip::max_abs_diff(qip::density_from_ensemble(hadamard).matrix(),
                          half) < 1e-12);

  const qip::Ensemble single = qip::Ensemble::of_pure({plus()}, {1.0});
  CHECK(qip::max_abs_diff(qip::density_from_ensemble(single).matrix(),
                          qip::density_from_pure(plus()).matrix()) < 1e-12);

  CHECK_THROWS_AS(qip::Ensemble::of_pure(
                      {PureState::basis(2, 0), PureState::basis(2, 1)},
                      {0.9, 0.2}),
                  qip::InvariantError);
}

TEST_CASE("purity and is_pure") {
  CHECK(qip::purity(DensityMatrix::maximally_mixed(2)) ==
        doctest::Approx(0.5).epsilon(1e-12));
  CHECK_FALSE(qip::is_pure(DensityMatrix::maximally_mixed(2)));

  const DensityMatrix rho0 = qip::density_from_pure(PureState::basis(2, 0));
  CHECK(qip::purity(rho0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(qip::is_pure(rho0));

  const qip::Ensemble mix = qip::Ensemble::of_pure(
      {PureState::basis(2, 0), PureState::basis(2, 1)}, {0.75, 0.25});
  CHECK(qip::purity(qip::density_from_ensemble(mix)) ==
        doctest::Approx(0.625).epsilon(1e-12));
}

TEST_CASE("bloch coordinates of the poles and the center") {
  const qip::BlochVector b0 =
      qip::bloch_from_density(qip::density_from_pure(PureState::basis(2, 0)));
  CHECK(b0.bx == doctest::Approx(0.0));
  CHECK(b0.by == doctest::Approx(0.0));
  CHECK(b0.bz == doctest::Approx(1.0));

  const qip::BlochVector b1 =
      qip::bloch_from_density(qip::density_from_pure(PureState::basis(2, 1)));
  CHECK(b1.bz == doctest::Approx(-1.0));

  const qip::BlochVector bp = qip::bloch_from_density(
      qip::density_from_pure(plus()));
  CHECK(bp.bx == doctest::Approx(1.0));
  CHECK(bp.bz == doctest::Approx(0.0));

  const qip::BlochVector center =
      qip::bloch_from_density(DensityMatrix::maximally_mixed(2));
  CHECK(center.norm() < 1e-12);

  CHECK_THROWS_AS(qip::density_from_bloch({0.9, 0.9, 0.9}),
                  qip::InvariantError);
}

TEST_CASE("bloch round trip and the surface law on random states") {
  qip::Rng rng(21);
  for (int rep = 0; rep < 1000; ++rep) {
    const DensityMatrix rho = qip::random_density(2, 2, rng);
    const DensityMatrix back =
        qip::density_from_bloch(qip::bloch_from_density(rho));
    CHECK(qip::max_abs_diff(rho.matrix(), back.matrix()) < 1e-10);
  }
  for (int rep = 0; rep < 50; ++rep) {
    const DensityMatrix pure =
        qip::density_from_pure(qip::random_pure(2, rng));
    CHECK(qip::bloch_from_density(pure).norm() ==
          doctest::Approx(1.0).epsilon(1e-8));
    const DensityMatrix mixed = qip::random_density(2, 2, rng);
    CHECK(qip::is_pure(mixed) ==
          (qip::bloch_from_density(mixed).norm() > 1.0 - 1e-8));
  }
}

TEST_CASE("antipodal bloch vectors give orthogonal pure states") {
  qip::Rng rng(22);
  for (int rep = 0; rep < 100; ++rep) {
    const double z = 2.0 * rng.uniform01() - 1.0;
    const double phi = 2.0 * std::numbers::pi * rng.uniform01();
    const double r = std::sqrt(1.0 - z * z);
    const qip::BlochVector b{r * std::cos(phi), r * std::sin(phi), z};
    const DensityMatrix rb = qip::density_from_bloch(b);
    const DensityMatrix ranti = qip::density_from_bloch({-b.bx, -b.by, -b.bz});
    CHECK(std::abs(qip::trace(qip::matmul(rb.matrix(), ranti.matrix()))) <
          1e-10);
  }
}

TEST_CASE("partial trace of products and of the Bell state") {
  qip::Rng rng(23);
  for (int rep = 0; rep < 30; ++rep) {
    const DensityMatrix a = qip::random_density(2, 2, rng);
    const DensityMatrix b = qip::random_density(2, 2, rng);
    const DensityMatrix ab = DensityMatrix(qip::kron(a.matrix(), b.matrix()));
    CHECK(qip::max_abs_diff(
              qip::partial_trace(ab, 2, 2, qip::Subsystem::A).matrix(),
              a.matrix()) < 1e-12);
    CHECK(qip::max_abs_diff(
              qip::partial_trace(ab, 2, 2, qip::Subsystem::B).matrix(),
              b.matrix()) < 1e-12);
  }

  const DensityMatrix bell = qip::density_from_pure(qip::bell_state(0, 0));
  const ComplexMatrix half = Complex(0.5, 0.0) * ComplexMatrix::identity(2);
  CHECK(qip::max_abs_diff(
            qip::partial_trace(bell, 2, 2, qip::Subsystem::A).matrix(), half) <
        1e-12);
  CHECK(qip::max_abs_diff(
            qip::partial_trace(bell, 2, 2, qip::Subsystem::B).matrix(), half) <
        1e-12);

  CHECK_THROWS_AS(qip::partial_trace(bell, 3, 2, qip::Subsystem::A),
                  qip::DimensionError);
}

TEST_CASE("partial trace matches the sandwich oracle on asymmetric splits") {
  qip::Rng rng(24);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix rho = qip::random_density(8, 3, rng);
    const oracle::Mat m = gen::to_mat(rho.matrix());
    CHECK(oracle::mat_max_abs_diff(
              gen::to_mat(
                  qip::partial_trace(rho, 2, 4, qip::Subsystem::A).matrix()),
              oracle::partial_trace_sandwich(m, 2, 4, true)) < 1e-11);
    CHECK(oracle::mat_max_abs_diff(
              gen::to_mat(
                  qip::partial_trace(rho, 4, 2, qip::Subsystem::B).matrix()),
              oracle::partial_trace_sandwich(m, 4, 2, false)) < 1e-11);
  }
}

TEST_CASE("apply_unitary conjugation") {
  const DensityMatrix rho0 = qip::density_from_pure(PureState::basis(2, 0));
  CHECK(qip::max_abs_diff(
            qip::apply_unitary(rho0, ComplexMatrix::identity(2)).matrix(),
            rho0.matrix()) == 0.0);
  CHECK(qip::max_abs_diff(
            qip::apply_unitary(rho0, qip::pauli_x()).matrix(),
            qip::density_from_pure(PureState::basis(2, 1)).matrix()) < 1e-12);
  CHECK(qip::max_abs_diff(
            qip::apply_unitary(DensityMatrix::maximally_mixed(2),
                               qip::hadamard_matrix())
                .matrix(),
            DensityMatrix::maximally_mixed(2).matrix()) < 1e-12);

  CHECK_THROWS_AS(
      qip::apply_unitary(rho0, Complex(2.0, 0.0) * ComplexMatrix::identity(2)),
      qip::InvariantError);
}

TEST_CASE("apply_kraus channels") {
  const DensityMatrix rho0 = qip::density_from_pure(PureState::basis(2, 0));
  const std::vector<ComplexMatrix> noop = {ComplexMatrix::identity(2)};
  CHECK(qip::max_abs_diff(qip::apply_kraus(rho0, noop).matrix(),
                          rho0.matrix()) < 1e-15);

  const double p = 0.3;
  const std::vector<ComplexMatrix> flip = {
      Complex(std::sqrt(1.0 - p), 0.0) * ComplexMatrix::identity(2),
      Complex(std::sqrt(p), 0.0) * qip::pauli_x()};
  const DensityMatrix flipped = qip::apply_kraus(rho0, flip);
  CHECK(std::abs(flipped(0, 0) - Complex(0.7, 0.0)) < 1e-12);
  CHECK(std::abs(flipped(1, 1) - Complex(0.3, 0.0)) < 1e-12);
  CHECK(std::abs(flipped(0, 1)) < 1e-12);

  const std::vector<ComplexMatrix> dephase = {
      qip::density_from_pure(PureState::basis(2, 0)).matrix(),
      qip::density_from_pure(PureState::basis(2, 1)).matrix()};
  CHECK(qip::max_abs_diff(
            qip::apply_kraus(qip::density_from_pure(plus()), dephase).matrix(),
            DensityMatrix::maximally_mixed(2).matrix()) < 1e-12);

  const std::vector<ComplexMatrix> leaky = {Complex(0.5, 0.0) *
                                            ComplexMatrix::identity(2)};
  CHECK_THROWS_AS(qip::apply_kraus(rho0, leaky), qip::InvariantError);
}

TEST_CASE("apply_kraus keeps trace and positivity for random channels") {
  qip::Rng rng(25);
  for (int rep = 0; rep < 30; ++rep) {
    const ComplexMatrix u = gen::random_unitary(4, rng);
    std::vector<ComplexMatrix> ops;
    for (std::size_t k = 0; k < 2; ++k) {
      ComplexMatrix e(2, 2);
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) e(r, c) = u(2 * k + r, c);
      }
      ops.push_back(e);
    }
    const DensityMatrix rho = qip::random_density(2, 2, rng);
    const DensityMatrix out = qip::apply_kraus(rho, ops);
    CHECK(std::abs(qip::trace(out.matrix()) - kOne) < 1e-10);
    CHECK(qip::is_psd(out.matrix()));
  }
}

TEST_CASE("tensor_states and two-qubit product detection") {
  const PureState ket01 =
      qip::tensor_states(PureState::basis(2, 0), PureState::basis(2, 1));
  CHECK(std::abs(ket01.amplitude(1) - kOne) == 0.0);
  CHECK(qip::is_product_two_qubit(ket01));
  CHECK(qip::is_product_two_qubit(qip::tensor_states(plus(), minus())));
  CHECK_FALSE(qip::is_product_two_qubit(qip::bell_state(0, 0)));
}

TEST_CASE("random state generators are normalized and deterministic") {
  qip::Rng rng(42);
  const PureState a = qip::random_pure(2, rng);
  qip::Rng rng2(42);
  const PureState b = qip::random_pure(2, rng2);
  CHECK(a.amplitudes() == b.amplitudes());

  qip::Rng rng3(26);
  for (int rep = 0; rep < 20; ++rep) {
    const PureState psi = qip::random_pure(8, rng3);
    double norm = 0.0;
    for (Complex amp : psi.amplitudes()) norm += std::norm(amp);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(qip::is_pure(qip::random_density(4, 1, rng3)));
  }
}

TEST_CASE("ensembles with equal density give equal povm statistics") {
  const qip::Ensemble computational = qip::Ensemble::of_pure(
      {PureState::basis(2, 0), PureState::basis(2, 1)}, {0.5, 0.5});
  const qip::Ensemble hadamard =
      qip::Ensemble::of_pure({plus(), minus()}, {0.5, 0.5});
  const qip::Povm trine = qip::trine_povm();

  const qip::OutcomeDistribution d1 =
      qip::povm_measure(qip::density_from_ensemble(computational), trine);
  const qip::OutcomeDistribution d2 =
      qip::povm_measure(qip::density_from_ensemble(hadamard), trine);
  REQUIRE(d1.size() == d2.size());
  for (std::size_t i = 0; i < d1.size(); ++i) {
    CHECK(d1.prob(i) == doctest::Approx(d2.prob(i)).epsilon(1e-12));
  }
}
