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
#include <functional>
#include <vector>

#include <doctest.h>

#include "qipkit/circuit.hpp"
#include "qipkit/complex_matrix.hpp"
#include "qipkit/errors.hpp"
#include "qipkit/rng.hpp"
#include "qipkit/state.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using qip::Complex;
using qip::ComplexMatrix;

namespace {

const Complex kOne(1.0, 0.0);
const Complex kImag(0.0, 1.0);

ComplexMatrix diag2(double a, double b) {
  return ComplexMatrix{{Complex(a, 0.0), Complex(0.0, 0.0)},
                       {Complex(0.0, 0.0), Complex(b, 0.0)}};
}

}  // namespace

TEST_CASE("matrix construction and validation") {
  ComplexMatrix m(2, 3);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 3; ++c) CHECK(m(r, c) == Complex(0.0, 0.0));
  }

  CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)),
                  qip::DimensionError);

  CHECK(ComplexMatrix::identity(3)(1, 1) == kOne);
  CHECK(ComplexMatrix::identity(3)(0, 1) == Complex(0.0, 0.0));
}

TEST_CASE("matmul identities and the controlled-not column map") {
  const ComplexMatrix& x = qip::pauli_x();
  CHECK(qip::max_abs_diff(qip::matmul(ComplexMatrix::identity(2), x), x) ==
        0.0);
  CHECK(qip::max_abs_diff(qip::matmul(x, x), ComplexMatrix::identity(2)) ==
        0.0);

  const ComplexMatrix cnot = qip::standard_gate(qip::GateKind::CNOT);
  const std::vector<Complex> ten = {Complex(0.0, 0.0), Complex(0.0, 0.0),
                                    kOne, Complex(0.0, 0.0)};
  const std::vector<Complex> got = qip::matvec(cnot, ten);
  CHECK(std::abs(got[0]) == 0.0);
  CHECK(std::abs(got[1]) == 0.0);
  CHECK(std::abs(got[2]) == 0.0);
  CHECK(std::abs(got[3] - kOne) == 0.0);

  CHECK_THROWS_AS(qip::matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)),
                  qip::DimensionError);
}

TEST_CASE("matmul agrees with the reference product on random matrices") {
  qip::Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix a = gen::random_matrix(5, rng);
    const ComplexMatrix b = gen::random_matrix(5, rng);
    const oracle::Mat want = oracle::mat_mul(gen::to_mat(a), gen::to_mat(b));
    CHECK(oracle::mat_max_abs_diff(gen::to_mat(qip::matmul(a, b)), want) <
          1e-12);
  }
}

TEST_CASE("kron basis products and the pauli-z pair") {
  const ComplexMatrix ket1 = ComplexMatrix{{Complex(0.0, 0.0)}, {kOne}};
  const ComplexMatrix ket0 = ComplexMatrix{{kOne}, {Complex(0.0, 0.0)}};
  const ComplexMatrix k10 = qip::kron(ket1, ket0);
  CHECK(k10.rows() == 4);
  CHECK(k10.cols() == 1);
  CHECK(std::abs(k10(2, 0) - kOne) == 0.0);
  CHECK(std::abs(k10(0, 0)) + std::abs(k10(1, 0)) + std::abs(k10(3, 0)) ==
        0.0);

  CHECK(qip::max_abs_diff(
            qip::kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
            ComplexMatrix::identity(4)) == 0.0);

  const ComplexMatrix zz = qip::kron(qip::pauli_z(), qip::pauli_z());
  const ComplexMatrix want{{kOne, {}, {}, {}},
                           {{}, Complex(-1.0, 0.0), {}, {}},
                           {{}, {}, Complex(-1.0, 0.0), {}},
                           {{}, {}, {}, kOne}};
  CHECK(qip::max_abs_diff(zz, want) == 0.0);
}

TEST_CASE("kron is associative and distributes over matmul") {
  qip::Rng rng(12);
  const ComplexMatrix a = gen::random_matrix(2, rng);
  const ComplexMatrix b = gen::random_matrix(3, rng);
  const ComplexMatrix c = gen::random_matrix(2, rng);
  const ComplexMatrix d = gen::random_matrix(3, rng);

  CHECK(qip::max_abs_diff(qip::kron(qip::kron(a, b), c),
                          qip::kron(a, qip::kron(b, c))) < 1e-12);
  CHECK(qip::max_abs_diff(qip::matmul(qip::kron(a, b), qip::kron(c, d)),
                          qip::kron(qip::matmul(a, c), qip::matmul(b, d))) <
        1e-10);
}

TEST_CASE("adjoint and trace") {
  const ComplexMatrix m{{kOne, kImag}, {Complex(2.0, -3.0), Complex(0.0, 0.0)}};
  const ComplexMatrix mt = qip::adjoint(m);
  CHECK(mt(0, 1) == Complex(2.0, 3.0));
  CHECK(mt(1, 0) == Complex(0.0, -1.0));
  CHECK(qip::trace(qip::pauli_x()) == Complex(0.0, 0.0));
  CHECK(qip::trace(ComplexMatrix::identity(5)) == Complex(5.0, 0.0));
}

TEST_CASE("hermitian_eigen on the pauli matrices") {
  const qip::HermitianEigen ez = qip::hermitian_eigen(qip::pauli_z());
  REQUIRE(ez.eigenvalues.size() == 2);
  CHECK(ez.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ez.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(ez.eigenvectors(1, 0) - kOne) < 1e-12);
  CHECK(std::abs(ez.eigenvectors(0, 1) - kOne) < 1e-12);

  const qip::HermitianEigen ex = qip::hermitian_eigen(qip::pauli_x());
  CHECK(ex.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(ex.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(ex.eigenvectors(0, 0) - Complex(s, 0.0)) < 1e-10);
  CHECK(std::abs(ex.eigenvectors(1, 0) - Complex(-s, 0.0)) < 1e-10);
  CHECK(std::abs(ex.eigenvectors(0, 1) - Complex(s, 0.0)) < 1e-10);
  CHECK(std::abs(ex.eigenvectors(1, 1) - Complex(s, 0.0)) < 1e-10);

  const qip::HermitianEigen e4 =
      qip::hermitian_eigen(ComplexMatrix::identity(4));
  for (double v : e4.eigenvalues) CHECK(v == doctest::Approx(1.0));

  CHECK_THROWS_AS(qip::hermitian_eigen(ComplexMatrix{{kOne, kOne},
                                                     {Complex(0.0, 0.0), kOne}}),
                  qip::InvariantError);
}

TEST_CASE("hermitian_eigen matches the closed-form 2x2 oracle") {
  qip::Rng rng(13);
  for (int rep = 0; rep < 50; ++rep) {
    const ComplexMatrix h = gen::random_hermitian(2, rng);
    const oracle::Eigen2 want = oracle::eigen2_closed_form(gen::to_mat(h));
    const qip::HermitianEigen got = qip::hermitian_eigen(h);
    CHECK(got.eigenvalues[0] ==
          doctest::Approx(want.values[0]).epsilon(1e-10));
    CHECK(got.eigenvalues[1] ==
          doctest::Approx(want.values[1]).epsilon(1e-10));
  }
}

TEST_CASE("hermitian_eigen reconstruction and orthonormality at size 16") {
  qip::Rng rng(14);
  for (std::size_t n : {2, 3, 5, 8, 16}) {
    const ComplexMatrix h = gen::random_hermitian(n, rng);
    const qip::HermitianEigen e = qip::hermitian_eigen(h);
    CHECK(qip::max_abs_diff(e.reconstruct(), h) < 1e-9);
    CHECK(qip::max_abs_diff(qip::matmul(qip::adjoint(e.eigenvectors),
                                        e.eigenvectors),
                            ComplexMatrix::identity(n)) < 1e-9);
    for (std::size_t i = 1; i < n; ++i) {
      CHECK(e.eigenvalues[i - 1] <= e.eigenvalues[i]);
    }
  }
}

TEST_CASE("matrix_func spectral maps") {
  CHECK(qip::max_abs_diff(
            qip::matrix_func(diag2(4.0, 9.0),
                             std::function<double(double)>(
                                 [](double x) { return std::sqrt(x); })),
            diag2(2.0, 3.0)) < 1e-12);

  const ComplexMatrix half = Complex(0.5, 0.0) * ComplexMatrix::identity(2);
  CHECK(qip::max_abs_diff(qip::matrix_sqrt_psd(half),
                          Complex(std::sqrt(0.5), 0.0) *
                              ComplexMatrix::identity(2)) < 1e-12);

  qip::Rng rng(15);
  const ComplexMatrix h = gen::random_hermitian(4, rng);
  CHECK(qip::max_abs_diff(
            qip::matrix_func(h, std::function<double(double)>(
                                    [](double x) { return x; })),
            h) < 1e-10);
}

TEST_CASE("complex matrix_func matches a series exponential") {
  const double t = std::numbers::pi;
  const ComplexMatrix u = qip::matrix_func(
      qip::pauli_z(), [&](double lam) { return std::exp(Complex(0, -lam * t)); });
  oracle::Mat want = oracle::expm_taylor(
      oracle::mat_scale(Complex(0.0, -t), gen::to_mat(qip::pauli_z())));
  CHECK(oracle::mat_max_abs_diff(gen::to_mat(u), want) < 1e-12);

  qip::Rng rng(16);
  const ComplexMatrix h = gen::random_hermitian(3, rng);
  const ComplexMatrix uh = qip::matrix_func(
      h, [](double lam) { return std::exp(Complex(0, -lam)); });
  want = oracle::expm_taylor(
      oracle::mat_scale(Complex(0.0, -1.0), gen::to_mat(h)));
  CHECK(oracle::mat_max_abs_diff(gen::to_mat(uh), want) < 1e-10);
}

TEST_CASE("matrix_abs positive parts") {
  CHECK(qip::max_abs_diff(qip::matrix_abs(qip::pauli_z()),
                          ComplexMatrix::identity(2)) < 1e-12);
  CHECK(qip::max_abs_diff(
            qip::matrix_abs(Complex(-1.0, 0.0) * ComplexMatrix::identity(2)),
            ComplexMatrix::identity(2)) < 1e-12);

  const ComplexMatrix a = qip::pauli_x() - ComplexMatrix::identity(2);
  const oracle::Eigen2 e = oracle::eigen2_closed_form(gen::to_mat(a));
  oracle::Mat want = oracle::mat_zero(2, 2);
  for (int k = 0; k < 2; ++k) {
    const oracle::Vec col{e.vectors[0][static_cast<std::size_t>(k)],
                          e.vectors[1][static_cast<std::size_t>(k)]};
    want = oracle::mat_add(
        want, oracle::mat_scale(
                  Complex(std::abs(e.values[static_cast<std::size_t>(k)]), 0.0),
                  oracle::outer(col)));
  }
  CHECK(oracle::mat_max_abs_diff(gen::to_mat(qip::matrix_abs(a)), want) <
        1e-10);
}

TEST_CASE("predicates: unitary, hermitian, psd") {
  CHECK(qip::is_unitary(qip::hadamard_matrix()));
  CHECK(qip::is_unitary(qip::standard_gate(qip::GateKind::CNOT)));
  CHECK_FALSE(qip::is_unitary(diag2(1.0, 2.0)));
  CHECK(qip::is_hermitian(qip::pauli_y()));
  CHECK_FALSE(qip::is_hermitian(ComplexMatrix{{kOne, kOne},
                                              {Complex(0.0, 0.0), kOne}}));
  CHECK_FALSE(qip::is_psd(qip::pauli_z()));
  CHECK(qip::is_psd(diag2(0.0, 3.0)));

  qip::Rng rng(17);
  const ComplexMatrix u = gen::random_unitary(6, rng);
  CHECK(qip::is_unitary(u));
}

TEST_CASE("debug text round trip") {
  qip::Rng rng(18);
  const ComplexMatrix m = gen::random_matrix(3, rng);
  const ComplexMatrix back = ComplexMatrix::parse_debug_text(m.debug_text());
  CHECK(qip::max_abs_diff(m, back) < 1e-12);
}
