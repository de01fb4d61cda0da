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

#include "qipkit/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qip {
namespace {

double vector_norm(std::span<const Complex> v) {
  double sum = 0.0;
  for (const Complex& z : v) sum += std::norm(z);
  return std::sqrt(sum);
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 2) {
    throw DimensionError("PureState: dimension must be at least 2");
  }
  const double n = vector_norm(amplitudes_);
  if (std::abs(n - 1.0) > kTol) {
    throw InvariantError("PureState: norm is " + std::to_string(n) +
                         ", expected 1");
  }
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw DimensionError("PureState::basis: index " + std::to_string(index) +
                         " out of range for dim " + std::to_string(dim));
  }
  std::vector<Complex> amps(dim, Complex(0.0, 0.0));
  amps[index] = Complex(1.0, 0.0);
  return PureState(std::move(amps));
}

PureState PureState::qubit(Complex alpha, Complex beta) {
  return PureState({alpha, beta});
}

std::size_t PureState::num_qubits() const {
  const std::size_t d = dim();
  if ((d & (d - 1)) != 0) {
    throw DimensionError("PureState: dim " + std::to_string(d) +
                         " is not a power of two");
  }
  std::size_t n = 0;
  for (std::size_t x = d; x > 1; x >>= 1) ++n;
  return n;
}

Complex inner_product(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("inner_product: dims " + std::to_string(a.dim()) +
                         " and " + std::to_string(b.dim()) + " differ");
  }
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    sum += std::conj(a.amplitude(i)) * b.amplitude(i);
  }
  return sum;
}

bool equal_up_to_global_phase(const PureState& a, const PureState& b,
                              double tol) {
  if (a.dim() != b.dim()) return false;
  // The overlap of equal-up-to-phase unit vectors is exactly the phase.
  const Complex overlap = inner_product(a, b);
  if (std::abs(std::abs(overlap) - 1.0) > tol) return false;
  const Complex phase = overlap / std::abs(overlap);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (std::abs(phase * a.amplitude(i) - b.amplitude(i)) > tol) return false;
  }
  return true;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
  if (!matrix_.is_square() || matrix_.rows() < 2) {
    throw DimensionError("DensityMatrix: matrix must be square with dim >= 2");
  }
  if (!is_hermitian(matrix_)) {
    throw InvariantError("DensityMatrix: matrix is not Hermitian");
  }
  if (std::abs(trace(matrix_) - Complex(1.0, 0.0)) > kTol) {
    throw InvariantError("DensityMatrix: trace is not 1");
  }
  if (!is_psd(matrix_)) {
    throw InvariantError("DensityMatrix: matrix is not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0 / double(dim);
  return DensityMatrix(std::move(m));
}

std::size_t EnsembleMember::dim() const {
  return std::visit([](const auto& s) { return s.dim(); }, state);
}

DensityMatrix EnsembleMember::density() const {
  if (const auto* psi = std::get_if<PureState>(&state)) {
    return density_from_pure(*psi);
  }
  return std::get<DensityMatrix>(state);
}

Ensemble::Ensemble(std::vector<EnsembleMember> members)
    : members_(std::move(members)) {
  if (members_.empty()) {
    throw InvariantError("Ensemble: must have at least one member");
  }
  double total = 0.0;
  const std::size_t d = members_.front().dim();
  for (const EnsembleMember& m : members_) {
    if (m.prob < -kTol || m.prob > 1.0 + kTol) {
      throw InvariantError("Ensemble: probability " + std::to_string(m.prob) +
                           " outside [0, 1]");
    }
    if (m.dim() != d) {
      throw DimensionError("Ensemble: member dims differ");
    }
    total += m.prob;
  }
  if (std::abs(total - 1.0) > kTol) {
    throw InvariantError("Ensemble: probabilities sum to " +
                         std::to_string(total) + ", expected 1");
  }
}

Ensemble Ensemble::of_pure(std::vector<PureState> states,
                           std::vector<double> probs) {
  if (states.size() != probs.size()) {
    throw DimensionError("Ensemble::of_pure: state and probability counts differ");
  }
  std::vector<EnsembleMember> members;
  members.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    members.push_back({std::move(states[i]), probs[i]});
  }
  return Ensemble(std::move(members));
}

double BlochVector::norm() const {
  return std::sqrt(bx * bx + by * by + bz * bz);
}

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m{{0.0, 1.0}, {1.0, 0.0}};
  return m;
}

const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m{{Complex(0.0, 0.0), Complex(0.0, -1.0)},
                               {Complex(0.0, 1.0), Complex(0.0, 0.0)}};
  return m;
}

const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
  return m;
}

const ComplexMatrix& hadamard_matrix() {
  const double r = 1.0 / std::sqrt(2.0);
  static const ComplexMatrix m{{r, r}, {r, -r}};
  return m;
}

DensityMatrix density_from_pure(const PureState& psi) {
  const std::size_t d = psi.dim();
  ComplexMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      m(r, c) = psi.amplitude(r) * std::conj(psi.amplitude(c));
    }
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix density_from_ensemble(const Ensemble& e) {
  const std::size_t d = e.dim();
  ComplexMatrix sum(d, d);
  for (const EnsembleMember& m : e.members()) {
    const DensityMatrix rho = m.density();
    for (std::size_t i = 0; i < sum.size(); ++i) {
      sum.entries()[i] += m.prob * rho.matrix().entries()[i];
    }
  }
  return DensityMatrix(std::move(sum));
}

double purity(const DensityMatrix& rho) {
  return trace(matmul(rho.matrix(), rho.matrix())).real();
}

bool is_pure(const DensityMatrix& rho) { return purity(rho) > 1.0 - 1e-8; }

BlochVector bloch_from_density(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw DimensionError("bloch_from_density: state must be a single qubit");
  }
  BlochVector b;
  b.bx = trace(matmul(rho.matrix(), pauli_x())).real();
  b.by = trace(matmul(rho.matrix(), pauli_y())).real();
  b.bz = trace(matmul(rho.matrix(), pauli_z())).real();
  return b;
}

DensityMatrix density_from_bloch(const BlochVector& b) {
  if (b.norm() > 1.0 + kTol) {
    throw InvariantError("density_from_bloch: |b| = " +
                         std::to_string(b.norm()) + " exceeds 1");
  }
  ComplexMatrix m(2, 2);
  m(0, 0) = Complex(0.5 * (1.0 + b.bz), 0.0);
  m(0, 1) = Complex(0.5 * b.bx, -0.5 * b.by);
  m(1, 0) = Complex(0.5 * b.bx, 0.5 * b.by);
  m(1, 1) = Complex(0.5 * (1.0 - b.bz), 0.0);
  return DensityMatrix(std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a,
                            std::size_t dim_b, Subsystem keep) {
  if (rho.dim() != dim_a * dim_b) {
    throw DimensionError("partial_trace: dim " + std::to_string(rho.dim()) +
                         " does not factor as " + std::to_string(dim_a) +
                         " x " + std::to_string(dim_b));
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out(dim_a, dim_a);
    for (std::size_t r = 0; r < dim_a; ++r) {
      for (std::size_t c = 0; c < dim_a; ++c) {
        Complex sum(0.0, 0.0);
        for (std::size_t k = 0; k < dim_b; ++k) {
          sum += rho(r * dim_b + k, c * dim_b + k);
        }
        out(r, c) = sum;
      }
    }
    return DensityMatrix(std::move(out));
  }
  ComplexMatrix out(dim_b, dim_b);
  for (std::size_t r = 0; r < dim_b; ++r) {
    for (std::size_t c = 0; c < dim_b; ++c) {
      Complex sum(0.0, 0.0);
      for (std::size_t k = 0; k < dim_a; ++k) {
        sum += rho(k * dim_b + r, k * dim_b + c);
      }
      out(r, c) = sum;
    }
  }
  return DensityMatrix(std::move(out));
}

DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u) {
  if (u.rows() != rho.dim()) {
    throw DimensionError("apply_unitary: dims differ");
  }
  if (!is_unitary(u)) {
    throw InvariantError("apply_unitary: operator is not unitary");
  }
  return DensityMatrix(matmul(matmul(u, rho.matrix()), adjoint(u)));
}

DensityMatrix apply_kraus(const DensityMatrix& rho,
                          std::span<const ComplexMatrix> ops) {
  if (ops.empty()) {
    throw InvariantError("apply_kraus: empty operator list");
  }
  const std::size_t d = rho.dim();
  ComplexMatrix completeness(d, d);
  for (const ComplexMatrix& e : ops) {
    if (e.rows() != d || e.cols() != d) {
      throw DimensionError("apply_kraus: operator shape mismatch");
    }
    completeness = completeness + matmul(adjoint(e), e);
  }
  if (max_abs_diff(completeness, ComplexMatrix::identity(d)) > kTol) {
    throw InvariantError("apply_kraus: operators do not satisfy completeness");
  }
  ComplexMatrix out(d, d);
  for (const ComplexMatrix& e : ops) {
    out = out + matmul(matmul(e, rho.matrix()), adjoint(e));
  }
  // Symmetrize away the last-bit rounding from the operator products so the
  // result passes construction checks.
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = r; c < d; ++c) {
      const Complex avg = 0.5 * (out(r, c) + std::conj(out(c, r)));
      out(r, c) = avg;
      out(c, r) = std::conj(avg);
    }
  }
  return DensityMatrix(std::move(out));
}

PureState tensor_states(const PureState& a, const PureState& b) {
  std::vector<Complex> amps;
  amps.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      amps.push_back(a.amplitude(i) * b.amplitude(j));
    }
  }
  return PureState(std::move(amps));
}

bool is_product_two_qubit(const PureState& psi) {
  if (psi.dim() != 4) {
    throw DimensionError("is_product_two_qubit: state must be two qubits");
  }
  const DensityMatrix reduced =
      partial_trace(density_from_pure(psi), 2, 2, Subsystem::A);
  return is_pure(reduced);
}

PureState random_pure(std::size_t dim, Rng& rng) {
  if (dim < 2) {
    throw DimensionError("random_pure: dim must be at least 2");
  }
  std::vector<Complex> amps(dim);
  for (Complex& z : amps) z = Complex(rng.normal(), rng.normal());
  const double n = vector_norm(amps);
  for (Complex& z : amps) z /= n;
  return PureState(std::move(amps));
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank < 1 || rank > dim) {
    throw DimensionError("random_density: rank must be in [1, dim]");
  }
  if (rank == 1) {
    return density_from_pure(random_pure(dim, rng));
  }
  const PureState joint = random_pure(dim * rank, rng);
  return partial_trace(density_from_pure(joint), dim, rank, Subsystem::A);
}

}  // namespace qip
