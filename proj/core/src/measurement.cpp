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

#include "qipkit/measurement.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "qipkit/circuit.hpp"

namespace qip {
namespace {

constexpr double kMeasurementTol = 1e-9;

ComplexMatrix projector_onto(const PureState& v) {
  const std::size_t d = v.dim();
  ComplexMatrix p(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      p(r, c) = v.amplitude(r) * std::conj(v.amplitude(c));
    }
  }
  return p;
}

void require_orthonormal(const std::vector<PureState>& vectors, double tol) {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i; j < vectors.size(); ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(std::abs(inner_product(vectors[i], vectors[j])) -
                   expected) > tol) {
        throw InvariantError("measurement: vectors are not orthonormal");
      }
    }
  }
}

DensityMatrix hermitized_density(ComplexMatrix m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = r; c < m.cols(); ++c) {
      const Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
      m(r, c) = avg;
      m(c, r) = std::conj(avg);
    }
  }
  return DensityMatrix(std::move(m));
}

/// Shared branch assembly: given outcome weights and the unnormalized
/// branch builders, produce a validated distribution.
template <typename MakePost>
OutcomeDistribution assemble(const std::vector<double>& probs,
                             MakePost&& make_post) {
  std::vector<OutcomeDistribution::PostState> posts;
  posts.reserve(probs.size());
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] > kZeroProb) {
      posts.push_back(make_post(i));
    } else {
      posts.push_back(std::nullopt);
    }
  }
  return OutcomeDistribution(probs, std::move(posts));
}

PureState normalized_pure(std::vector<Complex> amps, double prob) {
  const double scale = 1.0 / std::sqrt(prob);
  for (Complex& z : amps) z *= scale;
  return PureState(std::move(amps));
}

std::vector<Complex> operator_apply(const ComplexMatrix& op,
                                    const PureState& psi) {
  return matvec(op, psi.amplitudes());
}

double quadratic_form(const PureState& psi, const ComplexMatrix& op) {
  const std::vector<Complex> opsi = operator_apply(op, psi);
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    sum += std::conj(psi.amplitude(i)) * opsi[i];
  }
  if (std::abs(sum.imag()) > kTol) {
    throw InvariantError("measurement: probability has imaginary residue");
  }
  return sum.real();
}

double operator_trace_product(const ComplexMatrix& op,
                              const DensityMatrix& rho) {
  const Complex t = trace(matmul(op, rho.matrix()));
  if (std::abs(t.imag()) > kTol) {
    throw InvariantError("measurement: probability has imaginary residue");
  }
  return t.real();
}

}  // namespace

ProjectiveMeasurement::ProjectiveMeasurement(
    std::vector<ComplexMatrix> projectors, std::vector<double> labels)
    : projectors_(std::move(projectors)), labels_(std::move(labels)) {
  if (projectors_.empty()) {
    throw InvariantError("ProjectiveMeasurement: no projectors");
  }
  const std::size_t d = projectors_.front().rows();
  ComplexMatrix sum(d, d);
  for (std::size_t i = 0; i < projectors_.size(); ++i) {
    const ComplexMatrix& p = projectors_[i];
    if (p.rows() != d || p.cols() != d) {
      throw DimensionError("ProjectiveMeasurement: projector shape mismatch");
    }
    if (!is_hermitian(p)) {
      throw InvariantError("ProjectiveMeasurement: projector not Hermitian");
    }
    if (max_abs_diff(matmul(p, p), p) > kMeasurementTol) {
      throw InvariantError("ProjectiveMeasurement: projector not idempotent");
    }
    for (std::size_t j = i + 1; j < projectors_.size(); ++j) {
      const ComplexMatrix product = matmul(p, projectors_[j]);
      if (max_abs_diff(product, ComplexMatrix::zero(d, d)) > kMeasurementTol) {
        throw InvariantError(
            "ProjectiveMeasurement: projectors not pairwise orthogonal");
      }
    }
    sum = sum + p;
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(d)) > kTol) {
    throw InvariantError(
        "ProjectiveMeasurement: projectors do not sum to the identity");
  }
  if (labels_.empty()) {
    labels_.resize(projectors_.size());
    std::iota(labels_.begin(), labels_.end(), 0.0);
  }
  if (labels_.size() != projectors_.size()) {
    throw DimensionError("ProjectiveMeasurement: label count mismatch");
  }
}

ProjectiveMeasurement ProjectiveMeasurement::from_basis(
    const std::vector<PureState>& basis) {
  if (basis.empty() || basis.size() != basis.front().dim()) {
    throw DimensionError(
        "ProjectiveMeasurement::from_basis: need dim basis vectors");
  }
  require_orthonormal(basis, kMeasurementTol);
  std::vector<ComplexMatrix> projectors;
  projectors.reserve(basis.size());
  for (const PureState& v : basis) projectors.push_back(projector_onto(v));
  return ProjectiveMeasurement(std::move(projectors));
}

ProjectiveMeasurement ProjectiveMeasurement::from_observable(
    const ComplexMatrix& observable) {
  const HermitianEigen eig = hermitian_eigen(observable);
  const std::size_t d = eig.eigenvalues.size();
  std::vector<ComplexMatrix> projectors;
  std::vector<double> labels;
  std::size_t i = 0;
  while (i < d) {
    std::size_t j = i;
    while (j < d && eig.eigenvalues[j] - eig.eigenvalues[i] <= 1e-9) ++j;
    ComplexMatrix p(d, d);
    for (std::size_t k = i; k < j; ++k) {
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
          p(r, c) += eig.eigenvectors(r, k) * std::conj(eig.eigenvectors(c, k));
        }
      }
    }
    projectors.push_back(std::move(p));
    labels.push_back(eig.eigenvalues[i]);
    i = j;
  }
  return ProjectiveMeasurement(std::move(projectors), std::move(labels));
}

Povm::Povm(std::vector<ComplexMatrix> effects) : effects_(std::move(effects)) {
  if (effects_.empty()) {
    throw InvariantError("Povm: no effects");
  }
  const std::size_t d = effects_.front().rows();
  ComplexMatrix sum(d, d);
  for (const ComplexMatrix& e : effects_) {
    if (e.rows() != d || e.cols() != d) {
      throw DimensionError("Povm: effect shape mismatch");
    }
    if (!is_psd(e)) {
      throw InvariantError("Povm: effect is not positive semidefinite");
    }
    sum = sum + e;
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(d)) > kTol) {
    throw InvariantError("Povm: effects do not sum to the identity");
  }
}

OutcomeDistribution::OutcomeDistribution(std::vector<double> probs,
                                         std::vector<PostState> post_states)
    : probs_(std::move(probs)), post_states_(std::move(post_states)) {
  if (probs_.size() != post_states_.size()) {
    throw DimensionError("OutcomeDistribution: probs/post-states mismatch");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i] < -kZeroProb) {
      throw InvariantError("OutcomeDistribution: negative probability " +
                           std::to_string(probs_[i]));
    }
    if (probs_[i] < 0.0) probs_[i] = 0.0;
    if (probs_[i] > kZeroProb && !post_states_[i].has_value()) {
      throw InvariantError(
          "OutcomeDistribution: probable branch lacks a post-state");
    }
    total += probs_[i];
  }
  if (std::abs(total - 1.0) > kTol) {
    throw InvariantError("OutcomeDistribution: probabilities sum to " +
                         std::to_string(total));
  }
}

OutcomeDistribution measure_in_basis(const PureState& psi,
                                     const std::vector<PureState>& basis) {
  if (basis.empty() || basis.size() != psi.dim()) {
    throw DimensionError("measure_in_basis: need dim basis vectors");
  }
  require_orthonormal(basis, kMeasurementTol);
  std::vector<double> probs;
  probs.reserve(basis.size());
  for (const PureState& u : basis) {
    probs.push_back(std::norm(inner_product(u, psi)));
  }
  return assemble(probs, [&basis](std::size_t i) { return basis[i]; });
}

OutcomeDistribution measure_in_basis(const DensityMatrix& rho,
                                     const std::vector<PureState>& basis) {
  if (basis.empty() || basis.size() != rho.dim()) {
    throw DimensionError("measure_in_basis: need dim basis vectors");
  }
  require_orthonormal(basis, kMeasurementTol);
  std::vector<double> probs;
  probs.reserve(basis.size());
  for (const PureState& u : basis) {
    probs.push_back(quadratic_form(u, rho.matrix()));
  }
  return assemble(probs, [&basis](std::size_t i) { return basis[i]; });
}

OutcomeDistribution von_neumann(const PureState& psi,
                                const ProjectiveMeasurement& m) {
  if (m.dim() != psi.dim()) {
    throw DimensionError("von_neumann: dims differ");
  }
  std::vector<double> probs;
  probs.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    probs.push_back(quadratic_form(psi, m.projector(i)));
  }
  return assemble(probs, [&](std::size_t i) {
    return normalized_pure(operator_apply(m.projector(i), psi), probs[i]);
  });
}

OutcomeDistribution von_neumann(const DensityMatrix& rho,
                                const ProjectiveMeasurement& m) {
  if (m.dim() != rho.dim()) {
    throw DimensionError("von_neumann: dims differ");
  }
  std::vector<double> probs;
  probs.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    probs.push_back(operator_trace_product(m.projector(i), rho));
  }
  return assemble(probs, [&](std::size_t i) {
    const ComplexMatrix& p = m.projector(i);
    ComplexMatrix branch = matmul(matmul(p, rho.matrix()), p);
    const double scale = 1.0 / probs[i];
    for (Complex& z : branch.entries()) z *= scale;
    return hermitized_density(std::move(branch));
  });
}

OutcomeDistribution povm_measure(const PureState& psi, const Povm& p) {
  if (p.dim() != psi.dim()) {
    throw DimensionError("povm_measure: dims differ");
  }
  std::vector<double> probs;
  probs.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    probs.push_back(quadratic_form(psi, p.effect(i)));
  }
  return assemble(probs, [&](std::size_t i) {
    const ComplexMatrix m = matrix_sqrt_psd(p.effect(i));
    return normalized_pure(operator_apply(m, psi), probs[i]);
  });
}

OutcomeDistribution povm_measure(const DensityMatrix& rho, const Povm& p) {
  if (p.dim() != rho.dim()) {
    throw DimensionError("povm_measure: dims differ");
  }
  std::vector<double> probs;
  probs.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    probs.push_back(operator_trace_product(p.effect(i), rho));
  }
  return assemble(probs, [&](std::size_t i) {
    const ComplexMatrix m = matrix_sqrt_psd(p.effect(i));
    ComplexMatrix branch = matmul(matmul(m, rho.matrix()), adjoint(m));
    const double scale = 1.0 / probs[i];
    for (Complex& z : branch.entries()) z *= scale;
    return hermitized_density(std::move(branch));
  });
}

double expectation(const PureState& psi, const ComplexMatrix& observable) {
  if (!is_hermitian(observable)) {
    throw InvariantError("expectation: observable is not Hermitian");
  }
  if (observable.rows() != psi.dim()) {
    throw DimensionError("expectation: dims differ");
  }
  return quadratic_form(psi, observable);
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& observable) {
  if (!is_hermitian(observable)) {
    throw InvariantError("expectation: observable is not Hermitian");
  }
  if (observable.rows() != rho.dim()) {
    throw DimensionError("expectation: dims differ");
  }
  return operator_trace_product(observable, rho);
}

ComplexMatrix observable_from_eigensystem(const std::vector<double>& lambdas,
                                          const std::vector<PureState>& basis) {
  if (lambdas.size() != basis.size()) {
    throw DimensionError(
        "observable_from_eigensystem: eigenvalue/vector counts differ");
  }
  if (basis.empty()) {
    throw DimensionError("observable_from_eigensystem: empty basis");
  }
  require_orthonormal(basis, kMeasurementTol);
  const std::size_t d = basis.front().dim();
  ComplexMatrix h(d, d);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        h(r, c) += lambdas[i] * basis[i].amplitude(r) *
                   std::conj(basis[i].amplitude(c));
      }
    }
  }
  return h;
}

std::size_t sample(const OutcomeDistribution& dist, Rng& rng) {
  const double u = rng.uniform01();
  double cumulative = 0.0;
  std::size_t last_viable = 0;
  bool any_viable = false;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (dist.prob(i) < kZeroProb) continue;
    last_viable = i;
    any_viable = true;
    cumulative += dist.prob(i);
    if (u < cumulative) return i;
  }
  if (!any_viable) {
    throw InvariantError("sample: no outcome has positive probability");
  }
  return last_viable;
}

DensityMatrix dephase_lost_record(const DensityMatrix& rho,
                                  const ProjectiveMeasurement& m) {
  if (m.dim() != rho.dim()) {
    throw DimensionError("dephase_lost_record: dims differ");
  }
  ComplexMatrix out(rho.dim(), rho.dim());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const ComplexMatrix& p = m.projector(i);
    out = out + matmul(matmul(p, rho.matrix()), p);
  }
  return hermitized_density(std::move(out));
}

Povm povm_from_vectors(const std::vector<PureState>& vectors) {
  if (vectors.empty()) {
    throw InvariantError("povm_from_vectors: no vectors");
  }
  const std::size_t d = vectors.front().dim();
  ComplexMatrix sum(d, d);
  for (const PureState& v : vectors) {
    if (v.dim() != d) {
      throw DimensionError("povm_from_vectors: vector dims differ");
    }
    sum = sum + projector_onto(v);
  }
  const double c = trace(sum).real() / double(d);
  ComplexMatrix scaled_identity = ComplexMatrix::identity(d);
  for (Complex& z : scaled_identity.entries()) z *= c;
  const double residual = max_abs_diff(sum, scaled_identity);
  if (c <= 0.0 || residual > kMeasurementTol) {
    throw InvariantError(
        "povm_from_vectors: projector sum is not a multiple of the identity "
        "(residual " +
        std::to_string(residual) + ")");
  }
  std::vector<ComplexMatrix> effects;
  effects.reserve(vectors.size());
  for (const PureState& v : vectors) {
    ComplexMatrix e = projector_onto(v);
    for (Complex& z : e.entries()) z /= c;
    effects.push_back(std::move(e));
  }
  return Povm(std::move(effects));
}

Povm as_povm(const ProjectiveMeasurement& m) {
  std::vector<ComplexMatrix> effects;
  effects.reserve(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) effects.push_back(m.projector(i));
  return Povm(std::move(effects));
}

std::vector<PureState> computational_basis(std::size_t n) {
  const std::size_t dim = std::size_t(1) << n;
  std::vector<PureState> basis;
  basis.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    basis.push_back(PureState::basis(dim, i));
  }
  return basis;
}

std::vector<PureState> hadamard_basis(std::size_t n) {
  ComplexMatrix h = hadamard_matrix();
  for (std::size_t q = 1; q < n; ++q) h = kron(h, hadamard_matrix());
  std::vector<PureState> basis;
  const std::size_t dim = std::size_t(1) << n;
  basis.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    basis.push_back(
        PureState(matvec(h, PureState::basis(dim, i).amplitudes())));
  }
  return basis;
}

std::vector<PureState> bell_basis() {
  std::vector<PureState> basis;
  basis.reserve(4);
  for (unsigned a = 0; a < 2; ++a) {
    for (unsigned b = 0; b < 2; ++b) {
      basis.push_back(bell_state(a, b));
    }
  }
  return basis;
}

namespace {

PureState planar_state(double angle) {
  return PureState::qubit(Complex(std::cos(angle), 0.0),
                          Complex(std::sin(angle), 0.0));
}

}  // namespace

std::vector<PureState> psi01_states() {
  return {planar_state(std::numbers::pi / 12.0),
          planar_state(5.0 * std::numbers::pi / 12.0)};
}

std::vector<PureState> trine_states() {
  return {planar_state(11.0 * std::numbers::pi / 12.0),
          planar_state(7.0 * std::numbers::pi / 12.0),
          planar_state(std::numbers::pi / 4.0)};
}

Povm trine_povm() { return povm_from_vectors(trine_states()); }

}  // namespace qip
