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

#include <optional>
#include <variant>
#include <vector>

#include "qipkit/complex_matrix.hpp"
#include "qipkit/rng.hpp"
#include "qipkit/state.hpp"

namespace qip {

/// Probability below which an outcome branch is treated as impossible and
/// carries no post-state.
inline constexpr double kZeroProb = 1e-12;

/// A complete set of pairwise-orthogonal projectors summing to the
/// identity. Each outcome carries a numeric label: the eigenvalue when the
/// measurement came from an observable, the outcome index otherwise.
class ProjectiveMeasurement {
 public:
  explicit ProjectiveMeasurement(std::vector<ComplexMatrix> projectors,
                                 std::vector<double> labels = {});

  /// Rank-1 projectors onto an orthonormal basis.
  static ProjectiveMeasurement from_basis(const std::vector<PureState>& basis);

  /// Eigenprojectors of a Hermitian observable, grouped by eigenvalue
  /// (equal within 1e-9), labeled by the eigenvalue.
  static ProjectiveMeasurement from_observable(const ComplexMatrix& observable);

  std::size_t size() const { return projectors_.size(); }
  std::size_t dim() const { return projectors_.front().rows(); }
  const ComplexMatrix& projector(std::size_t i) const { return projectors_[i]; }
  double label(std::size_t i) const { return labels_[i]; }
  const std::vector<double>& labels() const { return labels_; }

 private:
  std::vector<ComplexMatrix> projectors_;
  std::vector<double> labels_;
};

/// Positive-semidefinite effects summing to the identity.
class Povm {
 public:
  explicit Povm(std::vector<ComplexMatrix> effects);

  std::size_t size() const { return effects_.size(); }
  std::size_t dim() const { return effects_.front().rows(); }
  const ComplexMatrix& effect(std::size_t i) const { return effects_[i]; }

 private:
  std::vector<ComplexMatrix> effects_;
};

/// Measurement result: outcome probabilities plus the state left behind on
/// each branch. Branches with probability below kZeroProb have no defined
/// post-state.
class OutcomeDistribution {
 public:
  using PostState = std::optional<std::variant<PureState, DensityMatrix>>;

  OutcomeDistribution(std::vector<double> probs,
                      std::vector<PostState> post_states);

  std::size_t size() const { return probs_.size(); }
  double prob(std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }
  const PostState& post_state(std::size_t i) const { return post_states_[i]; }

 private:
  std::vector<double> probs_;
  std::vector<PostState> post_states_;
};

/// Measure in an orthonormal basis: outcome i with probability
/// |<u_i|psi>|^2 (or <u_i|rho|u_i>), post-state |u_i>.
OutcomeDistribution measure_in_basis(const PureState& psi,
                                     const std::vector<PureState>& basis);
OutcomeDistribution measure_in_basis(const DensityMatrix& rho,
                                     const std::vector<PureState>& basis);

/// Projective measurement: prob <psi|P_i|psi>, post P_i|psi>/sqrt(prob);
/// on mixed states prob Tr(P_i rho), post P_i rho P_i / prob.
OutcomeDistribution von_neumann(const PureState& psi,
                                const ProjectiveMeasurement& m);
OutcomeDistribution von_neumann(const DensityMatrix& rho,
                                const ProjectiveMeasurement& m);

/// POVM measurement: prob <psi|E_i|psi> (or Tr(E_i rho)); the post-state
/// uses the square-root instrument M_i = sqrt(E_i), which reduces to the
/// projective rule when E_i is a projector.
OutcomeDistribution povm_measure(const PureState& psi, const Povm& p);
OutcomeDistribution povm_measure(const DensityMatrix& rho, const Povm& p);

/// <psi|H|psi> or Tr(H rho) for Hermitian H.
double expectation(const PureState& psi, const ComplexMatrix& observable);
double expectation(const DensityMatrix& rho, const ComplexMatrix& observable);

/// H = sum lambda_i |u_i><u_i| over an orthonormal set.
ComplexMatrix observable_from_eigensystem(const std::vector<double>& lambdas,
                                          const std::vector<PureState>& basis);

/// Draw an outcome index by inverse CDF over the stored order.
std::size_t sample(const OutcomeDistribution& dist, Rng& rng);

/// The state after measuring and losing the record: sum P_i rho P_i.
DensityMatrix dephase_lost_record(const DensityMatrix& rho,
                                  const ProjectiveMeasurement& m);

/// Build a POVM from vectors whose projectors sum to c * I: effects
/// (1/c)|phi_i><phi_i|. Reports the residual when they do not.
Povm povm_from_vectors(const std::vector<PureState>& vectors);

/// Every projective measurement is a POVM with projector effects.
Povm as_povm(const ProjectiveMeasurement& m);

// Stock measurement ingredients, also reachable from the CLI by name.

/// All n-qubit computational basis states, in index order.
std::vector<PureState> computational_basis(std::size_t n);
/// H^{(x)n} applied to each computational basis state: |+>/|-> products.
std::vector<PureState> hadamard_basis(std::size_t n);
/// The four Bell states, ordered by the basis label they come from.
std::vector<PureState> bell_basis();

/// The pair of single-qubit states at angles pi/12 and 5pi/12 from |0>,
/// symmetric about the Hadamard axis; the standard nonorthogonal signal
/// pair for measurement-channel examples.
std::vector<PureState> psi01_states();

/// Three real unit vectors 120 degrees apart on the Bloch circle, placed
/// so the first is orthogonal to psi1 and the second to psi0.
std::vector<PureState> trine_states();

/// The trine POVM: effects (2/3)|phi_i><phi_i|.
Povm trine_povm();

}  // namespace qip
