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
#include <utility>
#include <vector>

#include "qipkit/measurement.hpp"
#include "qipkit/rng.hpp"
#include "qipkit/state.hpp"

namespace qip {

/// Probability mass function: nonnegative entries summing to 1 within
/// 1e-10.
class ClassicalDistribution {
 public:
  explicit ClassicalDistribution(std::vector<double> probs);

  std::size_t size() const { return probs_.size(); }
  double prob(std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

/// Discrete memoryless channel: transition[a][i] = P(output i | input a),
/// every row a valid distribution.
class ClassicalChannel {
 public:
  explicit ClassicalChannel(std::vector<std::vector<double>> transition);

  std::size_t inputs() const { return transition_.size(); }
  std::size_t outputs() const { return transition_.front().size(); }
  double prob(std::size_t input, std::size_t output) const {
    return transition_[input][output];
  }
  const std::vector<std::vector<double>>& transition() const {
    return transition_;
  }

 private:
  std::vector<std::vector<double>> transition_;
};

/// Weakly typical binary strings of length n: every member z satisfies
/// 2^{-n(S+eps)} <= lambda_z <= 2^{-n(S-eps)}. Strings are stored as
/// integers with symbol 1 most significant (z_1 z_2 ... z_n left to right).
struct TypicalSet {
  std::size_t n = 0;
  double epsilon = 0.0;
  std::vector<std::uint32_t> members;
  double total_prob = 0.0;

  std::size_t size() const { return members.size(); }
};

/// The typical subspace of an i.i.d. qubit source: the span of the product
/// eigenbasis states indexed by the typical set of the source eigenvalue
/// distribution. eigenvalues[0] >= eigenvalues[1]; column i of eigenbasis
/// is the matching eigenvector, and member bits select between them.
struct TypicalSubspace {
  std::size_t n = 0;
  double epsilon = 0.0;
  std::vector<std::uint32_t> members;
  double total_prob = 0.0;
  std::vector<double> eigenvalues;
  ComplexMatrix eigenbasis;

  std::size_t dimension() const { return members.size(); }
};

/// -x log2 x - (1-x) log2 (1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// -sum p log2 p, in bits.
double shannon_entropy(const ClassicalDistribution& p);

/// S(rho) = -Tr(rho log2 rho): the Shannon entropy of the spectrum.
/// Eigenvalues below 1e-12 contribute nothing.
double von_neumann_entropy(const DensityMatrix& rho);

/// F(sigma, omega) = (Tr sqrt(sqrt(sigma) omega sqrt(sigma)))^2.
double fidelity(const DensityMatrix& sigma, const DensityMatrix& omega);

/// |<psi|P|psi>|^2, the fidelity between a state and its (unnormalized)
/// image under the projector P.
double projection_fidelity(const PureState& psi, const ComplexMatrix& projector);

/// D(sigma, omega) = Tr|sigma - omega| / 2.
double trace_distance(const DensityMatrix& sigma, const DensityMatrix& omega);

/// chi = S(rho) - sum p_a S(rho_a); equals S(rho) for all-pure ensembles.
double holevo_chi(const Ensemble& e);

/// The classical channel a measurement carves out of an ensemble:
/// transition[a][i] = Tr(E_i rho_a).
ClassicalChannel induced_channel(const Ensemble& e, const Povm& m);
ClassicalChannel induced_channel(const Ensemble& e,
                                 const ProjectiveMeasurement& m);

/// I(X;Y) = H(Y) - H(Y|X), in bits.
double mutual_information(const ClassicalDistribution& prior,
                          const ClassicalChannel& ch);

/// The largest mutual information reachable with the supplied measurement
/// list (priors taken from the ensemble), and which measurement attains it.
std::pair<double, std::size_t> accessible_info_over(
    const Ensemble& e, const std::vector<Povm>& measurements);

/// Exact enumeration of the weakly typical set; n <= 24.
TypicalSet typical_set(const ClassicalDistribution& lambda, std::size_t n,
                       double epsilon);

/// Typical subspace of n copies of a single-qubit pure-state source.
TypicalSubspace typical_subspace(const Ensemble& e, std::size_t n,
                                 double epsilon);

/// Average fidelity between source strings and their projections onto the
/// typical subspace, F = sum_x P(x) |<Psi_x|Pi|Psi_x>|^2, by exact
/// enumeration over all |X|^n source strings. Overlaps factorize per
/// letter; the projector is never materialized.
double average_projection_fidelity(const Ensemble& e, std::size_t n,
                                   double epsilon);

/// Monte Carlo estimate of the same quantity from sampled source strings.
double average_projection_fidelity(const Ensemble& e, std::size_t n,
                                   double epsilon, std::size_t trials,
                                   Rng& rng);

}  // namespace qip
