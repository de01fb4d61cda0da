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

#include "qipkit/info.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>

namespace qip {
namespace {

constexpr double kEntropyFloor = 1e-12;
constexpr std::size_t kMaxBlockLength = 24;

double plogp(double p) {
  if (p < kEntropyFloor) return 0.0;
  return p * std::log2(p);
}

/// The two eigenvalue weights (descending) and matching eigenvector columns
/// of a single-qubit source's density matrix.
struct QubitSourceSpectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenbasis;
};

QubitSourceSpectrum source_spectrum(const Ensemble& e) {
  for (const EnsembleMember& m : e.members()) {
    if (!std::holds_alternative<PureState>(m.state) || m.dim() != 2) {
      throw InvariantError(
          "typical subspace: source members must be single-qubit pure states");
    }
  }
  const DensityMatrix rho = density_from_ensemble(e);
  HermitianEigen eig = hermitian_eigen(rho.matrix());
  QubitSourceSpectrum s;
  s.eigenvalues = {eig.eigenvalues[1], eig.eigenvalues[0]};
  s.eigenbasis = ComplexMatrix(2, 2);
  for (std::size_t r = 0; r < 2; ++r) {
    s.eigenbasis(r, 0) = eig.eigenvectors(r, 1);
    s.eigenbasis(r, 1) = eig.eigenvectors(r, 0);
  }
  return s;
}

/// Typical popcounts for a binary distribution: string z is typical iff
/// its number of ones c satisfies the two-sided probability bound, so
/// membership reduces to a set of counts.
std::vector<bool> typical_counts(double lambda0, double lambda1,
                                 std::size_t n, double epsilon,
                                 double entropy) {
  std::vector<bool> typical(n + 1, false);
  for (std::size_t c = 0; c <= n; ++c) {
    if ((c > 0 && lambda1 < kEntropyFloor) ||
        (c < n && lambda0 < kEntropyFloor)) {
      continue;
    }
    double log_prob = 0.0;
    if (c < n) log_prob += double(n - c) * std::log2(lambda0);
    if (c > 0) log_prob += double(c) * std::log2(lambda1);
    const double rate = -log_prob / double(n);
    typical[c] = rate >= entropy - epsilon && rate <= entropy + epsilon;
  }
  return typical;
}

void check_block_length(std::size_t n) {
  if (n == 0 || n > kMaxBlockLength) {
    throw DimensionError("typical set: block length must be in [1, " +
                         std::to_string(kMaxBlockLength) + "]");
  }
}

}  // namespace

ClassicalDistribution::ClassicalDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw InvariantError("ClassicalDistribution: empty");
  }
  double total = 0.0;
  for (double p : probs_) {
    if (p < -kZeroProb) {
      throw InvariantError("ClassicalDistribution: negative probability");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kTol) {
    throw InvariantError("ClassicalDistribution: probabilities sum to " +
                         std::to_string(total));
  }
}

ClassicalChannel::ClassicalChannel(std::vector<std::vector<double>> transition)
    : transition_(std::move(transition)) {
  if (transition_.empty()) {
    throw InvariantError("ClassicalChannel: no inputs");
  }
  const std::size_t outputs = transition_.front().size();
  for (const std::vector<double>& row : transition_) {
    if (row.size() != outputs) {
      throw DimensionError("ClassicalChannel: ragged transition matrix");
    }
    ClassicalDistribution check(row);
  }
}

double binary_entropy(double x) {
  if (x < -kZeroProb || x > 1.0 + kZeroProb) {
    throw InvariantError("binary_entropy: argument outside [0, 1]");
  }
  return -plogp(x) - plogp(1.0 - x);
}

double shannon_entropy(const ClassicalDistribution& p) {
  double h = 0.0;
  for (double pi : p.probs()) h -= plogp(pi);
  return h;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const HermitianEigen eig = hermitian_eigen(rho.matrix());
  double h = 0.0;
  for (double lambda : eig.eigenvalues) h -= plogp(lambda);
  return h;
}

double fidelity(const DensityMatrix& sigma, const DensityMatrix& omega) {
  if (sigma.dim() != omega.dim()) {
    throw DimensionError("fidelity: dims differ");
  }
  const ComplexMatrix root = matrix_sqrt_psd(sigma.matrix());
  ComplexMatrix inner = matmul(matmul(root, omega.matrix()), root);
  for (std::size_t r = 0; r < inner.rows(); ++r) {
    for (std::size_t c = r; c < inner.cols(); ++c) {
      const Complex avg = 0.5 * (inner(r, c) + std::conj(inner(c, r)));
      inner(r, c) = avg;
      inner(c, r) = std::conj(avg);
    }
  }
  const double root_trace = trace(matrix_sqrt_psd(inner)).real();
  return root_trace * root_trace;
}

double projection_fidelity(const PureState& psi,
                           const ComplexMatrix& projector) {
  if (projector.rows() != psi.dim() || projector.cols() != psi.dim()) {
    throw DimensionError("projection_fidelity: dims differ");
  }
  const std::vector<Complex> projected = matvec(projector, psi.amplitudes());
  Complex overlap(0.0, 0.0);
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    overlap += std::conj(psi.amplitude(i)) * projected[i];
  }
  return std::norm(overlap);
}

double trace_distance(const DensityMatrix& sigma, const DensityMatrix& omega) {
  if (sigma.dim() != omega.dim()) {
    throw DimensionError("trace_distance: dims differ");
  }
  const HermitianEigen eig =
      hermitian_eigen(sigma.matrix() - omega.matrix());
  double sum = 0.0;
  for (double lambda : eig.eigenvalues) sum += std::abs(lambda);
  return 0.5 * sum;
}

double holevo_chi(const Ensemble& e) {
  double chi = von_neumann_entropy(density_from_ensemble(e));
  for (const EnsembleMember& m : e.members()) {
    if (m.prob < kZeroProb) continue;
    if (std::holds_alternative<PureState>(m.state)) continue;
    chi -= m.prob * von_neumann_entropy(std::get<DensityMatrix>(m.state));
  }
  return chi;
}

ClassicalChannel induced_channel(const Ensemble& e, const Povm& m) {
  if (e.dim() != m.dim()) {
    throw DimensionError("induced_channel: dims differ");
  }
  std::vector<std::vector<double>> transition;
  transition.reserve(e.size());
  for (const EnsembleMember& member : e.members()) {
    const DensityMatrix rho = member.density();
    std::vector<double> row;
    row.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      row.push_back(trace(matmul(m.effect(i), rho.matrix())).real());
    }
    transition.push_back(std::move(row));
  }
  return ClassicalChannel(std::move(transition));
}

ClassicalChannel induced_channel(const Ensemble& e,
                                 const ProjectiveMeasurement& m) {
  return induced_channel(e, as_povm(m));
}

double mutual_information(const ClassicalDistribution& prior,
                          const ClassicalChannel& ch) {
  if (prior.size() != ch.inputs()) {
    throw DimensionError("mutual_information: prior arity mismatch");
  }
  std::vector<double> output(ch.outputs(), 0.0);
  double conditional = 0.0;
  for (std::size_t a = 0; a < ch.inputs(); ++a) {
    double row_entropy = 0.0;
    for (std::size_t i = 0; i < ch.outputs(); ++i) {
      output[i] += prior.prob(a) * ch.prob(a, i);
      row_entropy -= plogp(ch.prob(a, i));
    }
    conditional += prior.prob(a) * row_entropy;
  }
  double output_entropy = 0.0;
  for (double q : output) output_entropy -= plogp(q);
  return output_entropy - conditional;
}

std::pair<double, std::size_t> accessible_info_over(
    const Ensemble& e, const std::vector<Povm>& measurements) {
  if (measurements.empty()) {
    throw InvariantError("accessible_info_over: no measurements supplied");
  }
  std::vector<double> priors;
  priors.reserve(e.size());
  for (const EnsembleMember& m : e.members()) priors.push_back(m.prob);
  const ClassicalDistribution prior(std::move(priors));

  double best = 0.0;
  std::size_t best_index = 0;
  for (std::size_t i = 0; i < measurements.size(); ++i) {
    const double info =
        mutual_information(prior, induced_channel(e, measurements[i]));
    if (i == 0 || info > best) {
      best = info;
      best_index = i;
    }
  }
  return {best, best_index};
}

TypicalSet typical_set(const ClassicalDistribution& lambda, std::size_t n,
                       double epsilon) {
  if (lambda.size() != 2) {
    throw DimensionError("typical_set: distribution must be binary");
  }
  check_block_length(n);
  if (epsilon <= 0.0) {
    throw InvariantError("typical_set: epsilon must be positive");
  }
  const double entropy = shannon_entropy(lambda);
  const std::vector<bool> counts =
      typical_counts(lambda.prob(0), lambda.prob(1), n, epsilon, entropy);

  std::vector<double> prob_by_count(n + 1);
  for (std::size_t c = 0; c <= n; ++c) {
    prob_by_count[c] = std::pow(lambda.prob(0), double(n - c)) *
                       std::pow(lambda.prob(1), double(c));
  }

  TypicalSet set;
  set.n = n;
  set.epsilon = epsilon;
  for (std::uint32_t z = 0; z < (std::uint32_t(1) << n); ++z) {
    const std::size_t ones = std::size_t(std::popcount(z));
    if (!counts[ones]) continue;
    set.members.push_back(z);
    set.total_prob += prob_by_count[ones];
  }
  return set;
}

TypicalSubspace typical_subspace(const Ensemble& e, std::size_t n,
                                 double epsilon) {
  check_block_length(n);
  const QubitSourceSpectrum spectrum = source_spectrum(e);
  const TypicalSet set = typical_set(
      ClassicalDistribution({spectrum.eigenvalues[0], spectrum.eigenvalues[1]}),
      n, epsilon);

  TypicalSubspace subspace;
  subspace.n = n;
  subspace.epsilon = epsilon;
  subspace.members = set.members;
  subspace.total_prob = set.total_prob;
  subspace.eigenvalues = spectrum.eigenvalues;
  subspace.eigenbasis = spectrum.eigenbasis;
  return subspace;
}

namespace {

/// Squared overlaps |<psi_a|phi_i>|^2 for every source letter a and
/// eigenbasis index i.
std::vector<std::array<double, 2>> letter_weights(
    const Ensemble& e, const ComplexMatrix& eigenbasis) {
  std::vector<std::array<double, 2>> w(e.size());
  for (std::size_t a = 0; a < e.size(); ++a) {
    const PureState& psi = std::get<PureState>(e.member(a).state);
    for (std::size_t i = 0; i < 2; ++i) {
      const Complex overlap = std::conj(psi.amplitude(0)) * eigenbasis(0, i) +
                              std::conj(psi.amplitude(1)) * eigenbasis(1, i);
      w[a][i] = std::norm(overlap);
    }
  }
  return w;
}

/// <Psi_x|Pi|Psi_x> = sum over typical z of prod_k |<psi_{x_k}|phi_{z_k}>|^2.
double typical_weight_of_string(const std::vector<std::size_t>& letters,
                                const std::vector<std::uint32_t>& members,
                                const std::vector<std::array<double, 2>>& w,
                                std::size_t n) {
  double total = 0.0;
  for (std::uint32_t z : members) {
    double product = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t bit = (z >> (n - 1 - k)) & 1;
      product *= w[letters[k]][bit];
    }
    total += product;
  }
  return total;
}

}  // namespace

double average_projection_fidelity(const Ensemble& e, std::size_t n,
                                   double epsilon) {
  const TypicalSubspace subspace = typical_subspace(e, n, epsilon);
  const double strings = std::pow(double(e.size()), double(n));
  if (strings > double(1 << 20)) {
    throw DimensionError(
        "average_projection_fidelity: alphabet^n too large for exact "
        "enumeration");
  }
  const std::vector<std::array<double, 2>> w =
      letter_weights(e, subspace.eigenbasis);

  double fbar = 0.0;
  std::vector<std::size_t> letters(n, 0);
  for (;;) {
    double prob = 1.0;
    for (std::size_t k = 0; k < n; ++k) prob *= e.member(letters[k]).prob;
    if (prob > 0.0) {
      const double overlap =
          typical_weight_of_string(letters, subspace.members, w, n);
      fbar += prob * overlap * overlap;
    }
    // Odometer increment over the |X|^n strings.
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++letters[k] < e.size()) break;
      letters[k] = 0;
      if (k == 0) return fbar;
    }
  }
}

double average_projection_fidelity(const Ensemble& e, std::size_t n,
                                   double epsilon, std::size_t trials,
                                   Rng& rng) {
  if (trials == 0) {
    throw InvariantError("average_projection_fidelity: need trials >= 1");
  }
  const TypicalSubspace subspace = typical_subspace(e, n, epsilon);
  const std::vector<std::array<double, 2>> w =
      letter_weights(e, subspace.eigenbasis);

  double sum = 0.0;
  std::vector<std::size_t> letters(n, 0);
  for (std::size_t t = 0; t < trials; ++t) {
    for (std::size_t k = 0; k < n; ++k) {
      const double u = rng.uniform01();
      double cumulative = 0.0;
      std::size_t pick = e.size() - 1;
      for (std::size_t a = 0; a < e.size(); ++a) {
        cumulative += e.member(a).prob;
        if (u < cumulative) {
          pick = a;
          break;
        }
      }
      letters[k] = pick;
    }
    const double overlap =
        typical_weight_of_string(letters, subspace.members, w, n);
    sum += overlap * overlap;
  }
  return sum / double(trials);
}

}  // namespace qip
