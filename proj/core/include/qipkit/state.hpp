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

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "qipkit/complex_matrix.hpp"
#include "qipkit/rng.hpp"

namespace qip {

/// Unit-norm state vector. Qubit 0 is the leftmost tensor factor, so basis
/// index i reads as the bit string i0 i1 ... i_{n-1} with i0 most
/// significant. Validated at construction; operations assume the invariant.
class PureState {
 public:
  explicit PureState(std::vector<Complex> amplitudes);

  /// |index> in a dim-dimensional space.
  static PureState basis(std::size_t dim, std::size_t index);
  /// Single qubit alpha|0> + beta|1>.
  static PureState qubit(Complex alpha, Complex beta);

  std::size_t dim() const { return amplitudes_.size(); }
  /// log2(dim); throws DimensionError when dim is not a power of two.
  std::size_t num_qubits() const;

  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t i) const { return amplitudes_[i]; }

 private:
  std::vector<Complex> amplitudes_;
};

/// <a|b>.
Complex inner_product(const PureState& a, const PureState& b);

/// True when a = e^{i gamma} b for some global phase, entrywise within tol.
bool equal_up_to_global_phase(const PureState& a, const PureState& b,
                              double tol = kTol);

/// Hermitian, positive semidefinite, unit-trace matrix. Validated at
/// construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  /// I/dim.
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  Complex operator()(std::size_t r, std::size_t c) const {
    return matrix_(r, c);
  }

 private:
  ComplexMatrix matrix_;
};

/// One preparation in an ensemble: a state together with its probability.
struct EnsembleMember {
  std::variant<PureState, DensityMatrix> state;
  double prob;

  std::size_t dim() const;
  /// The member as a density matrix regardless of which form it holds.
  DensityMatrix density() const;
};

/// {state_j, p_j}: probabilities in [0,1] summing to 1 within 1e-10, all
/// members of equal dimension. Validated at construction.
class Ensemble {
 public:
  explicit Ensemble(std::vector<EnsembleMember> members);

  /// Convenience for the common all-pure case; sizes must match.
  static Ensemble of_pure(std::vector<PureState> states,
                          std::vector<double> probs);

  std::size_t size() const { return members_.size(); }
  std::size_t dim() const { return members_.front().dim(); }
  const std::vector<EnsembleMember>& members() const { return members_; }
  const EnsembleMember& member(std::size_t i) const { return members_[i]; }

 private:
  std::vector<EnsembleMember> members_;
};

/// Cartesian Bloch coordinates; |b| <= 1 within 1e-10.
struct BlochVector {
  double bx = 0.0;
  double by = 0.0;
  double bz = 0.0;

  double norm() const;
};

// Pauli matrices and friends, used across the library.
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();
const ComplexMatrix& hadamard_matrix();

DensityMatrix density_from_pure(const PureState& psi);

/// rho = sum_j p_j rho_j.
DensityMatrix density_from_ensemble(const Ensemble& e);

/// Tr(rho^2), in [1/dim, 1].
double purity(const DensityMatrix& rho);
/// purity > 1 - 1e-8.
bool is_pure(const DensityMatrix& rho);

/// Bloch coordinates of a single-qubit density matrix: b_k = Tr(rho sigma_k).
BlochVector bloch_from_density(const DensityMatrix& rho);
/// rho = (I + bx X + by Y + bz Z) / 2; throws InvariantError when |b| > 1.
DensityMatrix density_from_bloch(const BlochVector& b);

enum class Subsystem { A, B };

/// Reduced state of a bipartite system with dim = dim_a * dim_b, keeping
/// the requested factor. A is the leftmost (most significant) factor.
DensityMatrix partial_trace(const DensityMatrix& rho, std::size_t dim_a,
                            std::size_t dim_b, Subsystem keep);

/// U rho U'; throws InvariantError when u is not unitary.
DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u);

/// sum_k E_k rho E_k'; the E_k must satisfy sum E_k' E_k = I within 1e-10.
DensityMatrix apply_kraus(const DensityMatrix& rho,
                          std::span<const ComplexMatrix> ops);

/// a (x) b, with a on the left (more significant) side.
PureState tensor_states(const PureState& a, const PureState& b);

/// True when a two-qubit pure state factors as a product of single-qubit
/// states, detected through the purity of the reduced state.
bool is_product_two_qubit(const PureState& psi);

/// Haar-distributed pure state: normalized vector of independent standard
/// complex Gaussians.
PureState random_pure(std::size_t dim, Rng& rng);

/// Random rank-limited mixed state: trace out the rank-dimensional side of
/// a random pure state on dim x rank.
DensityMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng);

}  // namespace qip
