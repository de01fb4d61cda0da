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
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qipkit/complex_matrix.hpp"
#include "qipkit/state.hpp"

namespace qip {

enum class GateKind { I, X, Y, Z, H, CNOT, U2, UN };

/// A unitary applied to an ordered list of distinct qubits. The matrix acts
/// on the targets in listed order (first target is the most significant bit
/// of the gate-local index).
class Gate {
 public:
  static Gate single(GateKind kind, std::size_t target);
  static Gate cnot(std::size_t control, std::size_t target);
  /// Custom single-qubit gate; unitarity checked within tol (text input has
  /// limited precision, hence the looser default).
  static Gate custom2(std::size_t target, ComplexMatrix u, double tol = 1e-8);
  /// Custom gate on any number of qubits.
  static Gate custom(std::vector<std::size_t> targets, ComplexMatrix u,
                     double tol = 1e-8);

  GateKind kind() const { return kind_; }
  const std::vector<std::size_t>& targets() const { return targets_; }
  const ComplexMatrix& matrix() const { return matrix_; }

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, std::vector<std::size_t> targets, ComplexMatrix matrix,
       double tol);

  GateKind kind_;
  std::vector<std::size_t> targets_;
  ComplexMatrix matrix_;
};

/// An ordered gate list over a fixed qubit count.
class Circuit {
 public:
  explicit Circuit(std::size_t qubits, std::vector<Gate> gates = {});

  void append(Gate g);

  std::size_t qubits() const { return qubits_; }
  std::size_t dim() const { return std::size_t(1) << qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t qubits_;
  std::vector<Gate> gates_;
};

/// The fixed gate set: I, X, Y, Z, H as 2x2 and CNOT as 4x4 (control = the
/// more significant qubit of the pair).
ComplexMatrix standard_gate(GateKind kind);

/// Lift u (acting on the listed targets, in order) to the full 2^n space,
/// identity on the remaining qubits. Built as a permutation conjugation of
/// kron(u, I): gather the targets to the front, apply, scatter back.
ComplexMatrix embed_gate(const ComplexMatrix& u,
                         std::span<const std::size_t> targets, std::size_t n);

/// Apply the gates in order to psi. Works directly on the amplitude vector
/// rather than through embedded matrices.
PureState apply_circuit(const Circuit& c, const PureState& psi);

/// Product of the embedded gate matrices, last gate leftmost.
ComplexMatrix circuit_unitary(const Circuit& c);

/// Two CNOTs fanning qubit 0 out to qubits 1 and 2:
/// (a|0> + b|1>)|00> -> a|000> + b|111>.
Circuit repetition_encoder();

/// H on qubit 0 then CNOT 0 -> 1; maps the computational basis to the Bell
/// basis.
Circuit bell_circuit();

/// The Bell state reached from |ab>.
PureState bell_state(unsigned a, unsigned b);

/// 2^{-n/2} sum_x |x>.
PureState uniform_superposition(std::size_t n);

/// U_f |x, y> = |x, y XOR f(x)> on n input and m output qubits; always a
/// permutation matrix. f receives x in [0, 2^n) and must return a value in
/// [0, 2^m).
ComplexMatrix function_oracle(const std::function<std::uint64_t(std::uint64_t)>& f,
                              std::size_t n, std::size_t m);

/// U_f applied to the uniform input register and a cleared output register:
/// 2^{-n/2} sum_x |x, f(x)>.
PureState parallel_evaluate(const std::function<std::uint64_t(std::uint64_t)>& f,
                            std::size_t n, std::size_t m);

/// exp(-i h t / hbar) through the spectral decomposition of h.
ComplexMatrix hamiltonian_evolution(const ComplexMatrix& h, double t,
                                    double hbar = 1.0);

/// Coefficients of a 2x2 matrix over {I, X, Y, Z}.
struct PauliCoefficients {
  Complex i;
  Complex x;
  Complex y;
  Complex z;
};

/// a = c_I I + c_X X + c_Y Y + c_Z Z with c_K = Tr(sigma_K a) / 2.
PauliCoefficients pauli_decompose(const ComplexMatrix& a);

}  // namespace qip
