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

#include "qipkit/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

namespace qip {
namespace {

void require_distinct_targets(const std::vector<std::size_t>& targets) {
  std::unordered_set<std::size_t> seen(targets.begin(), targets.end());
  if (seen.size() != targets.size()) {
    throw InvariantError("Gate: target indices must be distinct");
  }
}

}  // namespace

Gate::Gate(GateKind kind, std::vector<std::size_t> targets,
           ComplexMatrix matrix, double tol)
    : kind_(kind), targets_(std::move(targets)), matrix_(std::move(matrix)) {
  require_distinct_targets(targets_);
  const std::size_t expected = std::size_t(1) << targets_.size();
  if (matrix_.rows() != expected || matrix_.cols() != expected) {
    throw DimensionError("Gate: matrix dim " + std::to_string(matrix_.rows()) +
                         " does not match " +
                         std::to_string(targets_.size()) + " targets");
  }
  if (!is_unitary(matrix_, tol)) {
    throw InvariantError("Gate: matrix is not unitary");
  }
}

Gate Gate::single(GateKind kind, std::size_t target) {
  switch (kind) {
    case GateKind::I:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::H:
      return Gate(kind, {target}, standard_gate(kind), kTol);
    default:
      throw InvariantError("Gate::single: kind is not a named 1-qubit gate");
  }
}

Gate Gate::cnot(std::size_t control, std::size_t target) {
  return Gate(GateKind::CNOT, {control, target}, standard_gate(GateKind::CNOT),
              kTol);
}

Gate Gate::custom2(std::size_t target, ComplexMatrix u, double tol) {
  return Gate(GateKind::U2, {target}, std::move(u), tol);
}

Gate Gate::custom(std::vector<std::size_t> targets, ComplexMatrix u,
                  double tol) {
  return Gate(GateKind::UN, std::move(targets), std::move(u), tol);
}

Circuit::Circuit(std::size_t qubits, std::vector<Gate> gates)
    : qubits_(qubits) {
  if (qubits_ == 0) {
    throw DimensionError("Circuit: qubit count must be positive");
  }
  for (Gate& g : gates) append(std::move(g));
}

void Circuit::append(Gate g) {
  for (std::size_t t : g.targets()) {
    if (t >= qubits_) {
      throw DimensionError("Circuit: gate target " + std::to_string(t) +
                           " out of range for " + std::to_string(qubits_) +
                           " qubits");
    }
  }
  gates_.push_back(std::move(g));
}

ComplexMatrix standard_gate(GateKind kind) {
  switch (kind) {
    case GateKind::I:
      return ComplexMatrix::identity(2);
    case GateKind::X:
      return pauli_x();
    case GateKind::Y:
      return pauli_y();
    case GateKind::Z:
      return pauli_z();
    case GateKind::H:
      return hadamard_matrix();
    case GateKind::CNOT:
      return ComplexMatrix{{1.0, 0.0, 0.0, 0.0},
                           {0.0, 1.0, 0.0, 0.0},
                           {0.0, 0.0, 0.0, 1.0},
                           {0.0, 0.0, 1.0, 0.0}};
    default:
      throw InvariantError("standard_gate: kind has no fixed matrix");
  }
}

ComplexMatrix embed_gate(const ComplexMatrix& u,
                         std::span<const std::size_t> targets, std::size_t n) {
  const std::size_t k = targets.size();
  if (k == 0 || k > n) {
    throw DimensionError("embed_gate: need 1..n targets");
  }
  const std::size_t gate_dim = std::size_t(1) << k;
  if (u.rows() != gate_dim || u.cols() != gate_dim) {
    throw DimensionError("embed_gate: matrix dim does not match target count");
  }
  std::vector<std::size_t> order(targets.begin(), targets.end());
  require_distinct_targets(order);
  for (std::size_t t : order) {
    if (t >= n) {
      throw DimensionError("embed_gate: target " + std::to_string(t) +
                           " out of range for " + std::to_string(n) +
                           " qubits");
    }
  }
  // Extend the target list to a full qubit permutation: targets first, then
  // the untouched qubits in ascending order.
  std::vector<bool> used(n, false);
  for (std::size_t t : order) used[t] = true;
  for (std::size_t q = 0; q < n; ++q) {
    if (!used[q]) order.push_back(q);
  }

  const std::size_t dim = std::size_t(1) << n;
  // P gathers the targets into the leading qubit slots.
  ComplexMatrix p(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t y = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t bit = (x >> (n - 1 - order[j])) & 1;
      y |= bit << (n - 1 - j);
    }
    p(y, x) = Complex(1.0, 0.0);
  }

  const ComplexMatrix lifted =
      kron(u, ComplexMatrix::identity(dim / gate_dim));
  return matmul(adjoint(p), matmul(lifted, p));
}

PureState apply_circuit(const Circuit& c, const PureState& psi) {
  const std::size_t n = c.qubits();
  if (psi.dim() != c.dim()) {
    throw DimensionError("apply_circuit: state dim " +
                         std::to_string(psi.dim()) + " does not match " +
                         std::to_string(n) + " qubits");
  }
  std::vector<Complex> amps = psi.amplitudes();
  std::vector<Complex> scratch;
  for (const Gate& g : c.gates()) {
    const std::size_t k = g.targets().size();
    const std::size_t sub_dim = std::size_t(1) << k;
    std::size_t target_mask = 0;
    for (std::size_t t : g.targets()) target_mask |= std::size_t(1) << (n - 1 - t);

    scratch.assign(sub_dim, Complex(0.0, 0.0));
    for (std::size_t base = 0; base < amps.size(); ++base) {
      if ((base & target_mask) != 0) continue;
      // Gather the amplitudes across the target bits, apply the gate
      // matrix, scatter back.
      for (std::size_t sub = 0; sub < sub_dim; ++sub) {
        std::size_t idx = base;
        for (std::size_t j = 0; j < k; ++j) {
          if ((sub >> (k - 1 - j)) & 1) {
            idx |= std::size_t(1) << (n - 1 - g.targets()[j]);
          }
        }
        scratch[sub] = amps[idx];
      }
      for (std::size_t row = 0; row < sub_dim; ++row) {
        Complex sum(0.0, 0.0);
        for (std::size_t col = 0; col < sub_dim; ++col) {
          sum += g.matrix()(row, col) * scratch[col];
        }
        std::size_t idx = base;
        for (std::size_t j = 0; j < k; ++j) {
          if ((row >> (k - 1 - j)) & 1) {
            idx |= std::size_t(1) << (n - 1 - g.targets()[j]);
          }
        }
        amps[idx] = sum;
      }
    }
  }
  return PureState(std::move(amps));
}

ComplexMatrix circuit_unitary(const Circuit& c) {
  ComplexMatrix u = ComplexMatrix::identity(c.dim());
  for (const Gate& g : c.gates()) {
    u = matmul(embed_gate(g.matrix(), g.targets(), c.qubits()), u);
  }
  return u;
}

Circuit repetition_encoder() {
  Circuit c(3);
  c.append(Gate::cnot(0, 1));
  c.append(Gate::cnot(0, 2));
  return c;
}

Circuit bell_circuit() {
  Circuit c(2);
  c.append(Gate::single(GateKind::H, 0));
  c.append(Gate::cnot(0, 1));
  return c;
}

PureState bell_state(unsigned a, unsigned b) {
  if (a > 1 || b > 1) {
    throw DimensionError("bell_state: labels must be bits");
  }
  return apply_circuit(bell_circuit(), PureState::basis(4, a * 2 + b));
}

PureState uniform_superposition(std::size_t n) {
  if (n == 0) {
    throw DimensionError("uniform_superposition: need at least one qubit");
  }
  const std::size_t dim = std::size_t(1) << n;
  const double amp = 1.0 / std::sqrt(double(dim));
  return PureState(std::vector<Complex>(dim, Complex(amp, 0.0)));
}

ComplexMatrix function_oracle(
    const std::function<std::uint64_t(std::uint64_t)>& f, std::size_t n,
    std::size_t m) {
  if (n == 0 || m == 0) {
    throw DimensionError("function_oracle: need n >= 1 and m >= 1");
  }
  const std::size_t dim = std::size_t(1) << (n + m);
  const std::uint64_t out_mask = (std::uint64_t(1) << m) - 1;
  ComplexMatrix u(dim, dim);
  for (std::uint64_t x = 0; x < (std::uint64_t(1) << n); ++x) {
    const std::uint64_t fx = f(x);
    if (fx > out_mask) {
      throw InvariantError("function_oracle: f(x) out of range for m bits");
    }
    for (std::uint64_t y = 0; y <= out_mask; ++y) {
      const std::size_t from = (x << m) | y;
      const std::size_t to = (x << m) | (y ^ fx);
      u(to, from) = Complex(1.0, 0.0);
    }
  }
  return u;
}

PureState parallel_evaluate(
    const std::function<std::uint64_t(std::uint64_t)>& f, std::size_t n,
    std::size_t m) {
  const ComplexMatrix u = function_oracle(f, n, m);
  const PureState input =
      tensor_states(uniform_superposition(n),
                    PureState::basis(std::size_t(1) << m, 0));
  return PureState(matvec(u, input.amplitudes()));
}

ComplexMatrix hamiltonian_evolution(const ComplexMatrix& h, double t,
                                    double hbar) {
  return matrix_func(h, [t, hbar](double lambda) {
    const double angle = -lambda * t / hbar;
    return Complex(std::cos(angle), std::sin(angle));
  });
}

PauliCoefficients pauli_decompose(const ComplexMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) {
    throw DimensionError("pauli_decompose: matrix must be 2x2");
  }
  PauliCoefficients c;
  c.i = 0.5 * trace(a);
  c.x = 0.5 * trace(matmul(pauli_x(), a));
  c.y = 0.5 * trace(matmul(pauli_y(), a));
  c.z = 0.5 * trace(matmul(pauli_z(), a));
  return c;
}

}  // namespace qip
