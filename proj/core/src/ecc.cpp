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

#include "qipkit/ecc.hpp"

#include <cctype>
#include <cmath>

#include "qipkit/circuit.hpp"
#include "qipkit/measurement.hpp"

namespace qip {
namespace {

const ProjectiveMeasurement& syndrome_measurement_1() {
  static const ProjectiveMeasurement m = ProjectiveMeasurement::from_observable(
      kron(kron(pauli_z(), pauli_z()), ComplexMatrix::identity(2)));
  return m;
}

const ProjectiveMeasurement& syndrome_measurement_2() {
  static const ProjectiveMeasurement m = ProjectiveMeasurement::from_observable(
      kron(kron(pauli_z(), ComplexMatrix::identity(2)), pauli_z()));
  return m;
}

std::pair<int, PureState> measure_eigenvalue(const PureState& state,
                                             const ProjectiveMeasurement& m,
                                             Rng& rng) {
  const OutcomeDistribution dist = von_neumann(state, m);
  const std::size_t outcome = sample(dist, rng);
  return {static_cast<int>(std::lround(m.label(outcome))),
          std::get<PureState>(*dist.post_state(outcome))};
}

}  // namespace

BitFlipError BitFlipError::none() { return BitFlipError("III"); }

BitFlipError BitFlipError::at(std::size_t position) {
  if (position > 2) {
    throw DimensionError("BitFlipError: position must be 0, 1 or 2");
  }
  std::string word = "III";
  word[position] = 'X';
  return BitFlipError(std::move(word));
}

BitFlipError BitFlipError::pauli_word(const std::string& word) {
  if (word.size() != 3) {
    throw DimensionError("BitFlipError: Pauli word must have 3 letters");
  }
  std::string upper;
  for (char c : word) {
    const char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (u != 'I' && u != 'X' && u != 'Y' && u != 'Z') {
      throw InvariantError("BitFlipError: letters must be I, X, Y or Z");
    }
    upper.push_back(u);
  }
  return BitFlipError(std::move(upper));
}

ClassicalCodeword classical_encode(int bit) {
  if (bit != 0 && bit != 1) {
    throw InvariantError("classical_encode: input must be a bit");
  }
  return ClassicalCodeword{{bit, bit, bit}};
}

ClassicalSyndrome classical_syndrome(const ClassicalCodeword& word) {
  return ClassicalSyndrome{word.bits[0] ^ word.bits[1],
                           word.bits[0] ^ word.bits[2]};
}

ClassicalCodeword classical_correct(const ClassicalCodeword& word,
                                    const ClassicalSyndrome& s) {
  ClassicalCodeword out = word;
  if (s.s1 == 1 && s.s2 == 1) {
    out.bits[0] ^= 1;
  } else if (s.s1 == 1 && s.s2 == 0) {
    out.bits[1] ^= 1;
  } else if (s.s1 == 0 && s.s2 == 1) {
    out.bits[2] ^= 1;
  }
  return out;
}

PureState encode_logical(Complex alpha, Complex beta) {
  const PureState logical = PureState::qubit(alpha, beta);
  return apply_circuit(repetition_encoder(),
                       tensor_states(logical, PureState::basis(4, 0)));
}

PureState inject(const PureState& state, const BitFlipError& e) {
  if (state.dim() != 8) {
    throw DimensionError("inject: state must be 3 qubits");
  }
  Circuit c(3);
  for (std::size_t q = 0; q < 3; ++q) {
    switch (e.word()[q]) {
      case 'I':
        break;
      case 'X':
        c.append(Gate::single(GateKind::X, q));
        break;
      case 'Y':
        c.append(Gate::single(GateKind::Y, q));
        break;
      case 'Z':
        c.append(Gate::single(GateKind::Z, q));
        break;
    }
  }
  return apply_circuit(c, state);
}

std::pair<Syndrome, PureState> measure_syndrome(const PureState& state,
                                                Rng& rng) {
  if (state.dim() != 8) {
    throw DimensionError("measure_syndrome: state must be 3 qubits");
  }
  const auto [m1, after_first] =
      measure_eigenvalue(state, syndrome_measurement_1(), rng);
  const auto [m2, after_second] =
      measure_eigenvalue(after_first, syndrome_measurement_2(), rng);
  return {Syndrome{m1, m2}, after_second};
}

PureState correct(const PureState& state, const Syndrome& s) {
  if (state.dim() != 8) {
    throw DimensionError("correct: state must be 3 qubits");
  }
  if ((s.m1 != 1 && s.m1 != -1) || (s.m2 != 1 && s.m2 != -1)) {
    throw InvariantError("correct: syndrome values must be +1 or -1");
  }
  if (s.m1 == 1 && s.m2 == 1) return state;
  std::size_t position = 0;
  if (s.m1 == -1 && s.m2 == 1) {
    position = 1;
  } else if (s.m1 == 1 && s.m2 == -1) {
    position = 2;
  }
  return inject(state, BitFlipError::at(position));
}

std::pair<int, PureState> four_projector_decode(const PureState& state,
                                                Rng& rng) {
  if (state.dim() != 8) {
    throw DimensionError("four_projector_decode: state must be 3 qubits");
  }
  // Projector i spans the two codeword images under a flip at position
  // i-1 (i = 1 means no flip): {|000>,|111>}, {|100>,|011>}, ...
  static const ProjectiveMeasurement m = [] {
    std::vector<ComplexMatrix> projectors;
    for (std::size_t flip : {std::size_t(0), std::size_t(4), std::size_t(2),
                             std::size_t(1)}) {
      ComplexMatrix p(8, 8);
      p(flip, flip) = Complex(1.0, 0.0);
      p(7 ^ flip, 7 ^ flip) = Complex(1.0, 0.0);
      projectors.push_back(std::move(p));
    }
    return ProjectiveMeasurement(std::move(projectors));
  }();
  const OutcomeDistribution dist = von_neumann(state, m);
  const std::size_t outcome = sample(dist, rng);
  return {static_cast<int>(outcome) + 1,
          std::get<PureState>(*dist.post_state(outcome))};
}

PureState decode_logical(const PureState& state) {
  if (state.dim() != 8) {
    throw DimensionError("decode_logical: state must be 3 qubits");
  }
  // The encoder is its own inverse: two CNOTs from qubit 0.
  const PureState unwound = apply_circuit(repetition_encoder(), state);
  double ancilla_weight = 0.0;
  for (std::size_t i = 0; i < 8; ++i) {
    if ((i & 3) != 0) ancilla_weight += std::norm(unwound.amplitude(i));
  }
  if (ancilla_weight > 1e-9) {
    throw InvariantError(
        "decode_logical: ancilla qubits are not |00>; residual weight " +
        std::to_string(ancilla_weight));
  }
  const Complex a = unwound.amplitude(0);
  const Complex b = unwound.amplitude(4);
  const double norm = std::sqrt(std::norm(a) + std::norm(b));
  return PureState::qubit(a / norm, b / norm);
}

}  // namespace qip
