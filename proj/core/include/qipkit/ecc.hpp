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

#include <array>
#include <string>
#include <utility>

#include "qipkit/rng.hpp"
#include "qipkit/state.hpp"

namespace qip {

/// Three-bit word of the classical repetition code.
struct ClassicalCodeword {
  std::array<int, 3> bits;

  friend bool operator==(const ClassicalCodeword&,
                         const ClassicalCodeword&) = default;
};

/// Classical parity syndrome (y0 XOR y1, y0 XOR y2), bits in {0, 1}.
struct ClassicalSyndrome {
  int s1 = 0;
  int s2 = 0;

  friend bool operator==(const ClassicalSyndrome&,
                         const ClassicalSyndrome&) = default;
};

/// Quantum syndrome: eigenvalues of Z(x)Z(x)I and Z(x)I(x)Z, each +1 or -1.
/// The classical correspondence is +1 <-> 0 and -1 <-> 1.
struct Syndrome {
  int m1 = 1;
  int m2 = 1;

  friend bool operator==(const Syndrome&, const Syndrome&) = default;
};

/// An error to inject into a 3-qubit codeword: a single bit flip by
/// position, or an arbitrary Pauli word for the failure demonstrations.
class BitFlipError {
 public:
  static BitFlipError none();
  static BitFlipError at(std::size_t position);
  /// Three characters from {I, X, Y, Z}, e.g. "XXI".
  static BitFlipError pauli_word(const std::string& word);

  const std::string& word() const { return word_; }

 private:
  explicit BitFlipError(std::string word) : word_(std::move(word)) {}
  std::string word_;
};

ClassicalCodeword classical_encode(int bit);
ClassicalSyndrome classical_syndrome(const ClassicalCodeword& word);
/// Flip the bit the syndrome points at; (0,0) leaves the word unchanged.
ClassicalCodeword classical_correct(const ClassicalCodeword& word,
                                    const ClassicalSyndrome& s);

/// alpha|000> + beta|111>.
PureState encode_logical(Complex alpha, Complex beta);

/// Apply the error's Pauli word to a 3-qubit state.
PureState inject(const PureState& state, const BitFlipError& e);

/// Measure both syndrome observables. On a state inside a single error
/// space the outcome is deterministic and the state is returned unchanged;
/// superpositions across spaces collapse like any projective measurement,
/// which is why the generator is required.
std::pair<Syndrome, PureState> measure_syndrome(const PureState& state,
                                                Rng& rng);

/// Apply the correction the syndrome calls for: X on the indicated qubit,
/// identity for (+1, +1).
PureState correct(const PureState& state, const Syndrome& s);

/// Alternative decoder: measure the four projectors onto the error
/// subspaces. Returns the subspace index (1 = no error, 2..4 = flip on
/// qubit 0..2) and the post-measurement state.
std::pair<int, PureState> four_projector_decode(const PureState& state,
                                                Rng& rng);

/// Invert the encoder and strip the ancilla qubits, which must come back
/// as |00> within 1e-9; returns the recovered single-qubit state.
PureState decode_logical(const PureState& state);

}  // namespace qip
