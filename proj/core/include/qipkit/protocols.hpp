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
#include <cstdint>
#include <vector>

#include "qipkit/rng.hpp"
#include "qipkit/state.hpp"

namespace qip {

enum class EveMode {
  None,
  /// Measure each qubit in a uniformly random basis and resend the
  /// collapsed state.
  InterceptResend,
  /// Same, but always guessing the computational basis.
  InterceptResendFixedBasis,
};

struct BB84Config {
  /// Target raw-key length; the protocol prepares ceil((4+delta)*n) qubits.
  std::size_t n = 16;
  double delta = 1.0;
  EveMode eve = EveMode::None;
  /// Independent sigma_X flip probability per transmitted qubit.
  double channel_flip_prob = 0.0;
  /// Abort when the check-bit mismatch fraction exceeds this.
  double abort_threshold = 0.11;
  std::uint64_t seed = 0;

  std::size_t block_length() const;
};

enum class ProtocolStatus {
  Key,
  Aborted,
  /// Fewer than 2n sifted bits survived; the caller decides whether to
  /// rerun.
  Repeat,
};

struct BB84Transcript {
  std::vector<int> alice_bits;
  std::vector<int> alice_bases;
  std::vector<int> bob_bases;
  std::vector<int> bob_bits;
  /// Positions where the bases agreed, in transmission order.
  std::vector<std::size_t> sifted_indices;
  /// Positions (into the block) compared in the open; disjoint from
  /// key_indices.
  std::vector<std::size_t> check_indices;
  std::vector<std::size_t> key_indices;
  std::size_t mismatch_count = 0;
  double mismatch_rate = 0.0;
  ProtocolStatus status = ProtocolStatus::Repeat;
  std::vector<int> alice_key;
  std::vector<int> bob_key;
};

BB84Transcript bb84_run(const BB84Config& config);

enum class E91Eve { None, MeasureBoth };

struct E91Result {
  std::size_t pairs = 0;
  std::vector<int> alice_key;
  std::vector<int> bob_key;
  std::size_t key_agreements = 0;
  double key_agreement_rate = 0.0;
  std::size_t chsh_rounds = 0;
  std::size_t chsh_wins = 0;
  double chsh_win_rate = 0.0;
};

/// Entanglement-based key distribution: each pair is either consumed for a
/// key bit (both sides measure in the computational basis) or spent on a
/// CHSH test round. An eavesdropper premeasuring both qubits collapses the
/// pair and drags the test rate back under the classical bound.
E91Result e91_run(std::size_t pairs, double test_fraction, E91Eve eve,
                  std::uint64_t seed);

/// Encode a 2-bit message on half of a shared Bell pair: I, sigma_X,
/// sigma_Z or sigma_Z sigma_X on the first qubit, yielding the four
/// orthogonal Bell states.
PureState dense_code(unsigned two_bits);

/// Recover the message by a Bell-basis measurement. The input must be a
/// Bell-basis eigenstate (one outcome with probability 1).
unsigned dense_decode(const PureState& state);

struct TeleportResult {
  /// Alice's measurement outcome, first qubit most significant.
  unsigned bits = 0;
  /// Alice's two qubits after measuring: a computational basis state; the
  /// original is gone.
  PureState alice_post;
  /// Bob's qubit before applying the correction.
  PureState bob_pre_correction;
  /// Bob's qubit after the correction Z^a X^b.
  PureState bob_state;
};

/// Teleport a single-qubit state across a shared Bell pair.
TeleportResult teleport(const PureState& psi, Rng& rng);

/// Same pipeline with Alice's outcome forced to the given branch (every
/// branch has probability 1/4).
TeleportResult teleport_outcome(const PureState& psi, unsigned bits);

/// A CHSH strategy: deterministic output tables, or measurement angles per
/// input on a shared Bell pair.
struct ChshStrategy {
  enum class Kind { ClassicalDeterministic, Quantum };

  Kind kind = Kind::ClassicalDeterministic;
  /// a(x) and b(y) for the classical kind.
  std::array<int, 2> alice_table{0, 0};
  std::array<int, 2> bob_table{0, 0};
  /// Measurement basis angles per input for the quantum kind.
  std::array<double, 2> alice_angles{0.0, 0.0};
  std::array<double, 2> bob_angles{0.0, 0.0};

  static ChshStrategy classical(std::array<int, 2> alice,
                                std::array<int, 2> bob);
  static ChshStrategy quantum(std::array<double, 2> alice_angles,
                              std::array<double, 2> bob_angles);
  /// Alice: computational basis (0) for x=0, Hadamard basis (pi/4) for
  /// x=1; Bob: the corresponding Alice bases rotated by pi/8 and -3pi/8,
  /// i.e. absolute angles pi/8 and -pi/8.
  static ChshStrategy quantum_default();
};

struct GameResult {
  std::size_t wins = 0;
  std::size_t trials = 0;
  double win_rate = 0.0;
};

/// Joint outcome probabilities when the two halves of a Bell pair are
/// measured in bases at the given angles: entry (a, b) is P(a, b), with
/// P(a=b) = cos^2(alpha-beta) split evenly over (0,0) and (1,1), computed
/// from the four product-basis projectors.
std::array<std::array<double, 2>, 2> chsh_joint_probabilities(
    double alice_angle, double bob_angle);

/// Exact win probability over the four equiprobable inputs.
double chsh_exact_win_probability(const ChshStrategy& s);

struct ChshClassicalEnumeration {
  double best = 0.0;
  std::vector<ChshStrategy> argmax;
};

/// Evaluate all 16 deterministic strategies.
ChshClassicalEnumeration chsh_enumerate_classical();

/// Play the game round by round on fresh Bell pairs.
GameResult chsh_monte_carlo(const ChshStrategy& s, std::size_t trials,
                            Rng& rng);

}  // namespace qip
