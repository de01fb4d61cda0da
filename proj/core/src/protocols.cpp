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

#include "qipkit/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <variant>

#include "qipkit/circuit.hpp"
#include "qipkit/errors.hpp"
#include "qipkit/measurement.hpp"

namespace qip {

namespace {

PureState apply_1q(const ComplexMatrix& u, const PureState& s) {
  return PureState(matvec(u, s.amplitudes()));
}

const PureState& pure_post(const OutcomeDistribution& dist, std::size_t i) {
  return std::get<PureState>(*dist.post_state(i));
}

/// Basis vector at the given angle in the real X-Z plane of the Bloch
/// sphere: outcome 0 is cos(t)|0> + sin(t)|1>, outcome 1 its orthogonal
/// complement.
PureState angle_vector(double angle, int outcome) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  if (outcome == 0) return PureState({Complex(c, 0.0), Complex(s, 0.0)});
  return PureState({Complex(-s, 0.0), Complex(c, 0.0)});
}

ComplexMatrix outer(const PureState& u) {
  ComplexMatrix m(u.dim(), u.dim());
  for (std::size_t r = 0; r < u.dim(); ++r) {
    for (std::size_t c = 0; c < u.dim(); ++c) {
      m(r, c) = u.amplitude(r) * std::conj(u.amplitude(c));
    }
  }
  return m;
}

/// Measurement of one qubit of a pair in the basis at the given angle,
/// embedded as rank-2 projectors on the 4-dimensional joint space.
ProjectiveMeasurement pair_qubit_measurement(double angle, int which) {
  std::vector<ComplexMatrix> projectors;
  projectors.reserve(2);
  const ComplexMatrix eye = ComplexMatrix::identity(2);
  for (int outcome = 0; outcome < 2; ++outcome) {
    const ComplexMatrix p = outer(angle_vector(angle, outcome));
    projectors.push_back(which == 0 ? kron(p, eye) : kron(eye, p));
  }
  return ProjectiveMeasurement(std::move(projectors), {0.0, 1.0});
}

/// One CHSH round on a shared pair: the first player measures, the second
/// measures the collapsed state. The joint distribution does not depend on
/// the order.
std::pair<int, int> measure_pair_sequentially(const PureState& pair_state,
                                              const ProjectiveMeasurement& ma,
                                              const ProjectiveMeasurement& mb,
                                              Rng& rng) {
  const OutcomeDistribution da = von_neumann(pair_state, ma);
  const std::size_t a = sample(da, rng);
  const OutcomeDistribution db = von_neumann(pure_post(da, a), mb);
  const std::size_t b = sample(db, rng);
  return {static_cast<int>(a), static_cast<int>(b)};
}

const std::vector<PureState>& bb84_basis(int c) {
  static const std::vector<PureState> comp = computational_basis(1);
  static const std::vector<PureState> had = hadamard_basis(1);
  return c == 0 ? comp : had;
}

}  // namespace

std::size_t BB84Config::block_length() const {
  return static_cast<std::size_t>(
      std::ceil((4.0 + delta) * static_cast<double>(n)));
}

BB84Transcript bb84_run(const BB84Config& config) {
  if (config.n == 0) throw InvariantError("bb84_run: n must be positive");
  if (config.delta < 0.0) {
    throw InvariantError("bb84_run: delta must be nonnegative");
  }
  if (config.channel_flip_prob < 0.0 || config.channel_flip_prob > 1.0) {
    throw InvariantError("bb84_run: channel_flip_prob must lie in [0, 1]");
  }
  if (config.abort_threshold < 0.0 || config.abort_threshold > 1.0) {
    throw InvariantError("bb84_run: abort_threshold must lie in [0, 1]");
  }

  Rng rng(config.seed);
  const std::size_t block = config.block_length();

  BB84Transcript t;
  t.alice_bits.reserve(block);
  t.alice_bases.reserve(block);
  t.bob_bases.reserve(block);
  t.bob_bits.reserve(block);

  for (std::size_t i = 0; i < block; ++i) {
    const int bit = static_cast<int>(rng.uniform_int(2));
    const int basis = static_cast<int>(rng.uniform_int(2));
    PureState s = bb84_basis(basis)[static_cast<std::size_t>(bit)];

    if (config.eve != EveMode::None) {
      const int eve_basis = config.eve == EveMode::InterceptResend
                                ? static_cast<int>(rng.uniform_int(2))
                                : 0;
      const OutcomeDistribution d = measure_in_basis(s, bb84_basis(eve_basis));
      s = pure_post(d, sample(d, rng));
    }

    if (config.channel_flip_prob > 0.0 &&
        rng.bernoulli(config.channel_flip_prob)) {
      s = apply_1q(pauli_x(), s);
    }

    const int bob_basis = static_cast<int>(rng.uniform_int(2));
    const OutcomeDistribution d = measure_in_basis(s, bb84_basis(bob_basis));
    const int bob_bit = static_cast<int>(sample(d, rng));

    t.alice_bits.push_back(bit);
    t.alice_bases.push_back(basis);
    t.bob_bases.push_back(bob_basis);
    t.bob_bits.push_back(bob_bit);
    if (basis == bob_basis) t.sifted_indices.push_back(i);
  }

  if (t.sifted_indices.size() < 2 * config.n) {
    t.status = ProtocolStatus::Repeat;
    return t;
  }

  std::vector<std::size_t> pool(t.sifted_indices.begin(),
                                t.sifted_indices.begin() +
                                    static_cast<std::ptrdiff_t>(2 * config.n));
  for (std::size_t i = 0; i < config.n; ++i) {
    const std::size_t j = i + rng.uniform_int(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  t.check_indices.assign(pool.begin(),
                         pool.begin() + static_cast<std::ptrdiff_t>(config.n));
  t.key_indices.assign(pool.begin() + static_cast<std::ptrdiff_t>(config.n),
                       pool.end());
  std::sort(t.check_indices.begin(), t.check_indices.end());
  std::sort(t.key_indices.begin(), t.key_indices.end());

  for (std::size_t idx : t.check_indices) {
    if (t.alice_bits[idx] != t.bob_bits[idx]) ++t.mismatch_count;
  }
  t.mismatch_rate = static_cast<double>(t.mismatch_count) /
                    static_cast<double>(config.n);

  if (t.mismatch_rate > config.abort_threshold) {
    t.status = ProtocolStatus::Aborted;
    return t;
  }

  t.status = ProtocolStatus::Key;
  t.alice_key.reserve(config.n);
  t.bob_key.reserve(config.n);
  for (std::size_t idx : t.key_indices) {
    t.alice_key.push_back(t.alice_bits[idx]);
    t.bob_key.push_back(t.bob_bits[idx]);
  }
  return t;
}

E91Result e91_run(std::size_t pairs, double test_fraction, E91Eve eve,
                  std::uint64_t seed) {
  if (pairs < 4) throw InvariantError("e91_run: need at least 4 pairs");
  if (test_fraction < 0.0 || test_fraction > 1.0) {
    throw InvariantError("e91_run: test_fraction must lie in [0, 1]");
  }

  Rng rng(seed);
  const PureState bell = bell_state(0, 0);
  const std::vector<PureState> comp2 = computational_basis(2);
  const ChshStrategy strategy = ChshStrategy::quantum_default();

  const ProjectiveMeasurement alice_key_m = pair_qubit_measurement(0.0, 0);
  const ProjectiveMeasurement bob_key_m = pair_qubit_measurement(0.0, 1);
  const std::array<ProjectiveMeasurement, 2> alice_test_m{
      {pair_qubit_measurement(strategy.alice_angles[0], 0),
       pair_qubit_measurement(strategy.alice_angles[1], 0)}};
  const std::array<ProjectiveMeasurement, 2> bob_test_m{
      {pair_qubit_measurement(strategy.bob_angles[0], 1),
       pair_qubit_measurement(strategy.bob_angles[1], 1)}};

  E91Result r;
  r.pairs = pairs;

  for (std::size_t i = 0; i < pairs; ++i) {
    PureState state = bell;
    if (eve == E91Eve::MeasureBoth) {
      const OutcomeDistribution d = measure_in_basis(state, comp2);
      state = pure_post(d, sample(d, rng));
    }

    if (rng.uniform01() < test_fraction) {
      const std::size_t x = rng.uniform_int(2);
      const std::size_t y = rng.uniform_int(2);
      const auto [a, b] =
          measure_pair_sequentially(state, alice_test_m[x], bob_test_m[y], rng);
      ++r.chsh_rounds;
      if ((a ^ b) == static_cast<int>(x & y)) ++r.chsh_wins;
    } else {
      const auto [a, b] =
          measure_pair_sequentially(state, alice_key_m, bob_key_m, rng);
      r.alice_key.push_back(a);
      r.bob_key.push_back(b);
      if (a == b) ++r.key_agreements;
    }
  }

  if (!r.alice_key.empty()) {
    r.key_agreement_rate = static_cast<double>(r.key_agreements) /
                           static_cast<double>(r.alice_key.size());
  }
  if (r.chsh_rounds > 0) {
    r.chsh_win_rate = static_cast<double>(r.chsh_wins) /
                      static_cast<double>(r.chsh_rounds);
  }
  return r;
}

PureState dense_code(unsigned two_bits) {
  if (two_bits > 3) {
    throw InvariantError("dense_code: message must be two bits");
  }
  PureState s = bell_state(0, 0);
  const ComplexMatrix eye = ComplexMatrix::identity(2);
  if (two_bits & 1u) s = apply_1q(kron(pauli_x(), eye), s);
  if (two_bits & 2u) s = apply_1q(kron(pauli_z(), eye), s);
  return s;
}

unsigned dense_decode(const PureState& state) {
  if (state.dim() != 4) {
    throw DimensionError("dense_decode: expected a two-qubit state");
  }
  const OutcomeDistribution d = measure_in_basis(state, bell_basis());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.prob(i) >= 1.0 - 1e-9) return static_cast<unsigned>(i);
  }
  throw InvariantError("dense_decode: input is not a Bell basis state");
}

namespace {

const Circuit& teleport_circuit() {
  static const Circuit c(3, {Gate::cnot(0, 1), Gate::single(GateKind::H, 0)});
  return c;
}

/// Alice's joint measurement of qubits 0 and 1 in the computational basis:
/// four rank-2 projectors, outcome index = first qubit bit times two plus
/// second qubit bit.
const ProjectiveMeasurement& alice_pair_measurement() {
  static const ProjectiveMeasurement m = [] {
    std::vector<ComplexMatrix> projectors;
    projectors.reserve(4);
    for (std::size_t k = 0; k < 4; ++k) {
      ComplexMatrix p(8, 8);
      p(2 * k, 2 * k) = Complex(1.0, 0.0);
      p(2 * k + 1, 2 * k + 1) = Complex(1.0, 0.0);
      projectors.push_back(std::move(p));
    }
    return ProjectiveMeasurement(std::move(projectors), {0.0, 1.0, 2.0, 3.0});
  }();
  return m;
}

TeleportResult teleport_branch(const PureState& psi, Rng* rng,
                               unsigned forced_bits) {
  if (psi.dim() != 2) {
    throw DimensionError("teleport: expected a single-qubit state");
  }
  PureState full = tensor_states(psi, bell_state(0, 0));
  full = apply_circuit(teleport_circuit(), full);

  const OutcomeDistribution d = von_neumann(full, alice_pair_measurement());
  const unsigned bits =
      rng != nullptr ? static_cast<unsigned>(sample(d, *rng)) : forced_bits;
  const PureState& post = pure_post(d, bits);

  std::vector<Complex> bob_amps{post.amplitude(2 * bits),
                                post.amplitude(2 * bits + 1)};
  const PureState pre(std::move(bob_amps));

  PureState corrected = pre;
  if (bits & 1u) corrected = apply_1q(pauli_x(), corrected);
  if (bits & 2u) corrected = apply_1q(pauli_z(), corrected);

  return TeleportResult{bits, PureState::basis(4, bits), pre, corrected};
}

}  // namespace

TeleportResult teleport(const PureState& psi, Rng& rng) {
  return teleport_branch(psi, &rng, 0);
}

TeleportResult teleport_outcome(const PureState& psi, unsigned bits) {
  if (bits > 3) {
    throw InvariantError("teleport_outcome: outcome must be two bits");
  }
  return teleport_branch(psi, nullptr, bits);
}

ChshStrategy ChshStrategy::classical(std::array<int, 2> alice,
                                     std::array<int, 2> bob) {
  for (int v : {alice[0], alice[1], bob[0], bob[1]}) {
    if (v != 0 && v != 1) {
      throw InvariantError("ChshStrategy: table entries must be bits");
    }
  }
  ChshStrategy s;
  s.kind = Kind::ClassicalDeterministic;
  s.alice_table = alice;
  s.bob_table = bob;
  return s;
}

ChshStrategy ChshStrategy::quantum(std::array<double, 2> alice_angles,
                                   std::array<double, 2> bob_angles) {
  ChshStrategy s;
  s.kind = Kind::Quantum;
  s.alice_angles = alice_angles;
  s.bob_angles = bob_angles;
  return s;
}

ChshStrategy ChshStrategy::quantum_default() {
  constexpr double pi = std::numbers::pi;
  return quantum({0.0, pi / 4.0}, {pi / 8.0, -pi / 8.0});
}

std::array<std::array<double, 2>, 2> chsh_joint_probabilities(
    double alice_angle, double bob_angle) {
  std::vector<PureState> product_basis;
  product_basis.reserve(4);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      product_basis.push_back(tensor_states(angle_vector(alice_angle, a),
                                            angle_vector(bob_angle, b)));
    }
  }
  const OutcomeDistribution d =
      measure_in_basis(bell_state(0, 0), product_basis);
  return {{{d.prob(0), d.prob(1)}, {d.prob(2), d.prob(3)}}};
}

double chsh_exact_win_probability(const ChshStrategy& s) {
  double total = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      double win = 0.0;
      if (s.kind == ChshStrategy::Kind::ClassicalDeterministic) {
        win = (s.alice_table[static_cast<std::size_t>(x)] ^
               s.bob_table[static_cast<std::size_t>(y)]) == (x & y)
                  ? 1.0
                  : 0.0;
      } else {
        const auto p =
            chsh_joint_probabilities(s.alice_angles[static_cast<std::size_t>(x)],
                                     s.bob_angles[static_cast<std::size_t>(y)]);
        win = (x & y) ? p[0][1] + p[1][0] : p[0][0] + p[1][1];
      }
      total += 0.25 * win;
    }
  }
  return total;
}

ChshClassicalEnumeration chsh_enumerate_classical() {
  ChshClassicalEnumeration out;
  for (unsigned mask = 0; mask < 16; ++mask) {
    const ChshStrategy s = ChshStrategy::classical(
        {static_cast<int>(mask & 1u), static_cast<int>((mask >> 1) & 1u)},
        {static_cast<int>((mask >> 2) & 1u), static_cast<int>((mask >> 3) & 1u)});
    const double w = chsh_exact_win_probability(s);
    if (w > out.best) {
      out.best = w;
      out.argmax.clear();
      out.argmax.push_back(s);
    } else if (w == out.best) {
      out.argmax.push_back(s);
    }
  }
  return out;
}

GameResult chsh_monte_carlo(const ChshStrategy& s, std::size_t trials,
                            Rng& rng) {
  if (trials == 0) {
    throw InvariantError("chsh_monte_carlo: need at least one trial");
  }
  std::size_t wins = 0;
  if (s.kind == ChshStrategy::Kind::ClassicalDeterministic) {
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t x = rng.uniform_int(2);
      const std::size_t y = rng.uniform_int(2);
      if ((s.alice_table[x] ^ s.bob_table[y]) ==
          static_cast<int>(x & y)) {
        ++wins;
      }
    }
  } else {
    const PureState bell = bell_state(0, 0);
    const std::array<ProjectiveMeasurement, 2> ma{
        {pair_qubit_measurement(s.alice_angles[0], 0),
         pair_qubit_measurement(s.alice_angles[1], 0)}};
    const std::array<ProjectiveMeasurement, 2> mb{
        {pair_qubit_measurement(s.bob_angles[0], 1),
         pair_qubit_measurement(s.bob_angles[1], 1)}};
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t x = rng.uniform_int(2);
      const std::size_t y = rng.uniform_int(2);
      const auto [a, b] = measure_pair_sequentially(bell, ma[x], mb[y], rng);
      if ((a ^ b) == static_cast<int>(x & y)) ++wins;
    }
  }
  return GameResult{wins, trials,
                    static_cast<double>(wins) / static_cast<double>(trials)};
}

}  // namespace qip
