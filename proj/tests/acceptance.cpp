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

// End-to-end release gate. Each numbered criterion prints one PASS/FAIL
// line; the process exits nonzero when any criterion fails.

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qipkit/circuit.hpp"
#include "qipkit/circuit_text.hpp"
#include "qipkit/complex_matrix.hpp"
#include "qipkit/ecc.hpp"
#include "qipkit/errors.hpp"
#include "qipkit/info.hpp"
#include "qipkit/measurement.hpp"
#include "qipkit/protocols.hpp"
#include "qipkit/rng.hpp"
#include "qipkit/state.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using qip::BB84Config;
using qip::BB84Transcript;
using qip::BitFlipError;
using qip::ChshStrategy;
using qip::Circuit;
using qip::ClassicalChannel;
using qip::ClassicalDistribution;
using qip::Complex;
using qip::ComplexMatrix;
using qip::DensityMatrix;
using qip::Ensemble;
using qip::Gate;
using qip::GateKind;
using qip::ProtocolStatus;
using qip::PureState;
using qip::Rng;
using qip::Subsystem;
using qip::Syndrome;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

Ensemble psi01_ensemble() {
  return Ensemble::of_pure(qip::psi01_states(), {0.5, 0.5});
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

Check worked_numbers() {
  Check c;
  const Ensemble e = psi01_ensemble();
  const double s = qip::von_neumann_entropy(qip::density_from_ensemble(e));
  c.require(near(s, 0.8112781, 1e-6), "ensemble entropy");

  const qip::Povm comp = qip::as_povm(
      qip::ProjectiveMeasurement::from_basis(qip::computational_basis(1)));
  const ClassicalChannel channel = qip::induced_channel(e, comp);
  const double crossover = 0.5 - std::sqrt(3.0) / 4.0;
  c.require(near(channel.prob(0, 1), crossover, 1e-12), "crossover row 0");
  c.require(near(channel.prob(1, 0), crossover, 1e-12), "crossover row 1");

  const double info = qip::mutual_information(
      ClassicalDistribution({0.5, 0.5}), channel);
  c.require(near(info, 0.6454211, 1e-6), "mutual information");

  // The trine-induced channel's erasure probability is recorded, not
  // asserted; only the Holevo inequality is required of it.
  const ClassicalChannel trine = qip::induced_channel(e, qip::trine_povm());
  c.require(near(trine.prob(0, 2), trine.prob(1, 2), 1e-12),
            "trine erasure symmetry");
  const double trine_info = qip::mutual_information(
      ClassicalDistribution({0.5, 0.5}), trine);
  c.require(trine_info <= qip::holevo_chi(e) + 1e-9,
            "trine Holevo inequality");
  std::printf("  note: trine erasure probability %.6f\n", trine.prob(0, 2));
  return c;
}

Check chsh() {
  Check c;
  const double target = (2.0 + std::sqrt(2.0)) / 4.0;
  const double exact =
      qip::chsh_exact_win_probability(ChshStrategy::quantum_default());
  c.require(near(exact, target, 1e-12), "exact quantum win probability");

  const qip::ChshClassicalEnumeration e = qip::chsh_enumerate_classical();
  c.require(e.best == 0.75, "classical maximum");

  Rng rng(101);
  const qip::GameResult q =
      qip::chsh_monte_carlo(ChshStrategy::quantum_default(), 1000000, rng);
  c.require(near(q.win_rate, exact, 0.002), "quantum Monte Carlo");

  const qip::GameResult cl = qip::chsh_monte_carlo(
      ChshStrategy::classical({0, 0}, {0, 0}), 1000000, rng);
  c.require(near(cl.win_rate, 0.75, 0.002), "classical Monte Carlo");

  c.require(exact - e.best > 0.10, "quantum-classical gap");
  return c;
}

Check teleportation() {
  Check c;
  Rng rng(102);
  for (int rep = 0; rep < 100 && c.ok; ++rep) {
    const PureState psi = qip::random_pure(2, rng);
    for (unsigned bits = 0; bits < 4; ++bits) {
      const qip::TeleportResult r = qip::teleport_outcome(psi, bits);
      const double f = std::norm(qip::inner_product(psi, r.bob_state));
      c.require(near(f, 1.0, 1e-10), "forced-outcome fidelity");
    }
  }

  Rng sampler(103);
  const PureState psi = qip::random_pure(2, sampler);
  const std::size_t trials = 100000;
  std::array<std::size_t, 4> counts{};
  for (std::size_t i = 0; i < trials; ++i) {
    ++counts[qip::teleport(psi, sampler).bits];
  }
  const double sigma =
      std::sqrt(0.25 * 0.75 / static_cast<double>(trials));
  for (std::size_t b = 0; b < 4; ++b) {
    const double fraction =
        static_cast<double>(counts[b]) / static_cast<double>(trials);
    c.require(near(fraction, 0.25, 4.0 * sigma), "outcome uniformity");
  }
  return c;
}

Check dense_coding() {
  Check c;
  std::vector<PureState> encoded;
  for (unsigned m = 0; m < 4; ++m) {
    encoded.push_back(qip::dense_code(m));
    c.require(qip::dense_decode(encoded.back()) == m, "message roundtrip");
  }
  for (unsigned i = 0; i < 4; ++i) {
    for (unsigned j = i + 1; j < 4; ++j) {
      c.require(std::abs(qip::inner_product(encoded[i], encoded[j])) <= 1e-12,
                "pairwise orthogonality");
    }
  }
  return c;
}

Check error_correction() {
  Check c;
  Rng rng(104);

  for (int rep = 0; rep < 1000 && c.ok; ++rep) {
    const PureState logical = qip::random_pure(2, rng);
    for (int pos = 0; pos < 3; ++pos) {
      const PureState code =
          qip::encode_logical(logical.amplitude(0), logical.amplitude(1));
      const PureState corrupted = qip::inject(code, BitFlipError::at(
                                                        std::size_t(pos)));
      const auto [syndrome, collapsed] = qip::measure_syndrome(corrupted, rng);
      const PureState decoded =
          qip::decode_logical(qip::correct(collapsed, syndrome));
      const double f = std::norm(qip::inner_product(logical, decoded));
      c.require(near(f, 1.0, 1e-10), "single-flip recovery");
    }
  }

  const PureState code = qip::encode_logical(Complex(0.6, 0.0),
                                             Complex(0.8, 0.0));
  const auto expect = [&](const BitFlipError& e, int m1, int m2,
                          const std::string& what) {
    const auto [s, post] = qip::measure_syndrome(qip::inject(code, e), rng);
    c.require(s.m1 == m1 && s.m2 == m2, what);
  };
  expect(BitFlipError::none(), 1, 1, "syndrome row none");
  expect(BitFlipError::at(0), -1, -1, "syndrome row flip 0");
  expect(BitFlipError::at(1), -1, 1, "syndrome row flip 1");
  expect(BitFlipError::at(2), 1, -1, "syndrome row flip 2");
  expect(BitFlipError::pauli_word("XXX"), 1, 1, "XXX syndrome");
  expect(BitFlipError::pauli_word("ZII"), 1, 1, "ZII syndrome");

  const PureState original({Complex(0.6, 0.0), Complex(0.8, 0.0)});
  const PureState doubled =
      qip::inject(code, BitFlipError::pauli_word("XXI"));
  const auto [ds, dpost] = qip::measure_syndrome(doubled, rng);
  const PureState misdecoded = qip::decode_logical(qip::correct(dpost, ds));
  c.require(std::norm(qip::inner_product(original, misdecoded)) < 1.0 - 1e-6,
            "XXI must miscorrect");

  const std::array<BitFlipError, 4> classes = {
      BitFlipError::none(), BitFlipError::at(0), BitFlipError::at(1),
      BitFlipError::at(2)};
  for (int which = 0; which < 4; ++which) {
    for (int rep = 0; rep < 25; ++rep) {
      const PureState logical = qip::random_pure(2, rng);
      const PureState corrupted = qip::inject(
          qip::encode_logical(logical.amplitude(0), logical.amplitude(1)),
          classes[std::size_t(which)]);
      const auto [index, post] = qip::four_projector_decode(corrupted, rng);
      c.require(index == which + 1, "projector class agreement");
      const auto [s, collapsed] = qip::measure_syndrome(corrupted, rng);
      int from_syndrome = 4;
      if (s.m1 == 1 && s.m2 == 1) from_syndrome = 1;
      if (s.m1 == -1 && s.m2 == -1) from_syndrome = 2;
      if (s.m1 == -1 && s.m2 == 1) from_syndrome = 3;
      c.require(index == from_syndrome, "projector-syndrome agreement");
    }
  }
  return c;
}

Check bb84() {
  Check c;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    BB84Config cfg;
    cfg.n = 64;
    cfg.delta = 2.0;
    cfg.seed = seed;
    const BB84Transcript t = qip::bb84_run(cfg);
    c.require(t.status == ProtocolStatus::Key, "clean run reaches a key");
    c.require(t.mismatch_count == 0, "clean run mismatches");
  }

  BB84Config eve;
  eve.n = 800;
  eve.delta = 1.0;
  eve.eve = qip::EveMode::InterceptResend;
  eve.seed = 105;
  c.require(eve.block_length() == 4000, "block length");
  const BB84Transcript t = qip::bb84_run(eve);
  c.require(near(t.mismatch_rate, 0.25, 0.03), "intercept mismatch rate");
  const double sifted = static_cast<double>(t.sifted_indices.size()) /
                        static_cast<double>(eve.block_length());
  c.require(near(sifted, 0.5, 0.05), "sifted fraction");
  return c;
}

Check entropy_properties() {
  Check c;
  Rng rng(106);

  for (int rep = 0; rep < 500 && c.ok; ++rep) {
    const std::size_t dim = 2 + rng.uniform_int(7);
    const DensityMatrix pure =
        qip::density_from_pure(qip::random_pure(dim, rng));
    c.require(std::abs(qip::von_neumann_entropy(pure)) <= 1e-7,
              "pure entropy zero");

    const DensityMatrix mixed =
        qip::random_density(dim, 2 + rng.uniform_int(dim - 1), rng);
    const double s = qip::von_neumann_entropy(mixed);
    c.require(s > 0.0, "mixed entropy positive");
    c.require(s <= std::log2(static_cast<double>(dim)) + 1e-7,
              "entropy under log dim");

    const ComplexMatrix u = gen::random_unitary(dim, rng);
    c.require(near(qip::von_neumann_entropy(qip::apply_unitary(mixed, u)), s,
                   1e-7),
              "basis invariance");
  }
  for (std::size_t dim = 2; dim <= 8; ++dim) {
    c.require(near(qip::von_neumann_entropy(DensityMatrix::maximally_mixed(
                       dim)),
                   std::log2(static_cast<double>(dim)), 1e-7),
              "maximally mixed saturation");
  }

  for (int rep = 0; rep < 500 && c.ok; ++rep) {
    const DensityMatrix joint =
        qip::random_density(4, 1 + rng.uniform_int(4), rng);
    const double s_ab = qip::von_neumann_entropy(joint);
    const double s_a = qip::von_neumann_entropy(
        qip::partial_trace(joint, 2, 2, Subsystem::A));
    const double s_b = qip::von_neumann_entropy(
        qip::partial_trace(joint, 2, 2, Subsystem::B));
    c.require(s_ab <= s_a + s_b + 1e-7, "subadditivity");

    const DensityMatrix fa = qip::random_density(2, 2, rng);
    const DensityMatrix fb = qip::random_density(2, 2, rng);
    const DensityMatrix product =
        DensityMatrix(qip::kron(fa.matrix(), fb.matrix()));
    c.require(near(qip::von_neumann_entropy(product),
                   qip::von_neumann_entropy(fa) + qip::von_neumann_entropy(fb),
                   1e-7),
              "product equality");
  }

  for (int rep = 0; rep < 500 && c.ok; ++rep) {
    const DensityMatrix abc =
        qip::random_density(8, 1 + rng.uniform_int(8), rng);
    const DensityMatrix ab = qip::partial_trace(abc, 4, 2, Subsystem::A);
    const DensityMatrix bc = qip::partial_trace(abc, 2, 4, Subsystem::B);
    const DensityMatrix b = qip::partial_trace(ab, 2, 2, Subsystem::B);
    c.require(qip::von_neumann_entropy(abc) + qip::von_neumann_entropy(b) <=
                  qip::von_neumann_entropy(ab) + qip::von_neumann_entropy(bc) +
                      1e-7,
              "strong subadditivity");
  }

  for (int rep = 0; rep < 1000 && c.ok; ++rep) {
    const DensityMatrix a = qip::random_density(2, 1 + rng.uniform_int(2),
                                                rng);
    const DensityMatrix b = qip::random_density(2, 1 + rng.uniform_int(2),
                                                rng);
    const double f = qip::fidelity(a, b);
    const double d = qip::trace_distance(a, b);
    c.require(1.0 - f <= d + 1e-9, "fidelity-distance lower bound");
    c.require(d <= std::sqrt(std::max(0.0, 1.0 - f * f)) + 1e-9,
              "fidelity-distance upper bound");
  }

  for (int rep = 0; rep < 200 && c.ok; ++rep) {
    const std::size_t letters = 2 + rng.uniform_int(3);
    std::vector<qip::EnsembleMember> members;
    std::vector<double> weights(letters);
    double total = 0.0;
    for (auto& w : weights) {
      w = 0.05 + rng.uniform01();
      total += w;
    }
    for (std::size_t a = 0; a < letters; ++a) {
      if (rng.bernoulli(0.5)) {
        members.push_back({qip::random_pure(2, rng), weights[a] / total});
      } else {
        members.push_back({qip::random_density(2, 2, rng),
                           weights[a] / total});
      }
    }
    const Ensemble e(members);
    const qip::Povm povm = gen::random_povm(2, 2 + rng.uniform_int(3), rng);
    std::vector<double> prior;
    for (const auto& m : e.members()) prior.push_back(m.prob);
    const double info = qip::mutual_information(
        ClassicalDistribution(prior), qip::induced_channel(e, povm));
    c.require(info <= qip::holevo_chi(e) + 1e-9, "Holevo bound");
  }
  return c;
}

Check compression() {
  Check c;
  const std::size_t n = 8;
  const double epsilon = 0.15;
  const Ensemble source = psi01_ensemble();

  const qip::TypicalSubspace sub = qip::typical_subspace(source, n, epsilon);
  const double avg = qip::average_projection_fidelity(source, n, epsilon);
  c.require(avg >= 1.0 - 2.0 * (1.0 - sub.total_prob) - 1e-9,
            "fidelity bound");

  const std::vector<PureState> letters = qip::psi01_states();
  oracle::Mat rho = oracle::mat_zero(2, 2);
  for (const PureState& psi : letters) {
    rho = oracle::mat_add(
        rho, oracle::mat_scale(Complex(0.5, 0.0),
                               oracle::outer(gen::to_vec(psi))));
  }
  const oracle::Eigen2 eig = oracle::eigen2_closed_form(rho);
  const std::vector<double> lambda = {eig.values[1], eig.values[0]};
  oracle::Mat basis = oracle::mat_zero(2, 2);
  for (std::size_t r = 0; r < 2; ++r) {
    basis[r][0] = eig.vectors[r][1];
    basis[r][1] = eig.vectors[r][0];
  }
  const double s = oracle::shannon(lambda);
  std::vector<std::uint32_t> members;
  for (std::uint32_t z = 0; z < (1u << n); ++z) {
    if (oracle::typical_string(lambda, z, n, s, epsilon)) members.push_back(z);
  }
  std::vector<oracle::Vec> letterVecs;
  for (const PureState& psi : letters) letterVecs.push_back(gen::to_vec(psi));
  const oracle::SchumacherOracle want = oracle::schumacher_small_n(
      letterVecs, {0.5, 0.5}, basis, lambda, members, n);
  c.require(sub.dimension() == members.size(), "typical dimension");
  c.require(near(sub.total_prob, want.typical_prob, 1e-9),
            "typical probability vs oracle");
  c.require(near(avg, want.avg_fidelity, 1e-9), "average fidelity vs oracle");

  const double entropy =
      qip::von_neumann_entropy(qip::density_from_ensemble(source));
  for (std::size_t block = 4; block <= 16; ++block) {
    const qip::TypicalSubspace ts =
        qip::typical_subspace(source, block, epsilon);
    c.require(static_cast<double>(ts.dimension()) <=
                  std::exp2(static_cast<double>(block) * (entropy + epsilon)) +
                      1e-9,
              "dimension bound");
  }
  return c;
}

Check kernel() {
  Check c;
  Rng rng(107);
  for (std::size_t dim = 2; dim <= 16; ++dim) {
    for (int rep = 0; rep < 3; ++rep) {
      const ComplexMatrix h = gen::random_hermitian(dim, rng);
      const qip::HermitianEigen eig = qip::hermitian_eigen(h);
      c.require(qip::max_abs_diff(eig.reconstruct(), h) < 1e-9,
                "eigendecomposition reconstruction");
    }
  }

  const DensityMatrix bell = qip::density_from_pure(qip::bell_state(0, 0));
  for (Subsystem keep : {Subsystem::A, Subsystem::B}) {
    const DensityMatrix reduced = qip::partial_trace(bell, 2, 2, keep);
    c.require(qip::max_abs_diff(reduced.matrix(),
                                0.5 * ComplexMatrix::identity(2)) <= 1e-12,
              "Bell reduced state");
  }

  for (int rep = 0; rep < 1000 && c.ok; ++rep) {
    const DensityMatrix rho = qip::random_density(2, 1 + rng.uniform_int(2),
                                                  rng);
    const DensityMatrix back =
        qip::density_from_bloch(qip::bloch_from_density(rho));
    c.require(qip::max_abs_diff(back.matrix(), rho.matrix()) <= 1e-10,
              "Bloch roundtrip");
  }
  return c;
}

Circuit random_text_circuit(std::size_t qubits, std::size_t gates, Rng& rng) {
  Circuit c(qubits);
  for (std::size_t g = 0; g < gates; ++g) {
    const std::size_t pick = rng.uniform_int(7);
    const std::size_t target = rng.uniform_int(qubits);
    if (pick == 5 && qubits >= 2) {
      std::size_t other = rng.uniform_int(qubits);
      while (other == target) other = rng.uniform_int(qubits);
      c.append(Gate::cnot(target, other));
    } else if (pick == 6) {
      c.append(Gate::custom2(target, gen::random_unitary(2, rng)));
    } else {
      const GateKind kinds[] = {GateKind::I, GateKind::X, GateKind::Y,
                                GateKind::Z, GateKind::H};
      c.append(Gate::single(kinds[pick % 5], target));
    }
  }
  return c;
}

Check parser() {
  Check c;
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "qipkit_acceptance_corpus";
  std::filesystem::create_directories(dir);

  Rng rng(108);
  for (int file = 0; file < 200; ++file) {
    const Circuit original =
        random_text_circuit(1 + rng.uniform_int(6), 1 + rng.uniform_int(30),
                            rng);
    const std::string text = qip::format_circuit(original);
    const std::filesystem::path path =
        dir / ("circuit_" + std::to_string(file) + ".qc");
    {
      std::ofstream out(path);
      out << text;
    }
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();

    const Circuit parsed = qip::parse_circuit(buffer.str());
    c.require(parsed.qubits() == original.qubits(), "qubit count roundtrip");
    c.require(parsed.gates().size() == original.gates().size(),
              "gate count roundtrip");
    for (std::size_t g = 0; g < original.gates().size() && c.ok; ++g) {
      c.require(parsed.gates()[g].kind() == original.gates()[g].kind(),
                "gate kind roundtrip");
      c.require(parsed.gates()[g].targets() == original.gates()[g].targets(),
                "gate target roundtrip");
      c.require(qip::max_abs_diff(parsed.gates()[g].matrix(),
                                  original.gates()[g].matrix()) < 1e-12,
                "gate matrix roundtrip");
    }
    c.require(qip::format_circuit(parsed) == text, "byte-exact format");
  }

  const std::vector<std::string> malformed = {
      "",
      "qubits\n",
      "qubits two\n",
      "qubits 0\n",
      "qubits 18446744073709551616\n",
      "h 0\n",
      "qubits 2\nwarp 0\n",
      "qubits 2\nx 5\n",
      "qubits 2\nx -1\n",
      "qubits 2\nx 1.5\n",
      "qubits 2\ncnot 0\n",
      "qubits 2\ncnot 0 0\n",
      "qubits 2\ncnot 0 1 1\n",
      "qubits 2\nu2 0 1 0 0\n",
      "qubits 1\nu2 0 1+i 0 0 1\n",
      "qubits 1\nu2 0 1+2x 0 0 1\n",
      "qubits 1\nu2 0 1 0 0 2\n",
  };
  for (const std::string& text : malformed) {
    bool located = false;
    try {
      qip::parse_circuit(text);
    } catch (const qip::ParseError& e) {
      located = e.line() >= 1 && e.column() >= 1;
    } catch (...) {
      located = false;
    }
    c.require(located, "located error for malformed input");
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria = {
      {"worked-number reproduction", worked_numbers},
      {"CHSH game", chsh},
      {"teleportation", teleportation},
      {"dense coding", dense_coding},
      {"error correction", error_correction},
      {"BB84", bb84},
      {"entropy and distance properties", entropy_properties},
      {"typical-subspace compression", compression},
      {"numerical kernel", kernel},
      {"circuit parser", parser},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check result;
    try {
      result = criteria[i].run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    if (result.ok) {
      std::printf("PASS %2zu %s\n", i + 1, criteria[i].name);
    } else {
      std::printf("FAIL %2zu %s (%s)\n", i + 1, criteria[i].name,
                  result.detail.c_str());
      ++failures;
    }
  }
  if (failures > 0) {
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
