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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qipkit/circuit.hpp"
#include "qipkit/circuit_text.hpp"
#include "qipkit/ecc.hpp"
#include "qipkit/errors.hpp"
#include "qipkit/info.hpp"
#include "qipkit/measurement.hpp"
#include "qipkit/protocols.hpp"
#include "qipkit/rng.hpp"
#include "qipkit/state.hpp"

namespace qip::cli {

namespace {

Json make_report(const std::string& command) {
  Json r = Json::object();
  r["schema"] = "qipkit/1";
  r["command"] = command;
  return r;
}

Json complex_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

Json state_json(const PureState& s) {
  Json out = Json::array();
  for (Complex a : s.amplitudes()) out.push_back(complex_pair(a));
  return out;
}

std::string bitstring(std::size_t index, std::size_t qubits) {
  std::string s(qubits, '0');
  for (std::size_t k = 0; k < qubits; ++k) {
    if ((index >> (qubits - 1 - k)) & 1u) s[k] = '1';
  }
  return s;
}

std::string bits_to_string(const std::vector<int>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Ensemble ensemble_preset(const std::string& name) {
  if (name == "psi01") {
    return Ensemble::of_pure(psi01_states(), {0.5, 0.5});
  }
  if (name == "trine") {
    return Ensemble::of_pure(trine_states(),
                             {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
  }
  throw InvariantError("unknown ensemble preset '" + name + "'");
}

Povm measurement_preset(const std::string& name) {
  if (name == "computational") {
    return as_povm(ProjectiveMeasurement::from_basis(computational_basis(1)));
  }
  if (name == "hadamard") {
    return as_povm(ProjectiveMeasurement::from_basis(hadamard_basis(1)));
  }
  if (name == "trine") return trine_povm();
  if (name == "pauli-x") {
    return as_povm(ProjectiveMeasurement::from_observable(pauli_x()));
  }
  if (name == "pauli-y") {
    return as_povm(ProjectiveMeasurement::from_observable(pauli_y()));
  }
  if (name == "pauli-z") {
    return as_povm(ProjectiveMeasurement::from_observable(pauli_z()));
  }
  throw InvariantError("unknown measurement preset '" + name + "'");
}

BitFlipError ecc_error_preset(const std::string& name) {
  if (name == "none") return BitFlipError::none();
  if (name == "0") return BitFlipError::at(0);
  if (name == "1") return BitFlipError::at(1);
  if (name == "2") return BitFlipError::at(2);
  if (name == "xx01") return BitFlipError::pauli_word("XXI");
  if (name == "xxx") return BitFlipError::pauli_word("XXX");
  if (name == "z0") return BitFlipError::pauli_word("ZII");
  throw InvariantError("unknown error preset '" + name + "'");
}

std::size_t sample_index(const std::vector<double>& probs, Rng& rng) {
  const double u = rng.uniform01();
  double cumulative = 0.0;
  std::size_t last_viable = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    last_viable = i;
    cumulative += probs[i];
    if (u < cumulative) return i;
  }
  return last_viable;
}

std::uint64_t random_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace

Json run_circuit(const std::string& path, std::size_t shots,
                 const std::string& basis, std::uint64_t seed) {
  std::ifstream in(path);
  if (!in) throw InvariantError("cannot open circuit file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();

  const Circuit c = parse_circuit(buffer.str());
  const PureState final_state =
      apply_circuit(c, PureState::basis(c.dim(), 0));

  Json r = make_report("circuit");
  r["seed"] = seed;
  r["file"] = path;
  r["qubits"] = c.qubits();
  r["gates"] = c.gates().size();
  r["basis"] = basis;
  r["shots"] = shots;
  r["amplitudes"] = state_json(final_state);

  if (shots > 0) {
    PureState measured = final_state;
    if (basis == "hadamard") {
      Circuit rotate(c.qubits());
      for (std::size_t q = 0; q < c.qubits(); ++q) {
        rotate.append(Gate::single(GateKind::H, q));
      }
      measured = apply_circuit(rotate, measured);
    } else if (basis != "computational") {
      throw InvariantError("unknown measurement basis '" + basis + "'");
    }
    std::vector<double> probs(measured.dim());
    for (std::size_t i = 0; i < measured.dim(); ++i) {
      probs[i] = std::norm(measured.amplitude(i));
    }
    std::vector<std::size_t> counts(measured.dim(), 0);
    Rng rng(seed);
    for (std::size_t s = 0; s < shots; ++s) ++counts[sample_index(probs, rng)];
    Json hist = Json::object();
    for (std::size_t i = 0; i < counts.size(); ++i) {
      if (counts[i] > 0) hist[bitstring(i, c.qubits())] = counts[i];
    }
    r["histogram"] = hist;
  }
  return r;
}

Json bb84_report(std::size_t n, double delta, const std::string& eve,
                 double noise, double abort_threshold, std::uint64_t seed) {
  BB84Config cfg;
  cfg.n = n;
  cfg.delta = delta;
  cfg.channel_flip_prob = noise;
  cfg.abort_threshold = abort_threshold;
  cfg.seed = seed;
  if (eve == "none") {
    cfg.eve = EveMode::None;
  } else if (eve == "intercept") {
    cfg.eve = EveMode::InterceptResend;
  } else if (eve == "fixed") {
    cfg.eve = EveMode::InterceptResendFixedBasis;
  } else {
    throw InvariantError("unknown eve mode '" + eve + "'");
  }

  const BB84Transcript t = bb84_run(cfg);

  Json r = make_report("bb84");
  r["seed"] = seed;
  r["n"] = n;
  r["delta"] = delta;
  r["eve"] = eve;
  r["noise"] = noise;
  r["abort_threshold"] = abort_threshold;
  r["block_length"] = cfg.block_length();
  r["sifted_count"] = t.sifted_indices.size();
  r["sifted_fraction"] = static_cast<double>(t.sifted_indices.size()) /
                         static_cast<double>(cfg.block_length());
  switch (t.status) {
    case ProtocolStatus::Key:
      r["status"] = "key";
      break;
    case ProtocolStatus::Aborted:
      r["status"] = "aborted";
      break;
    case ProtocolStatus::Repeat:
      r["status"] = "repeat";
      break;
  }
  r["aborted"] = t.status == ProtocolStatus::Aborted;
  if (t.status != ProtocolStatus::Repeat) {
    r["check_bits"] = t.check_indices.size();
    r["mismatch_count"] = t.mismatch_count;
    r["mismatch_rate"] = t.mismatch_rate;
  }
  if (t.status == ProtocolStatus::Key) {
    r["key_length"] = t.alice_key.size();
    r["alice_key"] = bits_to_string(t.alice_key);
    r["bob_key"] = bits_to_string(t.bob_key);
    r["keys_match"] = t.alice_key == t.bob_key;
  }
  return r;
}

Json e91_report(std::size_t pairs, double test_fraction,
                const std::string& eve, std::uint64_t seed) {
  E91Eve mode;
  if (eve == "none") {
    mode = E91Eve::None;
  } else if (eve == "premeasure") {
    mode = E91Eve::MeasureBoth;
  } else {
    throw InvariantError("unknown eve mode '" + eve + "'");
  }

  const E91Result res = e91_run(pairs, test_fraction, mode, seed);

  Json r = make_report("e91");
  r["seed"] = seed;
  r["pairs"] = pairs;
  r["test_fraction"] = test_fraction;
  r["eve"] = eve;
  r["key_length"] = res.alice_key.size();
  r["key_agreements"] = res.key_agreements;
  r["key_agreement_rate"] = res.key_agreement_rate;
  r["chsh_rounds"] = res.chsh_rounds;
  r["chsh_wins"] = res.chsh_wins;
  r["chsh_win_rate"] = res.chsh_win_rate;
  r["alice_key"] = bits_to_string(res.alice_key);
  r["bob_key"] = bits_to_string(res.bob_key);
  return r;
}

Json densecode_report() {
  Json r = make_report("densecode");
  Json messages = Json::array();
  bool all_ok = true;
  for (unsigned m = 0; m < 4; ++m) {
    const PureState encoded = dense_code(m);
    const unsigned decoded = dense_decode(encoded);
    all_ok = all_ok && decoded == m;
    Json entry = Json::object();
    entry["message"] = m;
    entry["encoded"] = state_json(encoded);
    entry["decoded"] = decoded;
    messages.push_back(entry);
  }
  r["messages"] = messages;
  r["all_roundtrip"] = all_ok;
  return r;
}

Json teleport_report(std::size_t trials, std::uint64_t seed) {
  if (trials == 0) {
    throw InvariantError("teleport: need at least one trial");
  }
  Rng rng(seed);
  double min_fidelity = 1.0;
  std::vector<std::size_t> outcome_counts(4, 0);
  for (std::size_t t = 0; t < trials; ++t) {
    const PureState psi = random_pure(2, rng);
    const TeleportResult res = teleport(psi, rng);
    min_fidelity =
        std::min(min_fidelity, std::norm(inner_product(psi, res.bob_state)));
    ++outcome_counts[res.bits];
  }
  Json r = make_report("teleport");
  r["seed"] = seed;
  r["trials"] = trials;
  r["min_fidelity"] = min_fidelity;
  r["outcome_counts"] = outcome_counts;
  Json fractions = Json::array();
  for (std::size_t c : outcome_counts) {
    fractions.push_back(static_cast<double>(c) / static_cast<double>(trials));
  }
  r["outcome_fractions"] = fractions;
  return r;
}

Json chsh_report(const std::string& strategy, std::size_t trials,
                 std::uint64_t seed) {
  ChshStrategy s = ChshStrategy::quantum_default();
  if (strategy == "quantum") {
    s = ChshStrategy::quantum_default();
  } else if (strategy == "classical") {
    s = ChshStrategy::classical({0, 0}, {0, 0});
  } else {
    throw InvariantError("unknown strategy '" + strategy + "'");
  }

  Json r = make_report("chsh");
  r["seed"] = seed;
  r["strategy"] = strategy;
  if (s.kind == ChshStrategy::Kind::Quantum) {
    r["alice_angles"] = s.alice_angles;
    r["bob_angles"] = s.bob_angles;
  } else {
    r["alice_table"] = s.alice_table;
    r["bob_table"] = s.bob_table;
  }
  r["exact_win_probability"] = chsh_exact_win_probability(s);
  r["classical_best"] = chsh_enumerate_classical().best;
  if (trials > 0) {
    Rng rng(seed);
    const GameResult g = chsh_monte_carlo(s, trials, rng);
    r["trials"] = g.trials;
    r["wins"] = g.wins;
    r["win_rate"] = g.win_rate;
  }
  return r;
}

Json ecc_report(const std::string& error, double alpha, double beta,
                std::uint64_t seed) {
  const BitFlipError err = ecc_error_preset(error);
  const PureState original({Complex(alpha, 0.0), Complex(beta, 0.0)});

  Rng rng(seed);
  const PureState encoded = encode_logical(original.amplitude(0),
                                           original.amplitude(1));
  const PureState corrupted = inject(encoded, err);
  const auto [syndrome, collapsed] = measure_syndrome(corrupted, rng);
  const PureState corrected = correct(collapsed, syndrome);
  const PureState decoded = decode_logical(corrected);

  const double fid = std::norm(inner_product(original, decoded));

  Json r = make_report("ecc");
  r["seed"] = seed;
  r["error"] = error;
  r["pauli_word"] = err.word();
  r["alpha"] = alpha;
  r["beta"] = beta;
  r["syndrome"] = Json::array({syndrome.m1, syndrome.m2});
  r["fidelity"] = fid;
  r["recovered"] = fid >= 1.0 - 1e-10;
  r["decoded"] = state_json(decoded);
  return r;
}

Json entropy_report(const std::string& ensemble) {
  const Ensemble e = ensemble_preset(ensemble);
  const DensityMatrix rho = density_from_ensemble(e);

  Json r = make_report("entropy");
  r["value_bits"] = von_neumann_entropy(rho);
  Json echo = Json::object();
  echo["ensemble"] = ensemble;
  Json prior = Json::array();
  for (const EnsembleMember& m : e.members()) prior.push_back(m.prob);
  echo["prior"] = prior;
  r["inputs_echo"] = echo;
  return r;
}

Json holevo_report(const std::string& ensemble,
                   const std::string& measurement) {
  const Ensemble e = ensemble_preset(ensemble);
  const Povm m = measurement_preset(measurement);

  std::vector<double> prior;
  prior.reserve(e.size());
  for (const EnsembleMember& member : e.members()) {
    prior.push_back(member.prob);
  }
  const double chi = holevo_chi(e);
  const double mi = mutual_information(ClassicalDistribution(prior),
                                       induced_channel(e, m));

  Json r = make_report("holevo");
  r["value_bits"] = chi;
  Json echo = Json::object();
  echo["ensemble"] = ensemble;
  echo["measurement"] = measurement;
  r["inputs_echo"] = echo;
  r["mutual_information_bits"] = mi;
  r["bound_margin"] = chi - mi;
  r["bound_satisfied"] = mi <= chi + 1e-9;
  return r;
}

Json compress_report(const std::string& ensemble, std::size_t n,
                     double epsilon, const std::string& mode,
                     std::size_t trials, std::uint64_t seed) {
  const Ensemble e = ensemble_preset(ensemble);
  const TypicalSubspace ts = typical_subspace(e, n, epsilon);
  const double entropy = von_neumann_entropy(density_from_ensemble(e));

  double avg_fidelity = 0.0;
  if (mode == "exact") {
    avg_fidelity = average_projection_fidelity(e, n, epsilon);
  } else if (mode == "mc") {
    Rng rng(seed);
    avg_fidelity = average_projection_fidelity(e, n, epsilon, trials, rng);
  } else {
    throw InvariantError("unknown mode '" + mode + "'");
  }

  Json r = make_report("compress");
  r["ensemble"] = ensemble;
  r["mode"] = mode;
  if (mode == "mc") {
    r["seed"] = seed;
    r["trials"] = trials;
  }
  r["n"] = n;
  r["epsilon"] = epsilon;
  r["entropy_bits"] = entropy;
  r["dim"] = ts.dimension();
  r["bound_dim"] = std::exp2(static_cast<double>(n) * (entropy + epsilon));
  r["avg_fidelity"] = avg_fidelity;
  r["bound_fidelity"] = 1.0 - 2.0 * (1.0 - ts.total_prob);
  return r;
}

std::string render_human(const Json& report) {
  std::string out;
  for (const auto& [key, value] : report.items()) {
    out += key;
    out += ": ";
    if (value.is_string()) {
      out += value.get<std::string>();
    } else {
      out += value.dump();
    }
    out += "\n";
  }
  return out;
}

namespace {

void emit(const Json& report, bool as_json, const std::string& out_path) {
  const std::string text =
      as_json ? report.dump(2) + "\n" : render_human(report);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InvariantError("cannot write to '" + out_path + "'");
  out << text;
}

int exit_code_for(const Json& report) {
  if (report.contains("status") &&
      report["status"].get<std::string>() != "key") {
    return 1;
  }
  return 0;
}

}  // namespace

int dispatch(int argc, const char* const* argv) {
  CLI::App app{"qipkit: quantum information toolkit"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string out_path;
  app.add_flag("--json", as_json, "emit the machine-readable JSON report");
  app.add_option("--out", out_path, "write the report to this file");

  std::uint64_t seed = 0;
  bool seed_given = false;
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "RNG seed (generated if omitted)")
        ->each([&](const std::string&) { seed_given = true; });
  };

  std::string circuit_file;
  std::size_t shots = 1000;
  std::string basis = "computational";
  CLI::App* c_circuit = app.add_subcommand("circuit", "run a circuit file");
  c_circuit->add_option("file", circuit_file, "circuit text file")
      ->required();
  c_circuit->add_option("--shots", shots, "sampled measurement count");
  c_circuit->add_option("--basis", basis, "measurement basis")
      ->check(CLI::IsMember({"computational", "hadamard"}));
  add_seed(c_circuit);

  std::size_t n = 16;
  double delta = 1.0;
  std::string eve = "none";
  double noise = 0.0;
  double threshold = 0.11;
  CLI::App* c_bb84 = app.add_subcommand("bb84", "BB84 key distribution");
  c_bb84->add_option("--n", n, "target key length");
  c_bb84->add_option("--delta", delta, "block-length slack");
  c_bb84->add_option("--eve", eve, "eavesdropper mode")
      ->check(CLI::IsMember({"none", "intercept", "fixed"}));
  c_bb84->add_option("--noise", noise, "channel bit-flip probability");
  c_bb84->add_option("--threshold", threshold, "abort threshold");
  add_seed(c_bb84);

  std::size_t pairs = 256;
  double test_fraction = 0.25;
  std::string e91_eve = "none";
  CLI::App* c_e91 = app.add_subcommand("e91", "entanglement-based key distribution");
  c_e91->add_option("--n", pairs, "number of entangled pairs");
  c_e91->add_option("--test-fraction", test_fraction,
                    "fraction of pairs spent on CHSH tests");
  c_e91->add_option("--eve", e91_eve, "eavesdropper mode")
      ->check(CLI::IsMember({"none", "premeasure"}));
  add_seed(c_e91);

  CLI::App* c_dense =
      app.add_subcommand("densecode", "dense coding roundtrip");

  std::size_t trials = 1000;
  CLI::App* c_teleport =
      app.add_subcommand("teleport", "teleport random states");
  c_teleport->add_option("--trials", trials, "number of teleported states");
  add_seed(c_teleport);

  std::string strategy = "quantum";
  std::size_t chsh_trials = 100000;
  CLI::App* c_chsh = app.add_subcommand("chsh", "CHSH game");
  c_chsh->add_option("--strategy", strategy, "player strategy")
      ->check(CLI::IsMember({"quantum", "classical"}));
  c_chsh->add_option("--trials", chsh_trials, "Monte Carlo rounds");
  add_seed(c_chsh);

  std::string ecc_error = "none";
  double alpha = 0.6;
  double beta = 0.8;
  CLI::App* c_ecc = app.add_subcommand("ecc", "three-qubit bit-flip code");
  c_ecc->add_option("--error", ecc_error, "error to inject")
      ->check(CLI::IsMember({"none", "0", "1", "2", "xx01", "xxx", "z0"}));
  c_ecc->add_option("--alpha", alpha, "logical |0> amplitude");
  c_ecc->add_option("--beta", beta, "logical |1> amplitude");
  add_seed(c_ecc);

  std::string ensemble = "psi01";
  CLI::App* c_entropy =
      app.add_subcommand("entropy", "ensemble von Neumann entropy");
  c_entropy->add_option("--ensemble", ensemble, "ensemble preset")
      ->check(CLI::IsMember({"psi01", "trine"}));

  std::string measurement = "computational";
  CLI::App* c_holevo =
      app.add_subcommand("holevo", "Holevo bound vs a measurement");
  c_holevo->add_option("--ensemble", ensemble, "ensemble preset")
      ->check(CLI::IsMember({"psi01", "trine"}));
  c_holevo->add_option("--measurement", measurement, "measurement preset")
      ->check(CLI::IsMember({"computational", "hadamard", "trine", "pauli-x",
                             "pauli-y", "pauli-z"}));

  std::size_t block = 8;
  double epsilon = 0.15;
  std::string mode = "exact";
  std::size_t mc_trials = 100000;
  CLI::App* c_compress =
      app.add_subcommand("compress", "typical-subspace compression report");
  c_compress->add_option("--ensemble", ensemble, "ensemble preset")
      ->check(CLI::IsMember({"psi01", "trine"}));
  c_compress->add_option("--n", block, "block length");
  c_compress->add_option("--epsilon", epsilon, "typicality slack");
  c_compress->add_option("--mode", mode, "fidelity computation mode")
      ->check(CLI::IsMember({"exact", "mc"}));
  c_compress->add_option("--trials", mc_trials, "Monte Carlo trials");
  add_seed(c_compress);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!seed_given) seed = random_seed();

  try {
    Json report;
    if (c_circuit->parsed()) {
      report = run_circuit(circuit_file, shots, basis, seed);
    } else if (c_bb84->parsed()) {
      report = bb84_report(n, delta, eve, noise, threshold, seed);
    } else if (c_e91->parsed()) {
      report = e91_report(pairs, test_fraction, e91_eve, seed);
    } else if (c_dense->parsed()) {
      report = densecode_report();
    } else if (c_teleport->parsed()) {
      report = teleport_report(trials, seed);
    } else if (c_chsh->parsed()) {
      report = chsh_report(strategy, chsh_trials, seed);
    } else if (c_ecc->parsed()) {
      report = ecc_report(ecc_error, alpha, beta, seed);
    } else if (c_entropy->parsed()) {
      report = entropy_report(ensemble);
    } else if (c_holevo->parsed()) {
      report = holevo_report(ensemble, measurement);
    } else if (c_compress->parsed()) {
      report = compress_report(ensemble, block, epsilon, mode, mc_trials,
                               seed);
    } else {
      std::cerr << "error: no subcommand given\n";
      return 2;
    }
    emit(report, as_json, out_path);
    return exit_code_for(report);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qip::cli
