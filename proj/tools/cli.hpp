// Copyright 2026 The lattice-locc Authors
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

// Command-line front end. `run` is the whole program minus process I/O so
// tests can drive it in-process.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "locc/json.hpp"
#include "locc/locc.hpp"

namespace locc::cli {

using io::json;

enum ExitCode : int {
  kOk = 0,
  kDistinguishable = 0,
  kRejected = 1,
  kInputError = 2,
  kIndistinguishable = 3,
  kInconclusive = 4,
  kNumericalFailure = 5,
};

inline constexpr std::uint64_t kDefaultSeed = 20200325;

struct Result {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Everything a single invocation needs, filled in by the parser.
struct RunConfig {
  std::string command;
  std::string family;
  std::string input_file;
  std::string states;
  std::string construct;
  std::optional<int> n;
  std::optional<std::int64_t> d, k, l;
  std::string measure = "y-basis";
  std::vector<std::string> drop;
  std::optional<std::int64_t> shots;
  std::string seed_text = std::to_string(kDefaultSeed);
  std::optional<double> tol;
  std::string format = "json";
  bool verbose = false;
};

struct InputError : Error {
  using Error::Error;
};

inline std::uint64_t resolve_seed(const RunConfig& cfg) {
  if (cfg.seed_text == "random") return std::random_device{}() * 0x100000001ULL;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(cfg.seed_text, &used);
    if (used != cfg.seed_text.size()) throw InputError("bad seed");
    return v;
  } catch (const std::exception&) {
    throw InputError("--seed expects an unsigned integer or \"random\"");
  }
}

inline AnalyzeOptions analyze_options(const RunConfig& cfg) {
  AnalyzeOptions opt;
  if (cfg.tol) {
    if (!(*cfg.tol > 0.0)) throw InputError("--tol must be positive");
    opt.tol.membership = *cfg.tol;
  }
  return opt;
}

inline StateSet build_family(const std::string& family, const RunConfig& cfg) {
  if (family == "example2") return example2_set();
  if (family == "theorem2") {
    if (!cfg.n) throw InputError("theorem2 needs --n");
    std::optional<int> k;
    if (cfg.k) k = static_cast<int>(*cfg.k);
    return theorem2_family(*cfg.n, k);
  }
  if (family == "theorem4" || family == "halfshift") {
    if (!cfg.d) throw InputError(family + " needs --d");
    return family == "theorem4" ? theorem4_family(*cfg.d, cfg.k, cfg.l)
                                : halfshift_variant(*cfg.d, cfg.k, cfg.l);
  }
  throw InputError("unknown family \"" + family +
                   "\" (expected example2, theorem2, theorem4 or halfshift)");
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty entry in --states");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

/// --states "I,X" (with optional --n / --d checks), --construct, or a file.
inline StateSet load_states(const RunConfig& cfg) {
  const int sources = !cfg.states.empty() + !cfg.construct.empty() + !cfg.input_file.empty();
  if (sources != 1) {
    throw InputError("give exactly one of --states, --construct or an input file");
  }
  if (!cfg.construct.empty()) return build_family(cfg.construct, cfg);
  if (!cfg.input_file.empty()) {
    json j = read_json_file(cfg.input_file);
    if (j.contains("states")) j = j["states"];
    return io::state_set_from_json(j);
  }
  auto items = split_list(cfg.states);
  if (cfg.n) {
    for (auto& s : items) {
      if (s == "I") s = std::string(static_cast<std::size_t>(*cfg.n), 'I');
    }
  }
  StateSet set(io::parse_unitaries(items), "custom");
  if (set.is_qubit() && cfg.n && set.qubit_words().front().num_qubits() != *cfg.n) {
    throw InputError("--n does not match the qubit count of --states");
  }
  if (cfg.d && *cfg.d != set.local_dim()) {
    throw InputError("--d " + std::to_string(*cfg.d) + " does not match local dimension " +
                     std::to_string(set.local_dim()));
  }
  return set;
}

inline json envelope(const std::string& command) {
  return {{"schema", io::kSchemaVersion}, {"command", command}};
}

inline std::string render_table(const json& j, int indent = 0) {
  std::ostringstream os;
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  std::size_t width = 0;
  for (const auto& [k, v] : j.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      os << pad << k << ":\n" << render_table(v, indent + 2);
    } else {
      os << pad << std::left << std::setw(static_cast<int>(width)) << k << "  "
         << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
  return os.str();
}

inline std::string emit(const json& j, const std::string& format) {
  if (format == "table") return render_table(j);
  return j.dump(2) + "\n";
}

inline Result cmd_construct(const RunConfig& cfg) {
  const StateSet set = build_family(cfg.family, cfg);
  json j = envelope("construct");
  j["states"] = io::to_json(set);
  return {kOk, emit(j, cfg.format), {}};
}

inline Result cmd_analyze(const RunConfig& cfg) {
  const StateSet set = load_states(cfg);
  const std::uint64_t seed = resolve_seed(cfg);
  const AnalyzeOptions opt = analyze_options(cfg);
  const Verdict v = analyze(set, seed, opt);
  json j = envelope("analyze");
  j["seed"] = seed;
  j["states"] = io::to_json(set);
  j["verdict"] = io::to_json(v);
  if (cfg.verbose) {
    const auto dense = set.dense_unitaries(opt.dense_cap);
    j["operator_system"] = io::to_json(operator_system_of(dense, opt.tol, set.unitary_labels()), true);
  }
  const int code = v.outcome == Outcome::kDistinguishable     ? kDistinguishable
                   : v.outcome == Outcome::kIndistinguishable ? kIndistinguishable
                                                              : kInconclusive;
  return {code, emit(j, cfg.format), {}};
}

/// Algebra generated by the unitaries (and their adjoints), then its blocks.
inline Result cmd_decompose(const RunConfig& cfg) {
  const StateSet set = load_states(cfg);
  const std::uint64_t seed = resolve_seed(cfg);
  const AnalyzeOptions opt = analyze_options(cfg);
  if (set.is_qubit() && set.local_dim() > opt.pauli_classes_above) {
    // The generated algebra is spanned by the projective group; no dense work.
    const auto& words = set.qubit_words();
    const auto group_size = static_cast<std::int64_t>(std::int64_t{1} << symplectic::rank(words));
    const BlockSignature sig = pauli_subgroup_signature(words);
    json j = envelope("decompose");
    j["seed"] = seed;
    j["states"] = io::to_json(set);
    j["route"] = "pauli-classes";
    const bool has_identity = std::any_of(words.begin(), words.end(),
                                          [](const PauliWord& w) { return w.is_identity_class(); });
    const auto span_dim = static_cast<std::int64_t>(set.size()) + (has_identity ? 0 : 1);
    j["generator_span_dim"] = span_dim;
    j["closure_applied"] = group_size != span_dim;
    j["algebra_dim"] = group_size;
    j["dimension_check"] = dimension_necessary_check(group_size, set.local_dim());
    j["signature"] = io::to_json(sig);
    j["separating"] = has_separating_vector(sig);
    j["exact_signature"] = io::to_json(sig);
    return {kOk, emit(j, cfg.format), {}};
  }
  const auto dense = set.dense_unitaries(opt.dense_cap);
  const Eigen::Index d = dense.front().rows();
  std::vector<DenseOperator> gens{DenseOperator::Identity(d, d)};
  for (const auto& u : dense) {
    gens.push_back(u);
    gens.push_back(u.adjoint());
  }
  OperatorSpan generated = orthonormal_span(gens, opt.tol, set.unitary_labels());
  evaluate_flags(generated);
  const bool closed = generated.flags().mult_closed == Tri::kTrue &&
                      generated.flags().self_adjoint == Tri::kTrue &&
                      generated.flags().contains_identity == Tri::kTrue;
  const OperatorSpan algebra = closed ? generated : multiply_closure(generated);
  json j = envelope("decompose");
  j["seed"] = seed;
  j["states"] = io::to_json(set);
  j["route"] = "numerical";
  j["generator_span_dim"] = generated.dimension();
  j["closure_applied"] = !closed;
  j["algebra_dim"] = algebra.dimension();
  j["dimension_check"] = dimension_necessary_check(algebra.dimension(), d);
  try {
    const BlockSignature sig = decompose(algebra, seed);
    j["signature"] = io::to_json(sig);
    j["separating"] = has_separating_vector(sig);
  } catch (const NumericalFailure& e) {
    j["error"] = e.what();
    return {kNumericalFailure, emit(j, cfg.format), std::string("numerical failure: ") + e.what() + "\n"};
  }
  if (set.is_qubit()) {
    j["exact_signature"] = io::to_json(pauli_subgroup_signature(set.qubit_words()));
  }
  return {kOk, emit(j, cfg.format), {}};
}

inline LocalMeasurement resolve_measurement(const RunConfig& cfg, const StateSet& set) {
  const std::int64_t d = set.local_dim();
  if (cfg.measure == "z-basis") return z_basis_measurement(d);
  if (cfg.measure == "y-basis") {
    if (!set.is_qubit()) throw InputError("y-basis measurement needs a qubit state set");
    return y_basis_measurement(set.qubit_words().front().num_qubits());
  }
  const json j = read_json_file(cfg.measure);
  try {
    return LocalMeasurement(io::matrix_from_json(j.at("alice_basis")),
                            io::matrix_from_json(j.at("bob_basis")),
                            j.value("label", std::string("custom")));
  } catch (const json::exception& e) {
    throw InputError(cfg.measure + ": " + e.what());
  }
}

inline StateSet apply_drops(StateSet set, const std::vector<std::string>& drops) {
  for (const auto& text : drops) {
    const auto target = io::parse_unitaries({text});
    std::optional<std::size_t> hit;
    std::visit(
        [&](const auto& list) {
          using List = std::decay_t<decltype(list)>;
          if (!std::holds_alternative<List>(target)) return;
          const auto& t = std::get<List>(target).front();
          for (std::size_t i = 0; i < list.size(); ++i) {
            if (list[i].same_class(t)) hit = i;
          }
        },
        set.unitaries());
    if (!hit) throw InputError("--drop " + text + " is not in the state set");
    set = set.without(*hit);
  }
  return set;
}

inline Result cmd_simulate(const RunConfig& cfg) {
  const StateSet set = apply_drops(load_states(cfg), cfg.drop);
  const LocalMeasurement meas = resolve_measurement(cfg, set);
  const OutcomeTable table = outcome_table(set, meas);
  const CollisionReport report = supports_disjoint(table);
  if (cfg.format == "csv") return {kOk, io::to_csv(table), {}};
  json j = envelope("simulate");
  j["states"] = io::to_json(set);
  j["measurement"] = meas.label();
  j["disjoint"] = report.disjoint;
  json pairs = json::array();
  for (const auto& [a, b] : report.colliding_pairs) {
    pairs.push_back({table.state_labels[a], table.state_labels[b]});
  }
  j["colliding_pairs"] = std::move(pairs);
  j["table"] = io::to_json(table);
  if (cfg.shots) {
    const std::uint64_t seed = resolve_seed(cfg);
    const auto counts = sample_outcomes(table, *cfg.shots, seed);
    json cj = json::array();
    for (Eigen::Index s = 0; s < counts.rows(); ++s) {
      json row = json::array();
      for (Eigen::Index c = 0; c < counts.cols(); ++c) {
        if (counts(s, c) > 0) row.push_back({{"a", c / table.d}, {"b", c % table.d}, {"count", counts(s, c)}});
      }
      cj.push_back({{"state", table.state_labels[static_cast<std::size_t>(s)]}, {"counts", std::move(row)}});
    }
    j["shots"] = *cfg.shots;
    j["seed"] = seed;
    j["counts"] = std::move(cj);
  }
  return {kOk, emit(j, cfg.format), {}};
}

/// Accepts an `analyze` output, or any object with "states" and "certificate".
inline Result cmd_verify(const RunConfig& cfg) {
  if (cfg.input_file.empty()) throw InputError("verify needs an input file");
  const json j = read_json_file(cfg.input_file);
  if (!j.contains("states")) throw InputError("verify input has no \"states\"");
  json cert_json;
  if (j.contains("verdict")) cert_json = j["verdict"].at("certificate");
  else if (j.contains("certificate")) cert_json = j["certificate"];
  else throw InputError("verify input has no certificate");
  const StateSet set = io::state_set_from_json(j["states"]);
  Certificate cert;
  try {
    cert = io::certificate_from_json(cert_json);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
  const bool ok = recheck(cert, set, analyze_options(cfg));
  json out = envelope("verify");
  out["certificate_type"] = certificate_type(cert);
  out["valid"] = ok;
  return {ok ? kOk : kRejected, emit(out, cfg.format), {}};
}

inline void add_input_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("input", cfg.input_file, "StateSet JSON file (or an earlier command's output)");
  sub->add_option("--states", cfg.states, "Comma-separated Pauli strings, e.g. \"I,X\" or \"x1z0@d4\"");
  sub->add_option("--construct", cfg.construct, "example2 | theorem2 | theorem4 | halfshift");
}

inline void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "Qubit count");
  sub->add_option("--d", cfg.d, "Local dimension");
  sub->add_option("--k", cfg.k, "Split parameter k");
  sub->add_option("--l", cfg.l, "Parameter l (theorem4, halfshift)");
  sub->add_option("--seed", cfg.seed_text, "Seed, or \"random\"")->capture_default_str();
  sub->add_option("--tol", cfg.tol, "Membership tolerance override");
  sub->add_option("--format", cfg.format, "json | table | csv")
      ->check(CLI::IsMember({"json", "table", "csv"}))
      ->capture_default_str();
  sub->add_flag("--verbose", cfg.verbose, "Include operator bases in the output");
}

inline Result run(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"Certify one-way LOCC (in)distinguishability of lattice and generalized Pauli states"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Emit a state family as JSON");
  construct->add_option("family", cfg.family, "example2 | theorem2 | theorem4 | halfshift")->required();
  add_common_options(construct, cfg);

  auto* analyze_cmd = app.add_subcommand("analyze", "Decide one-way distinguishability with a certificate");
  add_input_options(analyze_cmd, cfg);
  add_common_options(analyze_cmd, cfg);

  auto* decompose_cmd = app.add_subcommand("decompose", "Block structure of the generated algebra");
  add_input_options(decompose_cmd, cfg);
  add_common_options(decompose_cmd, cfg);

  auto* simulate = app.add_subcommand("simulate", "Outcome table of a fixed local measurement");
  add_input_options(simulate, cfg);
  add_common_options(simulate, cfg);
  simulate->add_option("--measure", cfg.measure, "y-basis | z-basis | basis JSON file")->capture_default_str();
  simulate->add_option("--drop", cfg.drop, "Remove a unitary before simulating (repeatable)");
  simulate->add_option("--shots", cfg.shots, "Add multinomial samples");

  auto* verify = app.add_subcommand("verify", "Re-check a certificate from an analyze output");
  verify->add_option("input", cfg.input_file, "analyze output JSON")->required();
  add_common_options(verify, cfg);

  std::vector<std::string> argv_store{"locc"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  Result result;
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return {kOk, app.help(), {}};
  } catch (const CLI::CallForAllHelp&) {
    return {kOk, app.help("", CLI::AppFormatMode::All), {}};
  } catch (const CLI::ParseError& e) {
    return {kInputError, {}, std::string(e.what()) + "\n"};
  }

  try {
    if (cfg.format == "csv" && !simulate->parsed()) throw InputError("--format csv is only available for simulate");
    if (cfg.shots && *cfg.shots < 1) throw InputError("--shots must be >= 1");
    if (construct->parsed()) return cmd_construct(cfg);
    if (analyze_cmd->parsed()) return cmd_analyze(cfg);
    if (decompose_cmd->parsed()) return cmd_decompose(cfg);
    if (simulate->parsed()) return cmd_simulate(cfg);
    return cmd_verify(cfg);
  } catch (const NumericalFailure& e) {
    return {kNumericalFailure, {}, std::string("numerical failure: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {kInputError, {}, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace locc::cli
