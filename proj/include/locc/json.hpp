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

// JSON forms of the library's value types. Keys are emitted in sorted order
// and doubles with round-trip precision, so output is byte-stable.

#include <sstream>
#include <string>

#include <json.hpp>

#include "locc/constructions.hpp"
#include "locc/discrimination.hpp"
#include "locc/protocol.hpp"
#include "locc/span.hpp"
#include "locc/wedderburn.hpp"

namespace locc::io {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json vector_to_json(const StateVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

inline StateVector vector_from_json(const json& j) {
  if (!j.is_array()) throw InvalidParameter("vector must be an array of [re, im] pairs");
  StateVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    const auto& e = j[i];
    if (!e.is_array() || e.size() != 2) {
      throw InvalidParameter("vector entry " + std::to_string(i) + " is not [re, im]");
    }
    v(static_cast<Eigen::Index>(i)) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return v;
}

inline json matrix_to_json(const DenseOperator& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(vector_to_json(m.row(r).transpose()));
  return rows;
}

inline DenseOperator matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidParameter("matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  DenseOperator m(rows, static_cast<Eigen::Index>(j[0].size()));
  for (Eigen::Index r = 0; r < rows; ++r) {
    const StateVector row = vector_from_json(j[static_cast<std::size_t>(r)]);
    if (row.size() != m.cols()) throw InvalidParameter("ragged matrix rows");
    m.row(r) = row.transpose();
  }
  return m;
}

inline const char* tri_name(Tri t) {
  switch (t) {
    case Tri::kTrue: return "true";
    case Tri::kFalse: return "false";
    default: return "unknown";
  }
}

inline json to_json(const OperatorSpan& span, bool verbose = false) {
  json j;
  j["ambient_dim"] = span.ambient_dim();
  j["dimension"] = span.dimension();
  j["flags"] = {{"contains_identity", tri_name(span.flags().contains_identity)},
                {"is_mult_closed", tri_name(span.flags().mult_closed)},
                {"is_self_adjoint", tri_name(span.flags().self_adjoint)}};
  j["generators"] = span.generator_labels();
  if (verbose) {
    json basis = json::array();
    for (Eigen::Index i = 0; i < span.dimension(); ++i) basis.push_back(matrix_to_json(span.basis(i)));
    j["basis"] = std::move(basis);
  }
  return j;
}

inline json to_json(const BlockSignature& sig) {
  json blocks = json::array();
  for (const auto& b : sig.blocks) blocks.push_back({{"m", b.multiplicity}, {"n", b.size}});
  return {{"algebra_dim", sig.algebra_dim()},
          {"ambient_dim", sig.ambient_dim},
          {"blocks", std::move(blocks)}};
}

inline json to_json(const StateSet& set) {
  json j;
  j["construction"] = set.construction();
  j["d"] = set.local_dim();
  j["kind"] = set.is_qubit() ? "qubit" : "qudit";
  json params = json::object();
  for (const auto& [k, v] : set.params()) params[k] = v;
  j["params"] = std::move(params);
  j["unitaries"] = set.unitary_labels();
  if (const auto& p = set.predicted()) {
    json pj = {{"set_size", p->set_size}};
    if (p->operator_system_dim) pj["operator_system_dim"] = *p->operator_system_dim;
    if (p->algebra_dim) pj["algebra_dim"] = *p->algebra_dim;
    j["predicted"] = std::move(pj);
  }
  return j;
}

/// Parses unitary strings; every entry must be of the same kind.
inline UnitaryList parse_unitaries(const std::vector<std::string>& items) {
  if (items.empty()) throw InvalidParameter("no unitaries given");
  const bool qudit = items.front().find('@') != std::string::npos;
  if (qudit) {
    std::vector<QuditPauli> out;
    for (const auto& s : items) out.push_back(QuditPauli::parse(s));
    return out;
  }
  std::vector<PauliWord> out;
  for (const auto& s : items) out.push_back(PauliWord::parse(s));
  return out;
}

inline StateSet state_set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("unitaries")) {
    throw InvalidParameter("state set JSON needs a \"unitaries\" array");
  }
  const auto items = j.at("unitaries").get<std::vector<std::string>>();
  StateSet::Params params;
  if (j.contains("params")) {
    for (const auto& [k, v] : j.at("params").items()) params.emplace_back(k, v.get<std::int64_t>());
  }
  std::optional<Prediction> predicted;
  if (j.contains("predicted")) {
    const auto& p = j.at("predicted");
    Prediction pr;
    pr.set_size = p.at("set_size").get<std::int64_t>();
    if (p.contains("operator_system_dim")) pr.operator_system_dim = p["operator_system_dim"].get<std::int64_t>();
    if (p.contains("algebra_dim")) pr.algebra_dim = p["algebra_dim"].get<std::int64_t>();
    predicted = pr;
  }
  StateSet set(parse_unitaries(items), j.value("construction", std::string("custom")),
               std::move(params), predicted);
  if (j.contains("d") && j.at("d").get<std::int64_t>() != set.local_dim()) {
    throw SizeMismatch("declared d does not match the unitaries");
  }
  return set;
}

inline json to_json(const Certificate& cert) {
  json payload = std::visit(
      [](const auto& c) -> json {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, NoCertificate>) {
          return {{"reason", c.reason}};
        } else if constexpr (std::is_same_v<T, SeparatingWitness>) {
          return {{"psi", vector_to_json(c.psi)}};
        } else if constexpr (std::is_same_v<T, DimensionExceeded>) {
          return {{"dim", c.dim}, {"d", c.d}};
        } else if constexpr (std::is_same_v<T, BlockViolation>) {
          return {{"k", c.index}, {"m_k", c.multiplicity}, {"n_k", c.size}};
        } else {
          return {{"phi0", vector_to_json(c.phi0)},
                  {"phi1", vector_to_json(c.phi1)},
                  {"residuals", c.residuals}};
        }
      },
      cert);
  return {{"type", certificate_type(cert)}, {"payload", std::move(payload)}};
}

inline Certificate certificate_from_json(const json& j) {
  const auto type = j.at("type").get<std::string>();
  const auto& p = j.at("payload");
  if (type == "SeparatingWitness") return SeparatingWitness{vector_from_json(p.at("psi"))};
  if (type == "DimensionExceeded") {
    return DimensionExceeded{p.at("dim").get<std::int64_t>(), p.at("d").get<std::int64_t>()};
  }
  if (type == "BlockViolation") {
    return BlockViolation{p.at("k").get<std::size_t>(), p.at("m_k").get<std::int64_t>(),
                          p.at("n_k").get<std::int64_t>()};
  }
  if (type == "EmbeddedM2") {
    EmbeddedM2 m{vector_from_json(p.at("phi0")), vector_from_json(p.at("phi1")), {}};
    m.residuals = p.at("residuals").get<std::array<double, 4>>();
    return m;
  }
  if (type == "None") return NoCertificate{p.value("reason", std::string())};
  throw InvalidParameter("unknown certificate type \"" + type + "\"");
}

inline json to_json(const Verdict& v) {
  json diag = {{"operator_system_dim", v.diagnostics.operator_system_dim},
               {"is_algebra", v.diagnostics.is_algebra},
               {"route", v.diagnostics.route}};
  if (v.diagnostics.block_signature) diag["block_signature"] = to_json(*v.diagnostics.block_signature);
  if (!v.diagnostics.notes.empty()) diag["notes"] = v.diagnostics.notes;
  return {{"outcome", to_string(v.outcome)},
          {"certificate", to_json(v.certificate)},
          {"diagnostics", std::move(diag)}};
}

inline json to_json(const OutcomeTable& t) {
  json rows = json::array();
  for (Eigen::Index s = 0; s < t.rows.rows(); ++s) {
    json outcomes = json::array();
    for (Eigen::Index c = 0; c < t.rows.cols(); ++c) {
      const double p = t.rows(s, c);
      if (p > kSupportThreshold) outcomes.push_back({{"a", c / t.d}, {"b", c % t.d}, {"p", p}});
    }
    rows.push_back({{"state", t.state_labels[static_cast<std::size_t>(s)]},
                    {"outcomes", std::move(outcomes)}});
  }
  return {{"d", t.d}, {"rows", std::move(rows)}};
}

/// state,a,b,probability; zero-probability outcomes are omitted.
inline std::string to_csv(const OutcomeTable& t) {
  std::ostringstream os;
  // 15 significant digits: rounding noise of the amplitudes is not printed.
  os.precision(15);
  os << "state,a,b,probability\n";
  for (Eigen::Index s = 0; s < t.rows.rows(); ++s) {
    for (Eigen::Index c = 0; c < t.rows.cols(); ++c) {
      const double p = t.rows(s, c);
      if (p > kSupportThreshold) {
        os << t.state_labels[static_cast<std::size_t>(s)] << ',' << c / t.d << ',' << c % t.d
           << ',' << p << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace locc::io
