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

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "locc/constructions.hpp"
#include "locc/span.hpp"
#include "locc/symplectic.hpp"
#include "locc/wedderburn.hpp"

namespace locc {

enum class Outcome { kDistinguishable, kIndistinguishable, kInconclusive };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::kDistinguishable: return "Distinguishable";
    case Outcome::kIndistinguishable: return "Indistinguishable";
    default: return "Inconclusive";
  }
}

/// psi separates the operator system, which is an algebra.
struct SeparatingWitness {
  StateVector psi;
};

/// The operator system is an algebra of dimension `dim` > `d`.
struct DimensionExceeded {
  std::int64_t dim = 0;
  std::int64_t d = 0;
};

/// Block `index` of the operator-system algebra has multiplicity < size.
struct BlockViolation {
  std::size_t index = 0;
  std::int64_t multiplicity = 0;
  std::int64_t size = 0;
};

/// All four |phi_a><phi_b| (a, b in {0, 1}) lie in the operator system, so a
/// copy of M_2 sits inside it. Residuals are ordered 00, 01, 10, 11.
struct EmbeddedM2 {
  StateVector phi0;
  StateVector phi1;
  std::array<double, 4> residuals{};
};

struct NoCertificate {
  std::string reason;
};

using Certificate =
    std::variant<NoCertificate, SeparatingWitness, DimensionExceeded, BlockViolation, EmbeddedM2>;

inline const char* certificate_type(const Certificate& c) {
  static constexpr const char* kNames[] = {"None", "SeparatingWitness", "DimensionExceeded",
                                           "BlockViolation", "EmbeddedM2"};
  return kNames[c.index()];
}

struct Diagnostics {
  std::int64_t operator_system_dim = 0;
  bool is_algebra = false;
  std::optional<BlockSignature> block_signature;
  /// "exact-pauli", "pauli-classes", "numerical" or "embedded-m2".
  std::string route;
  std::vector<std::string> notes;
};

struct Verdict {
  Outcome outcome = Outcome::kInconclusive;
  Certificate certificate;
  Diagnostics diagnostics;
};

struct AnalyzeOptions {
  Tolerances tol;
  std::int64_t dense_cap = kDefaultDenseCap;
  /// Recheck thresholds are this much looser than the ones used to certify.
  double recheck_slack = 10.0;
  /// Qubit sets on more than this many dimensions are decided from their
  /// Pauli classes alone, without a dense operator system.
  std::int64_t pauli_classes_above = 32;
};

/// Operator system of a qubit set held as Pauli classes: span{U_i^dagger U_j}
/// is spanned by the distinct classes, which are mutually trace-orthogonal.
struct PauliSystem {
  int num_qubits = 0;
  std::vector<PauliWord> classes;
  int group_rank = 0;

  std::int64_t dimension() const { return static_cast<std::int64_t>(classes.size()); }
  /// The classes contain I, so they span an algebra iff they form a group.
  bool is_algebra() const { return classes.size() == (std::size_t{1} << group_rank); }
};

inline PauliSystem pauli_operator_system(const std::vector<PauliWord>& words) {
  if (words.empty()) throw InvalidParameter("empty unitary set");
  PauliSystem sys;
  sys.num_qubits = words.front().num_qubits();
  std::set<std::uint64_t> seen;
  for (const auto& a : words) {
    for (const auto& b : words) {
      const PauliWord p = (adjoint(a) * b).canonical();
      if (seen.insert(p.symplectic()).second) sys.classes.push_back(p);
    }
  }
  sys.group_rank = symplectic::rank(sys.classes);
  return sys;
}

/// verify_witness for an algebra given by its Pauli classes. Scaling the
/// classes to an orthonormal basis leaves the singular value ratio unchanged.
inline bool verify_pauli_witness(const PauliSystem& sys, const StateVector& psi,
                                 const WitnessOptions& opt = {}) {
  const Eigen::Index d = Eigen::Index{1} << sys.num_qubits;
  if (psi.size() != d) {
    throw SizeMismatch("witness of length " + std::to_string(psi.size()) +
                       " for algebra on C^" + std::to_string(d));
  }
  if (std::abs(psi.norm() - 1.0) > opt.norm_tol) return false;
  const auto r = static_cast<Eigen::Index>(sys.classes.size());
  if (r > d) return false;
  Eigen::MatrixXcd images(d, r);
  for (Eigen::Index i = 0; i < r; ++i) images.col(i) = sys.classes[static_cast<std::size_t>(i)].apply(psi);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(images);
  const auto& sv = svd.singularValues();
  return sv(r - 1) > opt.rank_rel * sv(0);
}

/// Operators whose eigenvectors seed the embedded-M2 search: the X-parts of
/// qudit words, or the (non-identity) qubit words themselves.
inline std::vector<DenseOperator> m2_candidates(const StateSet& set,
                                                std::int64_t cap = kDefaultDenseCap) {
  std::vector<DenseOperator> out;
  if (set.is_qubit()) {
    for (const auto& w : set.qubit_words()) {
      if (!w.is_identity_class()) out.push_back(w.canonical().to_dense(cap));
    }
  } else {
    std::set<std::int64_t> seen;
    for (const auto& w : set.qudit_words()) {
      if (w.x_power() != 0 && seen.insert(w.x_power()).second) {
        out.push_back(QuditPauli::shift(w.dim(), w.x_power()).to_dense(cap));
      }
    }
  }
  return out;
}

namespace detail {

inline double rank_one_residual(const OperatorSpan& span, const StateVector& a,
                                const StateVector& b) {
  const DenseOperator op = a * b.adjoint();
  return span.contains(op).residual / std::max(op.norm(), 1e-300);
}

/// Orthonormal eigenvectors of a normal matrix via its complex Schur form.
inline Eigen::MatrixXcd normal_eigenvectors(const DenseOperator& u) {
  Eigen::ComplexSchur<DenseOperator> schur(u);
  return schur.matrixU();
}

}  // namespace detail

/// Searches eigenvector pairs of each candidate for four rank-one operators
/// |phi_a><phi_b| inside `span`. Returns the first hit.
inline std::optional<EmbeddedM2> find_m2_witness(const OperatorSpan& span,
                                                 const std::vector<DenseOperator>& candidates) {
  const double tol = span.tolerances().membership;
  if (span.dimension() < 4) return std::nullopt;
  for (const auto& u : candidates) {
    if (u.rows() != span.ambient_dim()) {
      throw SizeMismatch("M2 candidate dimension differs from span");
    }
    const Eigen::MatrixXcd vecs = detail::normal_eigenvectors(u);
    const Eigen::Index d = vecs.cols();
    std::vector<Eigen::Index> diag_ok;
    std::vector<double> diag_res(static_cast<std::size_t>(d));
    for (Eigen::Index a = 0; a < d; ++a) {
      const StateVector v = vecs.col(a);
      diag_res[static_cast<std::size_t>(a)] = detail::rank_one_residual(span, v, v);
      if (diag_res[static_cast<std::size_t>(a)] <= tol) diag_ok.push_back(a);
    }
    for (std::size_t i = 0; i < diag_ok.size(); ++i) {
      for (std::size_t j = 0; j < diag_ok.size(); ++j) {
        if (i == j) continue;
        const StateVector p0 = vecs.col(diag_ok[i]);
        const StateVector p1 = vecs.col(diag_ok[j]);
        const double r01 = detail::rank_one_residual(span, p0, p1);
        if (r01 > tol) continue;
        const double r10 = detail::rank_one_residual(span, p1, p0);
        if (r10 > tol) continue;
        return EmbeddedM2{p0, p1,
                          {diag_res[static_cast<std::size_t>(diag_ok[i])], r01, r10,
                           diag_res[static_cast<std::size_t>(diag_ok[j])]}};
      }
    }
  }
  return std::nullopt;
}

/// Products U_i^dagger U_j as Pauli words; they generate the operator system.
inline std::vector<PauliWord> pairwise_products(const std::vector<PauliWord>& words) {
  std::vector<PauliWord> out;
  for (const auto& a : words) {
    for (const auto& b : words) out.push_back(adjoint(a) * b);
  }
  return out;
}

/// Decision pipeline. When the operator system S is an algebra, one-way LOCC
/// distinguishability is equivalent to S having a separating vector. When it
/// is not, an embedded M_2 still certifies indistinguishability; otherwise the
/// answer is Inconclusive.
namespace detail {

/// Decides an algebra-valued qubit operator system from its Pauli classes.
/// Returns nothing when the classes do not form a group.
inline std::optional<Verdict> analyze_pauli_classes(const StateSet& set, std::uint64_t seed) {
  const PauliSystem sys = pauli_operator_system(set.qubit_words());
  if (!sys.is_algebra()) return std::nullopt;
  Verdict v;
  auto& diag = v.diagnostics;
  const std::int64_t d = set.local_dim();
  diag.route = "pauli-classes";
  diag.operator_system_dim = sys.dimension();
  diag.is_algebra = true;
  diag.block_signature = pauli_subgroup_signature(sys.classes);
  if (!dimension_necessary_check(sys.dimension(), d)) {
    v.outcome = Outcome::kIndistinguishable;
    v.certificate = DimensionExceeded{sys.dimension(), d};
    return v;
  }
  if (auto bad = first_violation(*diag.block_signature)) {
    v.outcome = Outcome::kIndistinguishable;
    v.certificate = BlockViolation{bad->index, bad->block.multiplicity, bad->block.size};
    return v;
  }
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 3; ++attempt) {
    StateVector psi = random_unit_vector(d, rng);
    if (verify_pauli_witness(sys, psi)) {
      v.outcome = Outcome::kDistinguishable;
      v.certificate = SeparatingWitness{std::move(psi)};
      return v;
    }
  }
  v.outcome = Outcome::kInconclusive;
  v.certificate = NoCertificate{"block criterion and witness search disagree"};
  return v;
}

}  // namespace detail

inline Verdict analyze(const StateSet& set, std::uint64_t seed, const AnalyzeOptions& opt = {}) {
  Verdict v;
  auto& diag = v.diagnostics;
  try {
    if (set.is_qubit() && set.local_dim() > opt.pauli_classes_above) {
      if (auto exact = detail::analyze_pauli_classes(set, seed)) return *exact;
      diag.notes.push_back("Pauli classes do not form a group; using the dense route");
    }
    const auto dense = set.dense_unitaries(opt.dense_cap);
    const OperatorSpan sys = operator_system_of(dense, opt.tol, set.unitary_labels());
    const std::int64_t d = set.local_dim();
    const std::int64_t dim = sys.dimension();
    diag.operator_system_dim = dim;
    diag.is_algebra = is_algebra(sys);

    if (diag.is_algebra) {
      auto signature = [&]() -> BlockSignature {
        if (set.is_qubit()) {
          diag.route = "exact-pauli";
          auto sig = pauli_subgroup_signature(pairwise_products(set.qubit_words()));
          if (sig.algebra_dim() != dim) {
            throw NumericalFailure("exact algebra dimension " +
                                   std::to_string(sig.algebra_dim()) +
                                   " disagrees with measured span dimension " +
                                   std::to_string(dim));
          }
          return sig;
        }
        diag.route = "numerical";
        return decompose(sys, seed);
      };

      if (!dimension_necessary_check(dim, d)) {
        v.outcome = Outcome::kIndistinguishable;
        v.certificate = DimensionExceeded{dim, d};
        try {
          diag.block_signature = signature();
        } catch (const Error& e) {
          diag.notes.push_back(std::string("block signature unavailable: ") + e.what());
        }
        return v;
      }
      diag.block_signature = signature();
      if (auto bad = first_violation(*diag.block_signature)) {
        v.outcome = Outcome::kIndistinguishable;
        v.certificate = BlockViolation{bad->index, bad->block.multiplicity, bad->block.size};
        return v;
      }
      const SeparatingVerdict sv = random_witness(sys, seed);
      if (sv.exists && sv.witness && verify_witness(sys, *sv.witness)) {
        v.outcome = Outcome::kDistinguishable;
        v.certificate = SeparatingWitness{*sv.witness};
        return v;
      }
      v.outcome = Outcome::kInconclusive;
      v.certificate = NoCertificate{"block criterion and witness search disagree"};
      return v;
    }

    diag.route = "embedded-m2";
    if (auto m2 = find_m2_witness(sys, m2_candidates(set, opt.dense_cap))) {
      v.outcome = Outcome::kIndistinguishable;
      v.certificate = std::move(*m2);
      return v;
    }
    v.outcome = Outcome::kInconclusive;
    v.certificate =
        NoCertificate{"operator system is not an algebra and no embedded M2 was found"};
  } catch (const Error& e) {
    v.outcome = Outcome::kInconclusive;
    v.certificate = NoCertificate{e.what()};
    diag.notes.push_back(e.what());
  }
  return v;
}

/// Re-derives a certificate from the state set alone. Never throws.
inline bool recheck(const Certificate& cert, const StateSet& set,
                    const AnalyzeOptions& opt = {}) {
  try {
    const std::int64_t d = set.local_dim();
    const double slack = opt.recheck_slack;
    if (set.is_qubit() && d > opt.pauli_classes_above &&
        !std::holds_alternative<EmbeddedM2>(cert)) {
      const PauliSystem ps = pauli_operator_system(set.qubit_words());
      if (!ps.is_algebra()) return false;
      if (const auto* w = std::get_if<SeparatingWitness>(&cert)) {
        WitnessOptions wo;
        wo.rank_rel /= slack;
        wo.norm_tol *= slack;
        return w->psi.size() == d && verify_pauli_witness(ps, w->psi, wo);
      }
      if (const auto* de = std::get_if<DimensionExceeded>(&cert)) {
        return de->d == d && de->dim == ps.dimension() && de->dim > de->d;
      }
      if (const auto* bv = std::get_if<BlockViolation>(&cert)) {
        const BlockSignature sig = pauli_subgroup_signature(ps.classes);
        return bv->index < sig.blocks.size() &&
               sig.blocks[bv->index] == Block{bv->multiplicity, bv->size} &&
               bv->multiplicity < bv->size;
      }
      return false;
    }
    const auto dense = set.dense_unitaries(opt.dense_cap);
    const OperatorSpan sys = operator_system_of(dense, opt.tol);

    return std::visit(
        [&](const auto& c) -> bool {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, NoCertificate>) {
            return false;
          } else if constexpr (std::is_same_v<T, SeparatingWitness>) {
            if (c.psi.size() != d || !is_algebra(sys)) return false;
            WitnessOptions wo;
            wo.rank_rel /= slack;
            wo.norm_tol *= slack;
            return verify_witness(sys, c.psi, wo);
          } else if constexpr (std::is_same_v<T, DimensionExceeded>) {
            return c.d == d && c.dim == sys.dimension() && c.dim > c.d && is_algebra(sys);
          } else if constexpr (std::is_same_v<T, BlockViolation>) {
            if (!is_algebra(sys)) return false;
            const BlockSignature sig = decompose(sys, 0x5eedULL);
            return c.index < sig.blocks.size() &&
                   sig.blocks[c.index] == Block{c.multiplicity, c.size} &&
                   c.multiplicity < c.size;
          } else {
            if (c.phi0.size() != d || c.phi1.size() != d) return false;
            const double ortho_tol = 1e-6;
            if (std::abs(c.phi0.norm() - 1.0) > ortho_tol ||
                std::abs(c.phi1.norm() - 1.0) > ortho_tol ||
                std::abs(c.phi0.dot(c.phi1)) > ortho_tol) {
              return false;
            }
            const double tol = slack * sys.tolerances().membership;
            const std::array<const StateVector*, 2> phi{&c.phi0, &c.phi1};
            for (int a = 0; a < 2; ++a) {
              for (int b = 0; b < 2; ++b) {
                if (detail::rank_one_residual(sys, *phi[a], *phi[b]) > tol) return false;
              }
            }
            return true;
          }
        },
        cert);
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace locc
