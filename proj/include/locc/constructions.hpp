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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "locc/dense.hpp"
#include "locc/errors.hpp"
#include "locc/pauli.hpp"
#include "locc/symplectic.hpp"

namespace locc {

using UnitaryList = std::variant<std::vector<PauliWord>, std::vector<QuditPauli>>;

/// Sizes a construction is expected to produce, checked against measurement.
struct Prediction {
  std::int64_t set_size = 0;
  std::optional<std::int64_t> operator_system_dim;
  std::optional<std::int64_t> algebra_dim;
};

/// A family of maximally entangled states {(I (x) U_i)|Phi>} on C^d (x) C^d,
/// represented by its unitaries U_i.
class StateSet {
 public:
  using Params = std::vector<std::pair<std::string, std::int64_t>>;

  StateSet() = default;

  /// Throws InvalidParameter if two unitaries are projectively equal or the
  /// prediction disagrees with the size.
  StateSet(UnitaryList unitaries, std::string construction, Params params = {},
           std::optional<Prediction> predicted = std::nullopt)
      : unitaries_(std::move(unitaries)),
        construction_(std::move(construction)),
        params_(std::move(params)),
        predicted_(predicted) {
    std::visit(
        [&](const auto& list) {
          if (list.empty()) throw InvalidParameter("empty state set");
          for (std::size_t i = 0; i < list.size(); ++i) {
            if (dim_of(list[i]) != dim_of(list.front())) {
              throw SizeMismatch("state set mixes local dimensions");
            }
            for (std::size_t j = 0; j < i; ++j) {
              if (list[i].same_class(list[j])) {
                throw InvalidParameter("unitaries " + list[j].str() + " and " +
                                       list[i].str() +
                                       " give the same state up to phase");
              }
            }
          }
          d_ = dim_of(list.front());
        },
        unitaries_);
    if (predicted_ && predicted_->set_size != static_cast<std::int64_t>(size())) {
      throw InvalidParameter("predicted set size " +
                             std::to_string(predicted_->set_size) +
                             " does not match " + std::to_string(size()));
    }
  }

  std::int64_t local_dim() const noexcept { return d_; }
  std::size_t size() const {
    return std::visit([](const auto& l) { return l.size(); }, unitaries_);
  }
  bool is_qubit() const noexcept {
    return std::holds_alternative<std::vector<PauliWord>>(unitaries_);
  }
  const UnitaryList& unitaries() const noexcept { return unitaries_; }
  const std::vector<PauliWord>& qubit_words() const {
    return std::get<std::vector<PauliWord>>(unitaries_);
  }
  const std::vector<QuditPauli>& qudit_words() const {
    return std::get<std::vector<QuditPauli>>(unitaries_);
  }
  const std::string& construction() const noexcept { return construction_; }
  const Params& params() const noexcept { return params_; }
  const std::optional<Prediction>& predicted() const noexcept { return predicted_; }

  std::optional<std::int64_t> param(const std::string& name) const {
    for (const auto& [k, v] : params_) {
      if (k == name) return v;
    }
    return std::nullopt;
  }

  /// e.g. "theorem2(n=3,k=2)".
  std::string label() const {
    if (params_.empty()) return construction_;
    std::string out = construction_ + "(";
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (i) out += ",";
      out += params_[i].first + "=" + std::to_string(params_[i].second);
    }
    return out + ")";
  }

  std::vector<std::string> unitary_labels() const {
    return std::visit(
        [](const auto& list) {
          std::vector<std::string> out;
          for (const auto& u : list) out.push_back(u.str());
          return out;
        },
        unitaries_);
  }

  std::vector<DenseOperator> dense_unitaries(std::int64_t cap = kDefaultDenseCap) const {
    return std::visit(
        [cap](const auto& list) {
          std::vector<DenseOperator> out;
          out.reserve(list.size());
          for (const auto& u : list) out.push_back(u.to_dense(cap));
          return out;
        },
        unitaries_);
  }

  /// Copy without the unitary at `index`; predictions are dropped.
  StateSet without(std::size_t index) const {
    UnitaryList reduced = std::visit(
        [index](auto list) -> UnitaryList {
          list.erase(list.begin() + static_cast<std::ptrdiff_t>(index));
          return list;
        },
        unitaries_);
    Params p = params_;
    p.emplace_back("dropped", static_cast<std::int64_t>(index));
    return StateSet(std::move(reduced), construction_, std::move(p));
  }

 private:
  static std::int64_t dim_of(const PauliWord& w) {
    return std::int64_t{1} << w.num_qubits();
  }
  static std::int64_t dim_of(const QuditPauli& q) { return q.dim(); }

  UnitaryList unitaries_;
  std::string construction_;
  Params params_;
  std::optional<Prediction> predicted_;
  std::int64_t d_ = 0;
};

/// (I (x) U) |Phi>, |Phi> = d^{-1/2} sum_i |i>|i>, indexed a * d + b with
/// Alice's index a first. Amplitude at (a, b) is U_{b a} / sqrt(d).
inline StateVector maximally_entangled_image(const DenseOperator& u) {
  const Eigen::Index d = u.rows();
  StateVector psi(d * d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = 0; b < d; ++b) psi(a * d + b) = u(b, a) * scale;
  }
  return psi;
}

/// Product of Bell-state indices, one per qubit pair; index i stands for
/// |Phi_i> = (I (x) sigma_i)|Phi_0>.
struct LatticeLabel {
  std::vector<int> indices;

  PauliWord word() const {
    static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
    const int n = static_cast<int>(indices.size());
    PauliWord w = PauliWord::identity(n);
    for (int s = 0; s < n; ++s) {
      const int i = indices[static_cast<std::size_t>(s)];
      if (i < 0 || i > 3) throw InvalidParameter("lattice index outside 0..3");
      w = w.with_letter(s, kLetters[i]);
    }
    return w;
  }
};

/// Lattice state in (C^2)^{(x)n}_Alice (x) (C^2)^{(x)n}_Bob. Up to the
/// regrouping of qubit pairs this is |Phi_{i_1}> (x) ... (x) |Phi_{i_n}>.
inline StateVector lattice_state_vector(const LatticeLabel& label,
                                        std::int64_t cap = kDefaultDenseCap) {
  return maximally_entangled_image(label.word().to_dense(cap));
}

inline StateSet example2_set() {
  std::vector<PauliWord> words;
  for (const char* s : {"III", "ZII", "IZI", "IIZ", "XXX", "YYY"}) {
    words.push_back(PauliWord::parse(s));
  }
  return StateSet(std::move(words), "example2", {}, Prediction{6, 16, 16});
}

/// Minimizer of 2^k + 2^{n-k+1} used when k is not given.
inline int theorem2_default_k(int n) { return n / 2 + 1; }

/// ({I,Z}^k (x) I^{n-k}) u (I^k (x) {I,Z}^{n-k}) u (X^k (x) {X,Y}^{n-k}).
inline StateSet theorem2_family(int n, std::optional<int> k_opt = std::nullopt) {
  if (n < 2 || n > kMaxQubits - 1) {
    throw InvalidParameter("theorem2 needs 2 <= n <= " +
                           std::to_string(kMaxQubits - 1) + ", got " +
                           std::to_string(n));
  }
  const int k = k_opt.value_or(theorem2_default_k(n));
  if (k < 1 || k > n) {
    throw InvalidParameter("theorem2 needs 1 <= k <= n, got k = " + std::to_string(k));
  }
  if (n > 20) throw InvalidParameter("theorem2 set too large to list for n > 20");
  std::vector<PauliWord> words;
  const int tail = n - k;
  // Site s sits at bit n-1-s, so the first k sites are the high bits.
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
    words.emplace_back(n, 0, m << tail, 0);
  }
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << tail); ++m) {
    words.emplace_back(n, 0, m, 0);
  }
  const std::uint64_t all_x = PauliWord::site_mask(n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << tail); ++m) {
    // Y on the tail sites in m, X elsewhere.
    words.push_back(PauliWord(n, all_x, m, 0).canonical());
  }
  const std::int64_t m_size =
      (std::int64_t{1} << k) + (std::int64_t{1} << (n - k + 1)) - 1;
  const std::int64_t alg = std::int64_t{1} << (n + 1);
  return StateSet(std::move(words), "theorem2", {{"n", n}, {"k", k}},
                  Prediction{m_size, alg, alg});
}

/// G1 u G2 for the projective groups generated by the two halves of a split
/// generating set of rank n + 1.
inline StateSet theorem2_from_split(const std::vector<PauliWord>& s1,
                                    const std::vector<PauliWord>& s2) {
  if (s1.empty() || s2.empty()) throw InvalidParameter("both halves must be nonempty");
  const int n = s1.front().num_qubits();
  std::vector<PauliWord> all = s1;
  all.insert(all.end(), s2.begin(), s2.end());
  for (const auto& w : all) require_same_qubits(all.front(), w);
  const int rank = symplectic::rank(all);
  if (rank != n + 1) {
    throw InvalidParameter("generators have symplectic rank " + std::to_string(rank) +
                           ", need n + 1 = " + std::to_string(n + 1));
  }
  const auto g1 = symplectic::projective_group(s1);
  const auto g2 = symplectic::projective_group(s2);
  std::vector<PauliWord> words = g1;
  for (const auto& w : g2) {
    const bool shared =
        std::any_of(g1.begin(), g1.end(), [&](const PauliWord& v) { return v.same_class(w); });
    if (shared && !w.is_identity_class()) {
      throw InvalidParameter("G1 and G2 overlap beyond the identity at " + w.str());
    }
    if (!shared) words.push_back(w);
  }
  const auto m_size = static_cast<std::int64_t>(g1.size() + g2.size() - 1);
  const std::int64_t alg = std::int64_t{1} << (n + 1);
  return StateSet(std::move(words), "theorem2_split",
                  {{"n", n}, {"k", symplectic::rank(s1)}},
                  Prediction{m_size, alg, alg});
}

namespace detail {

inline std::int64_t ceil_sqrt_half(std::int64_t d) {
  std::int64_t l = 1;
  while (2 * l * l < d) ++l;
  return l;
}

/// S1 = {X^i : i < k}, S2 = {X^{jk} : j < l}, S3 = S2 * tail, with later
/// projective duplicates dropped.
inline std::vector<QuditPauli> shift_family(std::int64_t d, std::int64_t k,
                                            std::int64_t l, const QuditPauli& tail) {
  std::vector<QuditPauli> raw;
  for (std::int64_t i = 0; i < k; ++i) raw.push_back(QuditPauli::shift(d, i));
  for (std::int64_t j = 0; j < l; ++j) raw.push_back(QuditPauli::shift(d, j * k));
  for (std::int64_t j = 0; j < l; ++j) {
    raw.push_back(QuditPauli::shift(d, j * k) * tail);
  }
  std::vector<QuditPauli> out;
  for (const auto& w : raw) {
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const QuditPauli& v) { return v.same_class(w); });
    if (!seen) out.push_back(w.without_phase());
  }
  return out;
}

inline bool shift_family_is_distinct(std::int64_t d, std::int64_t k, std::int64_t l) {
  return static_cast<std::int64_t>(shift_family(d, k, l, QuditPauli::clock(d)).size()) ==
         k + 2 * l - 1;
}

}  // namespace detail

/// Default (k, l): l = ceil(sqrt(d/2)), k = 2l. When those exponents wrap
/// modulo d and collide, the pair with the same k + 2l and kl >= d whose
/// members stay distinct is used instead, nearest in l (smaller k on ties).
/// If no such pair exists the nominal pair is kept and duplicates collapse.
inline std::pair<std::int64_t, std::int64_t> theorem4_default_kl(std::int64_t d) {
  const std::int64_t l0 = detail::ceil_sqrt_half(d);
  const std::int64_t k0 = 2 * l0;
  if (detail::shift_family_is_distinct(d, k0, l0)) return {k0, l0};
  const std::int64_t budget = k0 + 2 * l0;
  std::optional<std::pair<std::int64_t, std::int64_t>> best;
  for (std::int64_t l = 1; 2 * l < budget; ++l) {
    const std::int64_t k = budget - 2 * l;
    if (k * l < d || !detail::shift_family_is_distinct(d, k, l)) continue;
    if (!best) {
      best = {k, l};
      continue;
    }
    const auto dist = std::abs(l - l0);
    const auto best_dist = std::abs(best->second - l0);
    if (dist < best_dist || (dist == best_dist && k < best->first)) best = {k, l};
  }
  return best.value_or(std::pair{k0, l0});
}

/// S1 u S2 u S2 Z on C^d; one-way indistinguishable whenever kl >= d.
inline StateSet theorem4_family(std::int64_t d, std::optional<std::int64_t> k_opt = std::nullopt,
                                std::optional<std::int64_t> l_opt = std::nullopt) {
  if (d < 2) throw InvalidParameter("theorem4 needs d >= 2");
  if (d > kDefaultDenseCap) throw InvalidParameter("theorem4 dimension above cap");
  auto [k, l] = theorem4_default_kl(d);
  if (k_opt || l_opt) {
    if (!k_opt || !l_opt) throw InvalidParameter("theorem4 needs both k and l, or neither");
    k = *k_opt;
    l = *l_opt;
  }
  if (k < 1 || l < 1) throw InvalidParameter("theorem4 needs k, l >= 1");
  if (k * l < d) {
    throw InvalidParameter("theorem4 needs kl >= d, got k = " + std::to_string(k) +
                           ", l = " + std::to_string(l) + ", d = " + std::to_string(d));
  }
  auto words = detail::shift_family(d, k, l, QuditPauli::clock(d));
  const auto m_size = static_cast<std::int64_t>(words.size());
  const std::int64_t osd = d == 2 ? 4 : 3 * d;
  return StateSet(std::move(words), "theorem4",
                  {{"d", d}, {"k", k}, {"l", l}, {"nominal_size", k + 2 * l - 1}},
                  Prediction{m_size, osd, d * d});
}

/// S1 u S2 u S2 Z^{d/2}: the operator system is itself a 2d-dimensional algebra.
inline StateSet halfshift_variant(std::int64_t d, std::optional<std::int64_t> k_opt = std::nullopt,
                                  std::optional<std::int64_t> l_opt = std::nullopt) {
  if (d < 2 || d % 2 != 0) {
    throw InvalidParameter("halfshift needs an even d >= 2, got " + std::to_string(d));
  }
  if (d > kDefaultDenseCap) throw InvalidParameter("halfshift dimension above cap");
  auto [k, l] = theorem4_default_kl(d);
  if (k_opt || l_opt) {
    if (!k_opt || !l_opt) throw InvalidParameter("halfshift needs both k and l, or neither");
    k = *k_opt;
    l = *l_opt;
  }
  if (k < 1 || l < 1 || k * l < d) throw InvalidParameter("halfshift needs kl >= d");
  auto words = detail::shift_family(d, k, l, QuditPauli::clock(d, d / 2));
  const auto m_size = static_cast<std::int64_t>(words.size());
  return StateSet(std::move(words), "halfshift",
                  {{"d", d}, {"k", k}, {"l", l}, {"nominal_size", k + 2 * l - 1}},
                  Prediction{m_size, 2 * d, 2 * d});
}

}  // namespace locc
