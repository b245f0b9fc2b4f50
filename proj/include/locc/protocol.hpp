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

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "locc/constructions.hpp"
#include "locc/dense.hpp"
#include "locc/errors.hpp"

namespace locc {

/// Probabilities below this are structural zeros.
inline constexpr double kSupportThreshold = 1e-10;

/// Fixed product measurement: Alice and Bob each measure in an orthonormal
/// basis of C^d, stored as matrix columns.
class LocalMeasurement {
 public:
  LocalMeasurement(DenseOperator alice_basis, DenseOperator bob_basis, std::string label)
      : alice_(std::move(alice_basis)), bob_(std::move(bob_basis)), label_(std::move(label)) {
    if (alice_.rows() != alice_.cols() || bob_.rows() != bob_.cols() ||
        alice_.rows() != bob_.rows()) {
      throw SizeMismatch("measurement bases must both be d x d");
    }
    const Eigen::Index d = alice_.rows();
    const DenseOperator id = DenseOperator::Identity(d, d);
    if ((alice_.adjoint() * alice_ - id).cwiseAbs().maxCoeff() > 1e-10 ||
        (bob_.adjoint() * bob_ - id).cwiseAbs().maxCoeff() > 1e-10) {
      throw InvalidParameter("measurement basis is not orthonormal");
    }
  }

  std::int64_t dim() const noexcept { return alice_.rows(); }
  const DenseOperator& alice_basis() const noexcept { return alice_; }
  const DenseOperator& bob_basis() const noexcept { return bob_; }
  const std::string& label() const noexcept { return label_; }

 private:
  DenseOperator alice_;
  DenseOperator bob_;
  std::string label_;
};

/// Qubit-wise product basis with per-qubit basis columns `single`.
inline DenseOperator product_basis(const DenseOperator& single, int n) {
  DenseOperator out = DenseOperator::Identity(1, 1);
  for (int i = 0; i < n; ++i) {
    DenseOperator next(out.rows() * single.rows(), out.cols() * single.cols());
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) {
        next.block(r * single.rows(), c * single.cols(), single.rows(), single.cols()) =
            out(r, c) * single;
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Both parties measure every qubit in the sigma_2 eigenbasis; per qubit,
/// outcome 0 is (|0> + i|1>)/sqrt(2) (eigenvalue +1), outcome 1 is
/// (|0> - i|1>)/sqrt(2).
inline LocalMeasurement y_basis_measurement(int n) {
  if (n < 1) throw InvalidParameter("y_basis_measurement needs n >= 1");
  const double s = 1.0 / std::sqrt(2.0);
  DenseOperator y(2, 2);
  y << Complex(s, 0), Complex(s, 0), Complex(0, s), Complex(0, -s);
  const DenseOperator b = product_basis(y, n);
  return LocalMeasurement(b, b, "y-basis");
}

inline LocalMeasurement z_basis_measurement(std::int64_t d) {
  const DenseOperator id = DenseOperator::Identity(d, d);
  return LocalMeasurement(id, id, "z-basis");
}

/// (I (x) U)|Phi> for a single unitary.
template <typename Word>
StateVector state_vector(const Word& u, std::int64_t cap = kDefaultDenseCap) {
  return maximally_entangled_image(u.to_dense(cap));
}

/// One row per state: probability of outcome (a, b) at column a * d + b.
struct OutcomeTable {
  std::int64_t d = 0;
  std::vector<std::string> state_labels;
  Eigen::MatrixXd rows;
  std::vector<std::vector<std::int64_t>> support;
};

inline OutcomeTable outcome_table(const StateSet& set, const LocalMeasurement& meas,
                                  std::int64_t cap = kDefaultDenseCap) {
  const std::int64_t d = set.local_dim();
  if (meas.dim() != d) {
    throw SizeMismatch("measurement on C^" + std::to_string(meas.dim()) +
                       " for states on C^" + std::to_string(d));
  }
  OutcomeTable t;
  t.d = d;
  t.state_labels = set.unitary_labels();
  const auto dense = set.dense_unitaries(cap);
  t.rows.resize(static_cast<Eigen::Index>(dense.size()), d * d);
  // <alpha_a| (x) <beta_b| psi = (A^dagger Psi conj(B))_{ab} with Psi_{ij} = psi[i d + j].
  const DenseOperator a_adj = meas.alice_basis().adjoint();
  const DenseOperator b_conj = meas.bob_basis().conjugate();
  for (std::size_t s = 0; s < dense.size(); ++s) {
    const StateVector psi = maximally_entangled_image(dense[s]);
    const DenseOperator grid = psi.reshaped<Eigen::RowMajor>(d, d);
    const DenseOperator amp = a_adj * grid * b_conj;
    std::vector<std::int64_t> supp;
    for (Eigen::Index a = 0; a < d; ++a) {
      for (Eigen::Index b = 0; b < d; ++b) {
        const double p = std::norm(amp(a, b));
        t.rows(static_cast<Eigen::Index>(s), a * d + b) = p;
        if (p > kSupportThreshold) supp.push_back(a * d + b);
      }
    }
    t.support.push_back(std::move(supp));
  }
  return t;
}

struct CollisionReport {
  bool disjoint = true;
  std::vector<std::pair<std::size_t, std::size_t>> colliding_pairs;
};

/// Pairwise-disjoint supports mean the fixed measurement identifies the state.
inline CollisionReport supports_disjoint(const OutcomeTable& table) {
  CollisionReport r;
  const std::size_t m = table.support.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const auto& a = table.support[i];
      const auto& b = table.support[j];
      std::size_t x = 0, y = 0;
      bool hit = false;
      while (x < a.size() && y < b.size() && !hit) {
        if (a[x] == b[y]) hit = true;
        else if (a[x] < b[y]) ++x;
        else ++y;
      }
      if (hit) r.colliding_pairs.emplace_back(i, j);
    }
  }
  r.disjoint = r.colliding_pairs.empty();
  return r;
}

/// Multinomial counts per state, row-aligned with the table.
inline Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> sample_outcomes(
    const OutcomeTable& table, std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw InvalidParameter("shots must be >= 1");
  std::mt19937_64 rng(seed);
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> counts =
      Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(table.rows.rows(),
                                                                        table.rows.cols());
  for (Eigen::Index s = 0; s < table.rows.rows(); ++s) {
    std::vector<double> w(static_cast<std::size_t>(table.rows.cols()));
    for (Eigen::Index c = 0; c < table.rows.cols(); ++c) {
      const double p = table.rows(s, c);
      w[static_cast<std::size_t>(c)] = p > kSupportThreshold ? p : 0.0;
    }
    std::discrete_distribution<Eigen::Index> dist(w.begin(), w.end());
    for (std::int64_t k = 0; k < shots; ++k) ++counts(s, dist(rng));
  }
  return counts;
}

}  // namespace locc
