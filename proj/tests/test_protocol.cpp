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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "locc/protocol.hpp"
#include "support/oracles.hpp"

using namespace locc;

namespace {

StateSet qubits(std::initializer_list<const char*> items) {
  std::vector<PauliWord> words;
  for (const char* s : items) words.push_back(PauliWord::parse(s));
  return StateSet(std::move(words), "custom");
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
  DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Under the sigma_2 product basis a Bell pair I or Y gives anti-correlated
// outcomes and X or Z correlated ones, so two lattice states share support
// iff their words agree in x XOR z.
std::vector<std::pair<std::size_t, std::size_t>> predicted_collisions(
    const std::vector<PauliWord>& words) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if ((words[i].x_bits() ^ words[i].z_bits()) == (words[j].x_bits() ^ words[j].z_bits())) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

}  // namespace

TEST(Measurement, validation) {
  EXPECT_THROW(LocalMeasurement(DenseOperator::Identity(2, 2), DenseOperator::Identity(3, 3), "x"),
               SizeMismatch);
  DenseOperator bad = DenseOperator::Identity(2, 2);
  bad(0, 1) = 0.5;
  EXPECT_THROW(LocalMeasurement(bad, bad, "x"), InvalidParameter);
  EXPECT_THROW(y_basis_measurement(0), InvalidParameter);
  const auto y = y_basis_measurement(3);
  EXPECT_EQ(y.dim(), 8);
}

TEST(Simulate, bell_phi0_under_y) {
  const auto table = outcome_table(qubits({"I"}), y_basis_measurement(1));
  ASSERT_EQ(table.rows.rows(), 1);
  // Outcome 0 is the +1 eigenvector of sigma_2.
  EXPECT_NEAR(table.rows(0, 0 * 2 + 0), 0.0, 1e-15);
  EXPECT_NEAR(table.rows(0, 0 * 2 + 1), 0.5, 1e-15);
  EXPECT_NEAR(table.rows(0, 1 * 2 + 0), 0.5, 1e-15);
  EXPECT_NEAR(table.rows(0, 1 * 2 + 1), 0.0, 1e-15);
}

TEST(Simulate, phi0_phi3_collide_under_z) {
  const auto table = outcome_table(qubits({"I", "Z"}), z_basis_measurement(2));
  for (int s = 0; s < 2; ++s) {
    EXPECT_NEAR(table.rows(s, 0), 0.5, 1e-15);
    EXPECT_NEAR(table.rows(s, 3), 0.5, 1e-15);
  }
  const auto report = supports_disjoint(table);
  EXPECT_FALSE(report.disjoint);
  ASSERT_EQ(report.colliding_pairs.size(), 1u);
  // Y basis separates them.
  EXPECT_TRUE(supports_disjoint(outcome_table(qubits({"I", "Z"}), y_basis_measurement(1))).disjoint);
}

TEST(Simulate, amplitudes_match_direct_projection) {
  std::mt19937_64 rng(2);
  const auto a = oracle::random_unitary(3, rng);
  const auto b = oracle::random_unitary(3, rng);
  const LocalMeasurement meas(a, b, "random");
  std::vector<QuditPauli> words{QuditPauli(3, 0, 0), QuditPauli(3, 1, 2), QuditPauli(3, 2, 1)};
  const StateSet set(words, "custom");
  const auto table = outcome_table(set, meas);
  for (std::size_t s = 0; s < words.size(); ++s) {
    const StateVector psi = state_vector(words[s]);
    double total = 0;
    for (Eigen::Index i = 0; i < 3; ++i) {
      for (Eigen::Index j = 0; j < 3; ++j) {
        const StateVector basis_vec = kron(a.col(i), b.col(j));
        const double p = std::norm(basis_vec.dot(psi));
        EXPECT_NEAR(table.rows(static_cast<Eigen::Index>(s), i * 3 + j), p, 1e-12);
        total += p;
      }
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(Simulate, size_mismatch) {
  EXPECT_THROW(outcome_table(qubits({"II"}), y_basis_measurement(1)), SizeMismatch);
}

TEST(Simulate, lattice_family_single_collision_under_y) {
  for (int n = 2; n <= 5; ++n) {
    const auto set = theorem2_family(n);
    const auto table = outcome_table(set, y_basis_measurement(n));
    const auto report = supports_disjoint(table);
    EXPECT_EQ(report.colliding_pairs, predicted_collisions(set.qubit_words())) << "n=" << n;
    ASSERT_EQ(report.colliding_pairs.size(), 1u) << "n=" << n;
    const int k = theorem2_default_k(n);
    const auto [i, j] = report.colliding_pairs.front();
    // Z^k (x) I^{n-k} and X^k (x) Y^{n-k}.
    std::string zword(static_cast<std::size_t>(k), 'Z');
    zword.append(static_cast<std::size_t>(n - k), 'I');
    std::string xyword(static_cast<std::size_t>(k), 'X');
    xyword.append(static_cast<std::size_t>(n - k), 'Y');
    EXPECT_EQ(set.unitary_labels()[i], zword);
    EXPECT_EQ(set.unitary_labels()[j], xyword);
    // Dyadic entries: every nonzero probability is 2^-n.
    const double unit = std::ldexp(1.0, -n);
    for (Eigen::Index r = 0; r < table.rows.rows(); ++r) {
      for (Eigen::Index c = 0; c < table.rows.cols(); ++c) {
        const double p = table.rows(r, c);
        EXPECT_TRUE(std::abs(p) < 1e-12 || std::abs(p - unit) < 1e-12) << p;
      }
    }
    EXPECT_TRUE(supports_disjoint(outcome_table(set.without(i), y_basis_measurement(n))).disjoint);
    EXPECT_TRUE(supports_disjoint(outcome_table(set.without(j), y_basis_measurement(n))).disjoint);
  }
}

TEST(Simulate, collisions_for_all_k_match_prediction) {
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto set = theorem2_family(n, k);
      const auto report = supports_disjoint(outcome_table(set, y_basis_measurement(n)));
      EXPECT_EQ(report.colliding_pairs, predicted_collisions(set.qubit_words()));
    }
  }
}

TEST(Sample, counts_within_five_sigma) {
  const auto table = outcome_table(theorem2_family(3), y_basis_measurement(3));
  const std::int64_t shots = 100000;
  const auto counts = sample_outcomes(table, shots, 17);
  for (Eigen::Index s = 0; s < table.rows.rows(); ++s) {
    EXPECT_EQ(counts.row(s).sum(), shots);
    for (Eigen::Index c = 0; c < table.rows.cols(); ++c) {
      const double p = table.rows(s, c);
      const double mean = p * static_cast<double>(shots);
      const double sigma = std::sqrt(static_cast<double>(shots) * p * (1 - p));
      if (p < kSupportThreshold) {
        EXPECT_EQ(counts(s, c), 0);
      } else {
        EXPECT_LE(std::abs(static_cast<double>(counts(s, c)) - mean), 5 * sigma);
      }
    }
  }
  EXPECT_EQ(sample_outcomes(table, 10, 3), sample_outcomes(table, 10, 3));
  EXPECT_THROW(sample_outcomes(table, 0, 3), InvalidParameter);
}
