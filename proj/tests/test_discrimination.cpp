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

#include <random>

#include "locc/discrimination.hpp"
#include "support/oracles.hpp"

using namespace locc;

namespace {

StateSet qubits(std::initializer_list<const char*> items) {
  std::vector<PauliWord> words;
  for (const char* s : items) words.push_back(PauliWord::parse(s));
  return StateSet(std::move(words), "custom");
}

bool is_indistinguishable_cert(const Certificate& c) {
  return std::holds_alternative<DimensionExceeded>(c) || std::holds_alternative<BlockViolation>(c) ||
         std::holds_alternative<EmbeddedM2>(c);
}

}  // namespace

TEST(Analyze, six_state_family) {
  const auto set = example2_set();
  const auto v = analyze(set, 1);
  EXPECT_EQ(v.outcome, Outcome::kIndistinguishable);
  ASSERT_TRUE(std::holds_alternative<DimensionExceeded>(v.certificate));
  const auto& c = std::get<DimensionExceeded>(v.certificate);
  EXPECT_EQ(c.dim, 16);
  EXPECT_EQ(c.d, 8);
  EXPECT_TRUE(v.diagnostics.is_algebra);
  EXPECT_EQ(v.diagnostics.operator_system_dim, 16);
  ASSERT_TRUE(v.diagnostics.block_signature.has_value());
  EXPECT_EQ(v.diagnostics.block_signature->blocks, std::vector<Block>(4, Block{1, 2}));
  EXPECT_TRUE(recheck(v.certificate, set));
}

TEST(Analyze, bell_pairs) {
  const auto ix = qubits({"I", "X"});
  const auto v = analyze(ix, 1);
  EXPECT_EQ(v.outcome, Outcome::kDistinguishable);
  ASSERT_TRUE(std::holds_alternative<SeparatingWitness>(v.certificate));
  EXPECT_TRUE(recheck(v.certificate, ix));

  const auto ixz = qubits({"I", "X", "Z"});
  const auto w = analyze(ixz, 1);
  EXPECT_EQ(w.outcome, Outcome::kIndistinguishable);
  EXPECT_TRUE(std::holds_alternative<DimensionExceeded>(w.certificate));
  EXPECT_TRUE(recheck(w.certificate, ixz));
  // The witness from {I, X} does not certify {I, X, Z}.
  EXPECT_FALSE(recheck(v.certificate, ixz));
}

TEST(Analyze, shift_family_d4_embedded_m2) {
  const auto set = theorem4_family(4);
  const auto v = analyze(set, 3);
  EXPECT_EQ(v.outcome, Outcome::kIndistinguishable);
  ASSERT_TRUE(std::holds_alternative<EmbeddedM2>(v.certificate));
  EXPECT_FALSE(v.diagnostics.is_algebra);
  const auto& m2 = std::get<EmbeddedM2>(v.certificate);
  for (double r : m2.residuals) EXPECT_LT(r, 1e-8);
  EXPECT_TRUE(recheck(v.certificate, set));

  // Perturbing phi0 by norm 1e-2 pushes a residual above tolerance.
  std::mt19937_64 rng(5);
  EmbeddedM2 bad = m2;
  StateVector noise = random_unit_vector(4, rng);
  noise -= bad.phi0 * bad.phi0.dot(noise);
  noise -= bad.phi1 * bad.phi1.dot(noise);
  bad.phi0 = (bad.phi0 + 1e-2 * noise.normalized()).normalized();
  EXPECT_FALSE(recheck(Certificate{bad}, set));
}

TEST(Analyze, all_constructions_indistinguishable) {
  EXPECT_EQ(analyze(example2_set(), 1).outcome, Outcome::kIndistinguishable);
  for (int n = 2; n <= 4; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto set = theorem2_family(n, k);
      const auto v = analyze(set, 2);
      EXPECT_EQ(v.outcome, Outcome::kIndistinguishable) << set.label();
      EXPECT_TRUE(recheck(v.certificate, set)) << set.label();
    }
  }
  for (std::int64_t d = 2; d <= 12; ++d) {
    const auto set = theorem4_family(d);
    const auto v = analyze(set, 3);
    EXPECT_EQ(v.outcome, Outcome::kIndistinguishable) << set.label();
    EXPECT_TRUE(recheck(v.certificate, set)) << set.label();
  }
  for (std::int64_t d = 2; d <= 12; d += 2) {
    const auto set = halfshift_variant(d);
    const auto v = analyze(set, 4);
    EXPECT_EQ(v.outcome, Outcome::kIndistinguishable) << set.label();
    // The algebra route decides first.
    EXPECT_TRUE(v.diagnostics.is_algebra) << set.label();
    EXPECT_TRUE(recheck(v.certificate, set)) << set.label();
  }
}

TEST(Analyze, deterministic_given_seed) {
  const auto set = qubits({"II", "XI", "IX"});
  const auto a = analyze(set, 42);
  const auto b = analyze(set, 42);
  EXPECT_EQ(a.outcome, b.outcome);
  ASSERT_TRUE(std::holds_alternative<SeparatingWitness>(a.certificate));
  EXPECT_EQ(std::get<SeparatingWitness>(a.certificate).psi,
            std::get<SeparatingWitness>(b.certificate).psi);
}

TEST(Analyze, one_block_ampliation_is_distinguishable) {
  // span{I, X, Z, XZ} (x) I = M_2 (x) I_2: one block (2, 2).
  const auto set = qubits({"II", "XI", "ZI"});
  const auto v = analyze(set, 1);
  EXPECT_EQ(v.outcome, Outcome::kDistinguishable);
  ASSERT_TRUE(v.diagnostics.block_signature.has_value());
  EXPECT_EQ(v.diagnostics.block_signature->blocks, (std::vector<Block>{{2, 2}}));
  EXPECT_TRUE(recheck(v.certificate, set));
}

TEST(Recheck, block_violation) {
  EXPECT_TRUE(recheck(Certificate{BlockViolation{0, 1, 2}}, example2_set()));
  EXPECT_TRUE(recheck(Certificate{BlockViolation{3, 1, 2}}, example2_set()));
  EXPECT_FALSE(recheck(Certificate{BlockViolation{0, 2, 2}}, example2_set()));
  EXPECT_FALSE(recheck(Certificate{BlockViolation{4, 1, 2}}, example2_set()));
  EXPECT_FALSE(recheck(Certificate{BlockViolation{0, 1, 2}}, qubits({"II", "XI", "ZI"})));
  // Not an algebra: no block certificate applies.
  EXPECT_FALSE(recheck(Certificate{BlockViolation{0, 1, 2}}, theorem4_family(4)));
}

TEST(Analyze, non_algebra_outcomes_are_certified_or_inconclusive) {
  for (const auto& set : {qubits({"II", "XX", "ZZ", "YI"}), qubits({"II", "XI", "ZI", "IZ"}),
                          qubits({"III", "XII", "ZII", "IZI"})}) {
    const auto v = analyze(set, 1);
    EXPECT_FALSE(v.diagnostics.is_algebra);
    EXPECT_NE(v.outcome, Outcome::kDistinguishable);
    if (v.outcome == Outcome::kInconclusive) {
      EXPECT_TRUE(std::holds_alternative<NoCertificate>(v.certificate));
    } else {
      EXPECT_TRUE(is_indistinguishable_cert(v.certificate));
      EXPECT_TRUE(recheck(v.certificate, set));
    }
  }
}

TEST(Recheck, mismatched_inputs_are_false) {
  const auto ix = qubits({"I", "X"});
  const auto v = analyze(ix, 1);
  EXPECT_FALSE(recheck(v.certificate, example2_set()));
  EXPECT_FALSE(recheck(Certificate{NoCertificate{"x"}}, ix));
  EXPECT_FALSE(recheck(Certificate{DimensionExceeded{16, 4}}, example2_set()));
  EXPECT_FALSE(recheck(Certificate{DimensionExceeded{4, 2}}, ix));
  EXPECT_FALSE(recheck(Certificate{SeparatingWitness{StateVector::Zero(2)}}, ix));
}

TEST(Analyze, distinguishable_witnesses_verify) {
  std::mt19937_64 rng(10);
  int distinguishable = 0;
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 3;
    std::vector<PauliWord> words{PauliWord::identity(n)};
    for (int i = 0; i < 2; ++i) {
      auto w = oracle::random_pauli(n, rng).canonical();
      const bool dup = std::any_of(words.begin(), words.end(),
                                   [&](const PauliWord& v) { return v.same_class(w); });
      if (!dup) words.push_back(w);
    }
    const StateSet set(words, "random");
    const auto v = analyze(set, static_cast<std::uint64_t>(t));
    if (v.outcome == Outcome::kDistinguishable) {
      ++distinguishable;
      const auto sys = operator_system_of(set.dense_unitaries());
      EXPECT_TRUE(verify_witness(sys, std::get<SeparatingWitness>(v.certificate).psi));
    }
    if (v.outcome == Outcome::kIndistinguishable) EXPECT_TRUE(recheck(v.certificate, set));
  }
  EXPECT_GT(distinguishable, 0);
}

TEST(Analyze, pauli_class_route_matches_dense_route) {
  AnalyzeOptions classes_only;
  classes_only.pauli_classes_above = 1;
  for (int n = 2; n <= 4; ++n) {
    const auto set = theorem2_family(n);
    const auto dense = analyze(set, 1);
    const auto exact = analyze(set, 1, classes_only);
    EXPECT_EQ(exact.diagnostics.route, "pauli-classes");
    EXPECT_EQ(dense.outcome, exact.outcome);
    EXPECT_EQ(dense.diagnostics.operator_system_dim, exact.diagnostics.operator_system_dim);
    EXPECT_TRUE(recheck(exact.certificate, set, classes_only));
    EXPECT_TRUE(recheck(exact.certificate, set));
  }
  const auto ix = qubits({"II", "XI", "IX"});
  const auto v = analyze(ix, 3, classes_only);
  EXPECT_EQ(v.outcome, Outcome::kDistinguishable);
  EXPECT_TRUE(recheck(v.certificate, ix));
  EXPECT_TRUE(recheck(v.certificate, ix, classes_only));
}

TEST(Analyze, large_lattice_family_uses_pauli_classes) {
  for (int n = 6; n <= 8; ++n) {
    const auto set = theorem2_family(n);
    const auto v = analyze(set, 1);
    EXPECT_EQ(v.diagnostics.route, "pauli-classes");
    EXPECT_EQ(v.outcome, Outcome::kIndistinguishable);
    EXPECT_EQ(v.diagnostics.operator_system_dim, std::int64_t{1} << (n + 1));
    EXPECT_TRUE(recheck(v.certificate, set));
  }
}

TEST(Analyze, dropping_colliding_member_leaves_no_dimension_certificate) {
  for (int n = 3; n <= 5; ++n) {
    const auto set = theorem2_family(n);
    const int k = theorem2_default_k(n);
    // Z^k (x) I^{n-k} sits at index 2^k - 1 in the family order.
    const auto reduced = set.without((std::size_t{1} << k) - 1);
    const auto v = analyze(reduced, 1);
    const bool algebra_dim_route = v.outcome == Outcome::kIndistinguishable &&
                                   std::holds_alternative<DimensionExceeded>(v.certificate);
    EXPECT_FALSE(algebra_dim_route) << reduced.label();
  }
}

TEST(FindM2, dimension_bound) {
  const auto span = operator_system_of(std::vector<DenseOperator>{
      PauliWord::parse("I").to_dense(), PauliWord::parse("X").to_dense()});
  EXPECT_FALSE(find_m2_witness(span, {PauliWord::parse("X").to_dense()}).has_value());
}
