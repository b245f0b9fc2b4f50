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

#include "locc/pauli.hpp"
#include "locc/symplectic.hpp"
#include "support/oracles.hpp"

using namespace locc;

namespace {

DenseOperator mat2(Complex a, Complex b, Complex c, Complex d) {
  DenseOperator m(2, 2);
  m << a, b, c, d;
  return m;
}

const Complex kI{0, 1};

}  // namespace

TEST(PauliWord, single_qubit_matrices) {
  EXPECT_EQ(PauliWord::parse("I").to_dense(), mat2(1, 0, 0, 1));
  EXPECT_EQ(PauliWord::parse("X").to_dense(), mat2(0, 1, 1, 0));
  EXPECT_EQ(PauliWord::parse("Y").to_dense(), mat2(0, -kI, kI, 0));
  EXPECT_EQ(PauliWord::parse("Z").to_dense(), mat2(1, 0, 0, -1));
}

TEST(PauliWord, multiply_examples) {
  const auto x = PauliWord::parse("X");
  const auto z = PauliWord::parse("Z");
  EXPECT_EQ(x * x, PauliWord::identity(1));

  const auto zi = PauliWord::parse("ZI");
  const auto xx = PauliWord::parse("XX");
  const auto a = zi * xx;
  const auto b = xx * zi;
  EXPECT_TRUE(a.same_class(b));
  EXPECT_EQ((a.phase() - b.phase() + 4) % 4, 2);

  // X Z = -i Y under Y = i X Z.
  const auto xz = x * z;
  const auto y = PauliWord::parse("Y");
  EXPECT_TRUE(xz.same_class(y));
  EXPECT_EQ((xz.phase() - y.phase() + 4) % 4, 3);
  EXPECT_EQ(xz.str(), "-iY");
}

TEST(PauliWord, multiply_size_mismatch) {
  EXPECT_THROW(PauliWord::parse("X") * PauliWord::parse("XX"), SizeMismatch);
  EXPECT_THROW(commutes(PauliWord::parse("X"), PauliWord::parse("XX")), SizeMismatch);
}

TEST(PauliWord, adjoint_examples) {
  const auto x = PauliWord::parse("X");
  EXPECT_EQ(adjoint(x), x);
  const PauliWord ixz(1, 1, 1, 1);  // i X Z = Y
  EXPECT_EQ(adjoint(ixz) * ixz, PauliWord::identity(1));
  const PauliWord xz(1, 1, 1, 0);  // X Z, anti-Hermitian
  EXPECT_EQ(adjoint(xz).phase(), 2);
  EXPECT_EQ(adjoint(xz) * xz, PauliWord::identity(1));
}

TEST(PauliWord, commutes_examples) {
  EXPECT_FALSE(commutes(PauliWord::parse("ZII"), PauliWord::parse("XXX")));
  EXPECT_TRUE(commutes(PauliWord::parse("ZZI"), PauliWord::parse("XXX")));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto p = oracle::random_pauli(4, rng);
    EXPECT_TRUE(commutes(PauliWord::identity(4), p));
  }
}

TEST(PauliWord, parse_and_format) {
  const auto zii = PauliWord::parse("ZII");
  EXPECT_EQ(zii.num_qubits(), 3);
  EXPECT_EQ(zii.z_bits(), 0b100u);
  EXPECT_EQ(zii.x_bits(), 0u);
  EXPECT_EQ(zii.str(), "ZII");
  EXPECT_EQ(PauliWord::parse("-iXYZ").str(), "-iXYZ");
  EXPECT_EQ(PauliWord::parse("+XY").str(), "XY");
  EXPECT_EQ(PauliWord::parse("+iY").phase(), 2);

  try {
    PauliWord::parse("XQZ");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(PauliWord::parse(""), ParseError);
  EXPECT_THROW(PauliWord::parse("-"), ParseError);
  EXPECT_THROW(PauliWord::parse("xz"), ParseError);
}

TEST(PauliWord, format_parse_round_trip) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const auto p = oracle::random_pauli(1 + t % 6, rng);
    EXPECT_EQ(PauliWord::parse(p.str()), p) << p.str();
  }
}

TEST(PauliWord, dense_cap) {
  EXPECT_THROW(PauliWord::identity(11).to_dense(), DimensionCapExceeded);
  EXPECT_NO_THROW(PauliWord::identity(10).to_dense());
  EXPECT_NO_THROW(PauliWord::identity(11).to_dense(4096));
}

// Dense conversion is an exact homomorphism: all entries are 0 or powers of i,
// so products agree bit for bit.
TEST(PauliWord, dense_homomorphism_exact) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const int n = 1 + t % 4;
    const auto p = oracle::random_pauli(n, rng);
    const auto q = oracle::random_pauli(n, rng);
    ASSERT_EQ((p * q).to_dense(), p.to_dense() * q.to_dense());
    ASSERT_EQ(adjoint(p).to_dense(), DenseOperator(p.to_dense().adjoint()));
  }
}

TEST(PauliWord, commutation_matches_dense) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 300; ++t) {
    const auto p = oracle::random_pauli(3, rng);
    const auto q = oracle::random_pauli(3, rng);
    const DenseOperator pq = p.to_dense() * q.to_dense();
    const DenseOperator qp = q.to_dense() * p.to_dense();
    EXPECT_EQ(commutes(p, q), pq == qp);
    EXPECT_TRUE(pq == qp || pq == DenseOperator(-qp));
  }
}

TEST(PauliWord, trace_orthogonality) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const auto p = oracle::random_pauli(3, rng);
    const auto q = oracle::random_pauli(3, rng);
    const Complex tr = (p.to_dense().adjoint() * q.to_dense()).trace();
    if (!p.same_class(q)) EXPECT_EQ(tr, Complex(0, 0));
    else EXPECT_DOUBLE_EQ(std::abs(tr), 8.0);
  }
}

TEST(PauliWord, canonical_words_are_hermitian) {
  for (const char* s : {"XYZ", "YY", "Y", "IXY", "ZZZ"}) {
    const DenseOperator m = PauliWord::parse(s).to_dense();
    EXPECT_EQ(m, DenseOperator(m.adjoint())) << s;
  }
}

TEST(Symplectic, projective_group_order_is_two_to_rank) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 4;
    std::vector<PauliWord> gens;
    const int count = 1 + t % 5;
    for (int i = 0; i < count; ++i) gens.push_back(oracle::random_pauli(n, rng));
    const auto group = symplectic::projective_group(gens);
    EXPECT_EQ(group.size(), std::size_t{1} << symplectic::rank(gens));
    EXPECT_EQ(oracle::dense_group_elements(gens).size(), group.size());
  }
}

TEST(QuditPauli, clock_shift_relation) {
  const auto x = QuditPauli::shift(3);
  const auto z = QuditPauli::clock(3);
  const auto zx = z * x;
  const auto xz = x * z;
  EXPECT_TRUE(zx.same_class(xz));
  EXPECT_EQ((zx.phase() - xz.phase() + 3) % 3, 1);
  // Dense check of Z X = omega X Z.
  const DenseOperator lhs = z.to_dense() * x.to_dense();
  const DenseOperator rhs = root_of_unity(3, 1) * x.to_dense() * z.to_dense();
  EXPECT_LT((lhs - rhs).norm(), 1e-14);
}

TEST(QuditPauli, shift_has_order_d) {
  for (std::int64_t d = 2; d <= 9; ++d) {
    QuditPauli p = QuditPauli::identity(d);
    for (std::int64_t i = 0; i < d; ++i) p = p * QuditPauli::shift(d);
    EXPECT_EQ(p, QuditPauli::identity(d));
  }
}

TEST(QuditPauli, derived_product_d3) {
  // Oracle: 3x3 dense product of X^2 Z and X Z^2.
  const QuditPauli p(3, 2, 1);
  const QuditPauli q(3, 1, 2);
  const DenseOperator dense = p.to_dense() * q.to_dense();
  const DenseOperator expected = root_of_unity(3, 1) * DenseOperator::Identity(3, 3);
  ASSERT_LT((dense - expected).norm(), 1e-14);
  EXPECT_EQ(p * q, QuditPauli(3, 0, 0, 1));
}

TEST(QuditPauli, dense_matrices) {
  const DenseOperator z = QuditPauli::clock(3).to_dense();
  EXPECT_EQ(z(0, 0), Complex(1, 0));
  EXPECT_LT(std::abs(z(1, 1) - std::polar(1.0, 2 * std::numbers::pi / 3)), 1e-15);
  EXPECT_LT(std::abs(z(2, 2) - std::polar(1.0, 4 * std::numbers::pi / 3)), 1e-15);
  EXPECT_EQ(z(0, 1), Complex(0, 0));
  const DenseOperator x = QuditPauli::shift(4).to_dense();
  for (int i = 0; i < 4; ++i) EXPECT_EQ(x((i + 1) % 4, i), Complex(1, 0));
  EXPECT_THROW(QuditPauli::shift(2000).to_dense(), DimensionCapExceeded);
}

TEST(QuditPauli, dense_homomorphism) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 1000; ++t) {
    const std::int64_t d = 2 + t % 7;
    std::uniform_int_distribution<std::int64_t> u(0, d - 1);
    const QuditPauli p(d, u(rng), u(rng), u(rng));
    const QuditPauli q(d, u(rng), u(rng), u(rng));
    ASSERT_LT(((p * q).to_dense() - p.to_dense() * q.to_dense()).norm(), 1e-12);
    ASSERT_LT((adjoint(p).to_dense() - p.to_dense().adjoint()).norm(), 1e-12);
    EXPECT_EQ(adjoint(adjoint(p)), p);
  }
}

TEST(QuditPauli, parse_and_format) {
  const auto p = QuditPauli::parse("x2z1@d4");
  EXPECT_EQ(p.dim(), 4);
  EXPECT_EQ(p.x_power(), 2);
  EXPECT_EQ(p.z_power(), 1);
  EXPECT_EQ(p.str(), "x2z1@d4");
  EXPECT_EQ(QuditPauli::parse("x5z0@d4").x_power(), 1);
  EXPECT_EQ(QuditPauli::parse("w2x0z1@d3").str(), "w2x0z1@d3");
  EXPECT_THROW(QuditPauli::parse("x2z1@d1"), ParseError);
  EXPECT_THROW(QuditPauli::parse("x2z@d4"), ParseError);
  EXPECT_THROW(QuditPauli::parse("x2z1d4"), ParseError);
  EXPECT_THROW(QuditPauli::parse("x2z1@d4 "), ParseError);
  EXPECT_THROW(QuditPauli(3, 0, 0) * QuditPauli(4, 0, 0), SizeMismatch);
}
