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

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

#include "locc/dense.hpp"
#include "locc/errors.hpp"

namespace locc {

/// Largest qubit count a PauliWord can hold. Symplectic vectors pack X and Z
/// parts into one 64-bit word, so 32 is the ceiling.
inline constexpr int kMaxQubits = 32;

/// An n-qubit Pauli operator  i^phase * X^x Z^z  with X^x Z^z taken sitewise.
///
/// Site 0 is the leftmost tensor factor and is stored in bit (n - 1), so the
/// bit masks line up with computational basis indices: X^x Z^z |j> =
/// (-1)^{popcount(z & j)} |j ^ x>. With this convention Y = i X Z, and a word
/// is Hermitian exactly when phase == popcount(x & z) mod 4.
class PauliWord {
 public:
  PauliWord() = default;

  PauliWord(int num_qubits, std::uint64_t x, std::uint64_t z, int phase = 0)
      : n_(num_qubits), x_(x), z_(z), phase_(((phase % 4) + 4) % 4) {
    if (num_qubits < 0 || num_qubits > kMaxQubits) {
      throw InvalidParameter("qubit count " + std::to_string(num_qubits) +
                             " outside [0, " + std::to_string(kMaxQubits) +
                             "]");
    }
    const std::uint64_t mask = site_mask(num_qubits);
    if ((x & ~mask) != 0 || (z & ~mask) != 0) {
      throw InvalidParameter("Pauli bit-vector longer than qubit count");
    }
  }

  static PauliWord identity(int num_qubits) {
    return PauliWord(num_qubits, 0, 0, 0);
  }

  /// Hermitian word with the given letter at a single site.
  static PauliWord single(int num_qubits, int site, char letter) {
    PauliWord p = identity(num_qubits);
    return p.with_letter(site, letter);
  }

  int num_qubits() const noexcept { return n_; }
  std::uint64_t x_bits() const noexcept { return x_; }
  std::uint64_t z_bits() const noexcept { return z_; }
  int phase() const noexcept { return phase_; }

  /// Phase exponent that makes this (x, z) pattern Hermitian.
  int hermitian_phase() const noexcept { return std::popcount(x_ & z_) % 4; }

  /// Same projective class, Hermitian phase.
  PauliWord canonical() const {
    return PauliWord(n_, x_, z_, hermitian_phase());
  }

  bool is_identity_class() const noexcept { return x_ == 0 && z_ == 0; }

  bool same_class(const PauliWord& other) const noexcept {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
  }

  /// Symplectic vector packed as (x << n) | z.
  std::uint64_t symplectic() const noexcept {
    return (x_ << n_) | z_;
  }

  static PauliWord from_symplectic(int num_qubits, std::uint64_t v) {
    const std::uint64_t mask = site_mask(num_qubits);
    PauliWord p(num_qubits, (v >> num_qubits) & mask, v & mask, 0);
    return p.canonical();
  }

  /// Letter at a site, ignoring phase.
  char letter(int site) const {
    const std::uint64_t bit = std::uint64_t{1} << (n_ - 1 - site);
    const bool xb = (x_ & bit) != 0;
    const bool zb = (z_ & bit) != 0;
    if (xb && zb) return 'Y';
    if (xb) return 'X';
    if (zb) return 'Z';
    return 'I';
  }

  /// Replaces the letter at `site`, returning a Hermitian word.
  PauliWord with_letter(int site, char letter) const {
    const std::uint64_t bit = std::uint64_t{1} << (n_ - 1 - site);
    std::uint64_t x = x_ & ~bit;
    std::uint64_t z = z_ & ~bit;
    switch (letter) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Z': z |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      default: throw InvalidParameter(std::string("bad Pauli letter ") + letter);
    }
    return PauliWord(n_, x, z, 0).canonical();
  }

  /// Canonical text: optional phase token relative to the Hermitian word,
  /// then one letter per site.
  std::string str() const {
    static constexpr const char* kTokens[] = {"", "+i", "-", "-i"};
    std::string out = kTokens[((phase_ - hermitian_phase()) % 4 + 4) % 4];
    for (int s = 0; s < n_; ++s) out.push_back(letter(s));
    return out;
  }

  static PauliWord parse(std::string_view text) {
    int rel_phase = 0;
    std::size_t pos = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
      rel_phase = text[0] == '-' ? 2 : 0;
      pos = 1;
      if (pos < text.size() && text[pos] == 'i') {
        rel_phase += 1;
        pos = 2;
      }
    }
    const std::size_t n = text.size() - pos;
    if (n == 0) throw ParseError("empty Pauli word", 1);
    if (n > static_cast<std::size_t>(kMaxQubits)) {
      throw ParseError("Pauli word longer than " +
                           std::to_string(kMaxQubits) + " sites",
                       kMaxQubits + 1);
    }
    std::uint64_t x = 0, z = 0;
    for (std::size_t s = 0; s < n; ++s) {
      const std::uint64_t bit = std::uint64_t{1} << (n - 1 - s);
      switch (text[pos + s]) {
        case 'I': break;
        case 'X': x |= bit; break;
        case 'Z': z |= bit; break;
        case 'Y': x |= bit; z |= bit; break;
        default:
          throw ParseError(std::string("unexpected character '") +
                               text[pos + s] + "'",
                           s + 1);
      }
    }
    const int n_int = static_cast<int>(n);
    const int herm = std::popcount(x & z);
    return PauliWord(n_int, x, z, herm + rel_phase);
  }

  /// Dense 2^n x 2^n matrix. Entries are exactly 0 or a power of i.
  DenseOperator to_dense(std::int64_t cap = kDefaultDenseCap) const {
    const std::int64_t dim = std::int64_t{1} << n_;
    if (dim > cap) {
      throw DimensionCapExceeded("dimension " + std::to_string(dim) +
                                 " exceeds cap " + std::to_string(cap));
    }
    DenseOperator m = DenseOperator::Zero(dim, dim);
    for (std::int64_t j = 0; j < dim; ++j) {
      const auto col = static_cast<std::uint64_t>(j);
      const int sign = std::popcount(z_ & col) % 2 == 0 ? 0 : 2;
      m(static_cast<Eigen::Index>(col ^ x_), j) = i_power(phase_ + sign);
    }
    return m;
  }

  /// Action on a state vector without forming the matrix.
  StateVector apply(const StateVector& v) const {
    const std::int64_t dim = std::int64_t{1} << n_;
    if (v.size() != dim) {
      throw SizeMismatch("vector of length " + std::to_string(v.size()) + " for " +
                         std::to_string(n_) + " qubits");
    }
    StateVector out(dim);
    for (std::int64_t j = 0; j < dim; ++j) {
      const auto col = static_cast<std::uint64_t>(j);
      const int sign = std::popcount(z_ & col) % 2 == 0 ? 0 : 2;
      out(static_cast<Eigen::Index>(col ^ x_)) = i_power(phase_ + sign) * v(j);
    }
    return out;
  }

  friend bool operator==(const PauliWord&, const PauliWord&) = default;

  static std::uint64_t site_mask(int num_qubits) noexcept {
    return num_qubits == 0 ? 0 : (~std::uint64_t{0}) >> (64 - num_qubits);
  }

 private:
  int n_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

inline void require_same_qubits(const PauliWord& p, const PauliWord& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw SizeMismatch("Pauli words on " + std::to_string(p.num_qubits()) +
                       " and " + std::to_string(q.num_qubits()) + " qubits");
  }
}

/// Exact product. Moving Z^{z_p} past X^{x_q} costs (-1)^{z_p . x_q}.
inline PauliWord multiply(const PauliWord& p, const PauliWord& q) {
  require_same_qubits(p, q);
  const int swap_sign = 2 * (std::popcount(p.z_bits() & q.x_bits()) % 2);
  return PauliWord(p.num_qubits(), p.x_bits() ^ q.x_bits(),
                   p.z_bits() ^ q.z_bits(),
                   p.phase() + q.phase() + swap_sign);
}

inline PauliWord operator*(const PauliWord& p, const PauliWord& q) {
  return multiply(p, q);
}

/// (i^p X^x Z^z)^dagger = i^{-p} Z^z X^x = i^{-p} (-1)^{x.z} X^x Z^z.
inline PauliWord adjoint(const PauliWord& p) {
  const int sign = 2 * (std::popcount(p.x_bits() & p.z_bits()) % 2);
  return PauliWord(p.num_qubits(), p.x_bits(), p.z_bits(), -p.phase() + sign);
}

inline bool commutes(const PauliWord& p, const PauliWord& q) {
  require_same_qubits(p, q);
  const int form = std::popcount(p.x_bits() & q.z_bits()) +
                   std::popcount(p.z_bits() & q.x_bits());
  return form % 2 == 0;
}

/// Single-qudit generalized Pauli  omega^phase * X^a Z^b  on C^d, with
/// X|i> = |i+1 mod d>, Z|i> = omega^i |i>, omega = exp(2 pi i / d).
class QuditPauli {
 public:
  QuditPauli() = default;

  QuditPauli(std::int64_t d, std::int64_t a, std::int64_t b,
             std::int64_t phase = 0)
      : d_(d) {
    if (d < 2) {
      throw InvalidParameter("qudit dimension must be >= 2, got " +
                             std::to_string(d));
    }
    a_ = mod(a);
    b_ = mod(b);
    phase_ = mod(phase);
  }

  static QuditPauli identity(std::int64_t d) { return {d, 0, 0, 0}; }
  static QuditPauli shift(std::int64_t d, std::int64_t power = 1) {
    return {d, power, 0, 0};
  }
  static QuditPauli clock(std::int64_t d, std::int64_t power = 1) {
    return {d, 0, power, 0};
  }

  std::int64_t dim() const noexcept { return d_; }
  std::int64_t x_power() const noexcept { return a_; }
  std::int64_t z_power() const noexcept { return b_; }
  std::int64_t phase() const noexcept { return phase_; }

  bool same_class(const QuditPauli& other) const noexcept {
    return d_ == other.d_ && a_ == other.a_ && b_ == other.b_;
  }
  bool is_identity_class() const noexcept { return a_ == 0 && b_ == 0; }

  QuditPauli without_phase() const { return {d_, a_, b_, 0}; }

  /// "x<a>z<b>@d<d>", prefixed by "w<c>" when the phase is nonzero.
  std::string str() const {
    std::string out;
    if (phase_ != 0) out += "w" + std::to_string(phase_);
    out += "x" + std::to_string(a_) + "z" + std::to_string(b_) + "@d" +
           std::to_string(d_);
    return out;
  }

  static QuditPauli parse(std::string_view text) {
    std::size_t pos = 0;
    auto expect = [&](char c) {
      if (pos >= text.size() || text[pos] != c) {
        throw ParseError(std::string("expected '") + c + "'", pos + 1);
      }
      ++pos;
    };
    auto number = [&]() -> std::int64_t {
      const std::size_t start = pos;
      std::int64_t value = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        if (value > (std::int64_t{1} << 40)) {
          throw ParseError("integer too large", start + 1);
        }
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      if (pos == start) throw ParseError("expected digit", start + 1);
      return value;
    };
    std::int64_t phase = 0;
    if (!text.empty() && text[0] == 'w') {
      ++pos;
      phase = number();
    }
    expect('x');
    const std::int64_t a = number();
    expect('z');
    const std::int64_t b = number();
    expect('@');
    expect('d');
    const std::size_t d_pos = pos;
    const std::int64_t d = number();
    if (pos != text.size()) throw ParseError("trailing characters", pos + 1);
    if (d < 2) throw ParseError("qudit dimension must be >= 2", d_pos + 1);
    return {d, a, b, phase};
  }

  /// Column i holds omega^{phase + b i} at row (i + a) mod d.
  DenseOperator to_dense(std::int64_t cap = kDefaultDenseCap) const {
    if (d_ > cap) {
      throw DimensionCapExceeded("dimension " + std::to_string(d_) +
                                 " exceeds cap " + std::to_string(cap));
    }
    DenseOperator m = DenseOperator::Zero(d_, d_);
    for (std::int64_t i = 0; i < d_; ++i) {
      m((i + a_) % d_, i) = root_of_unity(d_, phase_ + b_ * i);
    }
    return m;
  }

  friend bool operator==(const QuditPauli&, const QuditPauli&) = default;

 private:
  std::int64_t mod(std::int64_t v) const {
    v %= d_;
    return v < 0 ? v + d_ : v;
  }

  std::int64_t d_ = 2;
  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::int64_t phase_ = 0;
};

inline void require_same_dim(const QuditPauli& p, const QuditPauli& q) {
  if (p.dim() != q.dim()) {
    throw SizeMismatch("qudit dimensions " + std::to_string(p.dim()) +
                       " and " + std::to_string(q.dim()));
  }
}

/// (X^a Z^b)(X^a' Z^b') = omega^{b a'} X^{a+a'} Z^{b+b'}.
inline QuditPauli qudit_multiply(const QuditPauli& p, const QuditPauli& q) {
  require_same_dim(p, q);
  const std::int64_t d = p.dim();
  const std::int64_t cross = (p.z_power() * q.x_power()) % d;
  return {d, p.x_power() + q.x_power(), p.z_power() + q.z_power(),
          p.phase() + q.phase() + cross};
}

inline QuditPauli operator*(const QuditPauli& p, const QuditPauli& q) {
  return qudit_multiply(p, q);
}

/// (omega^c X^a Z^b)^dagger = omega^{-c} Z^{-b} X^{-a} = omega^{ab - c} X^{-a} Z^{-b}.
inline QuditPauli adjoint(const QuditPauli& p) {
  const std::int64_t d = p.dim();
  return {d, -p.x_power(), -p.z_power(),
          (p.x_power() * p.z_power()) % d - p.phase()};
}

inline bool commutes(const QuditPauli& p, const QuditPauli& q) {
  require_same_dim(p, q);
  const std::int64_t d = p.dim();
  return (p.z_power() * q.x_power() - q.z_power() * p.x_power()) % d == 0;
}

}  // namespace locc
