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
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "locc/pauli.hpp"

// GF(2) linear algebra on packed symplectic vectors (x << n) | z. Projective
// classes of n-qubit Pauli words form the group (Z_2)^{2n} under XOR.
namespace locc::symplectic {

inline int form(std::uint64_t u, std::uint64_t v, int n) {
  const std::uint64_t mask = PauliWord::site_mask(n);
  const std::uint64_t xu = u >> n, zu = u & mask;
  const std::uint64_t xv = v >> n, zv = v & mask;
  return (std::popcount(xu & zv) + std::popcount(zu & xv)) & 1;
}

/// Reduced XOR basis: each element has a distinct leading bit, sorted
/// descending, so `reduce` can use the min trick.
class Gf2Basis {
 public:
  /// Returns true when `v` was independent and got added.
  bool insert(std::uint64_t v) {
    v = reduce(v);
    if (v == 0) return false;
    rows_.push_back(v);
    std::sort(rows_.begin(), rows_.end(), std::greater<>());
    return true;
  }

  std::uint64_t reduce(std::uint64_t v) const {
    for (std::uint64_t r : rows_) v = std::min(v, v ^ r);
    return v;
  }

  bool contains(std::uint64_t v) const { return reduce(v) == 0; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::uint64_t>& rows() const { return rows_; }

 private:
  std::vector<std::uint64_t> rows_;
};

inline Gf2Basis span_of(std::span<const PauliWord> words) {
  Gf2Basis basis;
  for (const auto& w : words) basis.insert(w.symplectic());
  return basis;
}

inline int rank(std::span<const PauliWord> words) {
  return span_of(words).rank();
}

/// Rank over GF(2) of a square symmetric 0/1 matrix given as row bitmasks.
inline int matrix_rank(std::vector<std::uint64_t> rows) {
  Gf2Basis basis;
  for (auto r : rows) basis.insert(r);
  return basis.rank();
}

/// Every element of the group generated by `basis`, as packed vectors,
/// identity first, then ascending.
inline std::vector<std::uint64_t> enumerate(const Gf2Basis& basis) {
  const int g = basis.rank();
  if (g > 24) throw InvalidParameter("projective group too large to list");
  std::vector<std::uint64_t> out;
  out.reserve(std::size_t{1} << g);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g); ++mask) {
    std::uint64_t v = 0;
    for (int i = 0; i < g; ++i) {
      if (mask >> i & 1) v ^= basis.rows()[i];
    }
    out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Hermitian representatives of the projective group generated by `gens`.
inline std::vector<PauliWord> projective_group(std::span<const PauliWord> gens) {
  if (gens.empty()) return {};
  const int n = gens.front().num_qubits();
  for (const auto& g : gens) require_same_qubits(gens.front(), g);
  std::vector<PauliWord> out;
  for (std::uint64_t v : enumerate(span_of(gens))) {
    out.push_back(PauliWord::from_symplectic(n, v));
  }
  return out;
}

}  // namespace locc::symplectic
