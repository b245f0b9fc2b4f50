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
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "locc/dense.hpp"
#include "locc/errors.hpp"
#include "locc/pauli.hpp"
#include "locc/span.hpp"
#include "locc/symplectic.hpp"

namespace locc {

/// One summand I_m (x) M_n of a finite-dimensional C*-algebra.
struct Block {
  std::int64_t multiplicity = 1;  // m
  std::int64_t size = 1;          // n
  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;
};

/// Wedderburn data of an algebra on C^d: U A U* = (+)_k I_{m_k} (x) M_{n_k}.
/// `projections` holds the minimal central projections in block order; the
/// exact Pauli path leaves it empty.
struct BlockSignature {
  std::vector<Block> blocks;
  std::vector<DenseOperator> projections;
  std::int64_t ambient_dim = 0;

  std::int64_t algebra_dim() const {
    std::int64_t s = 0;
    for (const auto& b : blocks) s += b.size * b.size;
    return s;
  }
  std::int64_t represented_dim() const {
    std::int64_t s = 0;
    for (const auto& b : blocks) s += b.size * b.multiplicity;
    return s;
  }
};

struct ViolatingBlock {
  std::size_t index = 0;
  Block block;
};

struct SeparatingVerdict {
  bool exists = false;
  std::optional<StateVector> witness;
  std::optional<ViolatingBlock> violating_block;
};

struct DecomposeOptions {
  int max_retries = 5;
  /// Eigenvalue clusters of the random central element are split at gaps
  /// larger than this fraction of the spectral diameter.
  double eigen_gap = 1e-6;
  /// Singular values below this count as zero when solving for the center.
  double center_cutoff = 1e-7;
  double integer_tol = 1e-6;
};

inline bool has_separating_vector(const BlockSignature& sig) {
  return std::all_of(sig.blocks.begin(), sig.blocks.end(),
                     [](const Block& b) { return b.multiplicity >= b.size; });
}

inline std::optional<ViolatingBlock> first_violation(const BlockSignature& sig) {
  for (std::size_t k = 0; k < sig.blocks.size(); ++k) {
    if (sig.blocks[k].multiplicity < sig.blocks[k].size) {
      return ViolatingBlock{k, sig.blocks[k]};
    }
  }
  return std::nullopt;
}

/// dim(A) <= d is necessary for a separating vector; false certifies that
/// none exists.
inline bool dimension_necessary_check(std::int64_t algebra_dim, std::int64_t d) {
  return algebra_dim <= d;
}

namespace detail {

inline void sort_blocks(BlockSignature& sig) {
  std::vector<std::size_t> order(sig.blocks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = sig.blocks[a];
    const auto& y = sig.blocks[b];
    if (x.size != y.size) return x.size > y.size;
    return x.multiplicity > y.multiplicity;
  });
  BlockSignature sorted;
  sorted.ambient_dim = sig.ambient_dim;
  for (auto i : order) {
    sorted.blocks.push_back(sig.blocks[i]);
    if (!sig.projections.empty()) sorted.projections.push_back(sig.projections[i]);
  }
  sig = std::move(sorted);
}

inline Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& m, double cutoff) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  Eigen::Index rank = 0;
  while (rank < sv.size() && sv(rank) > cutoff) ++rank;
  return svd.matrixV().rightCols(m.cols() - rank);
}

inline Complex random_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  const double im = u(rng);
  return {re, im};
}

}  // namespace detail

/// Orthonormal basis (as d x d operators) of the center Z(A) = A cap A'.
/// Starts from the commutant of one random element, then intersects with
/// the commutant of every basis element.
inline std::vector<DenseOperator> center_basis(const OperatorSpan& algebra,
                                               std::mt19937_64& rng,
                                               double cutoff = 1e-7) {
  const Eigen::Index d = algebra.ambient_dim();
  const Eigen::Index r = algebra.dimension();
  const Eigen::MatrixXcd& q = algebra.columns();

  // coeffs: r x s, columns are coefficient vectors of candidate elements.
  Eigen::MatrixXcd coeffs = Eigen::MatrixXcd::Identity(r, r);
  auto constrain = [&](const DenseOperator& b) {
    const Eigen::Index s = coeffs.cols();
    Eigen::MatrixXcd comm(d * d, s);
    const Eigen::MatrixXcd elems = q * coeffs;
    for (Eigen::Index l = 0; l < s; ++l) {
      const DenseOperator e = elems.col(l).reshaped(d, d);
      comm.col(l) = (e * b - b * e).reshaped();
    }
    coeffs = coeffs * detail::null_space(comm, cutoff);
  };

  Eigen::VectorXcd c(r);
  for (Eigen::Index i = 0; i < r; ++i) c(i) = detail::random_complex(rng);
  c.normalize();
  constrain((q * c).reshaped(d, d));
  for (Eigen::Index j = 0; j < r && coeffs.cols() > 1; ++j) {
    constrain(algebra.basis(j));
  }

  std::vector<DenseOperator> out;
  const Eigen::MatrixXcd elems = q * coeffs;
  for (Eigen::Index l = 0; l < coeffs.cols(); ++l) {
    out.push_back(elems.col(l).reshaped(d, d));
  }
  return out;
}

/// Numerical Wedderburn decomposition of a *-algebra.
///
/// The minimal central projections are the spectral projections of a random
/// Hermitian central element; the sample is accepted only when it has as many
/// distinct eigenvalues as the center has dimensions. For each projection P,
/// n = sqrt(dim A P) and m = rank(P) / n.
inline BlockSignature decompose(const OperatorSpan& algebra, std::uint64_t seed,
                                const DecomposeOptions& opt = {}) {
  if (!is_algebra(algebra)) {
    throw NotAnAlgebra("decompose requires a self-adjoint unital algebra");
  }
  const Eigen::Index d = algebra.ambient_dim();
  const Eigen::Index r = algebra.dimension();
  std::mt19937_64 rng(seed);
  const auto center = center_basis(algebra, rng, opt.center_cutoff);
  const auto s = static_cast<Eigen::Index>(center.size());

  std::vector<std::vector<Eigen::Index>> clusters;
  Eigen::MatrixXcd eigvecs;
  bool accepted = false;
  for (int attempt = 0; attempt < opt.max_retries && !accepted; ++attempt) {
    DenseOperator c = DenseOperator::Zero(d, d);
    for (const auto& z : center) c += detail::random_complex(rng) * z;
    const DenseOperator h = 0.5 * (c + c.adjoint());
    Eigen::SelfAdjointEigenSolver<DenseOperator> es(h);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double diameter = ev(d - 1) - ev(0);
    clusters.assign(1, {0});
    for (Eigen::Index i = 1; i < d; ++i) {
      if (ev(i) - ev(i - 1) > opt.eigen_gap * diameter && diameter > 1e-12) {
        clusters.push_back({});
      }
      clusters.back().push_back(i);
    }
    if (static_cast<Eigen::Index>(clusters.size()) == s) {
      accepted = true;
      eigvecs = es.eigenvectors();
    }
  }
  if (!accepted) {
    throw NumericalFailure("random central element stayed degenerate after " +
                           std::to_string(opt.max_retries) + " draws");
  }

  BlockSignature sig;
  sig.ambient_dim = d;
  for (const auto& cl : clusters) {
    Eigen::MatrixXcd v(d, static_cast<Eigen::Index>(cl.size()));
    for (std::size_t i = 0; i < cl.size(); ++i) {
      v.col(static_cast<Eigen::Index>(i)) = eigvecs.col(cl[i]);
    }
    const DenseOperator p = v * v.adjoint();
    // dim(A P): every B_i P, stacked.
    Eigen::MatrixXcd prods(d * d, r);
    for (Eigen::Index i = 0; i < r; ++i) {
      prods.col(i) = (algebra.basis(i) * p).reshaped();
    }
    const double cutoff = algebra.tolerances().rank_cutoff(static_cast<std::size_t>(r));
    detail::SpanBuilder builder(d, cutoff, cutoff);
    builder.add_many(prods);
    const double block_dim = static_cast<double>(builder.size());
    const double root = std::sqrt(block_dim);
    const auto n = static_cast<std::int64_t>(std::llround(root));
    if (n < 1 || std::abs(root - static_cast<double>(n)) > opt.integer_tol) {
      throw NumericalFailure("block dimension " + std::to_string(builder.size()) +
                             " is not a perfect square");
    }
    const auto rank = static_cast<std::int64_t>(cl.size());
    if (rank % n != 0) {
      throw NumericalFailure("projection rank " + std::to_string(rank) +
                             " not divisible by block size " + std::to_string(n));
    }
    sig.blocks.push_back({rank / n, n});
    sig.projections.push_back(p);
  }
  detail::sort_blocks(sig);
  if (sig.represented_dim() != d || sig.algebra_dim() != r) {
    throw NumericalFailure("block signature inconsistent with algebra (sum m n = " +
                           std::to_string(sig.represented_dim()) +
                           ", sum n^2 = " + std::to_string(sig.algebra_dim()) + ")");
  }
  return sig;
}

struct WitnessOptions {
  /// Smallest singular value of [B_i psi], relative to the largest, that
  /// still counts as full rank.
  double rank_rel = 1e-8;
  double norm_tol = 1e-8;
};

/// psi separates the algebra iff {B_i psi} is linearly independent for an
/// orthonormal basis {B_i}.
inline bool verify_witness(const OperatorSpan& algebra, const StateVector& psi,
                           const WitnessOptions& opt = {}) {
  const Eigen::Index d = algebra.ambient_dim();
  if (psi.size() != d) {
    throw SizeMismatch("witness of length " + std::to_string(psi.size()) +
                       " for algebra on C^" + std::to_string(d));
  }
  if (std::abs(psi.norm() - 1.0) > opt.norm_tol) return false;
  const Eigen::Index r = algebra.dimension();
  if (r > d) return false;
  if (r == 0) return true;
  Eigen::MatrixXcd images(d, r);
  for (Eigen::Index i = 0; i < r; ++i) images.col(i) = algebra.basis(i) * psi;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(images);
  const auto& sv = svd.singularValues();
  return sv(r - 1) > opt.rank_rel * sv(0);
}

inline StateVector random_unit_vector(Eigen::Index d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  StateVector v(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double re = g(rng);
    const double im = g(rng);
    v(i) = Complex(re, im);
  }
  return v.normalized();
}

/// Randomized separating-vector search with a deterministic fallback to the
/// block criterion.
inline SeparatingVerdict random_witness(const OperatorSpan& algebra,
                                        std::uint64_t seed,
                                        const WitnessOptions& opt = {}) {
  if (!is_algebra(algebra)) {
    throw NotAnAlgebra("random_witness requires a self-adjoint unital algebra");
  }
  const Eigen::Index d = algebra.ambient_dim();
  std::mt19937_64 rng(seed);
  auto try_draws = [&](int count) -> std::optional<StateVector> {
    for (int attempt = 0; attempt < count; ++attempt) {
      StateVector psi = random_unit_vector(d, rng);
      if (verify_witness(algebra, psi, opt)) return psi;
    }
    return std::nullopt;
  };
  if (algebra.dimension() <= d) {
    if (auto psi = try_draws(3)) return {true, std::move(psi), std::nullopt};
  }
  const BlockSignature sig = decompose(algebra, seed ^ 0x9e3779b97f4a7c15ULL);
  if (!has_separating_vector(sig)) return {false, std::nullopt, first_violation(sig)};
  if (auto psi = try_draws(16)) return {true, std::move(psi), std::nullopt};
  throw NumericalFailure(
      "block criterion admits a separating vector but none was found");
}

/// Exact block signature of the algebra spanned by the Pauli group generated
/// by `generators`. With |G| = 2^{t+2r} and radical G cap G^perp of order
/// 2^t, there are 2^t blocks, each I_{2^{n-t-r}} (x) M_{2^r}.
inline BlockSignature pauli_subgroup_signature(std::span<const PauliWord> generators) {
  if (generators.empty()) {
    throw InvalidParameter("pauli_subgroup_signature needs at least one generator");
  }
  const int n = generators.front().num_qubits();
  for (const auto& g : generators) require_same_qubits(generators.front(), g);
  const auto basis = symplectic::span_of(generators);
  const int g = basis.rank();
  std::vector<std::uint64_t> gram(static_cast<std::size_t>(g), 0);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < g; ++j) {
      if (symplectic::form(basis.rows()[i], basis.rows()[j], n)) {
        gram[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
      }
    }
  }
  const int form_rank = symplectic::matrix_rank(gram);
  const int r = form_rank / 2;
  const int t = g - form_rank;
  BlockSignature sig;
  sig.ambient_dim = std::int64_t{1} << n;
  const Block block{std::int64_t{1} << (n - t - r), std::int64_t{1} << r};
  sig.blocks.assign(std::size_t{1} << t, block);
  return sig;
}

}  // namespace locc
