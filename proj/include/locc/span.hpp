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
#include <span>
#include <string>
#include <vector>

#include "locc/dense.hpp"
#include "locc/errors.hpp"

namespace locc {

enum class Tri { kUnknown, kFalse, kTrue };

inline Tri to_tri(bool b) { return b ? Tri::kTrue : Tri::kFalse; }

/// Numerical thresholds shared by the span engine and everything above it.
struct Tolerances {
  /// Relative cutoff for accepting a new direction into a span. Zero means
  /// the default 1e-9 * sqrt(number of input operators).
  double rank_rel = 0.0;
  /// Residual Frobenius norm, relative to the operator norm, below which an
  /// operator counts as a span member.
  double membership = 1e-8;

  double rank_cutoff(std::size_t count) const {
    if (rank_rel > 0.0) return rank_rel;
    return 1e-9 * std::sqrt(static_cast<double>(std::max<std::size_t>(count, 1)));
  }
};

struct SpanFlags {
  Tri self_adjoint = Tri::kUnknown;
  Tri contains_identity = Tri::kUnknown;
  Tri mult_closed = Tri::kUnknown;
};

struct Membership {
  bool contained = false;
  double residual = 0.0;
};

/// A linear subspace of d x d operators with a Hilbert-Schmidt orthonormal
/// basis. The basis is stored column-wise in vectorized (column-major) form,
/// so <A, B> = tr(A^dagger B) is an ordinary complex dot product.
class OperatorSpan {
 public:
  OperatorSpan() = default;

  /// Wraps columns that are already orthonormal.
  OperatorSpan(Eigen::Index ambient_dim, Eigen::MatrixXcd orthonormal_columns,
               std::vector<std::string> generator_labels = {},
               Tolerances tol = {})
      : d_(ambient_dim),
        q_(std::move(orthonormal_columns)),
        labels_(std::move(generator_labels)),
        tol_(tol) {
    if (q_.rows() != d_ * d_) {
      throw SizeMismatch("span columns do not match ambient dimension");
    }
  }

  Eigen::Index ambient_dim() const noexcept { return d_; }
  Eigen::Index dimension() const noexcept { return q_.cols(); }
  const Eigen::MatrixXcd& columns() const noexcept { return q_; }
  const std::vector<std::string>& generator_labels() const noexcept {
    return labels_;
  }
  const Tolerances& tolerances() const noexcept { return tol_; }
  const SpanFlags& flags() const noexcept { return flags_; }
  SpanFlags& mutable_flags() noexcept { return flags_; }

  DenseOperator basis(Eigen::Index i) const {
    return q_.col(i).reshaped(d_, d_);
  }

  std::vector<DenseOperator> basis_operators() const {
    std::vector<DenseOperator> out;
    out.reserve(static_cast<std::size_t>(dimension()));
    for (Eigen::Index i = 0; i < dimension(); ++i) out.push_back(basis(i));
    return out;
  }

  /// Frobenius norm of the component of `v` orthogonal to the span.
  double residual_vec(const Eigen::VectorXcd& v) const {
    if (dimension() == 0) return v.norm();
    Eigen::VectorXcd r = v - q_ * (q_.adjoint() * v);
    return r.norm();
  }

  Membership contains(const DenseOperator& op, double tol_scale = 1.0) const {
    if (op.rows() != d_ || op.cols() != d_) {
      throw SizeMismatch("operator of size " + std::to_string(op.rows()) +
                         " tested against span on C^" + std::to_string(d_));
    }
    const Eigen::VectorXcd v = op.reshaped();
    const double norm = v.norm();
    const double res = residual_vec(v);
    return {res <= tol_scale * tol_.membership * std::max(norm, 1e-300), res};
  }

  /// Column norms of the components of `vs` orthogonal to the span.
  Eigen::VectorXd residuals(const Eigen::MatrixXcd& vs) const {
    if (dimension() == 0) return vs.colwise().norm().transpose();
    Eigen::MatrixXcd r = vs - q_ * (q_.adjoint() * vs);
    return r.colwise().norm().transpose();
  }

 private:
  Eigen::Index d_ = 0;
  Eigen::MatrixXcd q_;
  std::vector<std::string> labels_;
  Tolerances tol_;
  SpanFlags flags_;
};

namespace detail {

/// Incremental modified Gram-Schmidt with one re-orthogonalization pass.
class SpanBuilder {
 public:
  /// `floor` is an absolute norm below which inputs are treated as zero;
  /// callers feeding products of unit-norm operators set it to the cutoff.
  SpanBuilder(Eigen::Index d, double cutoff, double floor = 0.0)
      : d_(d), cutoff_(cutoff), floor_(floor) {
    q_.resize(d * d, std::min<Eigen::Index>(d * d, 16));
  }

  SpanBuilder(const OperatorSpan& span, double cutoff, double floor = 0.0)
      : SpanBuilder(span.ambient_dim(), cutoff, floor) {
    for (Eigen::Index i = 0; i < span.dimension(); ++i) {
      ensure_capacity();
      q_.col(r_++) = span.columns().col(i);
    }
  }

  /// Returns true if `v` added a new direction.
  bool add(Eigen::VectorXcd v) {
    const double norm = v.norm();
    if (norm <= floor_ || norm == 0.0) return false;
    return insert(v / norm);
  }

  /// Batch variant: projects the whole block first, then finishes each
  /// surviving column with the sequential routine.
  int add_many(const Eigen::MatrixXcd& vs) {
    int added = 0;
    Eigen::MatrixXcd block = vs;
    for (Eigen::Index c = 0; c < block.cols(); ++c) {
      const double n = block.col(c).norm();
      if (n <= floor_) {
        block.col(c).setZero();
      } else if (n > 0) {
        block.col(c) /= n;
      }
    }
    if (r_ > 0) {
      auto q = q_.leftCols(r_);
      block -= q * (q.adjoint() * block);
    }
    for (Eigen::Index c = 0; c < block.cols(); ++c) {
      const double n = block.col(c).norm();
      if (n == 0.0 || n <= 0.5 * cutoff_) continue;
      if (insert(block.col(c) / n)) ++added;
    }
    return added;
  }

  Eigen::Index size() const { return r_; }
  Eigen::MatrixXcd columns() const { return q_.leftCols(r_); }

 private:
  /// Orthogonalizes a unit vector against the basis and keeps the remainder
  /// if it exceeds the cutoff.
  bool insert(Eigen::VectorXcd v) {
    if (r_ >= d_ * d_) return false;
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index j = 0; j < r_; ++j) {
        v -= q_.col(j) * q_.col(j).dot(v);
      }
    }
    const double rest = v.norm();
    if (rest <= cutoff_) return false;
    ensure_capacity();
    q_.col(r_++) = v / rest;
    return true;
  }

  void ensure_capacity() {
    if (r_ < q_.cols()) return;
    const Eigen::Index cap = std::min<Eigen::Index>(d_ * d_, 2 * q_.cols() + 1);
    q_.conservativeResize(Eigen::NoChange, cap);
  }

  Eigen::Index d_;
  double cutoff_;
  double floor_;
  Eigen::MatrixXcd q_;
  Eigen::Index r_ = 0;
};

inline void require_square(std::span<const DenseOperator> ops, Eigen::Index d) {
  for (const auto& op : ops) {
    if (op.rows() != d || op.cols() != d) {
      throw SizeMismatch("operators of differing dimension in span input");
    }
  }
}

}  // namespace detail

/// Hilbert-Schmidt orthonormal basis of span(ops), processing inputs in the
/// given order.
inline OperatorSpan orthonormal_span(std::span<const DenseOperator> ops,
                                     Tolerances tol = {},
                                     std::vector<std::string> labels = {}) {
  if (ops.empty()) throw InvalidParameter("orthonormal_span of empty list");
  const Eigen::Index d = ops.front().rows();
  detail::require_square(ops, d);
  detail::SpanBuilder builder(d, tol.rank_cutoff(ops.size()));
  for (const auto& op : ops) builder.add(op.reshaped());
  return OperatorSpan(d, builder.columns(), std::move(labels), tol);
}

inline bool check_self_adjoint(const OperatorSpan& span) {
  const Eigen::Index d = span.ambient_dim();
  Eigen::MatrixXcd adj(d * d, span.dimension());
  for (Eigen::Index i = 0; i < span.dimension(); ++i) {
    adj.col(i) = span.basis(i).adjoint().reshaped();
  }
  const Eigen::VectorXd res = span.residuals(adj);
  return (res.array() <= span.tolerances().membership).all();
}

inline bool check_identity(const OperatorSpan& span) {
  const Eigen::Index d = span.ambient_dim();
  return span.contains(DenseOperator::Identity(d, d)).contained;
}

/// Every pairwise product B_i B_j of basis elements lies in the span.
inline bool check_mult_closed(const OperatorSpan& span) {
  const Eigen::Index d = span.ambient_dim();
  const Eigen::Index r = span.dimension();
  if (r == 0) return true;
  // All B_i * B_j for fixed i in one GEMM: B_i * [B_0 | B_1 | ...].
  const Eigen::MatrixXcd all = span.columns().reshaped(d, d * r);
  for (Eigen::Index i = 0; i < r; ++i) {
    const DenseOperator bi = span.basis(i);
    const Eigen::MatrixXcd prod = bi * all;
    const Eigen::MatrixXcd vecs = prod.reshaped(d * d, r);
    const Eigen::VectorXd norms = vecs.colwise().norm().transpose();
    const Eigen::VectorXd res = span.residuals(vecs);
    for (Eigen::Index j = 0; j < r; ++j) {
      // Basis elements have unit norm, so products are at most unit size;
      // numerically zero products are judged on the unit scale.
      if (res(j) > span.tolerances().membership * std::max(norms(j), 1.0)) {
        return false;
      }
    }
  }
  return true;
}

/// Fills any unknown flags in place.
inline void evaluate_flags(OperatorSpan& span) {
  auto& f = span.mutable_flags();
  if (f.self_adjoint == Tri::kUnknown) f.self_adjoint = to_tri(check_self_adjoint(span));
  if (f.contains_identity == Tri::kUnknown) {
    f.contains_identity = to_tri(check_identity(span));
  }
  if (f.mult_closed == Tri::kUnknown) f.mult_closed = to_tri(check_mult_closed(span));
}

/// Self-adjoint, unital and closed under multiplication. Uses cached flags
/// where they are known.
inline bool is_algebra(const OperatorSpan& span) {
  const auto& f = span.flags();
  auto known = [](Tri t, auto&& compute) {
    return t == Tri::kUnknown ? compute() : t == Tri::kTrue;
  };
  return known(f.self_adjoint, [&] { return check_self_adjoint(span); }) &&
         known(f.contains_identity, [&] { return check_identity(span); }) &&
         known(f.mult_closed, [&] { return check_mult_closed(span); });
}

/// span{U_i^dagger U_j : all ordered pairs} together with I.
inline OperatorSpan operator_system_of(std::span<const DenseOperator> unitaries,
                                       Tolerances tol = {},
                                       std::vector<std::string> labels = {}) {
  if (unitaries.empty()) throw InvalidParameter("operator system of no unitaries");
  const Eigen::Index d = unitaries.front().rows();
  detail::require_square(unitaries, d);
  std::vector<DenseOperator> products;
  products.reserve(unitaries.size() * unitaries.size() + 1);
  products.push_back(DenseOperator::Identity(d, d));
  for (const auto& ui : unitaries) {
    const DenseOperator ui_adj = ui.adjoint();
    for (const auto& uj : unitaries) products.push_back(ui_adj * uj);
  }
  OperatorSpan span = orthonormal_span(products, tol, std::move(labels));
  span.mutable_flags().self_adjoint = Tri::kTrue;
  span.mutable_flags().contains_identity = Tri::kTrue;
  span.mutable_flags().mult_closed = to_tri(check_mult_closed(span));
  return span;
}

/// Smallest multiplicatively closed span containing `span`. Each round adjoins
/// products of current basis elements with at least one factor new since the
/// previous round; the dimension is bounded by d^2, so this terminates.
inline OperatorSpan multiply_closure(const OperatorSpan& span) {
  if (span.dimension() == 0) throw InvalidParameter("closure of empty span");
  const Eigen::Index d = span.ambient_dim();
  const Tolerances tol = span.tolerances();
  const double cutoff = tol.rank_cutoff(static_cast<std::size_t>(d * d));
  detail::SpanBuilder builder(span, cutoff, cutoff);
  Eigen::Index fresh_from = 0;
  while (true) {
    const Eigen::Index r = builder.size();
    const Eigen::MatrixXcd q = builder.columns();
    const Eigen::MatrixXcd all = q.reshaped(d, d * r);
    for (Eigen::Index i = 0; i < r; ++i) {
      const DenseOperator bi = q.col(i).reshaped(d, d);
      // Left products with every element when B_i is new; otherwise only
      // with the new elements, plus the mirrored right products.
      if (i >= fresh_from) {
        builder.add_many((bi * all).reshaped(d * d, r));
      } else if (fresh_from < r) {
        const Eigen::Index nnew = r - fresh_from;
        const Eigen::MatrixXcd tail = q.rightCols(nnew).reshaped(d, d * nnew);
        builder.add_many((bi * tail).reshaped(d * d, nnew));
        Eigen::MatrixXcd right(d * d, nnew);
        for (Eigen::Index j = fresh_from; j < r; ++j) {
          right.col(j - fresh_from) =
              (q.col(j).reshaped(d, d) * bi).reshaped();
        }
        builder.add_many(right);
      }
    }
    if (builder.size() == r) break;
    fresh_from = r;
  }
  OperatorSpan out(d, builder.columns(), span.generator_labels(), tol);
  out.mutable_flags().mult_closed = Tri::kTrue;
  out.mutable_flags().self_adjoint = to_tri(check_self_adjoint(out));
  out.mutable_flags().contains_identity = to_tri(check_identity(out));
  return out;
}

}  // namespace locc
