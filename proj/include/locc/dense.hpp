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

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace locc {

using Complex = std::complex<double>;
using DenseOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Largest matrix dimension any dense conversion will produce by default.
inline constexpr std::int64_t kDefaultDenseCap = 1024;

/// omega^k with omega = exp(2 pi i / d). Quarter turns are returned exactly
/// so qubit and d = 4 matrices carry no rounding at all.
inline Complex root_of_unity(std::int64_t d, std::int64_t k) {
  k %= d;
  if (k < 0) k += d;
  if ((4 * k) % d == 0) {
    switch ((4 * k) / d) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) /
                       static_cast<double>(d);
  return std::polar(1.0, angle);
}

/// i^p for p mod 4.
inline Complex i_power(int p) {
  switch (((p % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace locc
