// Copyright 2026 The qss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSS_DENSE_HPP
#define QSS_DENSE_HPP

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

namespace qss {

using Complex = std::complex<double>;
using DenseVector = Eigen::VectorXcd;
using DenseOperator = Eigen::MatrixXcd;

/// Default cap on D^m amplitudes for dense computations.
inline constexpr std::uint64_t kDefaultAmplitudeCap = 4096;

/// Tolerances: nonvanishing-trace detection, state equality, algebraic identities.
inline constexpr double kDetectTol = 1e-9;
inline constexpr double kStateTol = 1e-10;
inline constexpr double kIdentityTol = 1e-12;

/// D^m, throwing ResourceError when it exceeds cap.
std::uint64_t checked_dimension(std::uint32_t d, std::size_t m, std::uint64_t cap);

/// Exact integer power without cap; throws ResourceError on overflow of 2^62.
std::uint64_t int_pow(std::uint64_t base, std::size_t exponent);

Complex root_of_unity(std::uint32_t d, std::int64_t power);

}  // namespace qss

#endif  // QSS_DENSE_HPP
