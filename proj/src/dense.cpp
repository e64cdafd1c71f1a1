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

#include "qss/dense.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qss/errors.hpp"

namespace qss {

std::uint64_t int_pow(std::uint64_t base, std::size_t exponent) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && result > (std::uint64_t{1} << 62) / base) {
            throw ResourceError("integer power " + std::to_string(base) + "^" + std::to_string(exponent) +
                                " overflows");
        }
        result *= base;
    }
    return result;
}

std::uint64_t checked_dimension(std::uint32_t d, std::size_t m, std::uint64_t cap) {
    std::uint64_t dim = 1;
    for (std::size_t i = 0; i < m; ++i) {
        dim *= d;
        if (dim > cap) {
            throw ResourceError("dimension " + std::to_string(d) + "^" + std::to_string(m) +
                                " exceeds the amplitude cap " + std::to_string(cap));
        }
    }
    return dim;
}

Complex root_of_unity(std::uint32_t d, std::int64_t power) {
    std::int64_t p = power % static_cast<std::int64_t>(d);
    double angle = 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(d);
    return std::polar(1.0, angle);
}

}  // namespace qss
