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

#ifndef QSS_CODE_HPP
#define QSS_CODE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qss/pauli.hpp"
#include "qss/primefield.hpp"

namespace qss {

/// An [[n, k, delta]]_D stabilizer code: n - k stabilizer generators plus one logical X and
/// one logical Z representative per encoded qudit.
struct StabilizerCode {
    std::string name;
    PrimeModulus d;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<PauliProduct> stabilizers;
    std::vector<PauliProduct> logical_x;
    std::vector<PauliProduct> logical_z;

    /// Logical basis in (x_1..x_k | z_1..z_k) order: logical_x then logical_z.
    std::vector<PauliProduct> logical_basis() const;
    /// Bare representative sum_i x_i LX_i + z_i LZ_i as a vector in Z_D^{2n}.
    FieldVector logical_representative(std::span<const Digit> logical_xz) const;
    /// Canonical basis of the stabilizer row span in Z_D^{2n}.
    std::vector<FieldVector> stabilizer_span() const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    std::vector<std::string> notes;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const StabilizerCode &code);

/// Throws ValidationError listing every violation.
void require_valid(const StabilizerCode &code);

/// Names accepted by catalog().
std::vector<std::string> catalog_names();

/// cnot_2_1, ghz_n (size_param = n, default 3), five_qubit, four_two_two, steane.
StabilizerCode catalog(std::string_view name, std::optional<std::size_t> size_param = std::nullopt);

/// Resolves "catalog:<name>" specs; anything else is treated as a file path.
StabilizerCode resolve_code(std::string_view source, std::optional<std::size_t> size_param = std::nullopt);

std::string save_code(const StabilizerCode &code);
/// Parses and validates. ParseError names the line or field, ValidationError lists violations.
StabilizerCode load_code(std::string_view text);
StabilizerCode load_code_file(const std::string &path);

/// Default cap on the D^{2n} Pauli products enumerated by distance().
inline constexpr std::uint64_t kDefaultDistanceCap = std::uint64_t{1} << 22;

/// Minimum weight of a Pauli product commuting with every stabilizer but not projectively
/// in the stabilizer group. Enumerates all D^{2n} products (OpenMP parallel).
std::size_t distance(const StabilizerCode &code, std::uint64_t cap = kDefaultDistanceCap);
/// Single-threaded reference of distance().
std::size_t distance_serial(const StabilizerCode &code, std::uint64_t cap = kDefaultDistanceCap);

struct RampParameters {
    std::int64_t q;
    std::int64_t l;
};

/// q = n - delta + 1, L = n - 2 delta + 2.
RampParameters ramp_parameters(const StabilizerCode &code, std::optional<std::size_t> known_distance = std::nullopt);

}  // namespace qss

#endif  // QSS_CODE_HPP
