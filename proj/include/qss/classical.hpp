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

#ifndef QSS_CLASSICAL_HPP
#define QSS_CLASSICAL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qss/errors.hpp"
#include "qss/infogroup.hpp"
#include "qss/primefield.hpp"
#include "qss/subset.hpp"
#include "qss/twirl.hpp"

namespace qss {

/// Too few shares to reconstruct; no partial output is produced.
struct InsufficientShares : InputError {
    using InputError::InputError;
};

enum class SharingKind { threshold, monotone };

struct PlayerShare {
    std::size_t player = 0;  // 1-based
    FieldVector digits;
    bool operator==(const PlayerShare &) const = default;
};

/// Shares of a key of `key_length` digits over Z_P.
///
/// Threshold: each player's digits are polynomial evaluations, one per key digit.
/// Monotone: for every minimal set containing the player (in `minimal_sets` order) the
/// player holds one additive part per key digit.
struct ClassicalShareSet {
    SharingKind kind = SharingKind::threshold;
    PrimeModulus p{2};
    std::size_t players = 0;
    std::size_t key_length = 0;
    std::size_t q = 0;
    std::vector<Subset> minimal_sets;
    /// When set, the key lives in Z_D for this D and was lifted into Z_P.
    std::optional<Digit> source_modulus;
    std::vector<PlayerShare> shares;

    const PlayerShare &share_of(std::size_t player) const;
};

/// Evaluates digit + c_1 x + ... + c_{q-1} x^{q-1} at x over Z_P.
Digit shamir_evaluate(Digit digit, std::span<const Digit> coefficients, Digit x, const PrimeModulus &p);

/// Per key digit, a uniform degree q-1 polynomial with that constant term; player i gets its value at i.
ClassicalShareSet shamir_share(std::span<const Digit> key, std::size_t q, std::size_t n, PrimeModulus p,
                               std::uint64_t seed);

/// Lagrange interpolation at 0 from the first q shares (by player); any further shares must agree.
FieldVector shamir_reconstruct(const std::vector<PlayerShare> &shares, std::size_t q, PrimeModulus p);

/// Replicated additive sharing over the minimal authorized sets (an antichain of nonempty sets).
/// `players` defaults to the largest index mentioned.
ClassicalShareSet monotone_share(std::span<const Digit> key, const std::vector<Subset> &minimal_sets, PrimeModulus p,
                                 std::uint64_t seed, std::optional<std::size_t> players = std::nullopt);

/// Sums the parts of the first minimal set contained in the given players.
FieldVector monotone_reconstruct(const ClassicalShareSet &layout, const std::vector<PlayerShare> &shares);

/// Reconstructs from the shares of `players` in the bundle, mapping back to Z_D if the key was lifted.
FieldVector reconstruct_key(const ClassicalShareSet &bundle, Subset players);

bool can_reconstruct(const ClassicalShareSet &bundle, Subset players);

/// Smallest prime strictly greater than value.
std::uint64_t next_prime_above(std::uint64_t value);

/// Shamir over the smallest prime P > max(D, n) when A is a threshold family, otherwise
/// replicated additive sharing over Z_D on the minimal authorized sets.
ClassicalShareSet key_transport(const TwirlPlan &plan, const SchemeTriplet &triplet, std::span<const Digit> key,
                                std::uint64_t seed);
/// Shares the key drawn by sample_twirl(plan, seed).
ClassicalShareSet key_transport(const TwirlPlan &plan, const SchemeTriplet &triplet, std::uint64_t seed);

}  // namespace qss

#endif  // QSS_CLASSICAL_HPP
