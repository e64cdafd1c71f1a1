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

#ifndef QSS_SUBSET_HPP
#define QSS_SUBSET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qss {

/// Largest player count a Subset can address.
inline constexpr std::size_t kMaxPlayers = 30;

/// A set of carrier (player) indices. Stored as a bitmask over 0-based sites; printed and
/// parsed with 1-based indices, e.g. "{1,3,4}".
class Subset {
   public:
    constexpr Subset() = default;
    constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

    /// From 1-based indices; throws InputError for indices outside 1..n or duplicates.
    static Subset from_one_based(const std::vector<std::size_t> &indices, std::size_t n);
    static Subset full(std::size_t n);

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(std::size_t site) const { return (bits_ >> site) & 1U; }
    constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
    Subset complement(std::size_t n) const { return Subset(full(n).bits_ & ~bits_); }
    Subset with(std::size_t site) const { return Subset(bits_ | (1U << site)); }
    Subset without(std::size_t site) const { return Subset(bits_ & ~(1U << site)); }

    /// 0-based sites in increasing order.
    std::vector<std::size_t> sites() const;
    std::vector<std::size_t> one_based() const;
    std::string to_string() const;

    constexpr bool operator==(const Subset &) const = default;

   private:
    std::uint32_t bits_ = 0;
};

/// Parses "1,3,4" (optionally wrapped in braces; empty or "{}" is the empty set).
Subset parse_subset(std::string_view text, std::size_t n);

/// All 2^n subsets ordered by size, then lexicographically by their sorted index lists.
std::vector<Subset> enumerate_subsets(std::size_t n);

/// Subsets of exactly the given size, lexicographic.
std::vector<Subset> subsets_of_size(std::size_t n, std::size_t size);

/// Strict weak order matching enumerate_subsets().
bool subset_order_less(Subset a, Subset b);

}  // namespace qss

#endif  // QSS_SUBSET_HPP
