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

#include "qss/classical.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace qss {

namespace {

void require_digits(std::span<const Digit> key, const PrimeModulus &p) {
    for (auto v : key) {
        if (v >= p.value()) {
            throw InputError("key digit " + std::to_string(v) + " is not in Z_" + std::to_string(p.value()));
        }
    }
}

std::vector<PlayerShare> sorted_unique(const std::vector<PlayerShare> &shares) {
    std::map<std::size_t, const PlayerShare *> by_player;
    for (const auto &s : shares) {
        auto [it, inserted] = by_player.emplace(s.player, &s);
        if (!inserted && it->second->digits != s.digits) {
            throw InputError("conflicting shares for player " + std::to_string(s.player));
        }
    }
    std::vector<PlayerShare> out;
    for (const auto &[player, share] : by_player) {
        out.push_back(*share);
    }
    return out;
}

}  // namespace

const PlayerShare &ClassicalShareSet::share_of(std::size_t player) const {
    for (const auto &s : shares) {
        if (s.player == player) {
            return s;
        }
    }
    throw InputError("no share for player " + std::to_string(player));
}

Digit shamir_evaluate(Digit digit, std::span<const Digit> coefficients, Digit x, const PrimeModulus &p) {
    Digit acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        acc = p.add(p.mul(acc, x), *it);
    }
    return p.add(p.mul(acc, x), digit);
}

ClassicalShareSet shamir_share(std::span<const Digit> key, std::size_t q, std::size_t n, PrimeModulus p,
                               std::uint64_t seed) {
    if (p.value() <= n) {
        throw InputError("Shamir needs P > n: P = " + std::to_string(p.value()) + ", n = " + std::to_string(n));
    }
    if (q < 1 || q > n) {
        throw InputError("threshold q = " + std::to_string(q) + " outside 1.." + std::to_string(n));
    }
    require_digits(key, p);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Digit> uniform(0, p.value() - 1);
    ClassicalShareSet out;
    out.kind = SharingKind::threshold;
    out.p = p;
    out.players = n;
    out.key_length = key.size();
    out.q = q;
    for (std::size_t i = 1; i <= n; ++i) {
        out.shares.push_back({i, {}});
    }
    FieldVector coefficients(q - 1);
    for (auto digit : key) {
        for (auto &c : coefficients) {
            c = uniform(rng);
        }
        for (auto &share : out.shares) {
            share.digits.push_back(shamir_evaluate(digit, coefficients, static_cast<Digit>(share.player), p));
        }
    }
    return out;
}

FieldVector shamir_reconstruct(const std::vector<PlayerShare> &shares, std::size_t q, PrimeModulus p) {
    auto points = sorted_unique(shares);
    if (q == 0 || points.size() < q) {
        throw InsufficientShares("need " + std::to_string(q) + " shares, got " + std::to_string(points.size()));
    }
    const std::size_t length = points.front().digits.size();
    for (const auto &s : points) {
        if (s.digits.size() != length) {
            throw InputError("shares have different lengths");
        }
        if (s.player == 0 || s.player % p.value() == 0) {
            throw InputError("player " + std::to_string(s.player) + " is not a valid evaluation point");
        }
    }
    // Lagrange basis at 0 over the first q points.
    FieldVector weights(q);
    for (std::size_t i = 0; i < q; ++i) {
        Digit num = 1;
        Digit den = 1;
        Digit xi = p.reduce(static_cast<std::int64_t>(points[i].player));
        for (std::size_t j = 0; j < q; ++j) {
            if (j == i) {
                continue;
            }
            Digit xj = p.reduce(static_cast<std::int64_t>(points[j].player));
            num = p.mul(num, p.neg(xj));
            den = p.mul(den, p.sub(xi, xj));
        }
        weights[i] = p.mul(num, p.inv(den));
    }
    FieldVector key(length, 0);
    for (std::size_t t = 0; t < length; ++t) {
        for (std::size_t i = 0; i < q; ++i) {
            key[t] = p.add(key[t], p.mul(weights[i], points[i].digits[t]));
        }
    }
    // Remaining shares must lie on the same polynomial.
    for (std::size_t extra = q; extra < points.size(); ++extra) {
        Digit x = p.reduce(static_cast<std::int64_t>(points[extra].player));
        for (std::size_t t = 0; t < length; ++t) {
            Digit value = 0;
            for (std::size_t i = 0; i < q; ++i) {
                Digit basis = 1;
                Digit xi = p.reduce(static_cast<std::int64_t>(points[i].player));
                for (std::size_t j = 0; j < q; ++j) {
                    if (j == i) {
                        continue;
                    }
                    Digit xj = p.reduce(static_cast<std::int64_t>(points[j].player));
                    basis = p.mul(basis, p.mul(p.sub(x, xj), p.inv(p.sub(xi, xj))));
                }
                value = p.add(value, p.mul(basis, points[i].digits[t]));
            }
            if (value != points[extra].digits[t]) {
                throw InputError("share of player " + std::to_string(points[extra].player) +
                                 " is inconsistent with the others");
            }
        }
    }
    return key;
}

ClassicalShareSet monotone_share(std::span<const Digit> key, const std::vector<Subset> &minimal_sets, PrimeModulus p,
                                 std::uint64_t seed, std::optional<std::size_t> players) {
    if (minimal_sets.empty()) {
        throw InputError("monotone sharing needs at least one minimal authorized set");
    }
    std::size_t highest = 0;
    for (std::size_t i = 0; i < minimal_sets.size(); ++i) {
        if (minimal_sets[i].empty()) {
            throw InputError("minimal authorized sets must be nonempty");
        }
        for (std::size_t j = 0; j < minimal_sets.size(); ++j) {
            if (i != j && minimal_sets[i].is_subset_of(minimal_sets[j])) {
                throw InputError("minimal sets are not an antichain: " + minimal_sets[i].to_string() + " within " +
                                 minimal_sets[j].to_string());
            }
        }
        highest = std::max(highest, minimal_sets[i].one_based().back());
    }
    std::size_t n = players.value_or(highest);
    if (n < highest) {
        throw InputError("minimal sets mention player " + std::to_string(highest) + " but only " +
                         std::to_string(n) + " players exist");
    }
    require_digits(key, p);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Digit> uniform(0, p.value() - 1);
    ClassicalShareSet out;
    out.kind = SharingKind::monotone;
    out.p = p;
    out.players = n;
    out.key_length = key.size();
    out.minimal_sets = minimal_sets;
    for (std::size_t i = 1; i <= n; ++i) {
        out.shares.push_back({i, {}});
    }
    for (const auto &set : minimal_sets) {
        auto members = set.one_based();
        for (auto digit : key) {
            Digit remaining = digit;
            for (std::size_t m = 0; m < members.size(); ++m) {
                Digit part = m + 1 == members.size() ? remaining : uniform(rng);
                remaining = p.sub(remaining, m + 1 == members.size() ? 0 : part);
                out.shares[members[m] - 1].digits.push_back(part);
            }
        }
    }
    return out;
}

FieldVector monotone_reconstruct(const ClassicalShareSet &layout, const std::vector<PlayerShare> &shares) {
    auto present = sorted_unique(shares);
    std::vector<std::size_t> ids;
    for (const auto &s : present) {
        ids.push_back(s.player);
    }
    Subset have = Subset::from_one_based(ids, layout.players);
    const auto &p = layout.p;
    for (std::size_t set_index = 0; set_index < layout.minimal_sets.size(); ++set_index) {
        const auto &set = layout.minimal_sets[set_index];
        if (!set.is_subset_of(have)) {
            continue;
        }
        FieldVector key(layout.key_length, 0);
        for (auto player : set.one_based()) {
            // Offset of this set's block among the sets containing the player.
            std::size_t block = 0;
            for (std::size_t t = 0; t < set_index; ++t) {
                block += layout.minimal_sets[t].contains(player - 1) ? 1 : 0;
            }
            const auto &digits = std::find_if(present.begin(), present.end(), [&](const PlayerShare &s) {
                                     return s.player == player;
                                 })->digits;
            if (digits.size() < (block + 1) * layout.key_length) {
                throw InputError("share of player " + std::to_string(player) + " is too short");
            }
            for (std::size_t t = 0; t < layout.key_length; ++t) {
                key[t] = p.add(key[t], digits[block * layout.key_length + t]);
            }
        }
        return key;
    }
    throw InsufficientShares("players " + have.to_string() + " contain no minimal authorized set");
}

bool can_reconstruct(const ClassicalShareSet &bundle, Subset players) {
    if (bundle.kind == SharingKind::threshold) {
        return players.size() >= bundle.q;
    }
    return std::any_of(bundle.minimal_sets.begin(), bundle.minimal_sets.end(),
                       [&](Subset m) { return m.is_subset_of(players); });
}

FieldVector reconstruct_key(const ClassicalShareSet &bundle, Subset players) {
    std::vector<PlayerShare> selected;
    for (auto player : players.one_based()) {
        selected.push_back(bundle.share_of(player));
    }
    FieldVector key = bundle.kind == SharingKind::threshold ? shamir_reconstruct(selected, bundle.q, bundle.p)
                                                            : monotone_reconstruct(bundle, selected);
    if (bundle.source_modulus) {
        for (auto v : key) {
            if (v >= *bundle.source_modulus) {
                throw InputError("reconstructed digit " + std::to_string(v) + " is outside Z_" +
                                 std::to_string(*bundle.source_modulus));
            }
        }
    }
    return key;
}

std::uint64_t next_prime_above(std::uint64_t value) {
    std::uint64_t candidate = value + 1;
    while (!is_prime(candidate)) {
        ++candidate;
    }
    return candidate;
}

ClassicalShareSet key_transport(const TwirlPlan &plan, const SchemeTriplet &triplet, std::span<const Digit> key,
                                std::uint64_t seed) {
    if (plan.empty()) {
        throw InputError("no twirl key to transport: the scheme has no intermediate subsets");
    }
    if (key.size() != plan.key_length) {
        throw InputError("key length does not match the plan");
    }
    require_digits(key, plan.d);
    if (auto q = triplet.threshold()) {
        PrimeModulus p(next_prime_above(std::max<std::uint64_t>(plan.d.value(), triplet.n)));
        auto out = shamir_share(key, *q, triplet.n, p, seed);
        out.source_modulus = plan.d.value();
        return out;
    }
    return monotone_share(key, triplet.minimal_authorized, plan.d, seed, triplet.n);
}

ClassicalShareSet key_transport(const TwirlPlan &plan, const SchemeTriplet &triplet, std::uint64_t seed) {
    auto sample = sample_twirl(plan, seed);
    return key_transport(plan, triplet, sample.key, seed);
}

}  // namespace qss
