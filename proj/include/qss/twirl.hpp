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

#ifndef QSS_TWIRL_HPP
#define QSS_TWIRL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qss/code.hpp"
#include "qss/infogroup.hpp"
#include "qss/pauli.hpp"

namespace qss {

/// How the twirl key is shared classically: authorized = A, forbidden = F u I.
struct ClassicalPrescription {
    std::size_t players = 0;
    std::vector<Subset> minimal_authorized;
    /// Set when A is the threshold family {|S| >= q}.
    std::optional<std::size_t> threshold;
};

struct TwirlPlan {
    PrimeModulus d;
    std::size_t k = 0;
    InfoGroup intermediate;
    CanonicalForm canonical;
    /// X_1, Z_1, ..., X_r, Z_r, X_{r+1}, ..., X_{r+s} of the canonical frame, mapped to the input frame.
    std::vector<PauliProduct> generators;
    std::size_t key_length = 0;
    ClassicalPrescription scheme;

    bool empty() const { return key_length == 0; }
};

/// Group generated by G(S) over S in the collection (span closure of the union).
InfoGroup intermediate_group(const StabilizerCode &code, const std::vector<Subset> &collection);
InfoGroup intermediate_group(const StabilizerCode &code, const SchemeTriplet &triplet);

TwirlPlan twirl_plan(const StabilizerCode &code, const SchemeTriplet &triplet);
/// Classifies first.
TwirlPlan twirl_plan(const StabilizerCode &code);

/// Product over i of generators[i]^key[i], in generator order.
PauliProduct twirl_operator(const TwirlPlan &plan, std::span<const Digit> key);

struct TwirlSample {
    FieldVector key;
    PauliProduct op;
};

/// Key uniform over Z_D^l from a seeded mt19937_64.
TwirlSample sample_twirl(const TwirlPlan &plan, std::uint64_t seed);

/// Whether averaging g over the twirl group gives zero: some generator pairs nontrivially with g.
/// Throws InputError when g is the identity or lies outside G(I).
bool twirl_average_is_zero(const TwirlPlan &plan, std::span<const Digit> g);

/// The plan with generator `index` removed (key length drops by one); used for necessity probes.
TwirlPlan drop_generator(const TwirlPlan &plan, std::size_t index);

}  // namespace qss

#endif  // QSS_TWIRL_HPP
