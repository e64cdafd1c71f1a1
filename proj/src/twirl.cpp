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

#include "qss/twirl.hpp"

#include <random>

#include "qss/errors.hpp"

namespace qss {

InfoGroup intermediate_group(const StabilizerCode &code, const std::vector<Subset> &collection) {
    std::vector<FieldVector> all;
    for (auto s : collection) {
        auto g = info_group(code, s);
        all.insert(all.end(), g.generators.begin(), g.generators.end());
    }
    return InfoGroup::spanned_by(code.d, code.k, all);
}

InfoGroup intermediate_group(const StabilizerCode &code, const SchemeTriplet &triplet) {
    return intermediate_group(code, triplet.intermediate());
}

TwirlPlan twirl_plan(const StabilizerCode &code, const SchemeTriplet &triplet) {
    auto group = intermediate_group(code, triplet);
    auto cf = canonical_form(group);
    TwirlPlan plan{code.d, code.k, group, cf, {}, 0, {code.n, triplet.minimal_authorized, triplet.threshold()}};
    for (std::size_t i = 0; i < cf.r; ++i) {
        plan.generators.push_back(PauliProduct::from_symplectic(code.d, cf.x_column(i)));
        plan.generators.push_back(PauliProduct::from_symplectic(code.d, cf.z_column(i)));
    }
    for (std::size_t j = 0; j < cf.s; ++j) {
        plan.generators.push_back(PauliProduct::from_symplectic(code.d, cf.x_column(cf.r + j)));
    }
    plan.key_length = plan.generators.size();
    return plan;
}

TwirlPlan twirl_plan(const StabilizerCode &code) { return twirl_plan(code, classify(code)); }

PauliProduct twirl_operator(const TwirlPlan &plan, std::span<const Digit> key) {
    if (key.size() != plan.key_length) {
        throw InputError("twirl key has " + std::to_string(key.size()) + " digits, plan needs " +
                         std::to_string(plan.key_length));
    }
    PauliProduct op = PauliProduct::identity(plan.d, plan.k);
    for (std::size_t i = 0; i < key.size(); ++i) {
        if (key[i] >= plan.d.value()) {
            throw InputError("twirl key digit out of range");
        }
        op = multiply(op, power(plan.generators[i], key[i]));
    }
    return op;
}

TwirlSample sample_twirl(const TwirlPlan &plan, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Digit> digit(0, plan.d.value() - 1);
    FieldVector key(plan.key_length);
    for (auto &v : key) {
        v = digit(rng);
    }
    auto op = twirl_operator(plan, key);
    return {std::move(key), std::move(op)};
}

bool twirl_average_is_zero(const TwirlPlan &plan, std::span<const Digit> g) {
    if (g.size() != 2 * plan.k) {
        throw InputError("element has the wrong length for k = " + std::to_string(plan.k));
    }
    if (is_zero(g)) {
        throw InputError("the identity is never twirled away");
    }
    if (!plan.intermediate.contains(g)) {
        throw InputError("element is not in the intermediate information group");
    }
    for (const auto &t : plan.generators) {
        if (symplectic_pairing(plan.d, t.symplectic(), g) != 0) {
            return true;
        }
    }
    return false;
}

TwirlPlan drop_generator(const TwirlPlan &plan, std::size_t index) {
    if (index >= plan.generators.size()) {
        throw InputError("no twirl generator at index " + std::to_string(index));
    }
    TwirlPlan out = plan;
    out.generators.erase(out.generators.begin() + static_cast<std::ptrdiff_t>(index));
    out.key_length = out.generators.size();
    return out;
}

}  // namespace qss
