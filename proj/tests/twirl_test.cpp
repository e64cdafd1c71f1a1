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

#include <set>

#include "gtest/gtest.h"
#include "qss/errors.hpp"

using namespace qss;

namespace {

std::vector<StabilizerCode> twirled_catalog() {
    return {catalog("cnot_2_1"),  catalog("four_two_two"), catalog("ghz_n", 3),
            catalog("ghz_n", 4),  catalog("ghz_n", 5),     catalog("ghz_n", 6),
            load_code_file(QSS_DATA_DIR "/codes/qutrit_2_1.json")};
}

// Sum over every key of U g U^dagger, built from dense matrices.
double explicit_twirl_norm(const TwirlPlan &plan, std::span<const Digit> g) {
    DenseOperator target = dense_matrix(PauliProduct::from_symplectic(plan.d, g));
    DenseOperator sum = DenseOperator::Zero(target.rows(), target.cols());
    const std::uint64_t keys = int_pow(plan.d.value(), plan.key_length);
    for (std::uint64_t index = 0; index < keys; ++index) {
        FieldVector key(plan.key_length);
        std::uint64_t rem = index;
        for (auto &v : key) {
            v = static_cast<Digit>(rem % plan.d.value());
            rem /= plan.d.value();
        }
        DenseOperator u = dense_matrix(twirl_operator(plan, key));
        sum += u * target * u.adjoint();
    }
    return sum.norm();
}

}  // namespace

TEST(intermediate_group, examples) {
    const FieldVector z{0, 1};
    auto cnot = catalog("cnot_2_1");
    EXPECT_EQ(intermediate_group(cnot, classify(cnot)).generators, (std::vector<FieldVector>{z}));
    auto ghz = catalog("ghz_n", 5);
    EXPECT_EQ(intermediate_group(ghz, classify(ghz)).generators, (std::vector<FieldVector>{z}));
    auto five = catalog("five_qubit");
    EXPECT_TRUE(intermediate_group(five, classify(five)).is_trivial());
}

TEST(intermediate_group, span_of_union) {
    auto code = catalog("four_two_two");
    auto t = classify(code);
    std::vector<FieldVector> all;
    for (auto s : t.intermediate()) {
        auto g = info_group(code, s);
        all.insert(all.end(), g.generators.begin(), g.generators.end());
    }
    EXPECT_TRUE(intermediate_group(code, t).same_span(InfoGroup::spanned_by(code.d, code.k, all)));
    auto one = intermediate_group(code, std::vector<Subset>{parse_subset("1,2", 4)});
    EXPECT_TRUE(one.same_span(info_group(code, parse_subset("1,2", 4))));
}

TEST(twirl_plan, cnot) {
    auto plan = twirl_plan(catalog("cnot_2_1"));
    EXPECT_EQ(plan.key_length, 1u);
    ASSERT_EQ(plan.generators.size(), 1u);
    EXPECT_EQ(plan.generators[0], parse_pauli("X", PrimeModulus(2)));
    EXPECT_EQ(plan.scheme.threshold, 2u);
    EXPECT_EQ(plan.scheme.players, 2u);
}

TEST(twirl_plan, ghz) {
    for (std::size_t n = 3; n <= 6; ++n) {
        auto plan = twirl_plan(catalog("ghz_n", n));
        EXPECT_EQ(plan.key_length, 1u);
        EXPECT_EQ(plan.generators[0], parse_pauli("X", PrimeModulus(2)));
        EXPECT_EQ(plan.scheme.threshold, n);
    }
}

TEST(twirl_plan, four_two_two) {
    auto plan = twirl_plan(catalog("four_two_two"));
    EXPECT_EQ(plan.canonical.r + plan.canonical.s, 2u);
    EXPECT_EQ(plan.key_length, 2 * plan.canonical.r + plan.canonical.s);
    EXPECT_EQ(plan.scheme.threshold, 3u);
}

TEST(twirl_plan, empty_when_no_intermediate_sets) {
    for (const char *name : {"five_qubit", "steane"}) {
        auto plan = twirl_plan(catalog(name));
        EXPECT_TRUE(plan.empty());
        EXPECT_EQ(plan.key_length, 0u);
        EXPECT_TRUE(plan.generators.empty());
    }
}

TEST(twirl_plan, invariants) {
    for (const auto &code : twirled_catalog()) {
        auto plan = twirl_plan(code);
        const auto &cf = plan.canonical;
        EXPECT_EQ(cf.r + cf.s, code.k) << code.name;
        EXPECT_GE(plan.key_length, code.k);
        EXPECT_LE(plan.key_length, 2 * code.k);
        EXPECT_EQ(plan.key_length == code.k, cf.r == 0);
        // Generators are the transform's columns for X_1, Z_1, ..., X_r, Z_r, X_{r+1}, ..., X_{r+s}.
        ASSERT_EQ(plan.generators.size(), plan.key_length);
        for (std::size_t i = 0; i < cf.r; ++i) {
            EXPECT_EQ(plan.generators[2 * i].symplectic(), cf.x_column(i));
            EXPECT_EQ(plan.generators[2 * i + 1].symplectic(), cf.z_column(i));
        }
        for (std::size_t j = 0; j < cf.s; ++j) {
            EXPECT_EQ(plan.generators[2 * cf.r + j].symplectic(), cf.x_column(cf.r + j));
        }
        // Each generator pairs with exactly its intended partner in the canonical basis.
        for (std::size_t t = 0; t < plan.generators.size(); ++t) {
            for (std::size_t u = 0; u < cf.basis.size(); ++u) {
                Digit want = 0;
                if (t < 2 * cf.r) {
                    if (u == (t ^ 1U)) {
                        want = t % 2 == 0 ? 1 : code.d.neg(1);
                    }
                } else if (u == t) {
                    want = 1;
                }
                EXPECT_EQ(symplectic_pairing(code.d, plan.generators[t].symplectic(), cf.basis[u]), want)
                    << code.name << " generator " << t << " basis " << u;
            }
        }
    }
}

TEST(twirl_average, cnot_kills_z) {
    auto plan = twirl_plan(catalog("cnot_2_1"));
    const FieldVector z{0, 1};
    EXPECT_TRUE(twirl_average_is_zero(plan, z));
    EXPECT_LT(explicit_twirl_norm(plan, z), 1e-12);
    EXPECT_THROW(twirl_average_is_zero(plan, FieldVector{0, 0}), InputError);
    EXPECT_THROW(twirl_average_is_zero(plan, FieldVector{1, 0}), InputError);
}

TEST(twirl_average, every_nonidentity_element_vanishes) {
    for (const auto &code : twirled_catalog()) {
        auto plan = twirl_plan(code);
        for (const auto &g : plan.intermediate.elements()) {
            if (is_zero(g)) {
                continue;
            }
            EXPECT_TRUE(twirl_average_is_zero(plan, g)) << code.name;
            EXPECT_LT(explicit_twirl_norm(plan, g), 1e-10) << code.name;
        }
    }
}

TEST(twirl_average, dropping_a_generator_leaves_survivors) {
    for (const auto &code : twirled_catalog()) {
        auto plan = twirl_plan(code);
        for (std::size_t i = 0; i < plan.key_length; ++i) {
            auto weaker = drop_generator(plan, i);
            bool survivor = false;
            for (const auto &g : plan.intermediate.elements()) {
                if (!is_zero(g) && !twirl_average_is_zero(weaker, g)) {
                    survivor = true;
                    EXPECT_GT(explicit_twirl_norm(weaker, g), 0.5);
                }
            }
            EXPECT_TRUE(survivor) << code.name << " without generator " << i;
        }
    }
    EXPECT_THROW(drop_generator(twirl_plan(catalog("cnot_2_1")), 1), InputError);
}

TEST(sample_twirl, examples) {
    auto plan = twirl_plan(catalog("cnot_2_1"));
    EXPECT_TRUE(twirl_operator(plan, FieldVector{0}).is_identity_projective());
    EXPECT_EQ(twirl_operator(plan, FieldVector{1}), parse_pauli("X", PrimeModulus(2)));
    EXPECT_THROW(twirl_operator(plan, FieldVector{2}), InputError);
    EXPECT_THROW(twirl_operator(plan, FieldVector{0, 1}), InputError);
    auto a = sample_twirl(plan, 17);
    auto b = sample_twirl(plan, 17);
    EXPECT_EQ(a.key, b.key);
    EXPECT_EQ(a.op, b.op);
    EXPECT_EQ(a.op, twirl_operator(plan, a.key));
}

TEST(sample_twirl, key_space_counting) {
    // A hand-built qutrit plan with l = 3 on k = 2: X1, Z1, X2.
    PrimeModulus three(3);
    TwirlPlan plan{three, 2, InfoGroup::spanned_by(three, 2, {}), CanonicalForm{0, 0, {}, FieldMatrix(three, 4, 4)},
                   {PauliProduct(three, {1, 0}, {0, 0}), PauliProduct(three, {0, 0}, {1, 0}),
                    PauliProduct(three, {0, 1}, {0, 0})},
                   3, {}};
    std::set<FieldVector> ops;
    std::set<FieldVector> keys;
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        auto s = sample_twirl(plan, seed);
        for (Digit v : s.key) {
            EXPECT_LT(v, 3u);
        }
        keys.insert(s.key);
        ops.insert(s.op.symplectic());
    }
    EXPECT_EQ(keys.size(), 27u);
    EXPECT_EQ(ops.size(), 27u);
}
