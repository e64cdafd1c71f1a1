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

#include "qss/infogroup.hpp"

#include <random>

#include "gtest/gtest.h"
#include "qss/errors.hpp"

using namespace qss;

namespace {

std::vector<StabilizerCode> classified_catalog() {
    return {catalog("cnot_2_1"),   catalog("five_qubit"), catalog("four_two_two"),
            catalog("steane"),     catalog("ghz_n", 3),   catalog("ghz_n", 4),
            catalog("ghz_n", 5),   catalog("ghz_n", 6),   load_code_file(QSS_DATA_DIR "/codes/qutrit_3_1.json"),
            load_code_file(QSS_DATA_DIR "/codes/qutrit_2_1.json")};
}

std::vector<Subset> of_size(const std::vector<Subset> &all, std::size_t lo, std::size_t hi) {
    std::vector<Subset> out;
    for (auto s : all) {
        if (s.size() >= lo && s.size() <= hi) {
            out.push_back(s);
        }
    }
    return out;
}

const FieldVector kZ{0, 1};

// Multiplies every logical representative by a random stabilizer element.
StabilizerCode reshuffle_logicals(StabilizerCode code, std::mt19937_64 &rng) {
    std::uniform_int_distribution<Digit> digit(0, code.d.value() - 1);
    auto dress = [&](PauliProduct p) {
        for (const auto &s : code.stabilizers) {
            p = multiply(p, power(s, digit(rng)));
        }
        return p;
    };
    for (auto &p : code.logical_x) {
        p = dress(p);
    }
    for (auto &p : code.logical_z) {
        p = dress(p);
    }
    return code;
}

void expect_same_classes(const SchemeTriplet &a, const SchemeTriplet &b) {
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        EXPECT_EQ(a.records[i].access, b.records[i].access) << a.records[i].subset.to_string();
    }
}

}  // namespace

TEST(info_group, cnot_singletons) {
    auto code = catalog("cnot_2_1");
    for (auto s : {parse_subset("1", 2), parse_subset("2", 2)}) {
        auto g = info_group(code, s);
        EXPECT_EQ(g.generators, (std::vector<FieldVector>{kZ}));
        EXPECT_EQ(g.subset, s);
    }
}

TEST(info_group, ghz_pair) {
    auto g = info_group(catalog("ghz_n", 4), parse_subset("1,2", 4));
    EXPECT_EQ(g.generators, (std::vector<FieldVector>{kZ}));
}

TEST(info_group, five_qubit_pairs_trivial) {
    auto code = catalog("five_qubit");
    for (auto s : subsets_of_size(5, 2)) {
        EXPECT_TRUE(info_group(code, s).is_trivial()) << s.to_string();
    }
}

TEST(info_group, four_two_two_pair_is_partial) {
    auto g = info_group(catalog("four_two_two"), parse_subset("1,2", 4));
    EXPECT_FALSE(g.is_trivial());
    EXPECT_LT(g.rank(), 4u);
}

TEST(info_group, empty_and_full_sets) {
    for (const auto &code : classified_catalog()) {
        EXPECT_TRUE(info_group(code, Subset()).is_trivial()) << code.name;
        EXPECT_TRUE(is_full(info_group(code, Subset::full(code.n)))) << code.name;
    }
}

TEST(info_group, bad_subset) {
    EXPECT_THROW(info_group(catalog("cnot_2_1"), Subset(0b100)), InputError);
}

TEST(is_full, examples) {
    auto five = catalog("five_qubit");
    for (auto s : subsets_of_size(5, 3)) {
        EXPECT_TRUE(is_full(info_group(five, s)));
    }
    EXPECT_FALSE(is_full(info_group(catalog("cnot_2_1"), parse_subset("1", 2))));
}

TEST(canonical_form, examples) {
    PrimeModulus two(2);
    auto z = canonical_form(InfoGroup::spanned_by(two, 1, {kZ}));
    EXPECT_EQ(z.r, 0u);
    EXPECT_EQ(z.s, 1u);
    auto full = canonical_form(InfoGroup::spanned_by(two, 1, {{1, 0}, {0, 1}}));
    EXPECT_EQ(full.r, 1u);
    EXPECT_EQ(full.s, 0u);
    // X1 Z2 and Z1 on two qubits: (1,0 | 0,1) and (0,0 | 1,0).
    auto mixed = canonical_form(InfoGroup::spanned_by(two, 2, {{1, 0, 0, 1}, {0, 0, 1, 0}}));
    EXPECT_EQ(mixed.r, 1u);
    EXPECT_EQ(mixed.s, 0u);
    EXPECT_EQ(rank(pairing_matrix(two, {{1, 0, 0, 1}, {0, 0, 1, 0}})), 2u);
}

TEST(canonical_form, properties_on_random_groups) {
    std::mt19937_64 rng(21);
    for (Digit prime : {2u, 3u, 5u}) {
        PrimeModulus d(prime);
        std::uniform_int_distribution<Digit> digit(0, prime - 1);
        for (int trial = 0; trial < 80; ++trial) {
            std::size_t k = 1 + trial % 3;
            std::size_t count = trial % (2 * k + 1);
            std::vector<FieldVector> vectors(count, FieldVector(2 * k));
            for (auto &v : vectors) {
                for (auto &c : v) {
                    c = digit(rng);
                }
            }
            auto group = InfoGroup::spanned_by(d, k, vectors);
            auto cf = canonical_form(group);
            ASSERT_EQ(cf.basis.size(), 2 * cf.r + cf.s);
            EXPECT_EQ(cf.basis.size(), group.rank());
            EXPECT_LE(2 * cf.r + cf.s, 2 * k);
            EXPECT_EQ(rank(pairing_matrix(d, group.generators)), 2 * cf.r);
            EXPECT_TRUE(InfoGroup::spanned_by(d, k, cf.basis).same_span(group));
            auto gram = pairing_matrix(d, cf.basis);
            for (std::size_t i = 0; i < cf.basis.size(); ++i) {
                for (std::size_t j = 0; j < cf.basis.size(); ++j) {
                    Digit want = 0;
                    if (i < 2 * cf.r && i % 2 == 0 && j == i + 1) {
                        want = 1;
                    } else if (j < 2 * cf.r && j % 2 == 0 && i == j + 1) {
                        want = d.neg(1);
                    }
                    EXPECT_EQ(gram.at(i, j), want);
                }
            }
            EXPECT_TRUE(is_symplectic(cf.transform));
            for (std::size_t i = 0; i < cf.r; ++i) {
                EXPECT_EQ(cf.x_column(i), cf.basis[2 * i]);
                EXPECT_EQ(cf.z_column(i), cf.basis[2 * i + 1]);
            }
            for (std::size_t j = 0; j < cf.s; ++j) {
                EXPECT_EQ(cf.z_column(cf.r + j), cf.basis[2 * cf.r + j]);
            }
        }
    }
}

TEST(is_symplectic, rejects_non_symplectic) {
    PrimeModulus two(2);
    EXPECT_TRUE(is_symplectic(FieldMatrix::identity(two, 4)));
    FieldMatrix m = FieldMatrix::identity(two, 4);
    m.at(0, 1) = 1;
    EXPECT_FALSE(is_symplectic(m));
}

TEST(classify, five_qubit) {
    auto t = classify(catalog("five_qubit"));
    auto all = enumerate_subsets(5);
    EXPECT_EQ(t.authorized(), of_size(all, 3, 5));
    EXPECT_EQ(t.authorized().size(), 16u);
    EXPECT_EQ(t.forbidden(), of_size(all, 0, 2));
    EXPECT_TRUE(t.intermediate().empty());
    EXPECT_TRUE(t.is_perfect());
    EXPECT_EQ(t.threshold(), 3u);
    EXPECT_EQ(t.minimal_authorized, subsets_of_size(5, 3));
    EXPECT_EQ(t.maximal_forbidden, subsets_of_size(5, 2));
}

TEST(classify, four_two_two) {
    auto t = classify(catalog("four_two_two"));
    auto all = enumerate_subsets(4);
    EXPECT_EQ(t.authorized(), of_size(all, 3, 4));
    EXPECT_EQ(t.forbidden(), of_size(all, 0, 1));
    EXPECT_EQ(t.intermediate(), subsets_of_size(4, 2));
    EXPECT_FALSE(t.is_perfect());
    EXPECT_EQ(t.threshold(), 3u);
}

TEST(classify, cnot_2_1) {
    auto t = classify(catalog("cnot_2_1"));
    EXPECT_EQ(t.authorized(), (std::vector<Subset>{parse_subset("1,2", 2)}));
    EXPECT_EQ(t.forbidden(), (std::vector<Subset>{Subset()}));
    EXPECT_EQ(t.intermediate(), (std::vector<Subset>{parse_subset("1", 2), parse_subset("2", 2)}));
    EXPECT_EQ(t.record_of(parse_subset("1", 2)).s, 1u);
    EXPECT_EQ(t.record_of(parse_subset("1", 2)).r, 0u);
}

TEST(classify, ghz_family) {
    for (std::size_t n = 3; n <= 6; ++n) {
        auto t = classify(catalog("ghz_n", n));
        EXPECT_EQ(t.authorized(), (std::vector<Subset>{Subset::full(n)}));
        EXPECT_EQ(t.forbidden(), (std::vector<Subset>{Subset()}));
        EXPECT_EQ(t.intermediate().size(), (std::size_t{1} << n) - 2);
        EXPECT_EQ(t.threshold(), n);
    }
}

TEST(classify, steane_sizes) {
    auto t = classify(catalog("steane"));
    for (const auto &rec : t.records) {
        if (rec.subset.size() >= 5) {
            EXPECT_EQ(rec.access, AccessClass::authorized);
        }
        if (rec.subset.size() <= 2) {
            EXPECT_EQ(rec.access, AccessClass::forbidden);
        }
    }
    EXPECT_TRUE(t.intermediate().empty());
}

TEST(classify, parallel_matches_serial) {
    for (const auto &code : classified_catalog()) {
        auto a = classify(code);
        auto b = classify_serial(code);
        ASSERT_EQ(a.records.size(), b.records.size());
        for (std::size_t i = 0; i < a.records.size(); ++i) {
            EXPECT_EQ(a.records[i].subset, b.records[i].subset);
            EXPECT_EQ(a.records[i].access, b.records[i].access);
            EXPECT_EQ(a.records[i].r, b.records[i].r);
            EXPECT_EQ(a.records[i].s, b.records[i].s);
        }
        EXPECT_EQ(a.minimal_authorized, b.minimal_authorized);
        EXPECT_EQ(a.maximal_forbidden, b.maximal_forbidden);
    }
}

TEST(classify, structure_properties) {
    for (const auto &code : classified_catalog()) {
        auto t = classify(code);
        auto check = check_structure(t);
        EXPECT_TRUE(check.ok()) << code.name;
        for (const auto &rec : t.records) {
            Subset comp = rec.subset.complement(code.n);
            EXPECT_EQ(rec.access == AccessClass::authorized, t.class_of(comp) == AccessClass::forbidden);
            EXPECT_EQ(rec.access == AccessClass::intermediate, t.class_of(comp) == AccessClass::intermediate);
            for (std::size_t site = 0; site < code.n; ++site) {
                if (rec.access == AccessClass::authorized) {
                    EXPECT_EQ(t.class_of(rec.subset.with(site)), AccessClass::authorized);
                }
                if (rec.access == AccessClass::forbidden) {
                    EXPECT_EQ(t.class_of(rec.subset.without(site)), AccessClass::forbidden);
                }
            }
        }
    }
}

TEST(classify, distance_containments) {
    for (const auto &code : classified_catalog()) {
        std::size_t delta = distance(code);
        auto t = classify(code);
        for (const auto &rec : t.records) {
            if (rec.subset.size() + delta >= code.n + 1) {
                EXPECT_EQ(rec.access, AccessClass::authorized) << code.name << rec.subset.to_string();
            }
            if (rec.subset.size() + 1 <= delta) {
                EXPECT_EQ(rec.access, AccessClass::forbidden) << code.name << rec.subset.to_string();
            }
        }
    }
}

TEST(classify, representative_independence) {
    std::mt19937_64 rng(3);
    for (const auto &code : classified_catalog()) {
        auto base = classify(code);
        for (int trial = 0; trial < 3; ++trial) {
            auto dressed = reshuffle_logicals(code, rng);
            ASSERT_TRUE(validate(dressed).ok());
            expect_same_classes(base, classify(dressed));
        }
    }
}

TEST(classify, four_two_two_swapped_logicals) {
    auto code = catalog("four_two_two");
    auto swapped = code;
    std::swap(swapped.logical_x[0], swapped.logical_x[1]);
    std::swap(swapped.logical_z[0], swapped.logical_z[1]);
    ASSERT_TRUE(validate(swapped).ok());
    expect_same_classes(classify(code), classify(swapped));
}

TEST(classify, player_cap) {
    EXPECT_THROW(classify(catalog("steane"), {6}), ResourceError);
}

TEST(build_triplet, rejects_duality_violation) {
    std::vector<SubsetRecord> records;
    for (auto s : enumerate_subsets(2)) {
        records.push_back({s, s.size() >= 1 ? AccessClass::authorized : AccessClass::forbidden, 0, 0});
    }
    EXPECT_THROW(build_triplet(2, 1, records), std::logic_error);
}

TEST(subset, parsing_and_order) {
    EXPECT_EQ(parse_subset("1,3,4", 5), Subset(0b1101));
    EXPECT_EQ(parse_subset("{2}", 3), Subset(0b10));
    EXPECT_EQ(parse_subset("{}", 3), Subset());
    EXPECT_THROW(parse_subset("0", 3), InputError);
    EXPECT_THROW(parse_subset("4", 3), InputError);
    EXPECT_THROW(parse_subset("1,1", 3), InputError);
    EXPECT_THROW(parse_subset("a", 3), InputError);
    auto all = enumerate_subsets(3);
    ASSERT_EQ(all.size(), 8u);
    EXPECT_EQ(all[1].to_string(), "{1}");
    EXPECT_EQ(all[4].to_string(), "{1,2}");
    EXPECT_EQ(all[7].to_string(), "{1,2,3}");
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), subset_order_less));
}
