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

#include "qss/oracle.hpp"

#include <cmath>

#include "gtest/gtest.h"
#include "qss/errors.hpp"

using namespace qss;

namespace {

std::vector<StabilizerCode> small_catalog() {
    return {catalog("cnot_2_1"),  catalog("five_qubit"), catalog("four_two_two"), catalog("steane"),
            catalog("ghz_n", 3),  catalog("ghz_n", 4),   catalog("ghz_n", 5),     catalog("ghz_n", 6),
            catalog("ghz_n", 7),  load_code_file(QSS_DATA_DIR "/codes/qutrit_3_1.json"),
            load_code_file(QSS_DATA_DIR "/codes/qutrit_2_1.json")};
}

DenseVector basis_state(std::size_t dim, std::size_t index) {
    DenseVector v = DenseVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return v;
}

DenseVector plus_state() {
    DenseVector v(2);
    v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    return v;
}

std::vector<DenseVector> random_secrets(std::size_t dim, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<DenseVector> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(random_state(dim, rng));
    }
    return out;
}

// Every element of the stabilizer group, with exact phases from the group law.
std::vector<PauliProduct> stabilizer_group(const StabilizerCode &code) {
    std::vector<PauliProduct> out{PauliProduct::identity(code.d, code.n)};
    for (const auto &g : code.stabilizers) {
        std::vector<PauliProduct> next;
        for (const auto &e : out) {
            PauliProduct acc = e;
            for (Digit a = 0; a < code.d.value(); ++a) {
                next.push_back(acc);
                acc = multiply(acc, g);
            }
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST(codewords, cnot_and_ghz) {
    auto cnot = codewords(catalog("cnot_2_1"));
    ASSERT_EQ(cnot.size(), 2u);
    EXPECT_LT((cnot[0] - basis_state(4, 0)).norm(), kIdentityTol);
    EXPECT_LT((cnot[1] - basis_state(4, 3)).norm(), kIdentityTol);
    auto ghz = codewords(catalog("ghz_n", 3));
    EXPECT_LT((ghz[0] - basis_state(8, 0)).norm(), kIdentityTol);
    EXPECT_LT((ghz[1] - basis_state(8, 7)).norm(), kIdentityTol);
}

TEST(codewords, stabilized_orthonormal_and_logical) {
    for (const auto &code : small_catalog()) {
        Encoder enc(code);
        const auto &c = enc.codewords();
        ASSERT_EQ(c.size(), int_pow(code.d.value(), code.k));
        auto group = stabilizer_group(code);
        EXPECT_EQ(group.size(), int_pow(code.d.value(), code.n - code.k));
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = 0; j < c.size(); ++j) {
                EXPECT_NEAR(std::abs(c[i].dot(c[j]) - (i == j ? 1.0 : 0.0)), 0.0, kIdentityTol);
            }
            for (const auto &s : group) {
                EXPECT_LT((apply_pauli(s, c[i]) - c[i]).norm(), kIdentityTol) << code.name;
            }
        }
        // Logical Z on the first input qudit multiplies c_j by w^{j_1}.
        if (code.k == 1) {
            for (std::size_t j = 0; j < c.size(); ++j) {
                Complex w = root_of_unity(code.d.value(), static_cast<std::int64_t>(j));
                EXPECT_LT((apply_pauli(code.logical_z[0], c[j]) - w * c[j]).norm(), 1e-10);
                const std::size_t down = (j + c.size() - 1) % c.size();
                EXPECT_LT((apply_pauli(code.logical_x[0], c[j]) - c[down]).norm(), 1e-10) << code.name;
            }
        }
    }
}

TEST(codewords, five_qubit_fixed_by_sixteen_elements) {
    auto code = catalog("five_qubit");
    auto c = codewords(code);
    auto group = stabilizer_group(code);
    ASSERT_EQ(group.size(), 16u);
    ASSERT_EQ(c.size(), 2u);
    for (const auto &s : group) {
        EXPECT_LT((dense_matrix(s) * c[0] - c[0]).norm(), kIdentityTol);
    }
}

TEST(encoder, errors) {
    EXPECT_THROW(Encoder(catalog("steane"), 64), ResourceError);
    auto bad = catalog("cnot_2_1");
    bad.logical_z[0] = parse_pauli("XI", bad.d);
    EXPECT_THROW(Encoder{bad}, ValidationError);
    Encoder enc(catalog("cnot_2_1"));
    EXPECT_THROW(enc.encode(basis_state(4, 0)), InputError);
    EXPECT_THROW(enc.reference_state(Subset(0b100)), InputError);
}

TEST(encode, examples) {
    auto cnot = catalog("cnot_2_1");
    DenseVector bell(4);
    bell << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
    EXPECT_LT((encode(cnot, plus_state()) - bell).norm(), kIdentityTol);
    Encoder ghz(catalog("ghz_n", 3));
    DenseVector secret(2);
    secret << Complex(0.6, 0.0), Complex(0.0, 0.8);
    DenseVector want = DenseVector::Zero(8);
    want(0) = secret(0);
    want(7) = secret(1);
    EXPECT_LT((ghz.encode(secret) - want).norm(), kIdentityTol);
    for (std::size_t j = 0; j < 2; ++j) {
        EXPECT_LT((ghz.encode(basis_state(2, j)) - ghz.codewords()[j]).norm(), kIdentityTol);
    }
}

TEST(encode, isometry) {
    for (const auto &code : small_catalog()) {
        Encoder enc(code);
        auto secrets = random_secrets(enc.input_dimension(), 3, 2);
        for (const auto &a : secrets) {
            for (const auto &b : secrets) {
                EXPECT_LT(std::abs(enc.encode(a).dot(enc.encode(b)) - a.dot(b)), kIdentityTol) << code.name;
            }
        }
    }
}

TEST(apply_pauli, matches_dense_matrix) {
    std::mt19937_64 rng(4);
    for (Digit prime : {2u, 3u}) {
        PrimeModulus d(prime);
        std::uniform_int_distribution<Digit> digit(0, prime - 1);
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t m = 1 + trial % 3;
            FieldVector x(m);
            FieldVector z(m);
            for (std::size_t i = 0; i < m; ++i) {
                x[i] = digit(rng);
                z[i] = digit(rng);
            }
            PauliProduct p(d, x, z, digit(rng));
            DenseVector v = random_state(int_pow(prime, m), rng);
            EXPECT_LT((apply_pauli(p, v) - dense_matrix(p) * v).norm(), kIdentityTol);
        }
    }
}

TEST(reduced_state, examples) {
    DenseVector bell(4);
    bell << 1.0 / std::sqrt(2.0), 0, 0, 1.0 / std::sqrt(2.0);
    DenseOperator half = DenseOperator::Identity(2, 2) / 2.0;
    EXPECT_LT((reduced_state(bell, 2, 2, Subset(0b01)) - half).norm(), kIdentityTol);
    DenseOperator zero_proj = DenseOperator::Zero(2, 2);
    zero_proj(0, 0) = 1.0;
    EXPECT_LT((reduced_state(basis_state(4, 1), 2, 2, Subset(0b01)) - zero_proj).norm(), kIdentityTol);
    DenseOperator one_proj = DenseOperator::Zero(2, 2);
    one_proj(1, 1) = 1.0;
    EXPECT_LT((reduced_state(basis_state(4, 1), 2, 2, Subset(0b10)) - one_proj).norm(), kIdentityTol);
    auto encoded = encode(catalog("cnot_2_1"), plus_state());
    EXPECT_LT((reduced_state(encoded, 2, 2, Subset(0b01)) - half).norm(), kIdentityTol);
    EXPECT_THROW(reduced_state(basis_state(3, 0), 2, 2, Subset(0b01)), InputError);
}

TEST(reduced_state, trace_positivity_and_overloads) {
    std::mt19937_64 rng(8);
    for (std::uint32_t d : {2u, 3u}) {
        const std::size_t m = 3;
        DenseVector psi = random_state(int_pow(d, m), rng);
        DenseOperator rho = psi * psi.adjoint();
        for (auto keep : enumerate_subsets(m)) {
            auto a = reduced_state(psi, d, m, keep);
            auto b = reduced_state(rho, d, m, keep);
            EXPECT_LT((a - b).norm(), kIdentityTol);
            EXPECT_NEAR(a.trace().real(), 1.0, kIdentityTol);
            EXPECT_LT((a - a.adjoint()).norm(), kIdentityTol);
            Eigen::SelfAdjointEigenSolver<DenseOperator> solver(a);
            EXPECT_GT(solver.eigenvalues().minCoeff(), -kIdentityTol);
        }
    }
}

TEST(trace_distance, values) {
    DenseOperator a = DenseOperator::Zero(2, 2);
    a(0, 0) = 1.0;
    DenseOperator b = DenseOperator::Zero(2, 2);
    b(1, 1) = 1.0;
    EXPECT_NEAR(trace_distance(a, b), 1.0, kIdentityTol);
    EXPECT_NEAR(trace_distance(a, a), 0.0, kIdentityTol);
    EXPECT_NEAR(trace_distance(a, DenseOperator::Identity(2, 2) / 2.0), 0.5, kIdentityTol);
}

TEST(info_group_bruteforce, examples) {
    Encoder cnot(catalog("cnot_2_1"));
    EXPECT_EQ(info_group_bruteforce(cnot, Subset(0b01)).generators, (std::vector<FieldVector>{{0, 1}}));
    for (const auto &code : small_catalog()) {
        Encoder enc(code);
        EXPECT_TRUE(info_group_bruteforce(enc, Subset()).is_trivial()) << code.name;
        EXPECT_TRUE(is_full(info_group_bruteforce(enc, Subset::full(code.n)))) << code.name;
    }
}

TEST(oracle_equivalence, four_two_two_every_subset) {
    auto code = catalog("four_two_two");
    Encoder enc(code);
    for (auto s : enumerate_subsets(4)) {
        EXPECT_TRUE(info_group(code, s).same_span(info_group_bruteforce(enc, s))) << s.to_string();
    }
}

TEST(oracle_equivalence, catalog_has_no_discrepancies) {
    for (const auto &code : small_catalog()) {
        auto parallel = oracle_equivalence(code);
        auto serial = oracle_equivalence_serial(code);
        EXPECT_TRUE(parallel.empty()) << code.name;
        EXPECT_EQ(parallel.size(), serial.size());
    }
}

TEST(perfect_presence, examples) {
    Encoder cnot(catalog("cnot_2_1"));
    PrimeModulus two(2);
    EXPECT_TRUE(verify_perfect_presence(cnot, Subset(0b01), parse_pauli("Z", two)));
    EXPECT_FALSE(verify_perfect_presence(cnot, Subset(0b01), parse_pauli("X", two)));
    for (const char *p : {"X", "Y", "Z"}) {
        EXPECT_TRUE(verify_perfect_presence(cnot, Subset(0b11), parse_pauli(p, two)));
    }
    Encoder four(catalog("four_two_two"));
    auto pair = Subset(0b0011);
    for (const auto &g : info_group(four.code(), pair).generator_paulis()) {
        EXPECT_TRUE(verify_perfect_presence(four, pair, g));
    }
}

TEST(absence, examples) {
    Encoder five(catalog("five_qubit"));
    auto secrets = random_secrets(2, 5, 12);
    for (auto s : subsets_of_size(5, 2)) {
        EXPECT_LT(verify_absence(five, s, secrets), kStateTol);
    }
    Encoder cnot(catalog("cnot_2_1"));
    EXPECT_NEAR(verify_absence(cnot, Subset(0b01), {basis_state(2, 0), basis_state(2, 1)}), 1.0, 1e-10);
    EXPECT_LT(verify_absence(cnot, Subset(), secrets), kStateTol);
}

TEST(choi, five_qubit) {
    Encoder five(catalog("five_qubit"));
    for (auto s : subsets_of_size(5, 3)) {
        auto r = choi_check(five, s);
        EXPECT_NEAR(r.purity, 1.0, kStateTol);
        EXPECT_TRUE(r.authorized());
        EXPECT_FALSE(r.forbidden());
    }
    for (auto s : subsets_of_size(5, 2)) {
        auto r = choi_check(five, s);
        EXPECT_TRUE(r.forbidden());
        EXPECT_FALSE(r.authorized());
        EXPECT_NEAR(r.purity, 0.25, kStateTol);
        EXPECT_LT(r.product_defect, kStateTol);
    }
}

TEST(choi, four_two_two_pairs_are_in_between) {
    Encoder four(catalog("four_two_two"));
    for (auto s : subsets_of_size(4, 2)) {
        auto r = choi_check(four, s);
        EXPECT_NEAR(r.purity, 0.25, kStateTol) << s.to_string();
        EXPECT_GT(r.purity, 1.0 / 16 + 0.01);
        EXPECT_LT(r.purity, 1.0 - 0.01);
        EXPECT_FALSE(r.authorized());
        EXPECT_FALSE(r.forbidden());
    }
}

TEST(choi, purity_tracks_group_rank) {
    for (const auto &code : small_catalog()) {
        Encoder enc(code);
        auto t = classify(code);
        for (const auto &rec : t.records) {
            auto r = choi_check(enc, rec.subset);
            double want = std::pow(static_cast<double>(code.d.value()),
                                   static_cast<double>(info_group(code, rec.subset).rank()) - 2.0 * code.k);
            EXPECT_NEAR(r.purity, want, 1e-9) << code.name << " " << rec.subset.to_string();
            EXPECT_LT(r.entanglement_defect, kStateTol);
            EXPECT_EQ(r.authorized(), rec.access == AccessClass::authorized);
            EXPECT_EQ(r.forbidden(), rec.access == AccessClass::forbidden);
        }
    }
}

TEST(choi, keyed_recovery_for_authorized_sets) {
    for (const char *name : {"cnot_2_1", "four_two_two"}) {
        auto code = catalog(name);
        Encoder enc(code);
        auto t = classify(code);
        auto plan = twirl_plan(code, t);
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            DenseOperator u = dense_matrix(sample_twirl(plan, seed).op);
            for (auto s : t.authorized()) {
                EXPECT_TRUE(choi_check(enc, s, u).authorized()) << name << s.to_string();
            }
        }
    }
}

TEST(concealment, cnot_singletons) {
    auto code = catalog("cnot_2_1");
    Encoder enc(code);
    auto plan = twirl_plan(code);
    std::vector<DenseVector> secrets{basis_state(2, 0), basis_state(2, 1), plus_state()};
    for (auto s : {Subset(0b01), Subset(0b10)}) {
        auto r = verify_concealment(enc, plan, secrets, s);
        EXPECT_LT(r.max_distance, kStateTol);
        EXPECT_EQ(r.keys, 2u);
    }
}

TEST(concealment, ghz_four_proper_subsets) {
    auto code = catalog("ghz_n", 4);
    Encoder enc(code);
    auto plan = twirl_plan(code);
    auto secrets = random_secrets(2, 5, 6);
    for (auto s : enumerate_subsets(4)) {
        if (s.empty() || s == Subset::full(4)) {
            continue;
        }
        EXPECT_LT(verify_concealment(enc, plan, secrets, s).max_distance, kStateTol) << s.to_string();
    }
}

TEST(concealment, four_two_two_key_count) {
    auto code = catalog("four_two_two");
    Encoder enc(code);
    auto plan = twirl_plan(code);
    auto secrets = random_secrets(4, 5, 1);
    for (auto s : subsets_of_size(4, 2)) {
        auto r = verify_concealment(enc, plan, secrets, s);
        EXPECT_LT(r.max_distance, kStateTol);
        EXPECT_EQ(r.keys, int_pow(2, plan.key_length));
    }
}

TEST(concealment, dropped_generator_leaks) {
    auto code = catalog("cnot_2_1");
    Encoder enc(code);
    auto weaker = drop_generator(twirl_plan(code), 0);
    auto r = verify_concealment(enc, weaker, {basis_state(2, 0), basis_state(2, 1)}, Subset(0b01));
    EXPECT_NEAR(r.max_distance, 1.0, 1e-10);
    EXPECT_EQ(r.keys, 1u);
}

TEST(expansion, matches_direct_reduced_state) {
    for (const auto &code : small_catalog()) {
        Encoder enc(code);
        auto secrets = random_secrets(enc.input_dimension(), 2, 14);
        for (auto s : enumerate_subsets(code.n)) {
            for (const auto &psi : secrets) {
                auto direct = reduced_state(enc.encode(psi), code.d.value(), code.n, s);
                EXPECT_LT((direct - reduced_state_via_expansion(enc, psi, s)).norm(), kStateTol) << code.name;
            }
        }
    }
}

TEST(pauli_basis, orthonormal) {
    for (std::uint32_t d : {2u, 3u}) {
        for (std::size_t m = 1; m <= 3; ++m) {
            EXPECT_LT(pauli_orthonormality_error(PrimeModulus(d), m), kIdentityTol);
        }
    }
}
