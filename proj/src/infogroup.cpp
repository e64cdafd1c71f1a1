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

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "qss/errors.hpp"

namespace qss {

namespace {

FieldVector axpy(const PrimeModulus &d, FieldVector v, Digit factor, const FieldVector &u) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = d.add(v[i], d.mul(factor, u[i]));
    }
    return v;
}

FieldVector scaled(const PrimeModulus &d, FieldVector v, Digit factor) {
    for (auto &x : v) {
        x = d.mul(x, factor);
    }
    return v;
}

// Row r_u with r_u . f = <f, u>.
FieldVector pairing_row(const PrimeModulus &d, const FieldVector &u) {
    std::size_t m = u.size() / 2;
    FieldVector row(u.size());
    for (std::size_t i = 0; i < m; ++i) {
        row[i] = u[m + i];
        row[m + i] = d.neg(u[i]);
    }
    return row;
}

struct GramSchmidt {
    std::vector<std::pair<FieldVector, FieldVector>> pairs;
    std::vector<FieldVector> isotropic;
};

GramSchmidt symplectic_gram_schmidt(const PrimeModulus &d, std::vector<FieldVector> rest) {
    GramSchmidt out;
    while (!rest.empty()) {
        FieldVector u = rest.front();
        std::size_t partner = 0;
        Digit pairing = 0;
        for (std::size_t j = 1; j < rest.size(); ++j) {
            pairing = symplectic_pairing(d, u, rest[j]);
            if (pairing != 0) {
                partner = j;
                break;
            }
        }
        if (partner == 0) {
            out.isotropic.push_back(std::move(u));
            rest.erase(rest.begin());
            continue;
        }
        FieldVector b = scaled(d, rest[partner], d.inv(pairing));
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(partner));
        rest.erase(rest.begin());
        for (auto &v : rest) {
            Digit with_b = symplectic_pairing(d, v, b);
            Digit with_a = symplectic_pairing(d, v, u);
            v = axpy(d, axpy(d, std::move(v), d.neg(with_b), u), with_a, b);
        }
        std::erase_if(rest, [](const FieldVector &v) { return is_zero(v); });
        out.pairs.emplace_back(std::move(u), std::move(b));
    }
    return out;
}

// Rows of the complement restriction map; columns are logical basis then stabilizers.
class SubsetKernel {
   public:
    explicit SubsetKernel(const StabilizerCode &code) : code_(code) {
        for (const auto &p : code.logical_basis()) {
            columns_.push_back(p.symplectic());
        }
        for (const auto &s : code.stabilizers) {
            columns_.push_back(s.symplectic());
        }
    }

    InfoGroup group(Subset subset) const {
        const std::size_t n = code_.n;
        const std::size_t k = code_.k;
        auto outside = subset.complement(n).sites();
        FieldMatrix m(code_.d, 2 * outside.size(), columns_.size());
        for (std::size_t row = 0; row < outside.size(); ++row) {
            for (std::size_t c = 0; c < columns_.size(); ++c) {
                m.at(2 * row, c) = columns_[c][outside[row]];
                m.at(2 * row + 1, c) = columns_[c][n + outside[row]];
            }
        }
        std::vector<FieldVector> projected;
        for (auto &v : nullspace(m)) {
            v.resize(2 * k);
            projected.push_back(std::move(v));
        }
        return InfoGroup::spanned_by(code_.d, k, projected, subset);
    }

   private:
    const StabilizerCode &code_;
    std::vector<FieldVector> columns_;
};

void require_subset(const StabilizerCode &code, Subset subset) {
    if (!subset.is_subset_of(Subset::full(code.n))) {
        throw InputError("subset " + subset.to_string() + " has players outside 1.." + std::to_string(code.n));
    }
}

SubsetRecord make_record(const StabilizerCode &code, const SubsetKernel &kernel, Subset subset) {
    auto g = kernel.group(subset);
    AccessClass access = AccessClass::intermediate;
    if (g.rank() == 2 * code.k) {
        access = AccessClass::authorized;
    } else if (g.is_trivial()) {
        access = AccessClass::forbidden;
    }
    auto cf = canonical_form(g);
    return {subset, access, static_cast<std::uint8_t>(cf.r), static_cast<std::uint8_t>(cf.s)};
}

void require_players(const StabilizerCode &code, const ClassifyOptions &options) {
    require_valid(code);
    if (code.n > options.max_players || code.n > kMaxPlayers) {
        throw ResourceError("classifying 2^" + std::to_string(code.n) + " subsets exceeds the cap of " +
                            std::to_string(std::min(options.max_players, kMaxPlayers)) + " players");
    }
}

}  // namespace

InfoGroup InfoGroup::spanned_by(PrimeModulus d, std::size_t k, const std::vector<FieldVector> &vectors,
                                std::optional<Subset> subset) {
    return {d, k, subset, span_basis(d, vectors, 2 * k)};
}

bool InfoGroup::contains(std::span<const Digit> xz) const {
    if (xz.size() != 2 * k) {
        throw InputError("vector length " + std::to_string(xz.size()) + " does not match 2k = " +
                         std::to_string(2 * k));
    }
    return in_span(d, generators, xz);
}

bool InfoGroup::same_span(const InfoGroup &other) const {
    return d == other.d && k == other.k && generators == other.generators;
}

std::vector<PauliProduct> InfoGroup::generator_paulis() const {
    std::vector<PauliProduct> out;
    for (const auto &g : generators) {
        out.push_back(PauliProduct::from_symplectic(d, g));
    }
    return out;
}

std::vector<FieldVector> InfoGroup::elements(std::uint64_t cap) const {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < rank(); ++i) {
        count *= d.value();
        if (count > cap) {
            throw ResourceError("group has more than " + std::to_string(cap) + " elements");
        }
    }
    std::vector<FieldVector> out;
    out.reserve(count);
    for (std::uint64_t index = 0; index < count; ++index) {
        FieldVector v(2 * k, 0);
        std::uint64_t rem = index;
        for (const auto &g : generators) {
            v = axpy(d, std::move(v), static_cast<Digit>(rem % d.value()), g);
            rem /= d.value();
        }
        out.push_back(std::move(v));
    }
    return out;
}

FieldVector CanonicalForm::x_column(std::size_t qudit) const {
    FieldVector col(transform.rows());
    for (std::size_t i = 0; i < col.size(); ++i) {
        col[i] = transform.at(i, qudit);
    }
    return col;
}

FieldVector CanonicalForm::z_column(std::size_t qudit) const {
    return x_column(transform.cols() / 2 + qudit);
}

InfoGroup info_group(const StabilizerCode &code, Subset subset) {
    require_subset(code, subset);
    return SubsetKernel(code).group(subset);
}

CanonicalForm canonical_form(const InfoGroup &group) {
    const auto &d = group.d;
    const std::size_t k = group.k;
    auto gs = symplectic_gram_schmidt(d, group.generators);

    CanonicalForm cf{gs.pairs.size(), gs.isotropic.size(), {}, FieldMatrix(d, 2 * k, 2 * k)};
    for (const auto &[a, b] : gs.pairs) {
        cf.basis.push_back(a);
        cf.basis.push_back(b);
    }
    for (const auto &c : gs.isotropic) {
        cf.basis.push_back(c);
    }

    // Partners f_j for the isotropic vectors: <f_j, c_j> = 1, orthogonal to everything else so far.
    std::vector<FieldVector> placed;
    for (const auto &[a, b] : gs.pairs) {
        placed.push_back(a);
        placed.push_back(b);
    }
    std::vector<FieldVector> partners;
    for (std::size_t j = 0; j < gs.isotropic.size(); ++j) {
        std::vector<FieldVector> rows;
        FieldVector rhs;
        for (const auto &u : placed) {
            rows.push_back(pairing_row(d, u));
            rhs.push_back(0);
        }
        for (std::size_t t = 0; t < gs.isotropic.size(); ++t) {
            rows.push_back(pairing_row(d, gs.isotropic[t]));
            rhs.push_back(t == j ? 1 : 0);
        }
        for (const auto &f : partners) {
            rows.push_back(pairing_row(d, f));
            rhs.push_back(0);
        }
        auto f = solve(FieldMatrix::from_rows(d, rows, 2 * k), rhs);
        if (!f) {
            throw std::logic_error("no symplectic partner for an isotropic generator; generators are dependent");
        }
        partners.push_back(std::move(*f));
    }

    // Symplectic complement of everything placed, split into hyperbolic pairs.
    std::vector<FieldVector> constraints;
    for (const auto &u : placed) {
        constraints.push_back(pairing_row(d, u));
    }
    for (const auto &u : gs.isotropic) {
        constraints.push_back(pairing_row(d, u));
    }
    for (const auto &u : partners) {
        constraints.push_back(pairing_row(d, u));
    }
    auto complement = nullspace(FieldMatrix::from_rows(d, constraints, 2 * k));
    auto rest = symplectic_gram_schmidt(d, complement);
    if (!rest.isotropic.empty()) {
        throw std::logic_error("symplectic complement is degenerate");
    }

    auto set_column = [&](std::size_t col, const FieldVector &v) {
        for (std::size_t i = 0; i < 2 * k; ++i) {
            cf.transform.at(i, col) = v[i];
        }
    };
    std::size_t qudit = 0;
    for (const auto &[a, b] : gs.pairs) {
        set_column(qudit, a);
        set_column(k + qudit, b);
        ++qudit;
    }
    for (std::size_t j = 0; j < gs.isotropic.size(); ++j) {
        set_column(qudit, partners[j]);
        set_column(k + qudit, gs.isotropic[j]);
        ++qudit;
    }
    for (const auto &[e, g] : rest.pairs) {
        set_column(qudit, e);
        set_column(k + qudit, g);
        ++qudit;
    }
    if (qudit != k) {
        throw std::logic_error("symplectic basis completion produced the wrong number of pairs");
    }
    return cf;
}

FieldMatrix pairing_matrix(const PrimeModulus &d, const std::vector<FieldVector> &vectors) {
    FieldMatrix m(d, vectors.size(), vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = 0; j < vectors.size(); ++j) {
            m.at(i, j) = symplectic_pairing(d, vectors[i], vectors[j]);
        }
    }
    return m;
}

bool is_symplectic(const FieldMatrix &transform) {
    if (transform.rows() != transform.cols() || transform.rows() % 2 != 0) {
        return false;
    }
    std::vector<FieldVector> columns;
    for (std::size_t c = 0; c < transform.cols(); ++c) {
        FieldVector col(transform.rows());
        for (std::size_t r = 0; r < transform.rows(); ++r) {
            col[r] = transform.at(r, c);
        }
        columns.push_back(std::move(col));
    }
    const std::size_t k = transform.rows() / 2;
    auto gram = pairing_matrix(transform.modulus(), columns);
    for (std::size_t i = 0; i < 2 * k; ++i) {
        for (std::size_t j = 0; j < 2 * k; ++j) {
            Digit want = 0;
            if (i < k && j == i + k) {
                want = 1;
            } else if (i >= k && j + k == i) {
                want = transform.modulus().neg(1);
            }
            if (gram.at(i, j) != want) {
                return false;
            }
        }
    }
    return true;
}

bool is_full(const InfoGroup &group) { return group.rank() == 2 * group.k; }

char class_letter(AccessClass c) {
    switch (c) {
        case AccessClass::authorized:
            return 'A';
        case AccessClass::forbidden:
            return 'F';
        case AccessClass::intermediate:
            return 'I';
    }
    return '?';
}

std::vector<Subset> SchemeTriplet::authorized() const {
    std::vector<Subset> out;
    for (const auto &r : records) {
        if (r.access == AccessClass::authorized) {
            out.push_back(r.subset);
        }
    }
    return out;
}

std::vector<Subset> SchemeTriplet::forbidden() const {
    std::vector<Subset> out;
    for (const auto &r : records) {
        if (r.access == AccessClass::forbidden) {
            out.push_back(r.subset);
        }
    }
    return out;
}

std::vector<Subset> SchemeTriplet::intermediate() const {
    std::vector<Subset> out;
    for (const auto &r : records) {
        if (r.access == AccessClass::intermediate) {
            out.push_back(r.subset);
        }
    }
    return out;
}

const SubsetRecord &SchemeTriplet::record_of(Subset s) const {
    if (s.bits() >= position_.size()) {
        throw InputError("subset " + s.to_string() + " outside the player set");
    }
    return records[position_[s.bits()]];
}

AccessClass SchemeTriplet::class_of(Subset s) const { return record_of(s).access; }

std::optional<std::size_t> SchemeTriplet::threshold() const {
    if (minimal_authorized.empty()) {
        return std::nullopt;
    }
    std::size_t q = minimal_authorized.front().size();
    for (const auto &m : minimal_authorized) {
        if (m.size() != q) {
            return std::nullopt;
        }
    }
    if (minimal_authorized.size() != subsets_of_size(n, q).size()) {
        return std::nullopt;
    }
    return q;
}

bool SchemeTriplet::is_perfect() const {
    return std::none_of(records.begin(), records.end(),
                        [](const SubsetRecord &r) { return r.access == AccessClass::intermediate; });
}

SchemeTriplet build_triplet(std::size_t n, std::size_t k, std::vector<SubsetRecord> records) {
    SchemeTriplet t;
    t.n = n;
    t.k = k;
    t.records = std::move(records);
    t.position_.assign(std::size_t{1} << n, 0);
    for (std::size_t i = 0; i < t.records.size(); ++i) {
        t.position_[t.records[i].subset.bits()] = static_cast<std::uint32_t>(i);
    }
    auto check = check_structure(t);
    if (!check.duality) {
        std::ostringstream msg;
        msg << "complement duality violated:";
        for (const auto &f : check.failures) {
            msg << "\n  " << f;
        }
        throw std::logic_error(msg.str());
    }
    for (const auto &r : t.records) {
        bool minimal = r.access == AccessClass::authorized;
        bool maximal = r.access == AccessClass::forbidden;
        for (std::size_t site = 0; site < n; ++site) {
            if (r.subset.contains(site)) {
                minimal = minimal && t.class_of(r.subset.without(site)) != AccessClass::authorized;
            } else {
                maximal = maximal && t.class_of(r.subset.with(site)) != AccessClass::forbidden;
            }
        }
        if (minimal) {
            t.minimal_authorized.push_back(r.subset);
        }
        if (maximal) {
            t.maximal_forbidden.push_back(r.subset);
        }
    }
    return t;
}

PropertyCheck check_structure(const SchemeTriplet &t) {
    PropertyCheck out;
    const std::size_t n = t.n;
    for (const auto &r : t.records) {
        auto complement = t.class_of(r.subset.complement(n));
        bool a = r.access == AccessClass::authorized;
        bool f = r.access == AccessClass::forbidden;
        if (a != (complement == AccessClass::forbidden) || f != (complement == AccessClass::authorized)) {
            out.duality = false;
            out.failures.push_back("duality: " + r.subset.to_string() + " is " + class_letter(r.access) +
                                   " but its complement is " + class_letter(complement));
        }
        for (std::size_t site = 0; site < n; ++site) {
            if (r.subset.contains(site)) {
                continue;
            }
            auto bigger = t.class_of(r.subset.with(site));
            if (a && bigger != AccessClass::authorized) {
                out.monotone = false;
                out.failures.push_back("monotonicity: " + r.subset.to_string() + " is A but " +
                                       r.subset.with(site).to_string() + " is not");
            }
            if (bigger == AccessClass::forbidden && !f) {
                out.monotone = false;
                out.failures.push_back("monotonicity: " + r.subset.with(site).to_string() + " is F but " +
                                       r.subset.to_string() + " is not");
            }
        }
    }
    return out;
}

SchemeTriplet classify_serial(const StabilizerCode &code, ClassifyOptions options) {
    require_players(code, options);
    SubsetKernel kernel(code);
    auto subsets = enumerate_subsets(code.n);
    std::vector<SubsetRecord> records;
    records.reserve(subsets.size());
    for (auto s : subsets) {
        records.push_back(make_record(code, kernel, s));
    }
    return build_triplet(code.n, code.k, std::move(records));
}

SchemeTriplet classify(const StabilizerCode &code, ClassifyOptions options) {
    require_players(code, options);
    SubsetKernel kernel(code);
    auto subsets = enumerate_subsets(code.n);
    std::vector<SubsetRecord> records(subsets.size());
    const auto count = static_cast<std::int64_t>(subsets.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < count; ++i) {
        records[static_cast<std::size_t>(i)] = make_record(code, kernel, subsets[static_cast<std::size_t>(i)]);
    }
    return build_triplet(code.n, code.k, std::move(records));
}

}  // namespace qss
