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

#include "qss/code.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "qss/errors.hpp"

namespace qss {

namespace {

std::string label(std::string_view kind, std::size_t index) { return std::string(kind) + "[" + std::to_string(index) + "]"; }

}  // namespace

std::vector<PauliProduct> StabilizerCode::logical_basis() const {
    std::vector<PauliProduct> basis(logical_x);
    basis.insert(basis.end(), logical_z.begin(), logical_z.end());
    return basis;
}

FieldVector StabilizerCode::logical_representative(std::span<const Digit> logical_xz) const {
    if (logical_xz.size() != 2 * k) {
        throw InputError("logical vector must have 2k = " + std::to_string(2 * k) + " entries");
    }
    FieldVector rep(2 * n, 0);
    auto basis = logical_basis();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Digit c = logical_xz[i] % d.value();
        if (c == 0) {
            continue;
        }
        auto v = basis[i].symplectic();
        for (std::size_t j = 0; j < rep.size(); ++j) {
            rep[j] = d.add(rep[j], d.mul(c, v[j]));
        }
    }
    return rep;
}

std::vector<FieldVector> StabilizerCode::stabilizer_span() const {
    std::vector<FieldVector> rows;
    for (const auto &s : stabilizers) {
        rows.push_back(s.symplectic());
    }
    return span_basis(d, rows, 2 * n);
}

ValidationReport validate(const StabilizerCode &code) {
    ValidationReport report;
    auto &bad = report.violations;
    if (code.k > code.n) {
        bad.push_back("k = " + std::to_string(code.k) + " exceeds n = " + std::to_string(code.n));
        return report;
    }
    if (code.stabilizers.size() != code.n - code.k) {
        bad.push_back("expected n - k = " + std::to_string(code.n - code.k) + " stabilizer generators, got " +
                      std::to_string(code.stabilizers.size()));
    }
    if (code.logical_x.size() != code.k) {
        bad.push_back("expected k = " + std::to_string(code.k) + " logical_x, got " +
                      std::to_string(code.logical_x.size()));
    }
    if (code.logical_z.size() != code.k) {
        bad.push_back("expected k = " + std::to_string(code.k) + " logical_z, got " +
                      std::to_string(code.logical_z.size()));
    }
    auto check_shape = [&](const std::vector<PauliProduct> &ops, std::string_view kind) {
        for (std::size_t i = 0; i < ops.size(); ++i) {
            if (!(ops[i].modulus() == code.d)) {
                bad.push_back(label(kind, i) + " is over a different D");
            }
            if (ops[i].size() != code.n) {
                bad.push_back(label(kind, i) + " acts on " + std::to_string(ops[i].size()) + " qudits, expected " +
                              std::to_string(code.n));
            }
        }
    };
    check_shape(code.stabilizers, "stabilizer");
    check_shape(code.logical_x, "logical_x");
    check_shape(code.logical_z, "logical_z");
    if (!bad.empty()) {
        return report;
    }

    const auto &s = code.stabilizers;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (commutation_exponent(s[i], s[j]) != 0) {
                bad.push_back("stabilizer[" + std::to_string(i) + "] and stabilizer[" + std::to_string(j) +
                              "] do not commute");
            }
        }
        auto order = power(s[i], code.d.value());
        if (order.phase() != 0) {
            bad.push_back("stabilizer[" + std::to_string(i) + "]^D is a nontrivial phase times identity");
        }
    }
    auto span = code.stabilizer_span();
    if (span.size() != s.size()) {
        bad.push_back("stabilizer generators are dependent: rank " + std::to_string(span.size()) + " < " +
                      std::to_string(s.size()));
    }
    auto check_logicals = [&](const std::vector<PauliProduct> &ops, std::string_view kind) {
        for (std::size_t i = 0; i < ops.size(); ++i) {
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (commutation_exponent(ops[i], s[j]) != 0) {
                    bad.push_back(label(kind, i) + " does not commute with stabilizer[" + std::to_string(j) + "]");
                }
            }
            for (std::size_t j = i + 1; j < ops.size(); ++j) {
                if (commutation_exponent(ops[i], ops[j]) != 0) {
                    bad.push_back(label(kind, i) + " and " + label(kind, j) + " do not commute");
                }
            }
        }
    };
    check_logicals(code.logical_x, "logical_x");
    check_logicals(code.logical_z, "logical_z");
    for (std::size_t i = 0; i < code.k; ++i) {
        for (std::size_t j = 0; j < code.k; ++j) {
            Digit want = i == j ? 1 : 0;
            if (commutation_exponent(code.logical_x[i], code.logical_z[j]) != want) {
                bad.push_back("commutation of logical_x[" + std::to_string(i) + "] with logical_z[" +
                              std::to_string(j) + "] is not " + std::to_string(want));
            }
        }
    }
    std::vector<FieldVector> all;
    for (const auto &g : s) {
        all.push_back(g.symplectic());
    }
    for (const auto &g : code.logical_basis()) {
        all.push_back(g.symplectic());
    }
    if (span_basis(code.d, all, 2 * code.n).size() != code.n + code.k) {
        bad.push_back("logical operators are not independent modulo the stabilizer");
    }
    report.notes.push_back("maximality of the stabilizer and of the code space holds by construction for n - k "
                           "independent commuting generators over prime D");
    return report;
}

void require_valid(const StabilizerCode &code) {
    auto report = validate(code);
    if (!report.ok()) {
        std::ostringstream msg;
        msg << "invalid code '" << code.name << "':";
        for (const auto &v : report.violations) {
            msg << "\n  " << v;
        }
        throw ValidationError(msg.str());
    }
}

namespace {

struct DistanceSetup {
    Digit d;
    std::size_t n;
    std::uint64_t total;
    std::vector<FieldVector> stabilizers;
    std::vector<FieldVector> span;
};

DistanceSetup distance_setup(const StabilizerCode &code, std::uint64_t cap) {
    require_valid(code);
    if (code.k == 0) {
        throw InputError("distance is undefined for k = 0");
    }
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < 2 * code.n; ++i) {
        total *= code.d.value();
        if (total > cap) {
            throw ResourceError("distance enumeration of D^{2n} = " + std::to_string(code.d.value()) + "^" +
                                std::to_string(2 * code.n) + " products exceeds the cap " + std::to_string(cap));
        }
    }
    DistanceSetup setup{code.d.value(), code.n, total, {}, code.stabilizer_span()};
    for (const auto &s : code.stabilizers) {
        setup.stabilizers.push_back(s.symplectic());
    }
    return setup;
}

// Tests candidate `index` and returns its weight if it is a nontrivial logical, else max.
std::size_t candidate_weight(const StabilizerCode &code, const DistanceSetup &setup, std::uint64_t index,
                             std::size_t best, FieldVector &buffer) {
    const std::size_t n = setup.n;
    std::size_t weight = 0;
    for (std::size_t j = 0; j < 2 * n; ++j) {
        buffer[j] = static_cast<Digit>(index % setup.d);
        index /= setup.d;
    }
    for (std::size_t j = 0; j < n; ++j) {
        weight += (buffer[j] != 0 || buffer[n + j] != 0) ? 1 : 0;
    }
    if (weight == 0 || weight >= best) {
        return std::numeric_limits<std::size_t>::max();
    }
    for (const auto &s : setup.stabilizers) {
        if (symplectic_pairing(code.d, s, buffer) != 0) {
            return std::numeric_limits<std::size_t>::max();
        }
    }
    if (in_span(code.d, setup.span, buffer)) {
        return std::numeric_limits<std::size_t>::max();
    }
    return weight;
}

}  // namespace

std::size_t distance_serial(const StabilizerCode &code, std::uint64_t cap) {
    auto setup = distance_setup(code, cap);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    FieldVector buffer(2 * code.n);
    for (std::uint64_t i = 1; i < setup.total; ++i) {
        best = std::min(best, candidate_weight(code, setup, i, best, buffer));
    }
    return best;
}

std::size_t distance(const StabilizerCode &code, std::uint64_t cap) {
    auto setup = distance_setup(code, cap);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const auto total = static_cast<std::int64_t>(setup.total);
#pragma omp parallel
    {
        FieldVector buffer(2 * code.n);
#pragma omp for reduction(min : best) schedule(static)
        for (std::int64_t i = 1; i < total; ++i) {
            best = std::min(best, candidate_weight(code, setup, static_cast<std::uint64_t>(i), best, buffer));
        }
    }
    return best;
}

RampParameters ramp_parameters(const StabilizerCode &code, std::optional<std::size_t> known_distance) {
    auto delta = static_cast<std::int64_t>(known_distance ? *known_distance : distance(code));
    auto n = static_cast<std::int64_t>(code.n);
    return {n - delta + 1, n - 2 * delta + 2};
}

}  // namespace qss
