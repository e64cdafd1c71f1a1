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

#include "qss/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "qss/errors.hpp"

namespace qss {

namespace {

void require_compatible(const PauliProduct &p, const PauliProduct &q) {
    if (!(p.modulus() == q.modulus())) {
        throw InputError("Pauli products over different D");
    }
    if (p.size() != q.size()) {
        throw InputError("Pauli products on " + std::to_string(p.size()) + " and " + std::to_string(q.size()) +
                         " qudits");
    }
}

Digit dot(const PrimeModulus &d, std::span<const Digit> a, std::span<const Digit> b) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc = (acc + std::uint64_t{a[i]} * b[i]) % d.value();
    }
    return static_cast<Digit>(acc);
}

Digit parse_number(std::string_view text, std::string_view whole) {
    Digit value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError("bad exponent '" + std::string(text) + "' in Pauli string '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

PauliProduct::PauliProduct(PrimeModulus d, FieldVector x, FieldVector z, Digit phase)
    : d_(d), x_(std::move(x)), z_(std::move(z)), phase_(phase % d.value()) {
    if (x_.size() != z_.size()) {
        throw InputError("x and z exponent vectors differ in length");
    }
    for (auto &v : x_) {
        v %= d_.value();
    }
    for (auto &v : z_) {
        v %= d_.value();
    }
}

PauliProduct PauliProduct::identity(PrimeModulus d, std::size_t m) { return {d, FieldVector(m, 0), FieldVector(m, 0)}; }

PauliProduct PauliProduct::from_symplectic(PrimeModulus d, std::span<const Digit> xz, Digit phase) {
    if (xz.size() % 2 != 0) {
        throw InputError("symplectic vector must have even length");
    }
    std::size_t m = xz.size() / 2;
    return {d, FieldVector(xz.begin(), xz.begin() + m), FieldVector(xz.begin() + m, xz.end()), phase};
}

PauliProduct PauliProduct::single(PrimeModulus d, std::size_t m, std::size_t site, Digit x_power, Digit z_power) {
    if (site >= m) {
        throw InputError("site " + std::to_string(site) + " out of range for " + std::to_string(m) + " qudits");
    }
    FieldVector x(m, 0);
    FieldVector z(m, 0);
    x[site] = x_power;
    z[site] = z_power;
    return {d, std::move(x), std::move(z)};
}

FieldVector PauliProduct::symplectic() const {
    FieldVector out(x_);
    out.insert(out.end(), z_.begin(), z_.end());
    return out;
}

std::size_t PauliProduct::weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < x_.size(); ++i) {
        w += (x_[i] != 0 || z_[i] != 0) ? 1 : 0;
    }
    return w;
}

bool PauliProduct::is_identity_projective() const { return is_zero(x_) && is_zero(z_); }

bool PauliProduct::equal_projective(const PauliProduct &other) const {
    return d_ == other.d_ && x_ == other.x_ && z_ == other.z_;
}

PauliProduct PauliProduct::restrict_to(std::span<const std::size_t> sites) const {
    FieldVector x;
    FieldVector z;
    for (auto s : sites) {
        x.push_back(x_.at(s));
        z.push_back(z_.at(s));
    }
    return {d_, std::move(x), std::move(z)};
}

PauliProduct multiply(const PauliProduct &p, const PauliProduct &q) {
    require_compatible(p, q);
    const auto &d = p.modulus();
    FieldVector x(p.size());
    FieldVector z(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        x[i] = d.add(p.x()[i], q.x()[i]);
        z[i] = d.add(p.z()[i], q.z()[i]);
    }
    Digit phase = d.sub(d.add(p.phase(), q.phase()), dot(d, p.z(), q.x()));
    return {d, std::move(x), std::move(z), phase};
}

PauliProduct power(const PauliProduct &p, std::uint64_t exponent) {
    PauliProduct result = PauliProduct::identity(p.modulus(), p.size());
    for (std::uint64_t i = 0; i < exponent; ++i) {
        result = multiply(result, p);
    }
    return result;
}

Digit commutation_exponent(const PauliProduct &p, const PauliProduct &q) {
    require_compatible(p, q);
    const auto &d = p.modulus();
    return d.sub(dot(d, p.x(), q.z()), dot(d, p.z(), q.x()));
}

Digit symplectic_pairing(const PrimeModulus &d, std::span<const Digit> u, std::span<const Digit> v) {
    if (u.size() != v.size() || u.size() % 2 != 0) {
        throw InputError("symplectic pairing needs equal even-length vectors");
    }
    std::size_t m = u.size() / 2;
    return d.sub(dot(d, u.subspan(0, m), v.subspan(m)), dot(d, u.subspan(m), v.subspan(0, m)));
}

DenseOperator dense_matrix(const PauliProduct &p, std::uint64_t amplitude_cap) {
    const Digit d = p.modulus().value();
    checked_dimension(d, p.size(), amplitude_cap);
    // Site matrix of X^a Z^b: entry (r, r + a) = w^(b (r + a)).
    DenseOperator result = DenseOperator::Constant(1, 1, root_of_unity(d, p.phase()));
    for (std::size_t site = 0; site < p.size(); ++site) {
        DenseOperator local = DenseOperator::Zero(d, d);
        for (Digit r = 0; r < d; ++r) {
            Digit c = (r + p.x()[site]) % d;
            local(r, c) = root_of_unity(d, static_cast<std::int64_t>(p.z()[site]) * c);
        }
        DenseOperator next = DenseOperator::Zero(result.rows() * d, result.cols() * d);
        for (Eigen::Index i = 0; i < result.rows(); ++i) {
            for (Eigen::Index j = 0; j < result.cols(); ++j) {
                if (result(i, j) != Complex(0.0, 0.0)) {
                    next.block(i * d, j * d, d, d) = result(i, j) * local;
                }
            }
        }
        result = std::move(next);
    }
    return result;
}

std::string to_string(const PauliProduct &p) {
    std::ostringstream out;
    const Digit d = p.modulus().value();
    if (d == 2) {
        if (p.phase() == 1) {
            out << '-';
        }
        static constexpr char kLetters[2][2] = {{'I', 'Z'}, {'X', 'Y'}};
        for (std::size_t i = 0; i < p.size(); ++i) {
            out << kLetters[p.x()[i]][p.z()[i]];
        }
        return out.str();
    }
    bool first = true;
    if (p.phase() != 0) {
        out << 'w' << p.phase();
        first = false;
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (!first) {
            out << ' ';
        }
        first = false;
        out << 'x' << p.x()[i] << 'z' << p.z()[i];
    }
    return out.str();
}

PauliProduct parse_pauli(std::string_view text, PrimeModulus d) {
    const std::string_view whole = text;
    if (text.empty()) {
        throw ParseError("empty Pauli string");
    }
    bool compact = d.value() == 2 && text.find_first_not_of("-IXYZ") == std::string_view::npos;
    if (compact) {
        Digit phase = 0;
        if (text.front() == '-') {
            phase = 1;
            text.remove_prefix(1);
        }
        if (text.empty() || text.find('-') != std::string_view::npos) {
            throw ParseError("malformed Pauli string '" + std::string(whole) + "'");
        }
        FieldVector x;
        FieldVector z;
        for (char c : text) {
            x.push_back(c == 'X' || c == 'Y' ? 1 : 0);
            z.push_back(c == 'Z' || c == 'Y' ? 1 : 0);
        }
        return {d, std::move(x), std::move(z), phase};
    }

    FieldVector x;
    FieldVector z;
    Digit phase = 0;
    bool first = true;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(' ', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view token = text.substr(pos, end - pos);
        pos = end + 1;
        if (token.empty()) {
            throw ParseError("empty token in Pauli string '" + std::string(whole) + "'");
        }
        if (first && token.front() == 'w') {
            phase = parse_number(token.substr(1), whole);
            if (phase == 0 || phase >= d.value()) {
                throw ParseError("phase out of range in '" + std::string(whole) + "'");
            }
            first = false;
            continue;
        }
        first = false;
        auto zpos = token.find('z');
        if (token.front() != 'x' || zpos == std::string_view::npos) {
            throw ParseError("token '" + std::string(token) + "' is not of the form x<a>z<b>");
        }
        Digit a = parse_number(token.substr(1, zpos - 1), whole);
        Digit b = parse_number(token.substr(zpos + 1), whole);
        if (a >= d.value() || b >= d.value()) {
            throw ParseError("exponent out of range in token '" + std::string(token) + "'");
        }
        x.push_back(a);
        z.push_back(b);
    }
    if (x.empty()) {
        throw ParseError("Pauli string '" + std::string(whole) + "' has no sites");
    }
    return {d, std::move(x), std::move(z), phase};
}

PauliSubgroup::PauliSubgroup(PrimeModulus d, std::size_t m, std::vector<PauliProduct> generators)
    : d_(d), m_(m), generators_(std::move(generators)) {
    std::vector<FieldVector> rows;
    for (const auto &g : generators_) {
        if (!(g.modulus() == d_) || g.size() != m_) {
            throw InputError("subgroup generator does not match D or qudit count");
        }
        rows.push_back(g.symplectic());
    }
    span_ = span_basis(d_, rows, 2 * m_);
    if (span_.size() != generators_.size()) {
        throw InputError("subgroup generators are not independent");
    }
}

bool PauliSubgroup::contains(const PauliProduct &candidate) const {
    if (!(candidate.modulus() == d_) || candidate.size() != m_) {
        throw InputError("candidate does not match subgroup D or qudit count");
    }
    return in_span(d_, span_, candidate.symplectic());
}

bool subgroup_membership(const PauliSubgroup &g, const PauliProduct &candidate) { return g.contains(candidate); }

}  // namespace qss
