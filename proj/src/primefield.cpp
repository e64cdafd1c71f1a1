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

#include "qss/primefield.hpp"

#include <algorithm>
#include <string>

#include "qss/errors.hpp"

namespace qss {

bool is_prime(std::uint64_t value) {
    if (value < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= value; ++d) {
        if (value % d == 0) {
            return false;
        }
    }
    return true;
}

PrimeModulus::PrimeModulus(std::uint64_t value) : value_(0) {
    if (value >= (std::uint64_t{1} << 31)) {
        throw InputError("modulus " + std::to_string(value) + " is too large");
    }
    if (!is_prime(value)) {
        throw InputError("D must be prime, got " + std::to_string(value));
    }
    value_ = static_cast<Digit>(value);
}

Digit PrimeModulus::pow(Digit base, std::uint64_t exponent) const {
    Digit result = 1 % value_;
    Digit b = base % value_;
    while (exponent > 0) {
        if (exponent & 1) {
            result = mul(result, b);
        }
        b = mul(b, b);
        exponent >>= 1;
    }
    return result;
}

Digit PrimeModulus::inv(Digit a) const {
    if (a % value_ == 0) {
        throw InputError("zero has no inverse mod " + std::to_string(value_));
    }
    return pow(a, value_ - 2);
}

FieldElement::FieldElement(Digit value, PrimeModulus modulus) : value_(value % modulus.value()), modulus_(modulus) {}

void FieldElement::require_same(const FieldElement &other) const {
    if (!(modulus_ == other.modulus_)) {
        throw InputError("mixed-modulus arithmetic: " + std::to_string(modulus_.value()) + " vs " +
                         std::to_string(other.modulus_.value()));
    }
}

FieldElement FieldElement::operator+(const FieldElement &other) const {
    require_same(other);
    return {modulus_.add(value_, other.value_), modulus_};
}

FieldElement FieldElement::operator-(const FieldElement &other) const {
    require_same(other);
    return {modulus_.sub(value_, other.value_), modulus_};
}

FieldElement FieldElement::operator*(const FieldElement &other) const {
    require_same(other);
    return {modulus_.mul(value_, other.value_), modulus_};
}

FieldElement FieldElement::operator-() const { return {modulus_.neg(value_), modulus_}; }

FieldElement FieldElement::inverse() const { return {modulus_.inv(value_), modulus_}; }

FieldMatrix::FieldMatrix(PrimeModulus modulus, std::size_t rows, std::size_t cols)
    : modulus_(modulus), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix::FieldMatrix(PrimeModulus modulus, std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : modulus_(modulus), rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw InputError("ragged matrix literal");
        }
        for (auto v : r) {
            data_.push_back(modulus_.reduce(v));
        }
    }
}

FieldMatrix FieldMatrix::identity(PrimeModulus modulus, std::size_t size) {
    FieldMatrix m(modulus, size, size);
    for (std::size_t i = 0; i < size; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

FieldMatrix FieldMatrix::from_rows(PrimeModulus modulus, const std::vector<FieldVector> &rows, std::size_t cols) {
    FieldMatrix m(modulus, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw InputError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                             " entries, expected " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m.at(r, c) = rows[r][c] % modulus.value();
        }
    }
    return m;
}

FieldVector FieldMatrix::row_vector(std::size_t r) const {
    auto s = row(r);
    return {s.begin(), s.end()};
}

FieldVector FieldMatrix::apply(std::span<const Digit> x) const {
    if (x.size() != cols_) {
        throw InputError("dimension mismatch: matrix has " + std::to_string(cols_) + " columns, vector has " +
                         std::to_string(x.size()) + " entries");
    }
    FieldVector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            acc = (acc + std::uint64_t{at(r, c)} * x[c]) % modulus_.value();
        }
        out[r] = static_cast<Digit>(acc);
    }
    return out;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix &other) const {
    if (!(modulus_ == other.modulus_)) {
        throw InputError("mixed-modulus matrix product");
    }
    if (cols_ != other.rows_) {
        throw InputError("dimension mismatch in matrix product");
    }
    FieldMatrix out(modulus_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t l = 0; l < cols_; ++l) {
            Digit a = at(i, l);
            if (a == 0) {
                continue;
            }
            for (std::size_t j = 0; j < other.cols_; ++j) {
                out.at(i, j) = modulus_.add(out.at(i, j), modulus_.mul(a, other.at(l, j)));
            }
        }
    }
    return out;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix out(modulus_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out.at(j, i) = at(i, j);
        }
    }
    return out;
}

RowReduction row_reduce(const FieldMatrix &m) {
    const PrimeModulus &mod = m.modulus();
    FieldMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t found = a.rows();
        for (std::size_t r = pivot_row; r < a.rows(); ++r) {
            if (a.at(r, col) != 0) {
                found = r;
                break;
            }
        }
        if (found == a.rows()) {
            continue;
        }
        if (found != pivot_row) {
            std::swap_ranges(a.row(found).begin(), a.row(found).end(), a.row(pivot_row).begin());
        }
        Digit scale = mod.inv(a.at(pivot_row, col));
        for (auto &v : a.row(pivot_row)) {
            v = mod.mul(v, scale);
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pivot_row) {
                continue;
            }
            Digit factor = a.at(r, col);
            if (factor == 0) {
                continue;
            }
            for (std::size_t c = col; c < a.cols(); ++c) {
                a.at(r, c) = mod.sub(a.at(r, c), mod.mul(factor, a.at(pivot_row, c)));
            }
        }
        pivots.push_back(col);
        ++pivot_row;
    }
    std::size_t r = pivots.size();
    return {std::move(a), r, std::move(pivots)};
}

std::optional<FieldVector> solve(const FieldMatrix &m, std::span<const Digit> b) {
    if (b.size() != m.rows()) {
        throw InputError("dimension mismatch: matrix has " + std::to_string(m.rows()) + " rows, rhs has " +
                         std::to_string(b.size()) + " entries");
    }
    const PrimeModulus &mod = m.modulus();
    FieldMatrix augmented(mod, m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            augmented.at(r, c) = m.at(r, c);
        }
        augmented.at(r, m.cols()) = b[r] % mod.value();
    }
    auto red = row_reduce(augmented);
    if (!red.pivots.empty() && red.pivots.back() == m.cols()) {
        return std::nullopt;
    }
    FieldVector x(m.cols(), 0);
    for (std::size_t i = 0; i < red.rank; ++i) {
        x[red.pivots[i]] = red.reduced.at(i, m.cols());
    }
    return x;
}

std::vector<FieldVector> nullspace(const FieldMatrix &m) {
    const PrimeModulus &mod = m.modulus();
    auto red = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) {
        is_pivot[p] = true;
    }
    std::vector<FieldVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) {
            continue;
        }
        FieldVector v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < red.rank; ++i) {
            v[red.pivots[i]] = mod.neg(red.reduced.at(i, free));
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const FieldMatrix &m) { return row_reduce(m).rank; }

std::vector<FieldVector> span_basis(PrimeModulus modulus, const std::vector<FieldVector> &vectors, std::size_t dim) {
    auto red = row_reduce(FieldMatrix::from_rows(modulus, vectors, dim));
    std::vector<FieldVector> basis;
    basis.reserve(red.rank);
    for (std::size_t i = 0; i < red.rank; ++i) {
        basis.push_back(red.reduced.row_vector(i));
    }
    return basis;
}

FieldVector reduce_against(const PrimeModulus &modulus, const std::vector<FieldVector> &basis, FieldVector v) {
    for (const auto &row : basis) {
        auto pivot = std::find_if(row.begin(), row.end(), [](Digit d) { return d != 0; });
        if (pivot == row.end()) {
            continue;
        }
        auto col = static_cast<std::size_t>(pivot - row.begin());
        Digit factor = modulus.mul(v[col], modulus.inv(*pivot));
        if (factor == 0) {
            continue;
        }
        for (std::size_t c = 0; c < v.size(); ++c) {
            v[c] = modulus.sub(v[c], modulus.mul(factor, row[c]));
        }
    }
    return v;
}

bool in_span(const PrimeModulus &modulus, const std::vector<FieldVector> &basis, std::span<const Digit> v) {
    return is_zero(reduce_against(modulus, basis, FieldVector(v.begin(), v.end())));
}

bool is_zero(std::span<const Digit> v) {
    return std::all_of(v.begin(), v.end(), [](Digit d) { return d == 0; });
}

}  // namespace qss
