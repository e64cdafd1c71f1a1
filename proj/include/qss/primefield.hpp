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

#ifndef QSS_PRIMEFIELD_HPP
#define QSS_PRIMEFIELD_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace qss {

using Digit = std::uint32_t;
using FieldVector = std::vector<Digit>;

bool is_prime(std::uint64_t value);

/// A validated prime modulus D. Construction throws InputError for composite values
/// or values outside [2, 2^31).
class PrimeModulus {
   public:
    explicit PrimeModulus(std::uint64_t value);

    Digit value() const { return value_; }

    Digit reduce(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(value_);
        return static_cast<Digit>(r < 0 ? r + value_ : r);
    }
    Digit add(Digit a, Digit b) const { return static_cast<Digit>((std::uint64_t{a} + b) % value_); }
    Digit sub(Digit a, Digit b) const { return static_cast<Digit>((std::uint64_t{a} + value_ - b) % value_); }
    Digit neg(Digit a) const { return a == 0 ? 0 : value_ - a; }
    Digit mul(Digit a, Digit b) const { return static_cast<Digit>((std::uint64_t{a} * b) % value_); }
    Digit pow(Digit base, std::uint64_t exponent) const;
    /// Multiplicative inverse; throws InputError for zero.
    Digit inv(Digit a) const;

    bool operator==(const PrimeModulus &) const = default;

   private:
    Digit value_;
};

/// A single element of Z_D carrying its modulus. Mixing moduli throws.
class FieldElement {
   public:
    FieldElement(Digit value, PrimeModulus modulus);

    Digit value() const { return value_; }
    const PrimeModulus &modulus() const { return modulus_; }

    FieldElement operator+(const FieldElement &other) const;
    FieldElement operator-(const FieldElement &other) const;
    FieldElement operator*(const FieldElement &other) const;
    FieldElement operator-() const;
    FieldElement inverse() const;
    bool operator==(const FieldElement &) const = default;

   private:
    void require_same(const FieldElement &other) const;
    Digit value_;
    PrimeModulus modulus_;
};

/// Dense row-major matrix over Z_D.
class FieldMatrix {
   public:
    FieldMatrix(PrimeModulus modulus, std::size_t rows, std::size_t cols);
    FieldMatrix(PrimeModulus modulus, std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static FieldMatrix identity(PrimeModulus modulus, std::size_t size);
    /// Rows must all have the same length. An empty row list yields a 0 x cols matrix.
    static FieldMatrix from_rows(PrimeModulus modulus, const std::vector<FieldVector> &rows, std::size_t cols);

    const PrimeModulus &modulus() const { return modulus_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Digit &at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Digit at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    FieldElement element(std::size_t r, std::size_t c) const { return {at(r, c), modulus_}; }
    std::span<Digit> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Digit> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    FieldVector row_vector(std::size_t r) const;

    FieldVector apply(std::span<const Digit> x) const;
    FieldMatrix operator*(const FieldMatrix &other) const;
    FieldMatrix transpose() const;

    bool operator==(const FieldMatrix &) const = default;

   private:
    PrimeModulus modulus_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Digit> data_;
};

struct RowReduction {
    FieldMatrix reduced;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form over Z_D. Zero rows are kept at the bottom.
RowReduction row_reduce(const FieldMatrix &m);

/// One solution of m x = b with free variables set to zero, or nullopt if inconsistent.
std::optional<FieldVector> solve(const FieldMatrix &m, std::span<const Digit> b);

/// Basis of {x : m x = 0}; one vector per free column, in column order.
std::vector<FieldVector> nullspace(const FieldMatrix &m);

std::size_t rank(const FieldMatrix &m);

/// Nonzero rows of the RREF of the stacked vectors: a canonical basis of their span.
std::vector<FieldVector> span_basis(PrimeModulus modulus, const std::vector<FieldVector> &vectors, std::size_t dim);

/// Reduces v against a canonical basis (as returned by span_basis). The result is zero iff v is in the span.
FieldVector reduce_against(const PrimeModulus &modulus, const std::vector<FieldVector> &basis, FieldVector v);

bool in_span(const PrimeModulus &modulus, const std::vector<FieldVector> &basis, std::span<const Digit> v);

bool is_zero(std::span<const Digit> v);

}  // namespace qss

#endif  // QSS_PRIMEFIELD_HPP
