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

#ifndef QSS_PAULI_HPP
#define QSS_PAULI_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qss/dense.hpp"
#include "qss/primefield.hpp"

namespace qss {

/// The Pauli product w^phase X^x Z^z on m qudits, w = exp(2 pi i / D).
///
/// Products are kept in X-before-Z normal form. From XZ = w ZX it follows that
/// (X^a Z^b)(X^c Z^d) = w^(-b.c) X^(a+c) Z^(b+d), which is the rule multiply() uses.
class PauliProduct {
   public:
    PauliProduct(PrimeModulus d, FieldVector x, FieldVector z, Digit phase = 0);
    static PauliProduct identity(PrimeModulus d, std::size_t m);
    /// From a symplectic vector (x_1..x_m | z_1..z_m).
    static PauliProduct from_symplectic(PrimeModulus d, std::span<const Digit> xz, Digit phase = 0);
    /// X^power or Z^power on one site.
    static PauliProduct single(PrimeModulus d, std::size_t m, std::size_t site, Digit x_power, Digit z_power);

    const PrimeModulus &modulus() const { return d_; }
    std::size_t size() const { return x_.size(); }
    const FieldVector &x() const { return x_; }
    const FieldVector &z() const { return z_; }
    Digit phase() const { return phase_; }

    FieldVector symplectic() const;
    /// Number of sites that are not the identity.
    std::size_t weight() const;
    bool is_identity_projective() const;
    bool equal_projective(const PauliProduct &other) const;

    PauliProduct with_phase(Digit phase) const { return {d_, x_, z_, phase}; }
    /// Restriction to the given sites (in the given order), phase dropped.
    PauliProduct restrict_to(std::span<const std::size_t> sites) const;

    bool operator==(const PauliProduct &) const = default;

   private:
    PrimeModulus d_;
    FieldVector x_;
    FieldVector z_;
    Digit phase_;
};

PauliProduct multiply(const PauliProduct &p, const PauliProduct &q);

/// p^power, with phases tracked through repeated multiply.
PauliProduct power(const PauliProduct &p, std::uint64_t exponent);

/// lambda with p q = w^lambda q p, i.e. x_p.z_q - z_p.x_q mod D.
Digit commutation_exponent(const PauliProduct &p, const PauliProduct &q);

/// Symplectic pairing of two (x|z) vectors of equal even length; same value as commutation_exponent.
Digit symplectic_pairing(const PrimeModulus &d, std::span<const Digit> u, std::span<const Digit> v);

/// Exact D^m x D^m matrix of the product. Qudit 0 is the most significant tensor factor.
DenseOperator dense_matrix(const PauliProduct &p, std::uint64_t amplitude_cap = kDefaultAmplitudeCap);

/// Canonical text form. D = 2: "[-]IXYZ..." where Y means X^1 Z^1 with phase 0 and '-'
/// means phase 1. D > 2: "[w<phase> ]x<a>z<b> x<a>z<b> ..." with one token per site.
std::string to_string(const PauliProduct &p);

/// Inverse of to_string. For D = 2 both the compact and the token form are accepted.
PauliProduct parse_pauli(std::string_view text, PrimeModulus d);

/// A subgroup of the m-qudit Pauli group, treated projectively.
class PauliSubgroup {
   public:
    /// Throws InputError when the generators are dependent or sized inconsistently.
    PauliSubgroup(PrimeModulus d, std::size_t m, std::vector<PauliProduct> generators);

    const PrimeModulus &modulus() const { return d_; }
    std::size_t qudits() const { return m_; }
    const std::vector<PauliProduct> &generators() const { return generators_; }
    std::size_t rank() const { return generators_.size(); }
    /// Canonical (RREF) basis of the generators' symplectic span.
    const std::vector<FieldVector> &span() const { return span_; }

    bool contains(const PauliProduct &candidate) const;

   private:
    PrimeModulus d_;
    std::size_t m_;
    std::vector<PauliProduct> generators_;
    std::vector<FieldVector> span_;
};

bool subgroup_membership(const PauliSubgroup &g, const PauliProduct &candidate);

}  // namespace qss

#endif  // QSS_PAULI_HPP
