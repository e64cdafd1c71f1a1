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

#ifndef QSS_INFOGROUP_HPP
#define QSS_INFOGROUP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qss/code.hpp"
#include "qss/pauli.hpp"
#include "qss/primefield.hpp"
#include "qss/subset.hpp"

namespace qss {

/// A subgroup of the k-qudit Pauli group (projective), given by an independent generator
/// list of (x|z) vectors in Z_D^{2k}. Generators are kept in canonical RREF order.
struct InfoGroup {
    PrimeModulus d;
    std::size_t k = 0;
    /// The player subset this group belongs to; empty for unions such as G(I).
    std::optional<Subset> subset;
    std::vector<FieldVector> generators;

    /// Builds the group spanned by arbitrary vectors.
    static InfoGroup spanned_by(PrimeModulus d, std::size_t k, const std::vector<FieldVector> &vectors,
                                std::optional<Subset> subset = std::nullopt);

    std::size_t rank() const { return generators.size(); }
    bool is_trivial() const { return generators.empty(); }
    bool contains(std::span<const Digit> xz) const;
    /// Same span (generators are canonical, so this is plain equality of generator lists).
    bool same_span(const InfoGroup &other) const;
    std::vector<PauliProduct> generator_paulis() const;
    /// Every element of the group (D^rank vectors); throws ResourceError above `cap`.
    std::vector<FieldVector> elements(std::uint64_t cap = std::uint64_t{1} << 20) const;
};

/// Symplectic canonical form: basis (a_1, b_1, ..., a_r, b_r, c_1, ..., c_s) with <a_i, b_i> = 1 and every
/// other pairing zero. `transform` is a 2k x 2k symplectic matrix whose column for canonical X_i is a_i,
/// for Z_i is b_i (i <= r), for Z_{r+j} is c_j; the remaining columns complete a symplectic basis.
struct CanonicalForm {
    std::size_t r = 0;
    std::size_t s = 0;
    std::vector<FieldVector> basis;
    FieldMatrix transform;

    /// Column of `transform` that canonical X_i (0-based) maps to.
    FieldVector x_column(std::size_t qudit) const;
    FieldVector z_column(std::size_t qudit) const;
};

/// G(S): logical (x|z) vectors v for which some stabilizer word a makes B(v) + a.S vanish on the complement of S.
InfoGroup info_group(const StabilizerCode &code, Subset subset);

/// Symplectic Gram-Schmidt, lowest index first, second partner scaled so the pairing is 1.
CanonicalForm canonical_form(const InfoGroup &group);

/// Matrix of pairings <u_i, u_j> among the given vectors.
FieldMatrix pairing_matrix(const PrimeModulus &d, const std::vector<FieldVector> &vectors);

/// True iff the transform preserves the symplectic pairing: T^t J T = J.
bool is_symplectic(const FieldMatrix &transform);

bool is_full(const InfoGroup &group);

enum class AccessClass : std::uint8_t { authorized, forbidden, intermediate };

char class_letter(AccessClass c);

struct SubsetRecord {
    Subset subset;
    AccessClass access;
    std::uint8_t r;
    std::uint8_t s;
};

/// Per-subset listings are emitted in reports only up to this player count.
inline constexpr std::size_t kListingCap = 12;

/// The (A, F, I) classification of every player subset.
struct SchemeTriplet {
    std::size_t n = 0;
    std::size_t k = 0;
    /// One record per subset in enumerate_subsets() order.
    std::vector<SubsetRecord> records;
    std::vector<Subset> minimal_authorized;
    std::vector<Subset> maximal_forbidden;

    std::vector<Subset> authorized() const;
    std::vector<Subset> forbidden() const;
    std::vector<Subset> intermediate() const;
    AccessClass class_of(Subset s) const;
    const SubsetRecord &record_of(Subset s) const;
    /// q when A is exactly {S : |S| >= q}, otherwise nullopt. Ramp schemes can qualify.
    std::optional<std::size_t> threshold() const;
    /// I is empty.
    bool is_perfect() const;

   private:
    friend SchemeTriplet build_triplet(std::size_t, std::size_t, std::vector<SubsetRecord>);
    std::vector<std::uint32_t> position_;
};

struct ClassifyOptions {
    std::size_t max_players = 20;
};

/// Classifies all subsets (OpenMP fan-out over subsets). Throws std::logic_error if the
/// complement duality A <-> F fails, ResourceError if n exceeds the cap.
SchemeTriplet classify(const StabilizerCode &code, ClassifyOptions options = {});
/// Single-threaded reference of classify().
SchemeTriplet classify_serial(const StabilizerCode &code, ClassifyOptions options = {});

/// Assembles a triplet from records in enumeration order, computing antichains and checking duality.
SchemeTriplet build_triplet(std::size_t n, std::size_t k, std::vector<SubsetRecord> records);

struct PropertyCheck {
    bool duality = true;
    bool monotone = true;
    std::vector<std::string> failures;
    bool ok() const { return duality && monotone; }
};

/// Complement duality and monotonicity over the full power set.
PropertyCheck check_structure(const SchemeTriplet &triplet);

}  // namespace qss

#endif  // QSS_INFOGROUP_HPP
