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

#ifndef QSS_ORACLE_HPP
#define QSS_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qss/code.hpp"
#include "qss/dense.hpp"
#include "qss/infogroup.hpp"
#include "qss/subset.hpp"
#include "qss/twirl.hpp"

namespace qss {

/// Applies the Pauli product (as a monomial matrix) to a state on p.size() qudits.
DenseVector apply_pauli(const PauliProduct &p, const DenseVector &state);

/// Partial trace of |state><state| onto the kept sites (kept order preserved, site 0 most significant).
DenseOperator reduced_state(const DenseVector &state, std::uint32_t d, std::size_t m, Subset keep);
/// Partial trace of an operator onto the kept sites.
DenseOperator reduced_state(const DenseOperator &op, std::uint32_t d, std::size_t m, Subset keep);

double trace_distance(const DenseOperator &a, const DenseOperator &b);
DenseOperator kron(const DenseOperator &a, const DenseOperator &b);

/// Normalized random state of the given dimension (complex Gaussian amplitudes).
DenseVector random_state(std::size_t dimension, std::mt19937_64 &rng);

/// Exact dense encoder for a stabilizer code: codewords |c_j> and the isometry V.
class Encoder {
   public:
    /// Throws ResourceError when D^n exceeds the cap, ValidationError when the code space is empty.
    explicit Encoder(const StabilizerCode &code, std::uint64_t amplitude_cap = kDefaultAmplitudeCap);

    const StabilizerCode &code() const { return code_; }
    std::uint32_t d() const { return code_.d.value(); }
    std::size_t input_dimension() const { return codewords_.size(); }
    std::size_t output_dimension() const { return static_cast<std::size_t>(codewords_.front().size()); }
    const std::vector<DenseVector> &codewords() const { return codewords_; }

    /// V |secret>.
    DenseVector encode(const DenseVector &secret) const;
    /// Tr_{complement of S}[V op V^dagger] for an operator on the input space.
    DenseOperator reduced_encoded(const DenseOperator &op, Subset subset) const;
    /// Tr_{complement of S}[V V^dagger] / D^k, the secret-independent state.
    DenseOperator reference_state(Subset subset) const;

   private:
    // Codeword j reshaped to a (dim S) x (dim complement) matrix.
    std::vector<DenseOperator> reshaped(Subset subset) const;

    StabilizerCode code_;
    std::vector<DenseVector> codewords_;
};

std::vector<DenseVector> codewords(const StabilizerCode &code, std::uint64_t amplitude_cap = kDefaultAmplitudeCap);
DenseVector encode(const StabilizerCode &code, const DenseVector &secret,
                   std::uint64_t amplitude_cap = kDefaultAmplitudeCap);

/// All (x, z) in Z_D^{2k} whose encoded operator has partial trace onto S of norm > 1e-9, as a group.
/// Throws std::logic_error if the hits are not closed under addition.
InfoGroup info_group_bruteforce(const Encoder &encoder, Subset subset);

/// Encoded eigenspaces of p (from distinct eigenvalues) reduce to orthogonally supported states on S.
bool verify_perfect_presence(const Encoder &encoder, Subset subset, const PauliProduct &p);

/// Max trace distance between reduced encoded secrets, pairwise and against the reference state.
double verify_absence(const Encoder &encoder, Subset subset, const std::vector<DenseVector> &secrets);

struct ChoiReport {
    /// D^{-k} Tr[rho_RS^2] / Tr[rho_S^2] (with D^{-k} = Tr[rho_R^2]): 1 iff S is authorized, D^{-2k} iff forbidden.
    double purity = 0;
    double raw_purity = 0;
    /// Trace distance of rho_R from the maximally mixed state.
    double entanglement_defect = 0;
    /// Trace distance of rho_{R,complement} from rho_R (x) rho_complement; zero iff authorized.
    double decoupling_defect = 0;
    /// Trace distance of rho_RS from rho_R (x) rho_S; zero iff forbidden.
    double product_defect = 0;

    bool authorized() const;
    bool forbidden() const;
};

/// Choi state (I_R (x) V U)|Psi+> reduced to R u S; U is an optional input unitary (e.g. a known twirl).
ChoiReport choi_check(const Encoder &encoder, Subset subset, const std::optional<DenseOperator> &input_op = std::nullopt);

struct ConcealmentReport {
    double max_distance = 0;
    std::uint64_t keys = 0;
};

/// Averages each encoded secret over all D^l twirl keys (twirl applied before encoding), reduces to S,
/// and returns the largest pairwise trace distance.
ConcealmentReport verify_concealment(const Encoder &encoder, const TwirlPlan &plan,
                                     const std::vector<DenseVector> &secrets, Subset subset);

/// (1/D^k) sum_{x,z} c(x,z) Tr_{complement}[V X^x Z^z V^dagger], c(x,z) = <psi|(X^x Z^z)^dagger|psi>.
DenseOperator reduced_state_via_expansion(const Encoder &encoder, const DenseVector &secret, Subset subset);

/// Largest deviation of (1/D^m) Tr[P^dagger Q] from delta_{PQ} over the phase-free Pauli basis on m qudits.
double pauli_orthonormality_error(PrimeModulus d, std::size_t m);

struct OracleDiscrepancy {
    Subset subset;
    InfoGroup symbolic;
    InfoGroup brute_force;
};

/// Compares info_group with info_group_bruteforce on every subset (OpenMP over subsets).
std::vector<OracleDiscrepancy> oracle_equivalence(const StabilizerCode &code,
                                                  std::uint64_t amplitude_cap = kDefaultAmplitudeCap);
std::vector<OracleDiscrepancy> oracle_equivalence_serial(const StabilizerCode &code,
                                                         std::uint64_t amplitude_cap = kDefaultAmplitudeCap);

}  // namespace qss

#endif  // QSS_ORACLE_HPP
