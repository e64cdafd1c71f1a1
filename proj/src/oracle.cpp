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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qss/errors.hpp"

namespace qss {

namespace {

// Index bookkeeping for splitting m qudits into kept and traced parts.
struct Split {
    std::size_t kept_dim = 1;
    std::size_t traced_dim = 1;
    std::vector<std::size_t> kept_of;
    std::vector<std::size_t> traced_of;
};

Split split_indices(std::uint32_t d, std::size_t m, Subset keep) {
    Split out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < m; ++i) {
        total *= d;
        if (keep.contains(i)) {
            out.kept_dim *= d;
        } else {
            out.traced_dim *= d;
        }
    }
    out.kept_of.resize(total);
    out.traced_of.resize(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rem = idx;
        std::size_t kept = 0;
        std::size_t traced = 0;
        std::size_t kept_scale = 1;
        std::size_t traced_scale = 1;
        // Walk sites from least significant (site m-1) upward.
        for (std::size_t s = m; s-- > 0;) {
            std::size_t digit = rem % d;
            rem /= d;
            if (keep.contains(s)) {
                kept += digit * kept_scale;
                kept_scale *= d;
            } else {
                traced += digit * traced_scale;
                traced_scale *= d;
            }
        }
        out.kept_of[idx] = kept;
        out.traced_of[idx] = traced;
    }
    return out;
}

DenseOperator reshape(const DenseVector &state, const Split &split) {
    DenseOperator a = DenseOperator::Zero(static_cast<Eigen::Index>(split.kept_dim),
                                          static_cast<Eigen::Index>(split.traced_dim));
    for (std::size_t idx = 0; idx < split.kept_of.size(); ++idx) {
        a(static_cast<Eigen::Index>(split.kept_of[idx]), static_cast<Eigen::Index>(split.traced_of[idx])) =
            state(static_cast<Eigen::Index>(idx));
    }
    return a;
}

// D-th root scaling so that (theta p)^D = I.
Complex order_normalization(const PauliProduct &p) {
    const double d = p.modulus().value();
    Digit c = power(p, p.modulus().value()).phase();
    return std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(c) / (d * d));
}

// (1/D) sum_a (theta p)^a applied to v: projector onto the +1 eigenspace of theta p.
DenseVector project_plus(const PauliProduct &p, const DenseVector &v) {
    const Complex theta = order_normalization(p);
    DenseVector acc = v;
    DenseVector w = v;
    for (Digit a = 1; a < p.modulus().value(); ++a) {
        w = theta * apply_pauli(p, w);
        acc += w;
    }
    return acc / static_cast<double>(p.modulus().value());
}

DenseOperator reduced_from_reshaped(const DenseOperator &op, const std::vector<DenseOperator> &a) {
    DenseOperator out = DenseOperator::Zero(a.front().rows(), a.front().rows());
    for (Eigen::Index i = 0; i < op.rows(); ++i) {
        for (Eigen::Index j = 0; j < op.cols(); ++j) {
            Complex c = op(i, j);
            if (std::abs(c) == 0.0) {
                continue;
            }
            out.noalias() += c * (a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(j)].adjoint());
        }
    }
    return out;
}

DenseOperator combine(const DenseVector &coeffs, const std::vector<DenseOperator> &a) {
    DenseOperator out = DenseOperator::Zero(a.front().rows(), a.front().cols());
    for (std::size_t j = 0; j < a.size(); ++j) {
        out += coeffs(static_cast<Eigen::Index>(j)) * a[j];
    }
    return out;
}

FieldVector digits_of(std::uint64_t index, std::uint32_t d, std::size_t count) {
    FieldVector out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = static_cast<Digit>(index % d);
        index /= d;
    }
    return out;
}

}  // namespace

DenseVector apply_pauli(const PauliProduct &p, const DenseVector &state) {
    const Digit d = p.modulus().value();
    const std::size_t m = p.size();
    const auto total = static_cast<std::size_t>(state.size());
    DenseVector out = DenseVector::Zero(state.size());
    std::vector<Complex> roots(d);
    for (Digit i = 0; i < d; ++i) {
        roots[i] = root_of_unity(d, i);
    }
    for (std::size_t idx = 0; idx < total; ++idx) {
        Complex amp = state(static_cast<Eigen::Index>(idx));
        if (amp == Complex(0.0, 0.0)) {
            continue;
        }
        std::size_t rem = idx;
        std::size_t target = 0;
        std::size_t scale = 1;
        std::uint64_t phase = p.phase();
        for (std::size_t s = m; s-- > 0;) {
            Digit digit = static_cast<Digit>(rem % d);
            rem /= d;
            phase += std::uint64_t{p.z()[s]} * digit;
            target += ((digit + d - p.x()[s]) % d) * scale;
            scale *= d;
        }
        out(static_cast<Eigen::Index>(target)) += roots[phase % d] * amp;
    }
    return out;
}

DenseOperator reduced_state(const DenseVector &state, std::uint32_t d, std::size_t m, Subset keep) {
    auto split = split_indices(d, m, keep);
    if (split.kept_of.size() != static_cast<std::size_t>(state.size())) {
        throw InputError("state dimension does not match D^m");
    }
    DenseOperator a = reshape(state, split);
    return a * a.adjoint();
}

DenseOperator reduced_state(const DenseOperator &op, std::uint32_t d, std::size_t m, Subset keep) {
    auto split = split_indices(d, m, keep);
    if (split.kept_of.size() != static_cast<std::size_t>(op.rows()) || op.rows() != op.cols()) {
        throw InputError("operator dimension does not match D^m");
    }
    DenseOperator out = DenseOperator::Zero(static_cast<Eigen::Index>(split.kept_dim),
                                            static_cast<Eigen::Index>(split.kept_dim));
    const std::size_t total = split.kept_of.size();
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = 0; j < total; ++j) {
            if (split.traced_of[i] == split.traced_of[j]) {
                out(static_cast<Eigen::Index>(split.kept_of[i]), static_cast<Eigen::Index>(split.kept_of[j])) +=
                    op(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
    }
    return out;
}

double trace_distance(const DenseOperator &a, const DenseOperator &b) {
    DenseOperator diff = a - b;
    DenseOperator herm = 0.5 * (diff + diff.adjoint());
    Eigen::SelfAdjointEigenSolver<DenseOperator> solver(herm, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
    DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

DenseVector random_state(std::size_t dimension, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    DenseVector v(static_cast<Eigen::Index>(dimension));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        double re = gauss(rng);
        double im = gauss(rng);
        v(i) = Complex(re, im);
    }
    return v / v.norm();
}

Encoder::Encoder(const StabilizerCode &code, std::uint64_t amplitude_cap) : code_(code) {
    require_valid(code_);
    const auto dim = static_cast<Eigen::Index>(checked_dimension(d(), code_.n, amplitude_cap));
    std::vector<PauliProduct> fixers = code_.stabilizers;
    fixers.insert(fixers.end(), code_.logical_z.begin(), code_.logical_z.end());

    DenseVector c0;
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
        DenseVector v = DenseVector::Zero(dim);
        v(idx) = 1.0;
        for (const auto &g : fixers) {
            v = project_plus(g, v);
        }
        if (v.norm() > kDetectTol) {
            c0 = v / v.norm();
            break;
        }
    }
    if (c0.size() == 0) {
        throw ValidationError("code '" + code_.name + "' has an empty code space");
    }
    const auto k_dim = checked_dimension(d(), code_.k, amplitude_cap);
    codewords_.reserve(k_dim);
    for (std::uint64_t j = 0; j < k_dim; ++j) {
        // Base-D digits of j, input qudit 0 most significant.
        FieldVector digits = digits_of(j, d(), code_.k);
        std::reverse(digits.begin(), digits.end());
        // X|j> = |j-1>, so logical |j> is LX^{-j} applied to the logical |0>.
        DenseVector c = c0;
        for (std::size_t i = 0; i < code_.k; ++i) {
            const Digit steps = (d() - digits[i]) % d();
            for (Digit a = 0; a < steps; ++a) {
                c = apply_pauli(code_.logical_x[i], c);
            }
        }
        codewords_.push_back(std::move(c));
    }
}

DenseVector Encoder::encode(const DenseVector &secret) const {
    if (static_cast<std::size_t>(secret.size()) != codewords_.size()) {
        throw InputError("secret has dimension " + std::to_string(secret.size()) + ", expected D^k = " +
                         std::to_string(codewords_.size()));
    }
    DenseVector out = DenseVector::Zero(codewords_.front().size());
    for (std::size_t j = 0; j < codewords_.size(); ++j) {
        out += secret(static_cast<Eigen::Index>(j)) * codewords_[j];
    }
    return out;
}

std::vector<DenseOperator> Encoder::reshaped(Subset subset) const {
    if (!subset.is_subset_of(Subset::full(code_.n))) {
        throw InputError("subset " + subset.to_string() + " has players outside 1.." + std::to_string(code_.n));
    }
    auto split = split_indices(d(), code_.n, subset);
    std::vector<DenseOperator> out;
    out.reserve(codewords_.size());
    for (const auto &c : codewords_) {
        out.push_back(reshape(c, split));
    }
    return out;
}

DenseOperator Encoder::reduced_encoded(const DenseOperator &op, Subset subset) const {
    if (static_cast<std::size_t>(op.rows()) != codewords_.size()) {
        throw InputError("operator does not act on the input space");
    }
    return reduced_from_reshaped(op, reshaped(subset));
}

DenseOperator Encoder::reference_state(Subset subset) const {
    auto a = reshaped(subset);
    DenseOperator out = DenseOperator::Zero(a.front().rows(), a.front().rows());
    for (const auto &aj : a) {
        out += aj * aj.adjoint();
    }
    return out / static_cast<double>(codewords_.size());
}

std::vector<DenseVector> codewords(const StabilizerCode &code, std::uint64_t amplitude_cap) {
    return Encoder(code, amplitude_cap).codewords();
}

DenseVector encode(const StabilizerCode &code, const DenseVector &secret, std::uint64_t amplitude_cap) {
    return Encoder(code, amplitude_cap).encode(secret);
}

InfoGroup info_group_bruteforce(const Encoder &encoder, Subset subset) {
    const auto &code = encoder.code();
    auto a = [&] {
        std::vector<DenseOperator> out;
        auto split = split_indices(encoder.d(), code.n, subset);
        for (const auto &c : encoder.codewords()) {
            out.push_back(reshape(c, split));
        }
        return out;
    }();
    const std::uint64_t count = int_pow(encoder.d(), 2 * code.k);
    std::vector<FieldVector> hits;
    for (std::uint64_t index = 0; index < count; ++index) {
        FieldVector xz = digits_of(index, encoder.d(), 2 * code.k);
        auto op = dense_matrix(PauliProduct::from_symplectic(code.d, xz));
        if (reduced_from_reshaped(op, a).norm() > kDetectTol) {
            hits.push_back(std::move(xz));
        }
    }
    auto group = InfoGroup::spanned_by(code.d, code.k, hits, subset);
    if (hits.size() != int_pow(encoder.d(), group.rank())) {
        throw std::logic_error("nonvanishing operators on " + subset.to_string() + " do not form a group: " +
                               std::to_string(hits.size()) + " hits, span rank " + std::to_string(group.rank()));
    }
    return group;
}

bool verify_perfect_presence(const Encoder &encoder, Subset subset, const PauliProduct &p) {
    const Digit d = encoder.d();
    DenseOperator q = order_normalization(p) * dense_matrix(p);
    const auto dim = q.rows();
    std::vector<DenseOperator> powers{DenseOperator::Identity(dim, dim)};
    for (Digit a = 1; a < d; ++a) {
        powers.push_back(powers.back() * q);
    }
    std::vector<DenseOperator> reduced;
    for (Digit mu = 0; mu < d; ++mu) {
        DenseOperator projector = DenseOperator::Zero(dim, dim);
        for (Digit a = 0; a < d; ++a) {
            projector += root_of_unity(d, -static_cast<std::int64_t>(a) * mu) * powers[a];
        }
        projector /= static_cast<double>(d);
        double rank = projector.trace().real();
        if (rank < 0.5) {
            continue;
        }
        DenseOperator rho = encoder.reduced_encoded(projector, subset);
        reduced.push_back(rho / rho.trace().real());
    }
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        for (std::size_t j = i + 1; j < reduced.size(); ++j) {
            if (std::abs((reduced[i].adjoint() * reduced[j]).trace()) > kDetectTol) {
                return false;
            }
        }
    }
    return true;
}

double verify_absence(const Encoder &encoder, Subset subset, const std::vector<DenseVector> &secrets) {
    std::vector<DenseOperator> states{encoder.reference_state(subset)};
    for (const auto &s : secrets) {
        DenseVector encoded = encoder.encode(s);
        states.push_back(reduced_state(encoded, encoder.d(), encoder.code().n, subset));
    }
    double worst = 0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i + 1; j < states.size(); ++j) {
            worst = std::max(worst, trace_distance(states[i], states[j]));
        }
    }
    return worst;
}

bool ChoiReport::authorized() const {
    return std::abs(purity - 1.0) < kStateTol && entanglement_defect < kStateTol && decoupling_defect < kStateTol;
}

bool ChoiReport::forbidden() const { return product_defect < kStateTol; }

ChoiReport choi_check(const Encoder &encoder, Subset subset, const std::optional<DenseOperator> &input_op) {
    const auto &code = encoder.code();
    const Digit d = encoder.d();
    const std::size_t k = code.k;
    const std::size_t n = code.n;
    if (k + n > kMaxPlayers) {
        throw ResourceError("Choi state on k + n = " + std::to_string(k + n) + " qudits is too large");
    }
    if (!subset.is_subset_of(Subset::full(n))) {
        throw InputError("subset " + subset.to_string() + " has players outside 1.." + std::to_string(n));
    }
    const auto in_dim = static_cast<Eigen::Index>(encoder.input_dimension());
    const auto out_dim = static_cast<Eigen::Index>(encoder.output_dimension());
    DenseOperator u = input_op ? *input_op : DenseOperator::Identity(in_dim, in_dim);
    if (u.rows() != in_dim || u.cols() != in_dim) {
        throw InputError("input operator does not act on the input space");
    }
    DenseVector omega(in_dim * out_dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(in_dim));
    for (Eigen::Index j = 0; j < in_dim; ++j) {
        omega.segment(j * out_dim, out_dim) = norm * encoder.encode(u.col(j));
    }
    const std::size_t m = k + n;
    const Subset r_sites(static_cast<std::uint32_t>((std::uint64_t{1} << k) - 1));
    const Subset s_sites(subset.bits() << k);
    const Subset rest_sites(subset.complement(n).bits() << k);

    auto rho_rs = reduced_state(omega, d, m, Subset(r_sites.bits() | s_sites.bits()));
    auto rho_r = reduced_state(omega, d, m, r_sites);
    auto rho_s = reduced_state(omega, d, m, s_sites);
    auto rho_rest = reduced_state(omega, d, m, rest_sites);
    auto rho_r_rest = reduced_state(omega, d, m, Subset(r_sites.bits() | rest_sites.bits()));

    ChoiReport report;
    report.raw_purity = (rho_rs * rho_rs).trace().real();
    double purity_r = (rho_r * rho_r).trace().real();
    double purity_s = (rho_s * rho_s).trace().real();
    report.purity = report.raw_purity * purity_r / purity_s;
    DenseOperator mixed = DenseOperator::Identity(in_dim, in_dim) / static_cast<double>(in_dim);
    report.entanglement_defect = trace_distance(rho_r, mixed);
    report.decoupling_defect = trace_distance(rho_r_rest, kron(rho_r, rho_rest));
    report.product_defect = trace_distance(rho_rs, kron(rho_r, rho_s));
    return report;
}

ConcealmentReport verify_concealment(const Encoder &encoder, const TwirlPlan &plan,
                                     const std::vector<DenseVector> &secrets, Subset subset) {
    const auto &code = encoder.code();
    const Digit d = encoder.d();
    auto split = split_indices(d, code.n, subset);
    std::vector<DenseOperator> a;
    for (const auto &c : encoder.codewords()) {
        a.push_back(reshape(c, split));
    }
    const std::uint64_t keys = int_pow(d, plan.key_length);
    std::vector<DenseOperator> twirls;
    twirls.reserve(keys);
    for (std::uint64_t index = 0; index < keys; ++index) {
        FieldVector key = digits_of(index, d, plan.key_length);
        twirls.push_back(dense_matrix(twirl_operator(plan, key)));
    }
    std::vector<DenseOperator> averaged;
    for (const auto &secret : secrets) {
        if (static_cast<std::size_t>(secret.size()) != encoder.input_dimension()) {
            throw InputError("secret dimension does not match D^k");
        }
        DenseOperator acc = DenseOperator::Zero(static_cast<Eigen::Index>(split.kept_dim),
                                                static_cast<Eigen::Index>(split.kept_dim));
        for (const auto &u : twirls) {
            DenseOperator m = combine(u * secret, a);
            acc += m * m.adjoint();
        }
        averaged.push_back(acc / static_cast<double>(keys));
    }
    ConcealmentReport report{0.0, keys};
    for (std::size_t i = 0; i < averaged.size(); ++i) {
        for (std::size_t j = i + 1; j < averaged.size(); ++j) {
            report.max_distance = std::max(report.max_distance, trace_distance(averaged[i], averaged[j]));
        }
    }
    return report;
}

DenseOperator reduced_state_via_expansion(const Encoder &encoder, const DenseVector &secret, Subset subset) {
    const auto &code = encoder.code();
    const Digit d = encoder.d();
    const std::uint64_t count = int_pow(d, 2 * code.k);
    DenseOperator out;
    for (std::uint64_t index = 0; index < count; ++index) {
        FieldVector xz = digits_of(index, d, 2 * code.k);
        auto p = dense_matrix(PauliProduct::from_symplectic(code.d, xz));
        Complex c = secret.dot(p.adjoint() * secret);
        DenseOperator term = c * encoder.reduced_encoded(p, subset);
        out = index == 0 ? term : DenseOperator(out + term);
    }
    return out / static_cast<double>(encoder.input_dimension());
}

double pauli_orthonormality_error(PrimeModulus d, std::size_t m) {
    const std::uint64_t count = int_pow(d.value(), 2 * m);
    std::vector<DenseOperator> basis;
    basis.reserve(count);
    for (std::uint64_t index = 0; index < count; ++index) {
        basis.push_back(dense_matrix(PauliProduct::from_symplectic(d, digits_of(index, d.value(), 2 * m))));
    }
    const double scale = 1.0 / static_cast<double>(int_pow(d.value(), m));
    double worst = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Complex inner = scale * basis[i].conjugate().cwiseProduct(basis[j]).sum();
            Complex want = i == j ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            worst = std::max(worst, std::abs(inner - want));
        }
    }
    return worst;
}

std::vector<OracleDiscrepancy> oracle_equivalence_serial(const StabilizerCode &code, std::uint64_t amplitude_cap) {
    Encoder encoder(code, amplitude_cap);
    std::vector<OracleDiscrepancy> out;
    for (auto s : enumerate_subsets(code.n)) {
        auto symbolic = info_group(code, s);
        auto brute = info_group_bruteforce(encoder, s);
        if (!symbolic.same_span(brute)) {
            out.push_back({s, std::move(symbolic), std::move(brute)});
        }
    }
    return out;
}

std::vector<OracleDiscrepancy> oracle_equivalence(const StabilizerCode &code, std::uint64_t amplitude_cap) {
    Encoder encoder(code, amplitude_cap);
    auto subsets = enumerate_subsets(code.n);
    std::vector<std::optional<OracleDiscrepancy>> found(subsets.size());
    const auto count = static_cast<std::int64_t>(subsets.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
        auto s = subsets[static_cast<std::size_t>(i)];
        auto symbolic = info_group(code, s);
        auto brute = info_group_bruteforce(encoder, s);
        if (!symbolic.same_span(brute)) {
            found[static_cast<std::size_t>(i)] = OracleDiscrepancy{s, std::move(symbolic), std::move(brute)};
        }
    }
    std::vector<OracleDiscrepancy> out;
    for (auto &f : found) {
        if (f) {
            out.push_back(std::move(*f));
        }
    }
    return out;
}

}  // namespace qss
