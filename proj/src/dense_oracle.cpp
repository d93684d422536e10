// Copyright 2026 The pfcodes Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pfcodes/dense_oracle.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

namespace pfcodes::oracle {

namespace {

Complex root(Residue order, Residue power) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(power) / static_cast<double>(order);
    return std::polar(1.0, angle);
}

Matrix matrix_power(const Matrix& m, Residue e) {
    Matrix out = Matrix::Identity(m.rows(), m.cols());
    for (Residue i = 0; i < e; ++i) out = out * m;
    return out;
}

// Exponent k with z ~ exp(2 pi i k / order), or -1 if z is not such a root.
Residue root_index(Complex z, Residue order, double eps) {
    if (std::abs(std::abs(z) - 1.0) > eps) return -1;
    const double t = std::arg(z) * static_cast<double>(order) / (2.0 * std::numbers::pi);
    const double r = std::round(t);
    if (std::abs(t - r) > eps * static_cast<double>(order)) return -1;
    return mod(static_cast<Residue>(r), order);
}

}  // namespace

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

ClockOps clock_ops(Residue modulus) {
    if (modulus < 2) throw std::invalid_argument("clock_ops: D must be at least 2");
    const auto d = static_cast<Eigen::Index>(modulus);
    ClockOps ops{Matrix::Zero(d, d), Matrix::Zero(d, d)};
    for (Eigen::Index j = 0; j < d; ++j) {
        ops.x((j + 1) % d, j) = 1.0;
        ops.z(j, j) = root(modulus, j);
    }
    return ops;
}

Monomial Monomial::identity(std::size_t dim) {
    Monomial m;
    m.perm.resize(dim);
    m.value.assign(dim, 1.0);
    for (std::size_t i = 0; i < dim; ++i) m.perm[i] = i;
    return m;
}

Monomial Monomial::from_dense(const Matrix& m) {
    Monomial out;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        Eigen::Index found = -1;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (std::abs(m(r, c)) < kEpsilon) continue;
            if (found >= 0) throw std::invalid_argument("matrix is not monomial");
            found = r;
        }
        if (found < 0) throw std::invalid_argument("matrix has a zero column");
        out.perm.push_back(static_cast<std::size_t>(found));
        out.value.push_back(m(found, c));
    }
    return out;
}

Matrix Monomial::dense() const {
    const auto n = static_cast<Eigen::Index>(perm.size());
    Matrix m = Matrix::Zero(n, n);
    for (std::size_t c = 0; c < perm.size(); ++c) m(static_cast<Eigen::Index>(perm[c]), static_cast<Eigen::Index>(c)) = value[c];
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.perm.resize(b.perm.size());
    out.value.resize(b.perm.size());
    for (std::size_t c = 0; c < b.perm.size(); ++c) {
        out.perm[c] = a.perm[b.perm[c]];
        out.value[c] = a.value[b.perm[c]] * b.value[c];
    }
    return out;
}

DenseRep::DenseRep(Residue modulus, std::size_t num_pairs, std::size_t dimension_cap)
    : modulus_(modulus), num_pairs_(num_pairs), dimension_(1) {
    if (num_pairs == 0) throw std::invalid_argument("DenseRep: need at least one qudit");
    for (std::size_t i = 0; i < num_pairs; ++i) {
        dimension_ *= static_cast<std::size_t>(modulus);
        if (dimension_ > dimension_cap) {
            throw std::length_error("DenseRep: dimension D^n exceeds the cap of " + std::to_string(dimension_cap));
        }
    }
    const ClockOps ops = clock_ops(modulus);
    const auto d = static_cast<Eigen::Index>(modulus);
    const Matrix id = Matrix::Identity(d, d);
    const Complex even_phase = root(2 * modulus, modulus - 1);
    for (std::size_t j = 0; j < num_pairs; ++j) {
        Matrix odd = Matrix::Identity(1, 1), even = Matrix::Identity(1, 1);
        for (std::size_t k = 0; k < num_pairs; ++k) {
            const Matrix& a = k < j ? ops.x : (k == j ? ops.z : id);
            const Matrix b = k < j ? ops.x : (k == j ? Matrix(ops.z * ops.x) : id);
            odd = kron(odd, a);
            even = kron(even, b);
        }
        modes_.push_back(std::move(odd));
        modes_.push_back(even_phase * even);
    }
    for (const auto& m : modes_) mode_monomials_.push_back(Monomial::from_dense(m));
}

void DenseRep::check(const PfOperator& op) const {
    if (op.modulus() != modulus_ || op.num_modes() != num_modes()) {
        throw std::invalid_argument("operator does not match the representation's D and mode count");
    }
}

Matrix DenseRep::op_matrix(const PfOperator& op) const {
    check(op);
    const auto dim = static_cast<Eigen::Index>(dimension_);
    Matrix out = Matrix::Identity(dim, dim);
    for (std::size_t j = 0; j < num_modes(); ++j) {
        if (op.alpha(j) != 0) out = out * matrix_power(modes_[j], op.alpha(j));
    }
    return root(2 * modulus_, op.mu()) * out;
}

Monomial DenseRep::op_monomial(const PfOperator& op) const {
    check(op);
    Monomial out = Monomial::identity(dimension_);
    for (std::size_t j = 0; j < num_modes(); ++j)
        for (Residue e = 0; e < op.alpha(j); ++e) out = out * mode_monomials_[j];
    const Complex phase = root(2 * modulus_, op.mu());
    for (auto& v : out.value) v *= phase;
    return out;
}

Matrix DenseRep::charge_operator() const {
    const auto dim = static_cast<Eigen::Index>(dimension_);
    Matrix q = Matrix::Identity(dim, dim);
    for (std::size_t j = 0; j < num_pairs_; ++j) q = q * modes_[2 * j].adjoint() * modes_[2 * j + 1];
    return q;
}

Projector projector(const DenseRep& rep, const PfCode& code, std::size_t group_cap) {
    require_valid(code);
    if (code.modulus() != rep.modulus() || code.num_modes() != rep.num_modes()) {
        throw std::invalid_argument("projector: code does not match the representation");
    }
    const Residue order = 2 * rep.modulus();
    // Group elements keyed by (perm, phase exponents), so equality is exact.
    auto key_of = [&](const Monomial& m) {
        std::vector<std::int64_t> key(m.perm.begin(), m.perm.end());
        for (const auto& v : m.value) {
            const Residue idx = root_index(v, order, 1e-6);
            if (idx < 0) throw std::runtime_error("projector: group element has a non-root phase");
            key.push_back(idx);
        }
        return key;
    };
    std::vector<Monomial> gens;
    for (const auto& g : code.generators()) gens.push_back(rep.op_monomial(g));

    std::map<std::vector<std::int64_t>, std::size_t> seen;
    std::vector<Monomial> elements{Monomial::identity(rep.dimension())};
    seen.emplace(key_of(elements.front()), 0);
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (const auto& g : gens) {
            Monomial next = elements[i] * g;
            auto key = key_of(next);
            if (seen.contains(key)) continue;
            if (elements.size() >= group_cap) throw std::length_error("projector: group exceeds the enumeration cap");
            seen.emplace(std::move(key), elements.size());
            elements.push_back(std::move(next));
        }
    }

    const auto dim = static_cast<Eigen::Index>(rep.dimension());
    Projector out;
    out.p = Matrix::Zero(dim, dim);
    for (const auto& e : elements)
        for (std::size_t c = 0; c < e.perm.size(); ++c)
            out.p(static_cast<Eigen::Index>(e.perm[c]), static_cast<Eigen::Index>(c)) += e.value[c];
    out.p /= static_cast<double>(elements.size());
    out.group_size = elements.size();
    out.trace = out.p.trace().real();

    const double tol = 1e-9 * std::max<double>(1.0, static_cast<double>(dim) / 64.0);
    if (max_abs(out.p * out.p - out.p) > tol) throw std::runtime_error("projector: P^2 != P");
    if (max_abs(out.p - out.p.adjoint()) > tol) throw std::runtime_error("projector: P is not Hermitian");
    return out;
}

std::vector<Residue> syndrome_sim(const DenseRep& rep, const PfCode& code, const PfOperator& error,
                                  const Projector& proj) {
    Eigen::Index best = 0;
    proj.p.colwise().norm().maxCoeff(&best);
    Eigen::VectorXcd psi = proj.p.col(best);
    if (psi.norm() < 1e-6) throw std::runtime_error("syndrome_sim: empty code space");
    psi.normalize();
    const Eigen::VectorXcd phi = rep.op_monomial(error).dense() * psi;

    std::vector<Residue> out;
    for (const auto& g : code.generators()) {
        const Eigen::VectorXcd gphi = rep.op_monomial(g).dense() * phi;
        const Complex lambda = phi.dot(gphi);
        if ((gphi - lambda * phi).norm() > 1e-6) throw std::runtime_error("syndrome_sim: not an eigenvector");
        const Residue idx = root_index(lambda, rep.modulus(), 1e-6);
        if (idx < 0) throw std::runtime_error("syndrome_sim: eigenvalue is not a D-th root of unity");
        out.push_back(idx);
    }
    return out;
}

std::vector<OracleCheck> relation_suite(const DenseRep& rep, double eps) {
    std::vector<OracleCheck> out;
    const auto dim = static_cast<Eigen::Index>(rep.dimension());
    const Matrix id = Matrix::Identity(dim, dim);
    const Residue d = rep.modulus();
    const Complex w = root(d, 1);

    double unitary = 0, order = 0, exchange = 0, charge_err = 0;
    const Matrix q = rep.charge_operator();
    for (std::size_t j = 0; j < rep.num_modes(); ++j) {
        const Matrix& g = rep.mode(j);
        unitary = std::max(unitary, max_abs(g * g.adjoint() - id));
        order = std::max(order, max_abs(matrix_power(g, d) - id));
        for (std::size_t k = j + 1; k < rep.num_modes(); ++k)
            exchange = std::max(exchange, max_abs(g * rep.mode(k) - w * rep.mode(k) * g));
        // A single mode has charge 1.
        charge_err = std::max(charge_err, max_abs(g * q - w * q * g));
    }
    const std::string tag = " (D=" + std::to_string(d) + ", n=" + std::to_string(rep.num_pairs()) + ")";
    out.push_back({"modes unitary" + tag, unitary, unitary < eps});
    out.push_back({"g^D = 1" + tag, order, order < eps});
    out.push_back({"g_j g_k = W g_k g_j" + tag, exchange, exchange < eps});
    out.push_back({"g Q = W^charge Q g" + tag, charge_err, charge_err < eps});
    return out;
}

namespace {

// Max-abs entry of a - b. Monomials with equal permutations differ only in
// their values; otherwise fall back to dense matrices.
double monomial_distance(const Monomial& a, const Monomial& b) {
    if (a.perm != b.perm) return max_abs(a.dense() - b.dense());
    double worst = 0;
    for (std::size_t c = 0; c < a.value.size(); ++c) worst = std::max(worst, std::abs(a.value[c] - b.value[c]));
    return worst;
}

Monomial adjoint(const Monomial& m) {
    Monomial out{std::vector<std::size_t>(m.perm.size()), std::vector<Complex>(m.value.size())};
    for (std::size_t c = 0; c < m.perm.size(); ++c) {
        out.perm[m.perm[c]] = c;
        out.value[m.perm[c]] = std::conj(m.value[c]);
    }
    return out;
}

}  // namespace

OracleCheck homomorphism_suite(const DenseRep& rep, std::size_t trials, std::uint64_t seed, double eps) {
    std::mt19937_64 rng(seed);
    const Residue d = rep.modulus();
    std::uniform_int_distribution<Residue> digit(0, d - 1), phase(0, 2 * d - 1);
    auto random_op = [&] {
        std::vector<Residue> alpha(rep.num_modes());
        for (auto& e : alpha) e = digit(rng);
        return PfOperator(d, phase(rng), std::move(alpha));
    };
    // Every trial runs on monomials (exact matrix products for this shape);
    // every dense_stride-th trial is also repeated with dense products.
    constexpr std::size_t dense_stride = 25;
    double worst = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const PfOperator a = random_op(), b = random_op();
        const Monomial ma = rep.op_monomial(a);
        worst = std::max(worst, monomial_distance(ma * rep.op_monomial(b), rep.op_monomial(multiply(a, b))));
        worst = std::max(worst, monomial_distance(rep.op_monomial(inverse(a)), adjoint(ma)));
        if (t % dense_stride == 0) {
            const Matrix da = rep.op_matrix(a);
            worst = std::max(worst, max_abs(da - ma.dense()));
            worst = std::max(worst, max_abs(da * rep.op_matrix(b) - rep.op_matrix(multiply(a, b))));
            worst = std::max(worst, max_abs(rep.op_matrix(inverse(a)) - da.adjoint()));
        }
    }
    const std::string name = "op_matrix homomorphism (D=" + std::to_string(d) + ", n=" +
                             std::to_string(rep.num_pairs()) + ", " + std::to_string(trials) + " trials)";
    return {name, worst, worst < eps};
}

}  // namespace pfcodes::oracle
