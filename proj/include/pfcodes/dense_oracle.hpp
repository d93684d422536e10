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

// Explicit matrices for small systems. Everything here is computed from the
// clock matrices and the Jordan-Wigner construction, independently of the
// exponent arithmetic in pf_operator, so the two can be checked against each
// other.

#ifndef PFCODES_DENSE_ORACLE_HPP
#define PFCODES_DENSE_ORACLE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "pfcodes/stab_code.hpp"

namespace pfcodes::oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr double kEpsilon = 1e-9;
inline constexpr std::size_t kDimensionCap = 2048;

double max_abs(const Matrix& m);
Matrix kron(const Matrix& a, const Matrix& b);

struct ClockOps {
    Matrix x;  // sum_j |j+1><j|
    Matrix z;  // diag(w^j), w = exp(2 pi i / D)
};
ClockOps clock_ops(Residue modulus);

/// Matrix with exactly one nonzero entry per column: column c maps to row
/// perm[c] with weight value[c]. All operators in the oracle have this shape.
struct Monomial {
    std::vector<std::size_t> perm;
    std::vector<Complex> value;

    static Monomial identity(std::size_t dim);
    /// Throws std::invalid_argument if `m` is not monomial.
    static Monomial from_dense(const Matrix& m);
    Matrix dense() const;
};
Monomial operator*(const Monomial& a, const Monomial& b);

/// The 2n Jordan-Wigner modes on n qudits, qudit 1 most significant:
///   mode 2j-1 = (prod_{k<j} X_k) Z_j,  mode 2j = w2^{D-1} (prod_{k<j} X_k) Z_j X_j
/// with w2 = exp(i pi / D).
class DenseRep {
public:
    /// Throws std::length_error when D^n exceeds `dimension_cap`.
    DenseRep(Residue modulus, std::size_t num_pairs, std::size_t dimension_cap = kDimensionCap);

    Residue modulus() const { return modulus_; }
    std::size_t num_pairs() const { return num_pairs_; }
    std::size_t num_modes() const { return 2 * num_pairs_; }
    std::size_t dimension() const { return dimension_; }

    /// Mode matrix, 0-based.
    const Matrix& mode(std::size_t j) const { return modes_[j]; }
    const Monomial& mode_monomial(std::size_t j) const { return mode_monomials_[j]; }

    /// w2^mu g_1^{a_1} ... g_{2n}^{a_{2n}} by dense products.
    Matrix op_matrix(const PfOperator& op) const;
    /// Same operator as a monomial; cheap for large dimensions.
    Monomial op_monomial(const PfOperator& op) const;
    /// Q = prod_j g_{2j-1}^dagger g_{2j}.
    Matrix charge_operator() const;

private:
    void check(const PfOperator& op) const;

    Residue modulus_;
    std::size_t num_pairs_;
    std::size_t dimension_;
    std::vector<Matrix> modes_;
    std::vector<Monomial> mode_monomials_;
};

struct Projector {
    Matrix p;
    double trace = 0;
    /// Number of distinct group elements summed.
    std::size_t group_size = 0;
};

/// P = (1/|S|) sum over the group generated by the code's generators. Checks
/// P^2 = P = P^dagger within tolerance and throws std::runtime_error otherwise.
Projector projector(const DenseRep& rep, const PfCode& code, std::size_t group_cap = 1u << 16);

/// Eigenphase exponents of each generator on E|psi>, |psi> a codeword taken
/// from P. Throws std::runtime_error if a phase is not a D-th root of unity.
std::vector<Residue> syndrome_sim(const DenseRep& rep, const PfCode& code, const PfOperator& error,
                                  const Projector& proj);

struct OracleCheck {
    std::string name;
    double error = 0;
    bool pass = false;
};

/// g_j^D = 1, g_j g_k = W g_k g_j (j < k), g^a Q = W^{charge(a)} Q g^a on
/// every mode, and unitarity of each mode.
std::vector<OracleCheck> relation_suite(const DenseRep& rep, double eps = kEpsilon);

/// op_matrix(a) op_matrix(b) = op_matrix(multiply(a, b)) and
/// op_matrix(inverse(a)) = op_matrix(a)^dagger on random operators.
OracleCheck homomorphism_suite(const DenseRep& rep, std::size_t trials, std::uint64_t seed, double eps = kEpsilon);

}  // namespace pfcodes::oracle

#endif  // PFCODES_DENSE_ORACLE_HPP
