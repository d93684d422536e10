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

#ifndef PFCODES_PF_OPERATOR_HPP
#define PFCODES_PF_OPERATOR_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfcodes/zmod_matrix.hpp"

namespace pfcodes {

/// Element w^mu * g_1^{a_1} ... g_{2n}^{a_{2n}} of the parafermion group
/// PF(D, 2n), where g_j are the mode operators (g_j^D = 1 and
/// g_j g_k = W g_k g_j for j < k, W = exp(2 pi i / D)) and w = exp(i pi / D)
/// is a square root of W. The phase exponent lives in Z_{2D} so that
/// half-steps such as the i in i g_2 g_3 (D = 2) are representable.
///
/// Exponent vectors are always stored in normal order, indexed by mode
/// (0-based here; mode j in text and JSON is 1-based).
class PfOperator {
public:
    /// Identity of PF(D, num_modes).
    PfOperator(Residue modulus, std::size_t num_modes);
    /// Reduces mu modulo 2D and alpha modulo D.
    PfOperator(Residue modulus, Residue mu, std::vector<Residue> alpha);

    /// Single mode operator g_{mode}^{power}, mode 0-based.
    static PfOperator mode(Residue modulus, std::size_t num_modes, std::size_t mode, Residue power = 1);

    Residue modulus() const { return modulus_; }
    std::size_t num_modes() const { return alpha_.size(); }
    Residue mu() const { return mu_; }
    std::span<const Residue> alpha() const { return alpha_; }
    Residue alpha(std::size_t i) const { return alpha_[i]; }

    bool is_identity() const;
    /// True when the exponent vector is zero (a pure phase).
    bool is_scalar() const;

    PfOperator with_phase(Residue mu) const { return {modulus_, mu, alpha_}; }

    bool operator==(const PfOperator&) const = default;
    auto operator<=>(const PfOperator&) const = default;

private:
    Residue modulus_;
    Residue mu_ = 0;
    std::vector<Residue> alpha_;
};

/// c = alpha Lambda beta^T mod D with Lambda_ij = sgn(j - i); a b = W^c b a.
Residue commutation_exponent(const PfOperator& a, const PfOperator& b);

/// Same form on raw exponent vectors of equal length.
Residue commutation_exponent(std::span<const Residue> alpha, std::span<const Residue> beta, Residue modulus);

/// Normal-ordered product a*b with exactly tracked phase.
PfOperator multiply(const PfOperator& a, const PfOperator& b);
PfOperator inverse(const PfOperator& a);
PfOperator power(const PfOperator& a, std::uint64_t exponent);

/// Z_D charge, the sum of exponents. Zero iff the operator preserves parity.
Residue charge(const PfOperator& a);
std::size_t weight(const PfOperator& a);
/// Sorted 0-based mode indices with nonzero exponent.
std::vector<std::size_t> support(const PfOperator& a);
/// max(support) - min(support) + 1 on the mode chain; 0 for scalars.
std::size_t diameter(const PfOperator& a);

/// alpha * Lambda over Z_D; entry j is sum_{i<j} alpha_i - sum_{i>j} alpha_i.
std::vector<Residue> lambda_row(std::span<const Residue> alpha, Residue modulus);

/// Lambda as a ZModMatrix, with -1 stored as D - 1.
ZModMatrix lambda_matrix(Residue modulus, std::size_t num_modes);

/// Text form such as "w^3 g1^2 g2 g6": the optional w^k token is the phase
/// exponent in Z_{2D}, gJ^e is mode J (1-based) to power e. The identity is "1".
std::string to_string(const PfOperator& a);

/// Parses the grammar produced by to_string. Exponents may be negative
/// ("g3^-1") and repeated or out-of-order modes are normal-ordered with the
/// correct phase. Throws std::invalid_argument on malformed input.
PfOperator parse_operator(std::string_view text, Residue modulus, std::size_t num_modes);

}  // namespace pfcodes

#endif  // PFCODES_PF_OPERATOR_HPP
