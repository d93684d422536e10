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

#ifndef PFCODES_QUDIT_CODE_HPP
#define PFCODES_QUDIT_CODE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pfcodes/zmod_matrix.hpp"

namespace pfcodes {

/// One qudit Weyl operator X^x Z^z (phase omitted) on n qudits.
struct QuditRow {
    std::vector<Residue> x;
    std::vector<Residue> z;

    bool operator==(const QuditRow&) const = default;
};

/// Check matrix (X | Z) of a qudit stabilizer code over Z_D.
class QuditCheckMatrix {
public:
    QuditCheckMatrix(Residue modulus, std::size_t num_qudits, std::vector<QuditRow> rows = {});

    Residue modulus() const { return modulus_; }
    std::size_t num_qudits() const { return num_qudits_; }
    const std::vector<QuditRow>& rows() const { return rows_; }

    /// Rows as vectors (x | z) of length 2n.
    ZModMatrix symplectic_matrix() const;

    bool operator==(const QuditCheckMatrix&) const = default;

private:
    Residue modulus_;
    std::size_t num_qudits_;
    std::vector<QuditRow> rows_;
};

/// x_a . z_b - z_a . x_b mod D; zero iff the two Weyl operators commute.
Residue symplectic_product(const QuditRow& a, const QuditRow& b, Residue modulus);

/// Index pairs of rows that fail to commute.
std::vector<std::pair<std::size_t, std::size_t>> noncommuting_pairs(const QuditCheckMatrix& q);

BigCount qudit_group_order(const QuditCheckMatrix& q);
/// D^n / |S|; throws std::invalid_argument for non-commuting rows.
BigCount qudit_codespace_dim(const QuditCheckMatrix& q);
std::optional<std::size_t> qudit_logical_count(const QuditCheckMatrix& q);

struct QuditDistanceResult {
    std::optional<std::size_t> distance;
    std::size_t searched_weight = 0;
    std::optional<QuditRow> certificate;
};

/// Minimum weight (number of qudits acted on) of a Weyl operator that commutes
/// with every check but is not in the check span. Exhaustive in increasing
/// weight, up to max_weight (default n).
QuditDistanceResult qudit_distance(const QuditCheckMatrix& q, std::optional<std::size_t> max_weight = {});

/// The cyclic [[5,1,3]]_D code with checks X Z Z^-1 X^-1 I and its shifts.
QuditCheckMatrix five_qudit_code(Residue modulus);

}  // namespace pfcodes

#endif  // PFCODES_QUDIT_CODE_HPP
