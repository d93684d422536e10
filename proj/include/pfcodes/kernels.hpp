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

// Enumeration kernels behind distance(). Each parallel kernel has a serial
// twin that defines the reference result; tests and bench/ compare the two.

#ifndef PFCODES_KERNELS_HPP
#define PFCODES_KERNELS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pfcodes/stab_code.hpp"
#include "pfcodes/zmod_matrix.hpp"

namespace pfcodes::kernels {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Combination of the given colex rank among w-subsets of {0, 1, ...}.
void unrank_colex(std::uint64_t rank, std::size_t w, std::span<std::size_t> out);
/// Advances to the next w-subset of {0..n-1} in colex order; false at the end.
bool next_colex(std::span<std::size_t> comb, std::size_t n);

/// Logical-operator test with precomputed check columns: mode i contributes
/// alpha_i * column(i) to the syndrome.
class LogicalPredicate {
public:
    explicit LogicalPredicate(const PfCode& code);

    Residue modulus() const { return modulus_; }
    std::size_t num_modes() const { return num_modes_; }

    bool centralizes(std::span<const std::size_t> support, std::span<const Residue> values) const;
    bool in_stabilizer(std::span<const Residue> alpha) const { return stabilizer_.contains(alpha); }

private:
    Residue modulus_;
    std::size_t num_modes_;
    std::size_t num_checks_;
    std::vector<Residue> columns_;
    RowSpan stabilizer_;
};

struct WeightScan {
    /// First logical of the scanned weight in enumeration order.
    std::optional<std::vector<Residue>> hit;
    std::uint64_t candidates = 0;
};

WeightScan scan_weight_serial(const LogicalPredicate& pred, std::size_t weight);
WeightScan scan_weight_parallel(const LogicalPredicate& pred, std::size_t weight, int threads = 0);

}  // namespace pfcodes::kernels

#endif  // PFCODES_KERNELS_HPP
