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

#ifndef PFCODES_STAB_CODE_HPP
#define PFCODES_STAB_CODE_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfcodes/pf_operator.hpp"
#include "pfcodes/zmod_matrix.hpp"

namespace pfcodes {

/// Raised when an operation needs a code that passes validate().
class InvalidCodeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by canonical_phases when the phase system has no solution.
class PhaseAssignmentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Integer coordinates per mode. An empty layout means the 1D chain i -> i.
using ModeLayout = std::vector<std::vector<std::int64_t>>;

/// Parafermion stabilizer code: generators of S_PF in PF(D, 2n).
class PfCode {
public:
    PfCode(Residue modulus, std::size_t num_modes, std::vector<PfOperator> generators, ModeLayout layout = {});

    Residue modulus() const { return modulus_; }
    std::size_t num_modes() const { return num_modes_; }
    /// n, half the number of modes.
    std::size_t num_pairs() const { return num_modes_ / 2; }
    const std::vector<PfOperator>& generators() const { return generators_; }
    const ModeLayout& layout() const { return layout_; }
    bool has_layout() const { return !layout_.empty(); }

    /// S_PF: one exponent row per generator.
    ZModMatrix stabilizer_matrix() const;
    /// S_PF * Lambda; row j dotted with alpha is the commutation exponent with g_j.
    ZModMatrix check_matrix() const;

    PfCode with_generators(std::vector<PfOperator> generators) const {
        return {modulus_, num_modes_, std::move(generators), layout_};
    }

    bool operator==(const PfCode&) const = default;

private:
    Residue modulus_;
    std::size_t num_modes_;
    std::vector<PfOperator> generators_;
    ModeLayout layout_;
};

struct ValidationFlags {
    bool abelian = false;
    bool parity_ok = false;
    bool phase_ok = false;
    std::vector<std::string> problems;

    bool all() const { return abelian && parity_ok && phase_ok; }
};

/// Checks that S_PF is abelian, parity-preserving and free of nontrivial
/// scalars. Phase consistency means every generator has order dividing D and
/// every relation among the exponent rows multiplies out to the identity.
ValidationFlags validate(const PfCode& code);

/// Throws InvalidCodeError listing the failed conditions.
void require_valid(const PfCode& code);

/// |S|, the number of distinct stabilizer elements.
BigCount group_order(const PfCode& code);
/// |C_S| = D^n / |S|.
BigCount codespace_dim(const PfCode& code);
/// log_D |C_S| when |C_S| is a power of D.
std::optional<std::size_t> logical_qudits(const PfCode& code);

/// Howell basis of {x : S_PF Lambda x^T = 0 mod D}.
ZModMatrix centralizer_basis(const PfCode& code);
bool is_logical(const PfCode& code, const PfOperator& op);

/// Coset representatives generating C(S)/S, each reduced against the
/// stabilizer and the earlier representatives.
std::vector<PfOperator> logical_basis(const PfCode& code);

/// Component j is commutation_exponent(g_j, e).
std::vector<Residue> syndrome(const PfCode& code, const PfOperator& error);

/// Chooses generator phases so that validate().phase_ok holds; the result
/// is the canonical solution of the phase system over Z_{2D}.
PfCode canonical_phases(const PfCode& code);

struct DistanceOptions {
    /// Largest weight to try. Unset means the full 2n, which is only allowed
    /// for codes with at most kFullSearchModes modes.
    std::optional<std::size_t> max_weight;
    /// Worker cap for the parallel kernel; 0 uses the OpenMP default.
    int threads = 0;

    static constexpr std::size_t kFullSearchModes = 20;
};

struct DistanceResult {
    /// Exact distance, or unset if no logical of weight <= searched_weight exists.
    std::optional<std::size_t> distance;
    std::size_t searched_weight = 0;
    /// First logical in enumeration order at the minimum weight.
    std::optional<PfOperator> certificate;
    std::uint64_t candidates = 0;

    bool exceeded_cap() const { return !distance.has_value(); }
};

/// Minimum logical weight by exhaustive enumeration in increasing weight,
/// supports in colex order and exponents in lexicographic order. Parallel over
/// supports; result and certificate match distance_serial exactly.
DistanceResult distance(const PfCode& code, const DistanceOptions& options = {});
DistanceResult distance_serial(const PfCode& code, const DistanceOptions& options = {});

/// True iff some logical has weight < bound. Used as a fast filter by search.
bool has_logical_below(const PfCode& code, std::size_t bound);

/// Diameter of an exponent vector's support under the code layout:
/// index span on the chain, Chebyshev extent for coordinate layouts.
std::size_t layout_diameter(const PfCode& code, std::span<const Residue> alpha);

struct LconResult {
    std::optional<std::size_t> l_con;
    std::optional<PfOperator> certificate;
    /// "chain" or "chebyshev".
    std::string metric;
};

/// Minimum layout diameter of a parity-conserving logical operator; unset if
/// every logical violates parity.
LconResult l_con(const PfCode& code);

struct LogicalInfo {
    PfOperator op;
    Residue charge;
};

struct CodeReport {
    ValidationFlags flags;
    std::size_t num_modes = 0;
    Residue modulus = 0;
    BigCount group_order = 0;
    BigCount codespace_dim = 0;
    std::optional<std::size_t> k;
    std::optional<DistanceResult> distance;
    std::string distance_note;
    std::optional<LconResult> l_con;
    std::vector<LogicalInfo> logicals;
};

struct AnalyzeOptions {
    DistanceOptions distance;
    bool compute_distance = true;
    bool compute_l_con = true;
};

/// Full parameter report. Distance is skipped (with a note) for large codes
/// without an explicit weight cap, and for codes with no logical operators.
CodeReport analyze(const PfCode& code, const AnalyzeOptions& options = {});

}  // namespace pfcodes

#endif  // PFCODES_STAB_CODE_HPP
