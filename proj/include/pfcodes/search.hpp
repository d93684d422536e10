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

#ifndef PFCODES_SEARCH_HPP
#define PFCODES_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfcodes/stab_code.hpp"

namespace pfcodes {

enum class SearchMode { Exhaustive, Randomized };

struct SearchSpec {
    Residue modulus = 3;
    std::size_t num_modes = 8;
    std::size_t target_k = 1;
    /// Hits have no logical of weight below target_d.
    std::size_t target_d = 3;
    SearchMode mode = SearchMode::Exhaustive;
    /// Defaults to n - k for prime D; required otherwise.
    std::optional<std::size_t> generator_count;
    /// Keep only one of each pair of spans related by reversing the mode order.
    bool symmetry = false;
    /// Stop after this many hits (in enumeration order); 0 keeps all.
    std::size_t max_hits = 0;
    /// Largest number of complete generator tuples to evaluate.
    std::uint64_t budget = 20'000'000;
    std::uint64_t seed = 1;
    std::uint64_t samples = 10'000;
    /// 0 uses the OpenMP default; 1 runs the serial path.
    int threads = 0;
};

/// Throws std::invalid_argument naming the offending field.
void check_search_spec(const SearchSpec& spec);
std::size_t resolved_generator_count(const SearchSpec& spec);

struct SearchHit {
    PfCode code;
    std::size_t k = 0;
    std::size_t d = 0;
};

struct SearchCertificate {
    SearchSpec spec;
    /// "rref" (prime D), "tuples" (composite D) or "random".
    std::string strategy;
    BigCount estimated_candidates = 0;
    /// Complete commuting generator tuples evaluated.
    std::uint64_t evaluated = 0;
    std::uint64_t skipped_by_symmetry = 0;
    std::uint64_t rejected_phase = 0;
    std::uint64_t rejected_k = 0;
    std::uint64_t rejected_distance = 0;
    /// Exhaustive run that visited the whole space; only then does an empty
    /// hit list prove that no code exists.
    bool exhausted = false;
    bool stopped_at_max_hits = false;
    bool budget_exceeded = false;
    /// FNV-1a digest over the Howell keys of evaluated spans, in enumeration
    /// order. Reproducible for exhausted runs.
    std::uint64_t digest = 0;
    double wall_seconds = 0;
};

struct SearchResult {
    std::vector<SearchHit> hits;
    SearchCertificate certificate;
};

/// Upper estimate of the number of generator tuples an exhaustive run visits.
BigCount estimate_candidates(const SearchSpec& spec);

SearchResult find_codes(const SearchSpec& spec);
/// Single-threaded reference; same hits and certificate (up to wall time).
SearchResult find_codes_serial(const SearchSpec& spec);

/// Howell form of the stabilizer exponent matrix: equal iff the spans are equal.
ZModMatrix canonical_equivalence_key(const PfCode& code);

}  // namespace pfcodes

#endif  // PFCODES_SEARCH_HPP
