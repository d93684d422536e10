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

#include "pfcodes/search.hpp"

#include "doctest.h"
#include "listed_codes.hpp"

using namespace pfcodes;

namespace {

SearchSpec make_spec(Residue d, std::size_t modes, std::size_t k, std::size_t target_d) {
    SearchSpec s;
    s.modulus = d;
    s.num_modes = modes;
    s.target_k = k;
    s.target_d = target_d;
    return s;
}

void check_same(const SearchResult& a, const SearchResult& b) {
    REQUIRE(a.hits.size() == b.hits.size());
    for (std::size_t i = 0; i < a.hits.size(); ++i) {
        CHECK(a.hits[i].code == b.hits[i].code);
        CHECK(a.hits[i].d == b.hits[i].d);
    }
    CHECK(a.certificate.evaluated == b.certificate.evaluated);
    CHECK(a.certificate.digest == b.certificate.digest);
    CHECK(a.certificate.exhausted == b.certificate.exhausted);
    CHECK(a.certificate.rejected_distance == b.certificate.rejected_distance);
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("no [[6,1,3]] code at D = 3") {
    const auto r = find_codes(make_spec(3, 6, 1, 3));
    CHECK(r.hits.empty());
    CHECK(r.certificate.exhausted);
    CHECK(r.certificate.evaluated > 0);
    CHECK_FALSE(r.certificate.budget_exceeded);
}

TEST_CASE("four Majorana modes: d = 2 but never 3") {
    const auto two = find_codes(make_spec(2, 4, 1, 2));
    REQUIRE_FALSE(two.hits.empty());
    for (const auto& h : two.hits) {
        CHECK(h.d == 2);
        CHECK(validate(h.code).all());
        CHECK(logical_qudits(h.code) == 1);
    }
    const auto three = find_codes(make_spec(2, 4, 1, 3));
    CHECK(three.hits.empty());
    CHECK(three.certificate.exhausted);
}

TEST_CASE("hits are sound and distinct") {
    const auto r = find_codes(make_spec(7, 6, 1, 3));
    REQUIRE_FALSE(r.hits.empty());
    std::set<std::vector<std::vector<Residue>>> keys;
    for (const auto& h : r.hits) {
        CHECK(validate(h.code).all());
        CHECK(logical_qudits(h.code) == 1);
        CHECK(h.d >= 3);
        CHECK(distance(h.code).distance == h.d);
        CHECK(keys.insert(canonical_equivalence_key(h.code).to_rows()).second);
    }
    // The listed [[6,1,3]]_7 code is among them.
    CHECK(keys.contains(canonical_equivalence_key(fixtures::code_6_1_3()).to_rows()));
}

TEST_CASE("serial and parallel runs agree") {
    for (auto spec : {make_spec(3, 6, 1, 2), make_spec(2, 6, 1, 2), make_spec(5, 6, 1, 3)}) {
        const auto serial = find_codes_serial(spec);
        for (int threads : {2, 3}) {
            spec.threads = threads;
            check_same(find_codes(spec), serial);
        }
        spec.max_hits = 3;
        spec.threads = 1;
        const auto capped = find_codes_serial(spec);
        CHECK(capped.hits.size() <= 3);
        spec.threads = 4;
        check_same(find_codes(spec), capped);
    }
}

TEST_CASE("symmetry pruning keeps emptiness at D = 2, 2n = 6") {
    for (std::size_t k : {1u, 2u}) {
        for (std::size_t d : {1u, 2u, 3u}) {
            auto spec = make_spec(2, 6, k, d);
            const auto full = find_codes(spec);
            spec.symmetry = true;
            const auto pruned = find_codes(spec);
            CHECK(full.hits.empty() == pruned.hits.empty());
            CHECK(pruned.hits.size() <= full.hits.size());
            CHECK(pruned.certificate.evaluated + pruned.certificate.skipped_by_symmetry ==
                  full.certificate.evaluated);
        }
    }
}

TEST_CASE("composite modulus uses generator tuples") {
    auto spec = make_spec(4, 4, 1, 1);
    CHECK_THROWS_AS(find_codes(spec), std::invalid_argument);
    spec.generator_count = 1;
    const auto r = find_codes(spec);
    CHECK(r.certificate.strategy == "tuples");
    REQUIRE_FALSE(r.hits.empty());
    std::set<std::vector<std::vector<Residue>>> keys;
    for (const auto& h : r.hits) {
        CHECK(logical_qudits(h.code) == 1);
        CHECK(keys.insert(canonical_equivalence_key(h.code).to_rows()).second);
    }
    spec.threads = 1;
    check_same(find_codes(spec), r);
}

TEST_CASE("randomized mode is reproducible") {
    auto spec = make_spec(7, 6, 1, 3);
    spec.mode = SearchMode::Randomized;
    spec.samples = 300;
    spec.seed = 42;
    const auto a = find_codes(spec), b = find_codes(spec);
    check_same(a, b);
    CHECK_FALSE(a.certificate.exhausted);
    for (const auto& h : a.hits) CHECK(h.d >= 3);
}

TEST_CASE("budget stops the run without a nonexistence claim") {
    auto spec = make_spec(3, 6, 1, 3);
    spec.budget = 10;
    for (int threads : {1, 2}) {
        spec.threads = threads;
        const auto r = find_codes(spec);
        CHECK(r.certificate.budget_exceeded);
        CHECK_FALSE(r.certificate.exhausted);
    }
}

TEST_CASE("estimate bounds the evaluated count") {
    const auto spec = make_spec(3, 6, 1, 1);
    const auto r = find_codes(spec);
    CHECK(r.certificate.estimated_candidates >= r.certificate.evaluated);
    CHECK(estimate_candidates(spec) == 1210);  // Gaussian binomial [5 choose 2]_3
}

TEST_CASE("equivalence key") {
    const PfCode code = fixtures::code_8_1_3();
    const auto& g = code.generators();
    const PfCode products = code.with_generators({multiply(g[0], g[1]), g[1], multiply(g[2], g[0])});
    const PfCode permuted = code.with_generators({g[2], g[0], g[1]});
    CHECK(canonical_equivalence_key(code) == canonical_equivalence_key(products));
    CHECK(canonical_equivalence_key(code) == canonical_equivalence_key(permuted));
    const PfCode smaller = code.with_generators({g[0], g[1]});
    CHECK_FALSE(canonical_equivalence_key(code) == canonical_equivalence_key(smaller));
}

TEST_CASE("spec checks") {
    CHECK_THROWS_AS(find_codes(make_spec(3, 5, 1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(find_codes(make_spec(3, 6, 0, 3)), std::invalid_argument);
    CHECK_THROWS_AS(find_codes(make_spec(3, 6, 1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(find_codes(make_spec(3, 6, 4, 1)), std::invalid_argument);
}

}  // TEST_SUITE
