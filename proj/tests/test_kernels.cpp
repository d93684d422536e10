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

#include "pfcodes/kernels.hpp"

#include "doctest.h"
#include "listed_codes.hpp"
#include "pfcodes/builders.hpp"

using namespace pfcodes;
using namespace pfcodes::kernels;

TEST_SUITE("kernels") {

TEST_CASE("binomial") {
    CHECK(binomial(8, 3) == 56);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(60, 30) == 118264581564861424ull);
    CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}

TEST_CASE("colex unranking matches iteration") {
    for (std::size_t n : {1u, 5u, 9u}) {
        for (std::size_t w = 1; w <= n; ++w) {
            std::vector<std::size_t> comb(w), other(w);
            for (std::size_t i = 0; i < w; ++i) comb[i] = i;
            std::uint64_t rank = 0;
            do {
                unrank_colex(rank, w, other);
                CHECK(other == comb);
                ++rank;
            } while (next_colex(comb, n));
            CHECK(rank == binomial(n, w));
        }
    }
}

TEST_CASE("parallel scan equals serial scan") {
    const std::vector<PfCode> codes{fixtures::code_8_1_3(), fixtures::code_6_1_3(), build_clock_chain(3, 4),
                                    embed_qudit_code(five_qudit_code(3))};
    for (const auto& code : codes) {
        const LogicalPredicate pred(code);
        for (std::size_t w = 1; w <= 4; ++w) {
            const auto s = scan_weight_serial(pred, w);
            for (int threads : {1, 2, 4}) {
                const auto p = scan_weight_parallel(pred, w, threads);
                CHECK(p.hit == s.hit);
                // Without a hit both visit every candidate.
                if (!s.hit) CHECK(p.candidates == s.candidates);
            }
        }
    }
}

TEST_CASE("predicate agrees with the syndrome") {
    const PfCode code = fixtures::code_8_1_3();
    const LogicalPredicate pred(code);
    const std::vector<std::size_t> supp{0, 1, 2, 6};
    const std::vector<Residue> vals{2, 1, 1, 1};
    CHECK(pred.centralizes(supp, vals));
    CHECK_FALSE(pred.in_stabilizer(fixtures::logical_8_1_3_a().alpha()));
    const std::vector<std::size_t> one{2};
    const std::vector<Residue> v1{1};
    CHECK_FALSE(pred.centralizes(one, v1));
}

}  // TEST_SUITE
