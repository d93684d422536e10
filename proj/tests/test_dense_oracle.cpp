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

#include <numbers>

#include "brute.hpp"
#include "doctest.h"
#include "listed_codes.hpp"
#include "pfcodes/builders.hpp"

using namespace pfcodes;
using namespace pfcodes::oracle;

TEST_SUITE("dense_oracle") {

TEST_CASE("clock matrices") {
    const auto two = clock_ops(2);
    CHECK(max_abs(two.x - (Matrix(2, 2) << 0, 1, 1, 0).finished()) < kEpsilon);
    CHECK(max_abs(two.z - (Matrix(2, 2) << 1, 0, 0, -1).finished()) < kEpsilon);
    const auto three = clock_ops(3);
    CHECK(std::abs(three.z(1, 1) - std::polar(1.0, 2 * std::numbers::pi / 3)) < kEpsilon);
    for (Residue d = 2; d <= 6; ++d) {
        const auto ops = clock_ops(d);
        const Complex w = std::polar(1.0, 2 * std::numbers::pi / static_cast<double>(d));
        CHECK(max_abs(ops.z * ops.x - w * ops.x * ops.z) < kEpsilon);
    }
}

TEST_CASE("Jordan-Wigner relation suite") {
    for (Residue d = 2; d <= 5; ++d) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const DenseRep rep(d, n);
            for (const auto& c : relation_suite(rep)) {
                INFO(c.name);
                CHECK(c.pass);
            }
        }
    }
}

TEST_CASE("Majorana case squares to one and anticommutes") {
    const DenseRep rep(2, 2);
    const Matrix id = Matrix::Identity(4, 4);
    for (std::size_t j = 0; j < 4; ++j) {
        CHECK(max_abs(rep.mode(j) * rep.mode(j) - id) < kEpsilon);
        for (std::size_t k = j + 1; k < 4; ++k)
            CHECK(max_abs(rep.mode(j) * rep.mode(k) + rep.mode(k) * rep.mode(j)) < kEpsilon);
    }
}

TEST_CASE("operator matrices respect the algebra") {
    for (Residue d = 2; d <= 4; ++d) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const DenseRep rep(d, n);
            const auto check = homomorphism_suite(rep, 200, 17 + d * 10 + n);
            INFO(check.name);
            CHECK(check.pass);
        }
    }
    const DenseRep rep(3, 2);
    CHECK(max_abs(rep.op_matrix(PfOperator(3, 4)) - Matrix::Identity(9, 9)) < kEpsilon);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const auto a = brute::random_operator(rng, 3, 4);
        CHECK(max_abs(rep.op_matrix(a) - rep.op_monomial(a).dense()) < kEpsilon);
    }
}

TEST_CASE("projector traces") {
    SUBCASE("[[8,1,3]]_3") {
        const DenseRep rep(3, 4);
        const auto p = projector(rep, fixtures::code_8_1_3());
        CHECK(p.group_size == 27);
        CHECK(std::abs(p.trace - 3.0) < 1e-6);
    }
    SUBCASE("empty stabilizer") {
        const DenseRep rep(3, 2);
        const auto p = projector(rep, PfCode(3, 4, {}));
        CHECK(std::abs(p.trace - 9.0) < 1e-6);
        CHECK(max_abs(p.p - Matrix::Identity(9, 9)) < kEpsilon);
    }
    SUBCASE("clock chain") {
        const DenseRep rep(3, 3);
        const auto p = projector(rep, build_clock_chain(3, 3));
        CHECK(p.group_size == 9);
        CHECK(std::abs(p.trace - 3.0) < 1e-6);
    }
    SUBCASE("invalid codes are refused") {
        const DenseRep rep(3, 2);
        CHECK_THROWS_AS(projector(rep, PfCode(3, 4, {PfOperator(3, 0, {1, 0, 0, 0})})), InvalidCodeError);
    }
}

TEST_CASE("simulated syndromes match the algebra") {
    const PfCode code = fixtures::code_8_1_3();
    const DenseRep rep(3, 4);
    const auto p = projector(rep, code);
    CHECK(syndrome_sim(rep, code, PfOperator::mode(3, 8, 2), p) == std::vector<Residue>{0, 2, 2});
    CHECK(syndrome_sim(rep, code, PfOperator(3, 8), p) == std::vector<Residue>(3, 0));
    CHECK(syndrome_sim(rep, code, code.generators()[0], p) == std::vector<Residue>(3, 0));
    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        const auto e = brute::random_operator(rng, 3, 8);
        CHECK(syndrome_sim(rep, code, e, p) == syndrome(code, e));
    }
}

TEST_CASE("dimension cap") {
    CHECK_THROWS_AS(DenseRep(3, 7), std::length_error);
    CHECK_NOTHROW(DenseRep(2, 11));
}

}  // TEST_SUITE
