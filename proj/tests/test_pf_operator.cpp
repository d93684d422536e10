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

#include "pfcodes/pf_operator.hpp"

#include <random>

#include "brute.hpp"
#include "doctest.h"

using namespace pfcodes;

TEST_SUITE("pf_operator") {

TEST_CASE("mode exchange phases") {
    // g1 g2 = W g2 g1, i.e. g2 g1 = W^-1 g1 g2 = w2^{-2} g1 g2.
    const auto g1 = PfOperator::mode(3, 2, 0), g2 = PfOperator::mode(3, 2, 1);
    CHECK(multiply(g1, g2) == PfOperator(3, 0, {1, 1}));
    CHECK(multiply(g2, g1) == PfOperator(3, 4, {1, 1}));
    CHECK(commutation_exponent(g1, g2) == 1);
    CHECK(commutation_exponent(g2, g1) == 2);
}

TEST_CASE("multiply matches word reordering") {
    std::mt19937_64 rng(1);
    for (Residue d : {2, 3, 4, 5, 6}) {
        for (std::size_t modes : {2u, 4u, 6u}) {
            for (int t = 0; t < 100; ++t) {
                const auto a = brute::random_operator(rng, d, modes), b = brute::random_operator(rng, d, modes);
                CHECK(multiply(a, b) == brute::multiply(a, b));
            }
        }
    }
}

TEST_CASE("group laws") {
    std::mt19937_64 rng(2);
    for (Residue d : {2, 3, 4, 6, 7}) {
        for (int t = 0; t < 200; ++t) {
            const auto a = brute::random_operator(rng, d, 6), b = brute::random_operator(rng, d, 6),
                       c = brute::random_operator(rng, d, 6);
            CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
            CHECK(multiply(a, inverse(a)).is_identity());
            CHECK(multiply(inverse(a), a).is_identity());
            // a b = W^c b a, with W = w2^2.
            const Residue e = commutation_exponent(a, b);
            CHECK(multiply(a, b) == multiply(b, a).with_phase(multiply(b, a).mu() + 2 * e));
            CHECK(commutation_exponent(a, b) == brute::commutation(brute::Vec(a.alpha().begin(), a.alpha().end()),
                                                                   brute::Vec(b.alpha().begin(), b.alpha().end()), d));
            CHECK(mod(commutation_exponent(a, b) + commutation_exponent(b, a), d) == 0);
            // power by repeated multiplication
            PfOperator p(d, 6);
            for (int k = 0; k < 5; ++k) p = multiply(p, a);
            CHECK(power(a, 5) == p);
            CHECK(charge(multiply(a, b)) == mod(charge(a) + charge(b), d));
        }
    }
}

TEST_CASE("lambda row and matrix") {
    std::mt19937_64 rng(4);
    for (Residue d : {3, 4}) {
        const auto lam = lambda_matrix(d, 6);
        CHECK(lam(0, 1) == 1);
        CHECK(lam(1, 0) == d - 1);
        CHECK(lam(2, 2) == 0);
        for (int t = 0; t < 50; ++t) {
            const auto a = brute::random_operator(rng, d, 6);
            ZModMatrix row(d, 0, 6);
            row.append_row(a.alpha());
            CHECK(lambda_row(a.alpha(), d) == (row * lam).row_vector(0));
        }
    }
}

TEST_CASE("charge, weight, support, diameter") {
    const PfOperator a(5, 0, {0, 3, 0, 2, 0, 0});
    CHECK(charge(a) == 0);
    CHECK(weight(a) == 2);
    CHECK(support(a) == std::vector<std::size_t>{1, 3});
    CHECK(diameter(a) == 3);
    CHECK(diameter(PfOperator(5, 6)) == 0);
    CHECK(PfOperator(5, 7, std::vector<Residue>(6, 0)).is_scalar());
    CHECK_FALSE(PfOperator(5, 7, std::vector<Residue>(6, 0)).is_identity());
}

TEST_CASE("text round trip") {
    std::mt19937_64 rng(9);
    for (Residue d : {2, 3, 6}) {
        for (int t = 0; t < 100; ++t) {
            const auto a = brute::random_operator(rng, d, 6);
            CHECK(parse_operator(to_string(a), d, 6) == a);
        }
    }
    CHECK(to_string(PfOperator(3, 4)) == "1");
    CHECK(parse_operator("g3^-1", 3, 4) == PfOperator(3, 0, {0, 0, 2, 0}));
    // Out-of-order modes are normal ordered.
    CHECK(parse_operator("g2 g1", 3, 2) == PfOperator(3, 4, {1, 1}));
    CHECK(parse_operator("w^1 g2 g3", 2, 4) == PfOperator(2, 1, {0, 1, 1, 0}));
    CHECK_THROWS_AS(parse_operator("g9", 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_operator("x1", 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_operator("", 3, 4), std::invalid_argument);
}

TEST_CASE("constructor normalizes residues") {
    const PfOperator a(3, -1, {-1, 4});
    CHECK(a.mu() == 5);
    CHECK(a.alpha(0) == 2);
    CHECK(a.alpha(1) == 1);
    CHECK_THROWS_AS(multiply(PfOperator(3, 2), PfOperator(3, 4)), std::invalid_argument);
}

}  // TEST_SUITE
