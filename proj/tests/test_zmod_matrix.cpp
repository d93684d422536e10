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

#include "pfcodes/zmod_matrix.hpp"

#include <random>

#include "brute.hpp"
#include "doctest.h"

using namespace pfcodes;

TEST_SUITE("zmod_matrix") {

TEST_CASE("mod and gcd helpers") {
    CHECK(mod(-1, 6) == 5);
    CHECK(mod(13, 6) == 1);
    for (Residue n : {2, 4, 6, 9, 12}) {
        for (Residue a = 0; a < n; ++a) {
            const auto g = extended_gcd(a, n);
            CHECK(g.s * a + g.t * n == g.g);
            const Residue u = unit_normalizer(a, n);
            CHECK(extended_gcd(u, n).g == 1);
            CHECK(mod(u * a, n) == (a == 0 ? 0 : g.g));
        }
    }
    CHECK(inverse_mod(5, 7) == 3);
    CHECK_THROWS_AS(inverse_mod(2, 4), std::domain_error);
    CHECK(big_pow(3, 40) == BigCount("12157665459056928801"));
}

TEST_CASE("matrix basics") {
    const auto m = ZModMatrix::from_rows(6, 3, {{1, 7, -1}, {0, 2, 3}});
    CHECK(m(0, 1) == 1);
    CHECK(m(0, 2) == 5);
    CHECK(m.transpose().rows() == 3);
    CHECK(m.transpose()(2, 1) == 3);
    const auto id = ZModMatrix::identity(6, 3);
    CHECK(m * id == m);
    CHECK(m.left_multiply(std::vector<Residue>{1, 1}) == std::vector<Residue>{1, 3, 2});
    CHECK_THROWS_AS(ZModMatrix::from_rows(6, 3, {{1, 2}}), std::invalid_argument);
}

TEST_CASE("Howell form over Z_4 keeps the annihilator row") {
    // Span of (2, 1) over Z_4 contains 2*(2,1) = (0, 2), which the echelon
    // row alone cannot reach through rows with one leading zero.
    const auto h = howell_form(ZModMatrix::from_rows(4, 2, {{2, 1}}));
    REQUIRE(h.rows() == 2);
    CHECK(h.row_vector(0) == std::vector<Residue>{2, 1});
    CHECK(h.row_vector(1) == std::vector<Residue>{0, 2});
    CHECK(span_order(ZModMatrix::from_rows(4, 2, {{2, 1}})) == 4);
}

TEST_CASE("Howell form is canonical and idempotent on random matrices") {
    std::mt19937_64 rng(7);
    for (Residue d : {2, 3, 4, 6, 8, 9, 12}) {
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
            const auto m = brute::random_matrix(rng, d, rows, cols);
            const auto h = howell_form(m);
            CHECK(howell_form(h) == h);
            // Same span as the input, by enumeration.
            CHECK(brute::span(h) == brute::span(m));
            CHECK(span_order(m) == brute::span(m).size());
            // Row operations do not change the form.
            auto shuffled = m.to_rows();
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            if (shuffled.size() > 1) {
                for (std::size_t c = 0; c < cols; ++c) shuffled[0][c] += 5 * shuffled[1][c];
            }
            CHECK(howell_form(ZModMatrix::from_rows(d, cols, shuffled)) == h);
        }
    }
}

TEST_CASE("span membership and reduction agree with enumeration") {
    std::mt19937_64 rng(11);
    for (Residue d : {3, 4, 6}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto m = brute::random_matrix(rng, d, 2, 3);
            const auto members = brute::span(m);
            const RowSpan span(m);
            CHECK(span.order() == members.size());
            brute::for_each_vector(d, 3, [&](const brute::Vec& v) {
                CHECK(span.contains(v) == members.contains(v));
                CHECK(in_row_span(m, v) == members.contains(v));
                // Representatives of the same coset coincide.
                const auto r = span.reduce(v);
                brute::Vec diff(3);
                for (std::size_t i = 0; i < 3; ++i) diff[i] = mod(v[i] - r[i], d);
                CHECK(members.contains(diff));
            });
        }
    }
}

TEST_CASE("kernel basis spans exactly the left kernel") {
    std::mt19937_64 rng(5);
    for (Residue d : {2, 3, 4, 6, 9}) {
        for (int trial = 0; trial < 20; ++trial) {
            const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 3;
            const auto m = brute::random_matrix(rng, d, rows, cols);
            const auto k = kernel_basis(m);
            CHECK(k.cols() == rows);
            for (std::size_t r = 0; r < k.rows(); ++r) {
                for (Residue e : m.left_multiply(k.row(r))) CHECK(e == 0);
            }
            const auto expected = brute::kernel(m);
            if (k.rows() == 0) {
                CHECK(expected.size() == 1);
            } else {
                CHECK(brute::span(k) == expected);
            }
        }
    }
}

TEST_CASE("solve_left finds solutions exactly when they exist") {
    std::mt19937_64 rng(3);
    for (Residue d : {4, 6, 7}) {
        for (int trial = 0; trial < 20; ++trial) {
            const auto m = brute::random_matrix(rng, d, 3, 2);
            const auto image = brute::span(m);
            brute::for_each_vector(d, 2, [&](const brute::Vec& b) {
                const auto x = solve_left(m, b);
                CHECK(x.has_value() == image.contains(b));
                if (x) CHECK(m.left_multiply(*x) == b);
            });
        }
    }
}

TEST_CASE("empty and zero matrices") {
    const ZModMatrix empty(5, 0, 3);
    CHECK(howell_form(empty).rows() == 0);
    CHECK(span_order(empty) == 1);
    CHECK(in_row_span(empty, std::vector<Residue>{0, 0, 0}));
    CHECK_FALSE(in_row_span(empty, std::vector<Residue>{0, 1, 0}));
    CHECK(kernel_basis(ZModMatrix(5, 2, 3)).rows() == 2);
    CHECK_THROWS_AS(in_row_span(empty, std::vector<Residue>{0}), std::invalid_argument);
}

}  // TEST_SUITE
