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

#include "pfcodes/stab_code.hpp"

#include <random>

#include "brute.hpp"
#include "doctest.h"
#include "listed_codes.hpp"
#include "pfcodes/builders.hpp"

using namespace pfcodes;

TEST_SUITE("stab_code") {

TEST_CASE("[[8,1,3]]_3 parameters") {
    const PfCode code = fixtures::code_8_1_3();
    const auto flags = validate(code);
    CHECK(flags.abelian);
    CHECK(flags.parity_ok);
    CHECK(flags.phase_ok);
    for (const auto& g : code.generators()) CHECK(g.mu() == 0);
    CHECK(group_order(code) == 27);
    CHECK(codespace_dim(code) == 3);
    CHECK(logical_qudits(code) == 1);
    CHECK(span_order(centralizer_basis(code)) == 243);
    CHECK(brute::distance(code) == 3);
    const auto d = distance(code);
    CHECK(d.distance == 3);
    REQUIRE(d.certificate);
    CHECK(weight(*d.certificate) == 3);
    CHECK(is_logical(code, *d.certificate));
    CHECK(syndrome(code, PfOperator::mode(3, 8, 2)) == std::vector<Residue>{0, 2, 2});
}

TEST_CASE("listed logicals of the [[8,1,3]]_3 code") {
    const PfCode code = fixtures::code_8_1_3();
    const auto a = fixtures::logical_8_1_3_a(), b = fixtures::logical_8_1_3_b();
    CHECK(is_logical(code, a));
    CHECK(is_logical(code, b));
    CHECK(commutation_exponent(a, b) != 0);
    // Both listed logicals are parity-violating (exponent sums 5 and 5).
    CHECK(charge(a) == 2);
    CHECK(charge(b) == 2);
    const auto basis = logical_basis(code);
    CHECK(basis.size() == 2);
    for (const auto& l : basis) CHECK(is_logical(code, l));
}

TEST_CASE("[[6,1,3]]_7 parameters") {
    const PfCode code = fixtures::code_6_1_3();
    CHECK(validate(code).all());
    CHECK(logical_qudits(code) == 1);
    CHECK(distance(code).distance == 3);
    CHECK(is_logical(code, fixtures::logical_6_1_3_a()));
    CHECK(is_logical(code, fixtures::logical_6_1_3_b()));
}

TEST_CASE("validation failures") {
    SUBCASE("non-commuting generators") {
        const PfCode code(3, 4, {PfOperator(3, 0, {1, 2, 0, 0}), PfOperator(3, 0, {0, 1, 2, 0})});
        const auto flags = validate(code);
        CHECK_FALSE(flags.abelian);
        CHECK_FALSE(flags.phase_ok);
        CHECK_FALSE(flags.all());
        CHECK_THROWS_AS(require_valid(code), InvalidCodeError);
    }
    SUBCASE("charge-one generator") {
        const PfCode code(3, 4, {PfOperator(3, 0, {1, 0, 0, 0})});
        const auto flags = validate(code);
        CHECK_FALSE(flags.parity_ok);
        REQUIRE_FALSE(flags.problems.empty());
    }
    SUBCASE("generator whose D-th power is a phase") {
        // (g2 g3)^2 = -1 for D = 2, so g2 g3 itself cannot be a stabilizer.
        const PfCode code(2, 4, {PfOperator(2, 0, {0, 1, 1, 0})});
        CHECK_FALSE(validate(code).phase_ok);
        const PfCode fixed = canonical_phases(code);
        CHECK(fixed.generators()[0].mu() == 1);
        CHECK(validate(fixed).all());
    }
    SUBCASE("relation that multiplies to a phase") {
        // g and g^-1 both listed, with inconsistent phases.
        const PfOperator g(3, 0, {2, 1, 0, 0});
        const PfOperator inv = inverse(g);
        const PfCode code(3, 4, {g, inv.with_phase(inv.mu() + 2)});
        CHECK_FALSE(validate(code).phase_ok);
        CHECK(validate(canonical_phases(code)).all());
    }
    SUBCASE("nontrivial scalar") {
        const PfCode code(3, 4, {PfOperator(3, 1, {0, 0, 0, 0})});
        CHECK_FALSE(validate(code).phase_ok);
        CHECK_THROWS_AS(canonical_phases(code), PhaseAssignmentError);
    }
}

TEST_CASE("code space dimension equals D^n over the group order on random codes") {
    std::mt19937_64 rng(21);
    int checked = 0;
    for (Residue d : {2, 3, 4, 5, 6}) {
        for (int trial = 0; trial < 80; ++trial) {
            std::vector<PfOperator> gens;
            for (int g = 0; g < 3; ++g) {
                auto op = brute::random_operator(rng, d, 6);
                // Force charge zero on the last mode.
                std::vector<Residue> alpha(op.alpha().begin(), op.alpha().end());
                alpha[5] = mod(alpha[5] - charge(op), d);
                gens.emplace_back(d, 0, alpha);
            }
            PfCode code(d, 6, gens);
            if (!validate(code).abelian) continue;
            code = canonical_phases(code);
            REQUIRE(validate(code).all());
            CHECK(group_order(code) * codespace_dim(code) == big_pow(d, 3));
            CHECK(group_order(code) == brute::span(code.stabilizer_matrix()).size());
            // |C(S)| * |S| = D^{2n}.
            CHECK(span_order(centralizer_basis(code)) * group_order(code) == big_pow(d, 6));
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("syndrome is additive") {
    std::mt19937_64 rng(8);
    const PfCode code = fixtures::code_8_1_3();
    for (int t = 0; t < 200; ++t) {
        const auto a = brute::random_operator(rng, 3, 8), b = brute::random_operator(rng, 3, 8);
        const auto sa = syndrome(code, a), sb = syndrome(code, b), sab = syndrome(code, multiply(a, b));
        for (std::size_t j = 0; j < sa.size(); ++j) CHECK(sab[j] == mod(sa[j] + sb[j], 3));
    }
    for (const auto& g : code.generators()) CHECK(syndrome(code, g) == std::vector<Residue>(3, 0));
}

TEST_CASE("distance agrees with brute force on small codes") {
    std::mt19937_64 rng(12);
    int checked = 0;
    for (Residue d : {2, 3, 4}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<PfOperator> gens;
            for (int g = 0; g < 2; ++g) {
                auto op = brute::random_operator(rng, d, 6);
                std::vector<Residue> alpha(op.alpha().begin(), op.alpha().end());
                alpha[5] = mod(alpha[5] - charge(op), d);
                gens.emplace_back(d, 0, alpha);
            }
            PfCode code(d, 6, gens);
            if (!validate(code).abelian) continue;
            code = canonical_phases(code);
            if (codespace_dim(code) == 1) continue;
            const auto fast = distance(code), serial = distance_serial(code);
            CHECK(fast.distance == brute::distance(code));
            CHECK(fast.distance == serial.distance);
            CHECK(fast.certificate == serial.certificate);
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("distance cap handling") {
    const PfCode code = fixtures::code_8_1_3();
    DistanceOptions opts;
    opts.max_weight = 2;
    const auto r = distance(code, opts);
    CHECK(r.exceeded_cap());
    CHECK(r.searched_weight == 2);
    CHECK(has_logical_below(code, 4));
    CHECK_FALSE(has_logical_below(code, 3));

    const PfCode big = embed_qudit_code(QuditCheckMatrix(3, 6));
    CHECK_THROWS_AS(distance(big), std::invalid_argument);
    const auto report = analyze(big);
    CHECK_FALSE(report.distance);
    CHECK_FALSE(report.distance_note.empty());
}

TEST_CASE("l_con matches enumeration") {
    const PfCode listed = fixtures::code_8_1_3();
    const auto r = l_con(listed);
    CHECK(r.l_con == brute::l_con_chain(listed));
    CHECK(r.l_con == 4u);
    REQUIRE(r.certificate);
    CHECK(charge(*r.certificate) == 0);
    CHECK(is_logical(listed, *r.certificate));
    CHECK(l_con(fixtures::code_6_1_3()).l_con == brute::l_con_chain(fixtures::code_6_1_3()));
    std::mt19937_64 rng(8);
    int checked = 0;
    for (Residue d : {2, 3, 4}) {
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<PfOperator> gens;
            for (int g = 0; g < 2; ++g) {
                auto op = brute::random_operator(rng, d, 6);
                std::vector<Residue> alpha(op.alpha().begin(), op.alpha().end());
                alpha[5] = mod(alpha[5] - charge(op), d);
                gens.emplace_back(d, 0, alpha);
            }
            const PfCode raw(d, 6, gens);
            if (!validate(raw).abelian) continue;
            const PfCode code = canonical_phases(raw);
            CHECK(l_con(code).l_con == brute::l_con_chain(code));
            ++checked;
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("l_con on chains and the trivial code") {
    for (Residue d : {2, 3, 5}) {
        for (std::size_t n : {2u, 3u, 4u}) {
            const auto r = l_con(build_clock_chain(d, n));
            CHECK(r.l_con == 2 * n);
            CHECK(r.metric == "chain");
        }
    }
    // With no stabilizer every single-pair g1^-1 g2 is a parity-conserving logical.
    const PfCode empty(3, 4, {});
    CHECK(l_con(empty).l_con == 2);
}

TEST_CASE("analyze report") {
    const auto report = analyze(fixtures::code_8_1_3());
    CHECK(report.flags.all());
    CHECK(report.k == 1);
    REQUIRE(report.distance);
    CHECK(report.distance->distance == 3);
    REQUIRE(report.l_con);
    CHECK(report.l_con->l_con.has_value());
    CHECK(report.logicals.size() == 2);
}

TEST_CASE("constructor checks shapes") {
    CHECK_THROWS_AS(PfCode(3, 3, {}), std::invalid_argument);
    CHECK_THROWS_AS(PfCode(3, 4, {PfOperator(3, 0, {1, 2})}), std::invalid_argument);
    CHECK_THROWS_AS(PfCode(3, 4, {PfOperator(5, 0, {1, 4, 0, 0})}), std::invalid_argument);
}

}  // TEST_SUITE
