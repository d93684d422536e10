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

#include "pfcodes/builders.hpp"

#include <stdexcept>
#include <string>

namespace pfcodes {

namespace {

PfOperator site_operator(Residue modulus, std::size_t num_qudits, std::size_t site,
                         std::initializer_list<Residue> exps) {
    if (site >= num_qudits) throw std::out_of_range("site index out of range");
    std::vector<Residue> alpha(4 * num_qudits, 0);
    std::size_t i = 4 * site;
    for (Residue e : exps) alpha[i++] = e;
    return {modulus, 0, std::move(alpha)};
}

// Site X or Z. For even D the bare product has D-th power -1, so it carries
// w2^{D-1} to make it an order-D Weyl operator.
PfOperator weyl_site_operator(Residue modulus, std::size_t num_qudits, std::size_t site,
                              std::initializer_list<Residue> exps) {
    const PfOperator bare = site_operator(modulus, num_qudits, site, exps);
    if (power(bare, static_cast<std::uint64_t>(modulus)).is_identity()) return bare;
    const PfOperator shifted = bare.with_phase(modulus - 1);
    if (!power(shifted, static_cast<std::uint64_t>(modulus)).is_identity())
        throw std::logic_error("site operator has no order-D phase");
    return shifted;
}

// a^e for signed e.
PfOperator signed_power(const PfOperator& a, Residue e) {
    const Residue r = mod(e, a.modulus());
    return power(a, static_cast<std::uint64_t>(r));
}

bool is_prime(Residue p) {
    if (p < 2) return false;
    for (Residue q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

}  // namespace

PfCode build_clock_chain(Residue modulus, std::size_t num_pairs) {
    if (num_pairs < 2) throw std::invalid_argument("clock chain needs n >= 2");
    const std::size_t modes = 2 * num_pairs;
    std::vector<PfOperator> gens;
    for (std::size_t j = 1; j < num_pairs; ++j) {
        std::vector<Residue> alpha(modes, 0);
        alpha[2 * j - 1] = modulus - 1;
        alpha[2 * j] = 1;
        gens.emplace_back(modulus, 0, std::move(alpha));
    }
    return canonical_phases(PfCode(modulus, modes, std::move(gens)));
}

PfOperator embedded_z(Residue modulus, std::size_t num_qudits, std::size_t site) {
    return weyl_site_operator(modulus, num_qudits, site, {modulus - 1, 1, 0, 0});
}

PfOperator embedded_x(Residue modulus, std::size_t num_qudits, std::size_t site) {
    return weyl_site_operator(modulus, num_qudits, site, {modulus - 1, 0, 1, 0});
}

PfOperator embedded_q(Residue modulus, std::size_t num_qudits, std::size_t site) {
    return site_operator(modulus, num_qudits, site, {modulus - 1, 1, modulus - 1, 1});
}

PfCode embed_qudit_code(const QuditCheckMatrix& qudit_code) {
    const auto bad = noncommuting_pairs(qudit_code);
    if (!bad.empty()) {
        throw InvalidCodeError("qudit checks " + std::to_string(bad.front().first + 1) + " and " +
                               std::to_string(bad.front().second + 1) + " do not commute");
    }
    const Residue d = qudit_code.modulus();
    const std::size_t n = qudit_code.num_qudits();
    std::vector<PfOperator> gens;
    for (std::size_t j = 0; j < n; ++j) gens.push_back(embedded_q(d, n, j));
    for (const auto& row : qudit_code.rows()) {
        PfOperator g(d, 4 * n);
        for (std::size_t j = 0; j < n; ++j) {
            g = multiply(g, signed_power(embedded_x(d, n, j), row.x[j]));
            g = multiply(g, signed_power(embedded_z(d, n, j), row.z[j]));
        }
        gens.push_back(std::move(g));
    }
    return canonical_phases(PfCode(d, 4 * n, std::move(gens)));
}

QuditCheckMatrix double_to_css(const PfCode& code) {
    require_valid(code);
    const std::size_t n = code.num_modes();
    const ZModMatrix s = code.stabilizer_matrix();
    const ZModMatrix checks = code.check_matrix();
    std::vector<QuditRow> rows;
    for (std::size_t r = 0; r < checks.rows(); ++r)
        rows.push_back({checks.row_vector(r), std::vector<Residue>(n, 0)});
    for (std::size_t r = 0; r < s.rows(); ++r) rows.push_back({std::vector<Residue>(n, 0), s.row_vector(r)});
    return {code.modulus(), n, std::move(rows)};
}

PfOperator lift_square_d6(const PfOperator& op) {
    if (op.modulus() != 3) throw std::invalid_argument("lift_square_d6 expects a D = 3 operator");
    std::vector<Residue> alpha(op.alpha().begin(), op.alpha().end());
    for (auto& e : alpha) e *= 2;
    return {6, 0, std::move(alpha)};
}

PfCode double_code_d6(const PfCode& code3) {
    if (code3.modulus() != 3) throw std::invalid_argument("D = 6 doubling needs a D = 3 code");
    const std::size_t modes = code3.num_modes();
    if (modes % 2 != 0) throw std::invalid_argument("D = 6 doubling needs an even number of modes");
    std::vector<PfOperator> gens;
    for (std::size_t j = 0; j < modes / 2; ++j) {
        std::vector<Residue> alpha(modes, 0);
        alpha[2 * j] = 3;
        alpha[2 * j + 1] = 3;
        gens.emplace_back(6, 0, std::move(alpha));
    }
    for (const auto& g : code3.generators()) gens.push_back(lift_square_d6(g));
    return canonical_phases(PfCode(6, modes, std::move(gens), code3.layout()));
}

Residue ToricSpec::root() const {
    if (!is_prime(p)) throw std::invalid_argument("toric code: p = " + std::to_string(p) + " is not prime");
    if (l == 0) throw std::invalid_argument("toric code: l must be at least 1");
    Residue r = 1;
    for (unsigned i = 0; i < l; ++i) {
        r *= p;
        if (r * r >= kMaxModulus) throw std::invalid_argument("toric code: p^{2l} too large");
    }
    return r;
}

Residue ToricSpec::modulus() const {
    const Residue r = root();
    return r * r;
}

PfOperator toric_site_z(const ToricSpec& spec, std::size_t num_qudits, std::size_t site) {
    const Residue d = spec.modulus(), r = spec.root();
    return weyl_site_operator(d, num_qudits, site, {r - 1, 1, 0, 0});
}

PfOperator toric_site_x(const ToricSpec& spec, std::size_t num_qudits, std::size_t site) {
    const Residue d = spec.modulus(), r = spec.root();
    return weyl_site_operator(d, num_qudits, site, {r - 1, 0, 1, 0});
}

PfOperator toric_site_q(const ToricSpec& spec, std::size_t num_qudits, std::size_t site) {
    const Residue d = spec.modulus(), r = spec.root();
    return site_operator(d, num_qudits, site, {d - 1, r + 1, d - r - 1, 1});
}

std::size_t toric_h_edge(const ToricSpec& spec, std::size_t x, std::size_t y) {
    return (y % spec.b) * 2 * spec.a + (x % spec.a);
}

std::size_t toric_v_edge(const ToricSpec& spec, std::size_t x, std::size_t y) {
    return (y % spec.b) * 2 * spec.a + spec.a + (x % spec.a);
}

ToricCode build_toric(const ToricSpec& spec) {
    if (spec.a < 2 || spec.b < 2) throw std::invalid_argument("toric code: lattice sides must be at least 2");
    const Residue d = spec.modulus();
    const std::size_t a = spec.a, b = spec.b;
    const std::size_t nq = 2 * a * b;
    const std::size_t modes = 4 * nq;

    auto edge_product = [&](const std::vector<std::pair<std::size_t, Residue>>& edges, bool use_x) {
        PfOperator g(d, modes);
        for (auto [q, e] : edges) {
            const PfOperator site = use_x ? toric_site_x(spec, nq, q) : toric_site_z(spec, nq, q);
            g = multiply(g, signed_power(site, e));
        }
        return g;
    };

    ToricCode out{spec, PfCode(d, modes, {}), {}, {}, {}};
    for (std::size_t y = 0; y < b; ++y) {
        for (std::size_t x = 0; x < a; ++x) {
            out.stars.push_back(edge_product({{toric_h_edge(spec, x, y), 1},
                                              {toric_v_edge(spec, x, y), 1},
                                              {toric_h_edge(spec, x + a - 1, y), -1},
                                              {toric_v_edge(spec, x, y + b - 1), -1}},
                                             true));
            out.plaquettes.push_back(edge_product({{toric_h_edge(spec, x, y), 1},
                                                   {toric_v_edge(spec, x + 1, y), 1},
                                                   {toric_h_edge(spec, x, y + 1), -1},
                                                   {toric_v_edge(spec, x, y), -1}},
                                                  false));
        }
    }
    for (const auto& s : out.stars)
        for (const auto& p : out.plaquettes)
            if (commutation_exponent(s, p) != 0) throw std::logic_error("toric code: star and plaquette do not commute");

    std::vector<PfOperator> gens;
    for (std::size_t q = 0; q < nq; ++q) gens.push_back(toric_site_q(spec, nq, q));
    gens.insert(gens.end(), out.stars.begin(), out.stars.end() - 1);
    gens.insert(gens.end(), out.plaquettes.begin(), out.plaquettes.end() - 1);

    ModeLayout layout(modes);
    for (std::size_t y = 0; y < b; ++y) {
        for (std::size_t x = 0; x < a; ++x) {
            const auto h = toric_h_edge(spec, x, y), v = toric_v_edge(spec, x, y);
            const auto xi = static_cast<std::int64_t>(x), yi = static_cast<std::int64_t>(y);
            for (std::size_t m = 0; m < 4; ++m) {
                layout[4 * h + m] = {2 * xi + 1, 2 * yi};
                layout[4 * v + m] = {2 * xi, 2 * yi + 1};
            }
        }
    }
    out.code = canonical_phases(PfCode(d, modes, std::move(gens), std::move(layout)));

    // Logical cosets supported on one strip of edges: centralizer elements on
    // the strip that are independent modulo the stabilizer and earlier picks
    // from the same strip.
    const ZModMatrix checks = out.code.check_matrix();
    auto collect = [&](const std::vector<std::size_t>& strip, ToricLogical::Direction dir) {
        ZModMatrix accumulated = out.code.stabilizer_matrix();
        std::vector<std::size_t> strip_modes;
        for (auto q : strip)
            for (std::size_t m = 0; m < 4; ++m) strip_modes.push_back(4 * q + m);
        ZModMatrix constraints(d, strip_modes.size(), checks.rows());
        for (std::size_t t = 0; t < strip_modes.size(); ++t)
            for (std::size_t g = 0; g < checks.rows(); ++g) constraints.set(t, g, checks(g, strip_modes[t]));
        const ZModMatrix local = kernel_basis(constraints);
        RowSpan span(accumulated);
        for (std::size_t r = 0; r < local.rows(); ++r) {
            std::vector<Residue> alpha(modes, 0);
            for (std::size_t t = 0; t < strip_modes.size(); ++t) alpha[strip_modes[t]] = local(r, t);
            if (span.contains(alpha)) continue;
            PfOperator op(d, 0, alpha);
            const Residue c = charge(op);
            out.logicals.push_back({std::move(op), c, dir});
            accumulated.append_row(alpha);
            span = RowSpan(accumulated);
        }
    };
    std::vector<std::size_t> row_strip, column_strip;
    for (std::size_t x = 0; x < a; ++x) {
        row_strip.push_back(toric_h_edge(spec, x, 0));
        row_strip.push_back(toric_v_edge(spec, x, 0));
    }
    for (std::size_t y = 0; y < b; ++y) {
        column_strip.push_back(toric_h_edge(spec, 0, y));
        column_strip.push_back(toric_v_edge(spec, 0, y));
    }
    collect(row_strip, ToricLogical::Direction::Horizontal);
    collect(column_strip, ToricLogical::Direction::Vertical);
    return out;
}

}  // namespace pfcodes
