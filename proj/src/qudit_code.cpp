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

#include "pfcodes/qudit_code.hpp"

#include <stdexcept>
#include <string>

#include "pfcodes/kernels.hpp"

namespace pfcodes {

QuditCheckMatrix::QuditCheckMatrix(Residue modulus, std::size_t num_qudits, std::vector<QuditRow> rows)
    : modulus_(modulus), num_qudits_(num_qudits), rows_(std::move(rows)) {
    if (modulus < 2 || modulus >= kMaxModulus) throw std::invalid_argument("qudit code: modulus out of range");
    if (num_qudits == 0) throw std::invalid_argument("qudit code: need at least one qudit");
    for (auto& r : rows_) {
        if (r.x.size() != num_qudits || r.z.size() != num_qudits) {
            throw std::invalid_argument("qudit code: every row needs " + std::to_string(num_qudits) +
                                        " X and Z exponents");
        }
        for (auto& e : r.x) e = mod(e, modulus);
        for (auto& e : r.z) e = mod(e, modulus);
    }
}

ZModMatrix QuditCheckMatrix::symplectic_matrix() const {
    ZModMatrix m(modulus_, 0, 2 * num_qudits_);
    std::vector<Residue> buf(2 * num_qudits_);
    for (const auto& r : rows_) {
        std::copy(r.x.begin(), r.x.end(), buf.begin());
        std::copy(r.z.begin(), r.z.end(), buf.begin() + static_cast<std::ptrdiff_t>(num_qudits_));
        m.append_row(buf);
    }
    return m;
}

Residue symplectic_product(const QuditRow& a, const QuditRow& b, Residue modulus) {
    Residue s = 0;
    for (std::size_t j = 0; j < a.x.size(); ++j) s = mod(s + a.x[j] * b.z[j] - a.z[j] * b.x[j], modulus);
    return s;
}

std::vector<std::pair<std::size_t, std::size_t>> noncommuting_pairs(const QuditCheckMatrix& q) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < q.rows().size(); ++i)
        for (std::size_t j = i + 1; j < q.rows().size(); ++j)
            if (symplectic_product(q.rows()[i], q.rows()[j], q.modulus()) != 0) out.emplace_back(i, j);
    return out;
}

BigCount qudit_group_order(const QuditCheckMatrix& q) { return span_order(q.symplectic_matrix()); }

BigCount qudit_codespace_dim(const QuditCheckMatrix& q) {
    if (!noncommuting_pairs(q).empty()) throw std::invalid_argument("qudit code: checks do not commute");
    const BigCount total = big_pow(q.modulus(), q.num_qudits());
    const BigCount order = qudit_group_order(q);
    if (total % order != 0) throw std::logic_error("qudit code: |S| does not divide D^n");
    return total / order;
}

std::optional<std::size_t> qudit_logical_count(const QuditCheckMatrix& q) {
    BigCount dim = qudit_codespace_dim(q);
    std::size_t k = 0;
    while (dim > 1) {
        if (dim % q.modulus() != 0) return std::nullopt;
        dim /= q.modulus();
        ++k;
    }
    return k;
}

QuditDistanceResult qudit_distance(const QuditCheckMatrix& q, std::optional<std::size_t> max_weight) {
    if (qudit_codespace_dim(q) == 1) throw std::invalid_argument("qudit code encodes nothing; distance undefined");
    const Residue d = q.modulus();
    const std::size_t n = q.num_qudits();
    const std::size_t cap = std::min(max_weight.value_or(n), n);
    const RowSpan span(q.symplectic_matrix());

    QuditDistanceResult result;
    QuditRow op{std::vector<Residue>(n), std::vector<Residue>(n)};
    std::vector<Residue> flat(2 * n);
    for (std::size_t w = 1; w <= cap; ++w) {
        result.searched_weight = w;
        std::vector<std::size_t> comb(w);
        for (std::size_t i = 0; i < w; ++i) comb[i] = i;
        // Each site carries a nonzero pair (x, z), encoded as 1 .. D^2 - 1.
        std::vector<Residue> site(w);
        do {
            std::fill(site.begin(), site.end(), 1);
            while (true) {
                std::fill(op.x.begin(), op.x.end(), 0);
                std::fill(op.z.begin(), op.z.end(), 0);
                for (std::size_t t = 0; t < w; ++t) {
                    op.x[comb[t]] = site[t] / d;
                    op.z[comb[t]] = site[t] % d;
                }
                bool commutes = true;
                for (const auto& r : q.rows()) {
                    if (symplectic_product(r, op, d) != 0) {
                        commutes = false;
                        break;
                    }
                }
                if (commutes) {
                    std::copy(op.x.begin(), op.x.end(), flat.begin());
                    std::copy(op.z.begin(), op.z.end(), flat.begin() + static_cast<std::ptrdiff_t>(n));
                    if (!span.contains(flat)) {
                        result.distance = w;
                        result.certificate = op;
                        return result;
                    }
                }
                std::size_t pos = w;
                while (pos > 0 && site[pos - 1] == d * d - 1) site[--pos] = 1;
                if (pos == 0) break;
                ++site[pos - 1];
            }
        } while (kernels::next_colex(comb, n));
    }
    return result;
}

QuditCheckMatrix five_qudit_code(Residue modulus) {
    std::vector<QuditRow> rows;
    for (std::size_t shift = 0; shift < 4; ++shift) {
        QuditRow r{std::vector<Residue>(5, 0), std::vector<Residue>(5, 0)};
        r.x[shift % 5] = 1;
        r.z[(shift + 1) % 5] = 1;
        r.z[(shift + 2) % 5] = -1;
        r.x[(shift + 3) % 5] = -1;
        rows.push_back(std::move(r));
    }
    return {modulus, 5, std::move(rows)};
}

}  // namespace pfcodes
