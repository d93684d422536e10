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

// Brute-force reference implementations used only by tests. They enumerate
// instead of doing linear algebra, so they are slow but hard to get wrong.

#ifndef PFCODES_TESTS_BRUTE_HPP
#define PFCODES_TESTS_BRUTE_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "pfcodes/pf_operator.hpp"
#include "pfcodes/stab_code.hpp"
#include "pfcodes/zmod_matrix.hpp"

namespace brute {

using pfcodes::PfOperator;
using pfcodes::Residue;
using pfcodes::ZModMatrix;
using Vec = std::vector<Residue>;

/// Calls f on every vector of Z_D^len in lexicographic order.
template <typename F>
void for_each_vector(Residue d, std::size_t len, F&& f) {
    Vec v(len, 0);
    while (true) {
        f(v);
        std::size_t pos = len;
        while (pos > 0 && v[pos - 1] == d - 1) v[--pos] = 0;
        if (pos == 0) return;
        ++v[pos - 1];
    }
}

/// Every element of the row span, by closure under adding rows.
inline std::set<Vec> span(const ZModMatrix& m) {
    std::set<Vec> out{Vec(m.cols(), 0)};
    std::vector<Vec> frontier(out.begin(), out.end());
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto& v : frontier) {
            for (std::size_t r = 0; r < m.rows(); ++r) {
                Vec w = v;
                for (std::size_t c = 0; c < m.cols(); ++c) w[c] = pfcodes::mod(w[c] + m(r, c), m.modulus());
                if (out.insert(w).second) next.push_back(std::move(w));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

/// All x with x * m = 0.
inline std::set<Vec> kernel(const ZModMatrix& m) {
    std::set<Vec> out;
    for_each_vector(m.modulus(), m.rows(), [&](const Vec& x) {
        const Vec image = m.left_multiply(x);
        if (std::all_of(image.begin(), image.end(), [](Residue e) { return e == 0; })) out.insert(x);
    });
    return out;
}

/// Product by writing both operators as words of mode operators and bubble
/// sorting: each swap of g_j g_k (j > k) into g_k g_j costs a factor W^-1.
inline PfOperator multiply(const PfOperator& a, const PfOperator& b) {
    const Residue d = a.modulus();
    std::vector<std::size_t> word;
    for (const PfOperator* op : {&a, &b})
        for (std::size_t j = 0; j < op->num_modes(); ++j)
            for (Residue e = 0; e < op->alpha(j); ++e) word.push_back(j);
    Residue mu = a.mu() + b.mu();
    for (std::size_t i = 0; i < word.size(); ++i) {
        for (std::size_t k = 0; k + 1 < word.size() - i; ++k) {
            if (word[k] > word[k + 1]) {
                std::swap(word[k], word[k + 1]);
                mu -= 2;
            }
        }
    }
    Vec alpha(a.num_modes(), 0);
    for (auto j : word) alpha[j] = (alpha[j] + 1) % d;
    return {d, pfcodes::mod(mu, 2 * d), alpha};
}

inline Residue commutation(const Vec& a, const Vec& b, Residue d) {
    Residue c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (i < j) c += a[i] * b[j];
            if (i > j) c -= a[i] * b[j];
        }
    return pfcodes::mod(c, d);
}

inline std::size_t weight(const Vec& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Residue e) { return e != 0; }));
}

/// Minimum weight of an exponent vector that commutes with every generator
/// and lies outside the stabilizer span. Enumerates all of Z_D^{2n}.
inline std::optional<std::size_t> distance(const pfcodes::PfCode& code) {
    const auto stab = span(code.stabilizer_matrix());
    std::optional<std::size_t> best;
    for_each_vector(code.modulus(), code.num_modes(), [&](const Vec& v) {
        if (best && weight(v) >= *best) return;
        for (const auto& g : code.generators()) {
            if (commutation(Vec(g.alpha().begin(), g.alpha().end()), v, code.modulus()) != 0) return;
        }
        if (stab.contains(v)) return;
        best = weight(v);
    });
    return best;
}

/// Minimum index span (last - first + 1) of a charge-zero logical.
inline std::optional<std::size_t> l_con_chain(const pfcodes::PfCode& code) {
    const auto stab = span(code.stabilizer_matrix());
    const Residue d = code.modulus();
    std::optional<std::size_t> best;
    for_each_vector(d, code.num_modes(), [&](const Vec& v) {
        Residue total = 0;
        for (Residue e : v) total = (total + e) % d;
        if (total != 0) return;
        for (const auto& g : code.generators()) {
            if (commutation(Vec(g.alpha().begin(), g.alpha().end()), v, d) != 0) return;
        }
        if (stab.contains(v)) return;
        std::size_t first = v.size(), last = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            first = std::min(first, i);
            last = i;
        }
        const std::size_t diam = last - first + 1;
        if (!best || diam < *best) best = diam;
    });
    return best;
}

inline ZModMatrix random_matrix(std::mt19937_64& rng, Residue d, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<Residue> digit(0, d - 1);
    ZModMatrix m(d, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, digit(rng));
    return m;
}

inline PfOperator random_operator(std::mt19937_64& rng, Residue d, std::size_t modes) {
    std::uniform_int_distribution<Residue> digit(0, d - 1), phase(0, 2 * d - 1);
    Vec alpha(modes);
    for (auto& e : alpha) e = digit(rng);
    return {d, phase(rng), alpha};
}

}  // namespace brute

#endif  // PFCODES_TESTS_BRUTE_HPP
