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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace pfcodes {

namespace {

void check_compatible(const PfOperator& a, const PfOperator& b) {
    if (a.modulus() != b.modulus() || a.num_modes() != b.num_modes()) {
        throw std::invalid_argument("parafermion operators from different groups: PF(" + std::to_string(a.modulus()) +
                                    "," + std::to_string(a.num_modes()) + ") vs PF(" +
                                    std::to_string(b.modulus()) + "," + std::to_string(b.num_modes()) + ")");
    }
}

// sum_{i>j} alpha_i beta_j mod D. Only s mod D enters a phase w^{-2s}.
Residue swap_count(std::span<const Residue> alpha, std::span<const Residue> beta, Residue modulus) {
    Residue total = 0;
    Residue beta_prefix = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        total = (total + mod(alpha[i], modulus) * beta_prefix) % modulus;
        beta_prefix = (beta_prefix + mod(beta[i], modulus)) % modulus;
    }
    return total;
}

}  // namespace

PfOperator::PfOperator(Residue modulus, std::size_t num_modes) : modulus_(modulus), alpha_(num_modes, 0) {
    if (modulus < 2 || modulus >= kMaxModulus) throw std::invalid_argument("PfOperator: modulus out of range");
    if (num_modes < 2 || num_modes % 2 != 0) {
        throw std::invalid_argument("PfOperator: number of modes must be even and >= 2, got " +
                                    std::to_string(num_modes));
    }
}

PfOperator::PfOperator(Residue modulus, Residue mu, std::vector<Residue> alpha)
    : PfOperator(modulus, alpha.size()) {
    mu_ = mod(mu, 2 * modulus);
    alpha_ = std::move(alpha);
    for (auto& x : alpha_) x = mod(x, modulus);
}

PfOperator PfOperator::mode(Residue modulus, std::size_t num_modes, std::size_t mode, Residue power) {
    if (mode >= num_modes) throw std::out_of_range("PfOperator::mode: index out of range");
    std::vector<Residue> alpha(num_modes, 0);
    alpha[mode] = power;
    return {modulus, 0, std::move(alpha)};
}

bool PfOperator::is_identity() const { return mu_ == 0 && is_scalar(); }

bool PfOperator::is_scalar() const {
    return std::all_of(alpha_.begin(), alpha_.end(), [](Residue x) { return x == 0; });
}

Residue commutation_exponent(std::span<const Residue> alpha, std::span<const Residue> beta, Residue modulus) {
    if (alpha.size() != beta.size()) throw std::invalid_argument("commutation_exponent: length mismatch");
    return mod(swap_count(beta, alpha, modulus) - swap_count(alpha, beta, modulus), modulus);
}

Residue commutation_exponent(const PfOperator& a, const PfOperator& b) {
    check_compatible(a, b);
    return commutation_exponent(a.alpha(), b.alpha(), a.modulus());
}

PfOperator multiply(const PfOperator& a, const PfOperator& b) {
    check_compatible(a, b);
    const Residue d = a.modulus();
    // Moving each g_j^{b_j} left past g_i^{a_i} (i > j) costs W^{-a_i b_j} = w^{-2 a_i b_j}.
    const Residue s = swap_count(a.alpha(), b.alpha(), d);
    std::vector<Residue> sum(a.num_modes());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a.alpha(i) + b.alpha(i);
    return {d, a.mu() + b.mu() - 2 * s, std::move(sum)};
}

PfOperator inverse(const PfOperator& a) {
    const Residue d = a.modulus();
    std::vector<Residue> neg(a.num_modes());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = mod(-a.alpha(i), d);
    const Residue s = swap_count(a.alpha(), neg, d);
    return {d, 2 * s - a.mu(), std::move(neg)};
}

PfOperator power(const PfOperator& a, std::uint64_t exponent) {
    PfOperator result(a.modulus(), a.num_modes());
    PfOperator base = a;
    while (exponent > 0) {
        if (exponent & 1U) result = multiply(result, base);
        exponent >>= 1U;
        if (exponent > 0) base = multiply(base, base);
    }
    return result;
}

Residue charge(const PfOperator& a) {
    Residue total = 0;
    for (Residue x : a.alpha()) total += x;
    return mod(total, a.modulus());
}

std::size_t weight(const PfOperator& a) {
    return static_cast<std::size_t>(std::count_if(a.alpha().begin(), a.alpha().end(), [](Residue x) { return x != 0; }));
}

std::vector<std::size_t> support(const PfOperator& a) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < a.num_modes(); ++i)
        if (a.alpha(i) != 0) out.push_back(i);
    return out;
}

std::size_t diameter(const PfOperator& a) {
    const auto s = support(a);
    return s.empty() ? 0 : s.back() - s.front() + 1;
}

std::vector<Residue> lambda_row(std::span<const Residue> alpha, Residue modulus) {
    Residue total = 0;
    for (Residue x : alpha) total += x;
    std::vector<Residue> out(alpha.size());
    Residue prefix = 0;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        const Residue suffix = total - prefix - alpha[j];
        out[j] = mod(prefix - suffix, modulus);
        prefix += alpha[j];
    }
    return out;
}

ZModMatrix lambda_matrix(Residue modulus, std::size_t num_modes) {
    ZModMatrix m(modulus, num_modes, num_modes);
    for (std::size_t i = 0; i < num_modes; ++i)
        for (std::size_t j = 0; j < num_modes; ++j)
            if (i != j) m.set(i, j, j > i ? 1 : -1);
    return m;
}

std::string to_string(const PfOperator& a) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << ' ';
        first = false;
    };
    if (a.mu() != 0) {
        sep();
        os << 'w';
        if (a.mu() != 1) os << '^' << a.mu();
    }
    for (std::size_t i = 0; i < a.num_modes(); ++i) {
        if (a.alpha(i) == 0) continue;
        sep();
        os << 'g' << (i + 1);
        if (a.alpha(i) != 1) os << '^' << a.alpha(i);
    }
    if (first) os << '1';
    return os.str();
}

namespace {

Residue parse_int(std::string_view s, std::string_view token) {
    Residue value = 0;
    const auto* begin = s.data();
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || s.empty()) {
        throw std::invalid_argument("malformed operator token '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

PfOperator parse_operator(std::string_view text, Residue modulus, std::size_t num_modes) {
    PfOperator result(modulus, num_modes);
    std::size_t pos = 0;
    bool any = false;
    while (pos < text.size()) {
        while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*')) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end])) && text[end] != '*') ++end;
        const std::string_view token = text.substr(pos, end - pos);
        pos = end;
        any = true;

        if (token == "1") continue;
        const auto caret = token.find('^');
        const std::string_view head = token.substr(0, caret);
        const Residue exponent = caret == std::string_view::npos ? 1 : parse_int(token.substr(caret + 1), token);
        if (head == "w") {
            result = multiply(result, PfOperator(modulus, exponent, std::vector<Residue>(num_modes, 0)));
        } else if (head.size() >= 2 && head[0] == 'g') {
            const Residue index = parse_int(head.substr(1), token);
            if (index < 1 || static_cast<std::size_t>(index) > num_modes) {
                throw std::invalid_argument("mode index out of range in '" + std::string(token) + "' (have " +
                                            std::to_string(num_modes) + " modes)");
            }
            result = multiply(result, PfOperator::mode(modulus, num_modes, static_cast<std::size_t>(index - 1),
                                                       mod(exponent, modulus)));
        } else {
            throw std::invalid_argument("malformed operator token '" + std::string(token) + "'");
        }
    }
    if (!any) throw std::invalid_argument("empty operator text (write 1 for the identity)");
    return result;
}

}  // namespace pfcodes
