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

#include <omp.h>

#include <atomic>
#include <limits>
#include <stdexcept>

namespace pfcodes::kernels {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial overflow");
    }
    return static_cast<std::uint64_t>(result);
}

void unrank_colex(std::uint64_t rank, std::size_t w, std::span<std::size_t> out) {
    for (std::size_t i = w; i-- > 0;) {
        // Largest c with C(c, i+1) <= rank.
        std::size_t c = i;
        while (binomial(c + 1, i + 1) <= rank) ++c;
        out[i] = c;
        rank -= binomial(c, i + 1);
    }
}

bool next_colex(std::span<std::size_t> comb, std::size_t n) {
    const std::size_t w = comb.size();
    for (std::size_t j = 0; j < w; ++j) {
        const std::size_t limit = (j + 1 < w) ? comb[j + 1] : n;
        if (comb[j] + 1 < limit) {
            ++comb[j];
            for (std::size_t i = 0; i < j; ++i) comb[i] = i;
            return true;
        }
    }
    return false;
}

LogicalPredicate::LogicalPredicate(const PfCode& code)
    : modulus_(code.modulus()),
      num_modes_(code.num_modes()),
      num_checks_(code.generators().size()),
      columns_(code.num_modes() * code.generators().size()),
      stabilizer_(code.stabilizer_matrix()) {
    const ZModMatrix checks = code.check_matrix();
    for (std::size_t i = 0; i < num_modes_; ++i)
        for (std::size_t g = 0; g < num_checks_; ++g) columns_[i * num_checks_ + g] = checks(g, i);
}

bool LogicalPredicate::centralizes(std::span<const std::size_t> support, std::span<const Residue> values) const {
    for (std::size_t g = 0; g < num_checks_; ++g) {
        Residue s = 0;
        for (std::size_t t = 0; t < support.size(); ++t) s += values[t] * columns_[support[t] * num_checks_ + g];
        if (s % modulus_ != 0) return false;
    }
    return true;
}

namespace {

// Scans all exponent assignments on one support in lexicographic order.
// Returns true on the first logical, leaving it in `alpha`.
bool scan_support(const LogicalPredicate& pred, std::span<const std::size_t> supp, std::vector<Residue>& values,
                  std::vector<Residue>& alpha, std::uint64_t& candidates) {
    const Residue d = pred.modulus();
    const std::size_t w = supp.size();
    std::fill(values.begin(), values.end(), 1);
    while (true) {
        ++candidates;
        if (pred.centralizes(supp, values)) {
            std::fill(alpha.begin(), alpha.end(), 0);
            for (std::size_t t = 0; t < w; ++t) alpha[supp[t]] = values[t];
            if (!pred.in_stabilizer(alpha)) return true;
        }
        std::size_t pos = w;
        while (pos > 0 && values[pos - 1] == d - 1) values[--pos] = 1;
        if (pos == 0) return false;
        ++values[pos - 1];
    }
}

}  // namespace

WeightScan scan_weight_serial(const LogicalPredicate& pred, std::size_t weight) {
    WeightScan out;
    const std::size_t n = pred.num_modes();
    if (weight == 0 || weight > n) return out;
    std::vector<std::size_t> comb(weight);
    for (std::size_t i = 0; i < weight; ++i) comb[i] = i;
    std::vector<Residue> values(weight);
    std::vector<Residue> alpha(n);
    do {
        if (scan_support(pred, comb, values, alpha, out.candidates)) {
            out.hit = alpha;
            return out;
        }
    } while (next_colex(comb, n));
    return out;
}

WeightScan scan_weight_parallel(const LogicalPredicate& pred, std::size_t weight, int threads) {
    WeightScan out;
    const std::size_t n = pred.num_modes();
    if (weight == 0 || weight > n) return out;

    const std::uint64_t total = binomial(n, weight);
    constexpr std::uint64_t kBlock = 512;
    const auto blocks = static_cast<std::int64_t>((total + kBlock - 1) / kBlock);
    constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
    // Lowest support rank holding a logical; only ever decreases.
    std::atomic<std::uint64_t> best{kNone};
    std::uint64_t candidates = 0;

    const int workers = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(workers) reduction(+ : candidates)
    {
        std::vector<std::size_t> comb(weight);
        std::vector<Residue> values(weight);
        std::vector<Residue> alpha(n);
#pragma omp for schedule(dynamic, 1)
        for (std::int64_t b = 0; b < blocks; ++b) {
            const std::uint64_t start = static_cast<std::uint64_t>(b) * kBlock;
            if (start > best.load(std::memory_order_relaxed)) continue;
            const std::uint64_t stop = std::min(total, start + kBlock);
            unrank_colex(start, weight, comb);
            for (std::uint64_t rank = start; rank < stop; ++rank) {
                if (rank > best.load(std::memory_order_relaxed)) break;
                if (scan_support(pred, comb, values, alpha, candidates)) {
                    std::uint64_t cur = best.load();
                    while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
                    }
                    break;
                }
                next_colex(comb, n);
            }
        }
    }
    out.candidates = candidates;
    if (best.load() != kNone) {
        // Re-scan the winning support serially for the enumeration-order-first exponents.
        std::vector<std::size_t> comb(weight);
        std::vector<Residue> values(weight);
        std::vector<Residue> alpha(n);
        std::uint64_t extra = 0;
        unrank_colex(best.load(), weight, comb);
        scan_support(pred, comb, values, alpha, extra);
        out.hit = alpha;
    }
    return out;
}

}  // namespace pfcodes::kernels
