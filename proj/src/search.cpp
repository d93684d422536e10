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

#include "pfcodes/search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <limits>
#include <mutex>
#include <random>
#include <set>
#include <stdexcept>

namespace pfcodes {

namespace {

bool is_prime(Residue p) {
    if (p < 2) return false;
    for (Residue q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

using Row = std::vector<Residue>;
using Key = std::vector<std::vector<Residue>>;

constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= kFnvPrime;
    }
    return h;
}

std::uint64_t digest_key(std::uint64_t h, const Key& key) {
    h = fnv_mix(h, key.size());
    for (const auto& row : key)
        for (Residue e : row) h = fnv_mix(h, static_cast<std::uint64_t>(e));
    return h;
}

struct Stats {
    std::uint64_t evaluated = 0;
    std::uint64_t skipped_by_symmetry = 0;
    std::uint64_t rejected_phase = 0;
    std::uint64_t rejected_k = 0;
    std::uint64_t rejected_distance = 0;
    std::uint64_t digest = kFnvOffset;
};

struct TaskOutput {
    std::vector<SearchHit> hits;
    std::vector<Key> keys;
    /// Stats as they stood right after each hit.
    std::vector<Stats> at_hit;
    Stats stats;
    bool complete = false;
};

// Enumeration of candidate generator tuples. The space is split into tasks by
// the first generator; each task runs its subtree in a fixed order.
class Engine {
public:
    explicit Engine(const SearchSpec& spec)
        : spec_(spec),
          d_(spec.modulus),
          modes_(spec.num_modes),
          m_(resolved_generator_count(spec)),
          prime_(is_prime(spec.modulus)) {
        // All nonzero parity-zero vectors in lexicographic order.
        Row v(modes_, 0);
        while (true) {
            std::size_t pos = modes_;
            while (pos > 0 && v[pos - 1] == d_ - 1) v[--pos] = 0;
            if (pos == 0) break;
            ++v[pos - 1];
            Residue s = 0;
            for (Residue e : v) s += e;
            if (s % d_ != 0) continue;
            if (prime_) {
                std::size_t lead = 0;
                while (v[lead] == 0) ++lead;
                if (v[lead] != 1) continue;
                if (by_pivot_.size() <= lead) by_pivot_.resize(lead + 1);
                by_pivot_[lead].push_back(v);
            } else {
                flat_.push_back(v);
            }
        }
        if (prime_) {
            for (const auto& group : by_pivot_)
                for (const auto& r : group) flat_.push_back(r);
        }
    }

    std::size_t num_tasks() const { return flat_.size(); }
    std::string strategy() const { return prime_ ? "rref" : "tuples"; }
    bool dedupe_across_tasks() const { return !prime_; }

    /// `stop` is polled between tuples; set when this task's results can no
    /// longer matter or the budget ran out.
    TaskOutput run_task(std::size_t task, const std::function<bool()>& stop,
                        std::atomic<std::uint64_t>& evaluated_total) const {
        TaskOutput out;
        std::vector<Row> rows{flat_[task]};
        std::vector<std::size_t> trail{task};
        std::set<Key> seen;
        bool halted = false;
        auto visit = [&](auto&& self) -> void {
            if (halted) return;
            if (rows.size() == m_) {
                if (stop() || evaluated_total.load(std::memory_order_relaxed) >= spec_.budget) {
                    halted = true;
                    return;
                }
                evaluate(rows, seen, out, evaluated_total);
                if (prime_ && spec_.max_hits > 0 && out.hits.size() >= spec_.max_hits) halted = true;
                return;
            }
            if (prime_) {
                std::size_t last = 0;
                while (rows.back()[last] == 0) ++last;
                for (std::size_t p = last + 1; p < by_pivot_.size() && !halted; ++p) {
                    bool free = true;
                    for (const auto& r : rows) free = free && r[p] == 0;
                    if (!free) continue;
                    for (const auto& cand : by_pivot_[p]) {
                        if (!commutes_with(cand, rows)) continue;
                        rows.push_back(cand);
                        self(self);
                        rows.pop_back();
                        if (halted) return;
                    }
                }
            } else {
                for (std::size_t j = trail.back() + 1; j < flat_.size() && !halted; ++j) {
                    if (!commutes_with(flat_[j], rows)) continue;
                    rows.push_back(flat_[j]);
                    trail.push_back(j);
                    self(self);
                    trail.pop_back();
                    rows.pop_back();
                }
            }
        };
        visit(visit);
        out.complete = !halted || (prime_ && spec_.max_hits > 0 && out.hits.size() >= spec_.max_hits);
        return out;
    }

    void evaluate(const std::vector<Row>& rows, std::set<Key>& seen, TaskOutput& out,
                  std::atomic<std::uint64_t>& evaluated_total) const {
        const ZModMatrix s = ZModMatrix::from_rows(d_, modes_, rows);
        Key key = howell_form(s).to_rows();
        if (!prime_ && !seen.insert(key).second) return;
        if (spec_.symmetry) {
            std::vector<Row> reversed = rows;
            for (auto& r : reversed) std::reverse(r.begin(), r.end());
            if (howell_form(ZModMatrix::from_rows(d_, modes_, reversed)).to_rows() < key) {
                ++out.stats.skipped_by_symmetry;
                return;
            }
        }
        ++out.stats.evaluated;
        evaluated_total.fetch_add(1, std::memory_order_relaxed);
        out.stats.digest = digest_key(out.stats.digest, key);

        auto hit = check_candidate(rows, out.stats);
        if (!hit) return;
        out.hits.push_back(std::move(*hit));
        out.keys.push_back(std::move(key));
        out.at_hit.push_back(out.stats);
    }

    std::optional<SearchHit> check_candidate(const std::vector<Row>& rows, Stats& stats) const {
        std::vector<PfOperator> gens;
        for (const auto& r : rows) gens.emplace_back(d_, 0, r);
        PfCode code(d_, modes_, std::move(gens));
        try {
            code = canonical_phases(code);
        } catch (const PhaseAssignmentError&) {
            ++stats.rejected_phase;
            return std::nullopt;
        } catch (const InvalidCodeError&) {
            ++stats.rejected_phase;
            return std::nullopt;
        }
        const auto k = logical_qudits(code);
        if (!k || *k != spec_.target_k) {
            ++stats.rejected_k;
            return std::nullopt;
        }
        if (has_logical_below(code, spec_.target_d)) {
            ++stats.rejected_distance;
            return std::nullopt;
        }
        DistanceOptions opts;
        opts.max_weight = modes_;
        const auto dist = distance_serial(code, opts);
        return SearchHit{std::move(code), *k, dist.distance.value_or(0)};
    }

    bool commutes_with(const Row& v, const std::vector<Row>& rows) const {
        for (const auto& r : rows)
            if (commutation_exponent(v, r, d_) != 0) return false;
        return true;
    }

private:
    const SearchSpec& spec_;
    Residue d_;
    std::size_t modes_;
    std::size_t m_;
    bool prime_;
    std::vector<std::vector<Row>> by_pivot_;
    std::vector<Row> flat_;
};

void add_stats(SearchCertificate& c, const Stats& s) {
    c.evaluated += s.evaluated;
    c.skipped_by_symmetry += s.skipped_by_symmetry;
    c.rejected_phase += s.rejected_phase;
    c.rejected_k += s.rejected_k;
    c.rejected_distance += s.rejected_distance;
    c.digest = fnv_mix(c.digest, s.digest);
}

// Folds task outputs in task order. Returns true once max_hits is reached.
class Merger {
public:
    Merger(const SearchSpec& spec, bool dedupe, SearchResult& result)
        : spec_(spec), dedupe_(dedupe), result_(result) {
        result_.certificate.digest = kFnvOffset;
    }

    bool absorb(TaskOutput& task) {
        for (std::size_t h = 0; h < task.hits.size(); ++h) {
            if (dedupe_ && !keys_.insert(task.keys[h]).second) continue;
            result_.hits.push_back(std::move(task.hits[h]));
            if (spec_.max_hits > 0 && result_.hits.size() >= spec_.max_hits) {
                add_stats(result_.certificate, task.at_hit[h]);
                result_.certificate.stopped_at_max_hits = true;
                return true;
            }
        }
        add_stats(result_.certificate, task.stats);
        return false;
    }

private:
    const SearchSpec& spec_;
    bool dedupe_;
    SearchResult& result_;
    std::set<Key> keys_;
};

SearchResult run_exhaustive(const SearchSpec& spec, bool parallel) {
    const Engine engine(spec);
    SearchResult result;
    result.certificate.strategy = engine.strategy();
    Merger merger(spec, engine.dedupe_across_tasks(), result);
    std::atomic<std::uint64_t> evaluated{0};
    const std::size_t tasks = engine.num_tasks();

    if (!parallel) {
        bool done = false;
        for (std::size_t t = 0; t < tasks && !done; ++t) {
            TaskOutput out = engine.run_task(t, [] { return false; }, evaluated);
            if (!out.complete) {
                result.certificate.budget_exceeded = true;
                add_stats(result.certificate, out.stats);
                done = true;
                break;
            }
            done = merger.absorb(out);
        }
        result.certificate.exhausted = !done;
        return result;
    }

    // Tasks finish out of order; the prefix of finished tasks is merged under
    // a lock so the cutoff (first task that completes max_hits) is the same as
    // in the serial run.
    constexpr std::size_t kNoCutoff = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> cutoff{kNoCutoff};
    std::vector<std::optional<TaskOutput>> outputs(tasks);
    std::size_t next_to_merge = 0;
    bool budget_hit = false;
    std::mutex lock;
    const int workers = spec.threads > 0 ? spec.threads : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (std::int64_t ti = 0; ti < static_cast<std::int64_t>(tasks); ++ti) {
        const auto t = static_cast<std::size_t>(ti);
        if (t > cutoff.load()) continue;
        TaskOutput out = engine.run_task(t, [&] { return t > cutoff.load(std::memory_order_relaxed); }, evaluated);
        std::lock_guard<std::mutex> guard(lock);
        if (!out.complete) {
            if (t <= cutoff.load()) budget_hit = true;
            continue;
        }
        outputs[t] = std::move(out);
        while (next_to_merge < tasks && cutoff.load() == kNoCutoff && outputs[next_to_merge]) {
            if (merger.absorb(*outputs[next_to_merge])) cutoff.store(next_to_merge);
            outputs[next_to_merge].reset();
            ++next_to_merge;
        }
    }
    if (budget_hit && cutoff.load() == kNoCutoff) {
        result.certificate.budget_exceeded = true;
        result.certificate.exhausted = false;
    } else {
        result.certificate.exhausted = cutoff.load() == kNoCutoff;
    }
    return result;
}

SearchResult run_randomized(const SearchSpec& spec) {
    const Residue d = spec.modulus;
    const std::size_t modes = spec.num_modes;
    const std::size_t m = resolved_generator_count(spec);
    std::mt19937_64 rng(spec.seed);
    std::uniform_int_distribution<Residue> digit(0, d - 1);

    SearchResult result;
    result.certificate.strategy = "random";
    result.certificate.digest = kFnvOffset;
    std::set<Key> seen;
    SearchSpec local = spec;
    local.symmetry = false;
    const Engine checker(local);
    for (std::uint64_t sample = 0; sample < spec.samples; ++sample) {
        if (result.certificate.evaluated >= spec.budget) {
            result.certificate.budget_exceeded = true;
            break;
        }
        std::vector<Row> rows;
        for (int attempt = 0; attempt < 100 && rows.size() < m; ++attempt) {
            Row v(modes);
            Residue s = 0;
            for (std::size_t i = 0; i + 1 < modes; ++i) {
                v[i] = digit(rng);
                s += v[i];
            }
            v[modes - 1] = mod(-s, d);
            if (!checker.commutes_with(v, rows)) continue;
            if (!rows.empty() && in_row_span(ZModMatrix::from_rows(d, modes, rows), v)) continue;
            if (rows.empty() && std::all_of(v.begin(), v.end(), [](Residue e) { return e == 0; })) continue;
            rows.push_back(std::move(v));
        }
        if (rows.size() < m) continue;
        Key key = howell_form(ZModMatrix::from_rows(d, modes, rows)).to_rows();
        if (!seen.insert(key).second) continue;
        Stats stats;
        auto hit = checker.check_candidate(rows, stats);
        ++result.certificate.evaluated;
        result.certificate.rejected_phase += stats.rejected_phase;
        result.certificate.rejected_k += stats.rejected_k;
        result.certificate.rejected_distance += stats.rejected_distance;
        result.certificate.digest = digest_key(result.certificate.digest, key);
        if (!hit) continue;
        result.hits.push_back(std::move(*hit));
        if (spec.max_hits > 0 && result.hits.size() >= spec.max_hits) {
            result.certificate.stopped_at_max_hits = true;
            break;
        }
    }
    return result;
}

BigCount gaussian_binomial(Residue q, std::size_t n, std::size_t k) {
    if (k > n) return 0;
    BigCount num = 1, den = 1;
    for (std::size_t i = 0; i < k; ++i) {
        num *= big_pow(q, n - i) - 1;
        den *= big_pow(q, i + 1) - 1;
    }
    return num / den;
}

SearchResult find_codes_impl(const SearchSpec& spec, bool parallel) {
    check_search_spec(spec);
    const auto start = std::chrono::steady_clock::now();
    SearchResult result =
        spec.mode == SearchMode::Randomized ? run_randomized(spec) : run_exhaustive(spec, parallel);
    result.certificate.spec = spec;
    result.certificate.estimated_candidates = estimate_candidates(spec);
    result.certificate.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace

void check_search_spec(const SearchSpec& spec) {
    if (spec.modulus < 2 || spec.modulus > 64) throw std::invalid_argument("search: D must be in [2, 64]");
    if (spec.num_modes < 2 || spec.num_modes % 2 != 0)
        throw std::invalid_argument("search: num_modes must be even and at least 2");
    if (spec.num_modes > 16) throw std::invalid_argument("search: num_modes above 16 is out of range");
    if (spec.target_d < 1) throw std::invalid_argument("search: target_d must be at least 1");
    if (spec.target_k < 1) throw std::invalid_argument("search: target_k must be at least 1");
    if (spec.target_k > spec.num_modes / 2) throw std::invalid_argument("search: target_k exceeds n");
    const std::size_t m = resolved_generator_count(spec);
    if (m == 0) throw std::invalid_argument("search: generator_count must be at least 1");
}

std::size_t resolved_generator_count(const SearchSpec& spec) {
    if (spec.generator_count) return *spec.generator_count;
    if (!is_prime(spec.modulus)) {
        throw std::invalid_argument("search: generator_count is required when D is not prime");
    }
    return spec.num_modes / 2 - spec.target_k;
}

BigCount estimate_candidates(const SearchSpec& spec) {
    const std::size_t m = resolved_generator_count(spec);
    if (spec.mode == SearchMode::Randomized) return spec.samples;
    // Parity-zero vectors form a space of dimension 2n - 1.
    if (is_prime(spec.modulus)) return gaussian_binomial(spec.modulus, spec.num_modes - 1, m);
    const BigCount pool = big_pow(spec.modulus, spec.num_modes - 1) - 1;
    BigCount c = 1;
    for (std::size_t i = 0; i < m; ++i) c = c * (pool - i) / (i + 1);
    return c;
}

SearchResult find_codes(const SearchSpec& spec) {
    const bool parallel = spec.threads != 1 && spec.mode == SearchMode::Exhaustive;
    return find_codes_impl(spec, parallel);
}

SearchResult find_codes_serial(const SearchSpec& spec) { return find_codes_impl(spec, false); }

ZModMatrix canonical_equivalence_key(const PfCode& code) { return howell_form(code.stabilizer_matrix()); }

}  // namespace pfcodes
