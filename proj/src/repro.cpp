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

#include "pfcodes/repro.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <sstream>

#include "pfcodes/builders.hpp"
#include "pfcodes/code_io.hpp"
#include "pfcodes/dense_oracle.hpp"
#include "pfcodes/search.hpp"

namespace pfcodes::repro {

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream computed;
    std::string expected;

    // Records a sub-check; the first failure is called out in the output.
    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) computed << "FAILED: " << what << "; ";
            pass = false;
        }
    }
};

std::string flags_text(const ValidationFlags& f) {
    std::ostringstream os;
    os << "abelian=" << f.abelian << " parity=" << f.parity_ok << " phase=" << f.phase_ok;
    return os.str();
}

std::string opt_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "none"; }

PfCode code_from_text(Residue d, std::size_t modes, std::initializer_list<const char*> gens) {
    std::vector<PfOperator> ops;
    for (const char* g : gens) ops.push_back(parse_operator(g, d, modes));
    return PfCode(d, modes, std::move(ops));
}

// The listed generators carry no phase; validity is judged after the
// canonical phase choice, and the raw flags are reported alongside.
PfCode listed_8_1_3(bool canonical = true) {
    PfCode raw = code_from_text(3, 8, {"g1^-1 g2 g4^-1 g6", "g2^-1 g3 g5^-1 g7", "g3^-1 g4 g6^-1 g8"});
    return canonical ? canonical_phases(raw) : raw;
}

PfCode listed_6_1_3(bool canonical = true) {
    PfCode raw = code_from_text(7, 6, {"g1 g2 g5^5", "g1 g4^5 g6"});
    return canonical ? canonical_phases(raw) : raw;
}

DistanceOptions distance_options(const Options& o) {
    DistanceOptions d;
    d.threads = o.threads;
    return d;
}

void check_8_1_3(Outcome& out, const Options& o) {
    const PfCode raw = listed_8_1_3(false);
    const PfCode code = listed_8_1_3();
    const auto raw_flags = validate(raw), flags = validate(code);
    const auto k = logical_qudits(code);
    const auto d = distance(code, distance_options(o));
    out.computed << "listed: " << flags_text(raw_flags) << "; canonical: " << flags_text(flags) << "; k=" << opt_text(k)
                 << " d=" << opt_text(d.distance);
    out.expected = "all flags true, k=1, d=3";
    out.require(raw_flags.abelian && raw_flags.parity_ok, "listed generators abelian and parity-preserving");
    out.require(flags.all(), "valid after phase choice");
    out.require(k == 1u, "k = 1");
    out.require(d.distance == 3u, "d = 3");
}

void check_minimality(Outcome& out, const Options& o) {
    SearchSpec six;
    six.modulus = 3;
    six.num_modes = 6;
    six.target_k = 1;
    six.target_d = 3;
    six.threads = o.threads;
    const auto none = find_codes(six);

    SearchSpec eight = six;
    eight.num_modes = 8;
    eight.max_hits = 1;
    const auto found = find_codes(eight);

    const bool hit_ok = !found.hits.empty() && found.hits[0].d == 3 && validate(found.hits[0].code).all() &&
                        logical_qudits(found.hits[0].code) == 1u;
    out.computed << "2n=6: " << none.hits.size() << " hits, exhausted=" << none.certificate.exhausted
                 << " after " << none.certificate.evaluated << " spans; 2n=8: "
                 << (hit_ok ? "[[8,1,3]]_3 found" : "no valid hit") << " after " << found.certificate.evaluated
                 << " spans";
    if (hit_ok) out.computed << " (" << found.hits[0].code.generators().size() << " generators)";
    out.expected = "2n=6 empty with nonexistence certificate; 2n=8 yields [[8,1,3]]_3";
    out.require(none.hits.empty() && none.certificate.exhausted && !none.certificate.budget_exceeded,
                "2n=6 exhausted with no hit");
    out.require(hit_ok, "2n=8 hit with k=1, d=3");
}

void check_6_1_3(Outcome& out, const Options& o) {
    const PfCode code = listed_6_1_3();
    const auto flags = validate(code);
    const auto k = logical_qudits(code);
    const auto d = distance(code, distance_options(o));
    out.computed << flags_text(flags) << "; k=" << opt_text(k) << " d=" << opt_text(d.distance);
    out.expected = "valid, k=1, d=3";
    out.require(flags.all(), "valid");
    out.require(k == 1u, "k = 1");
    out.require(d.distance == 3u, "d = 3");
}

void check_d6(Outcome& out, const Options&) {
    // The seven listed generators, with no phases.
    const PfCode raw = code_from_text(6, 8, {"g1^3 g2^3", "g3^3 g4^3", "g5^3 g6^3", "g7^3 g8^3",
                                             "g1^-2 g2^2 g4^-2 g6^2", "g2^-2 g3^2 g5^-2 g7^2",
                                             "g3^-2 g4^2 g6^-2 g8^2"});
    const PfCode built = double_code_d6(listed_8_1_3());
    const auto raw_flags = validate(raw), flags = validate(built);
    const PfOperator a = lift_square_d6(parse_operator("g1^-1 g2 g3 g7", 3, 8));
    const PfOperator b = lift_square_d6(parse_operator("g2^-1 g3^-1 g6", 3, 8));
    const Residue c = commutation_exponent(a, b);
    const Residue order = c == 0 ? 1 : 6 / std::gcd<Residue>(c, 6);
    const BigCount dim = codespace_dim(built);
    const bool same_span = canonical_equivalence_key(raw) == canonical_equivalence_key(built);
    out.computed << "listed: " << flags_text(raw_flags);
    if (!raw_flags.problems.empty()) out.computed << " (" << raw_flags.problems.front() << ")";
    out.computed << "; built with phases " << to_string(built.generators().front()) << ", ...: " << flags_text(flags)
                 << "; same span=" << same_span << "; logical commutation exponent " << c << " (order " << order
                 << "); codespace_dim=" << dim.str() << "; logicals commute with S: "
                 << (is_logical(built, a) && is_logical(built, b));
    out.expected = "valid, exponent of order 3, codespace_dim=3";
    out.require(raw_flags.abelian && raw_flags.parity_ok, "listed generators abelian and parity-preserving");
    out.require(flags.all(), "built code valid");
    out.require(same_span, "builder matches the listed set");
    out.require(order == 3, "order 3");
    out.require(dim == 3, "codespace_dim = 3");
    out.require(is_logical(built, a) && is_logical(built, b), "squared logicals are logical");
}

void check_corpus(Outcome& out, const Options& o) {
    namespace fs = std::filesystem;
    std::vector<fs::path> files;
    if (fs::is_directory(o.corpus_dir)) {
        for (const auto& entry : fs::directory_iterator(o.corpus_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    std::size_t identity_checked = 0, traced = 0;
    double worst_trace = 0;
    for (const auto& path : files) {
        const CodeFile f = read_code_file(path.string());
        const PfCode& code = f.code;
        const std::string name = path.filename().string();
        out.require(validate(code).all(), name + " valid");
        const BigCount total = big_pow(code.modulus(), code.num_modes() / 2);
        const BigCount s = group_order(code), c = codespace_dim(code);
        out.require(s * c == total, name + " |S| * |C| = D^n");
        ++identity_checked;
        if (total > oracle::kDimensionCap) continue;
        const oracle::DenseRep rep(code.modulus(), code.num_modes() / 2);
        const auto p = oracle::projector(rep, code);
        const double err = std::abs(p.trace - c.convert_to<double>());
        worst_trace = std::max(worst_trace, err);
        out.require(err < 1e-6, name + " trace(P) = codespace_dim");
        out.require(BigCount(p.group_size) == s, name + " enumerated group size = |S|");
        ++traced;
    }
    out.computed << files.size() << " corpus codes, identity on " << identity_checked << ", oracle trace on "
                 << traced << " (worst |trace - dim| = " << worst_trace << ")";
    out.expected = "identity on every code; trace within 1e-6 where D^n <= 2048";
    out.require(!files.empty(), "corpus present at " + o.corpus_dir);
    out.require(traced > 0, "at least one code traced");
}

void check_embedding(Outcome& out, const Options& o) {
    const QuditCheckMatrix q = five_qudit_code(3);
    const auto qd = qudit_distance(q);
    const PfCode code = embed_qudit_code(q);
    const auto k = logical_qudits(code);
    const auto d = distance(code, distance_options(o));
    out.computed << "qudit [[5," << opt_text(qudit_logical_count(q)) << "," << opt_text(qd.distance) << "]]_3 -> "
                 << code.num_modes() << " modes, valid=" << validate(code).all() << ", k=" << opt_text(k)
                 << ", d=" << opt_text(d.distance) << " (searched to weight " << d.searched_weight << ")";
    out.expected = "[[5,1,3]]_3 -> 20 modes, k=1, d=6";
    out.require(qd.distance == 3u && qudit_logical_count(q) == 1u, "qudit code is [[5,1,3]]_3");
    out.require(code.num_modes() == 20 && validate(code).all(), "20-mode valid code");
    out.require(k == 1u, "k = 1");
    out.require(d.distance == 6u, "d = 6");
}

void check_doubling(Outcome& out, const Options&) {
    const QuditCheckMatrix css = double_to_css(listed_8_1_3());
    const auto bad = noncommuting_pairs(css);
    const auto k2 = qudit_logical_count(css);
    out.computed << css.num_qudits() << " qutrits, " << css.rows().size() << " rows, k'=" << opt_text(k2) << ", "
                 << bad.size() << " non-commuting pairs";
    out.expected = "8 qutrits, k'=2, all pairs commute";
    out.require(css.num_qudits() == 8, "8 qutrits");
    out.require(k2 == 2u, "k' = 2");
    out.require(bad.empty(), "all pairs commute");
}

void check_toric(Outcome& out, const Options&) {
    const ToricCode even = build_toric({2, 1, 2, 2});
    PfOperator stars(4, even.code.num_modes()), plaquettes(4, even.code.num_modes());
    for (const auto& s : even.stars) stars = multiply(stars, s);
    for (const auto& p : even.plaquettes) plaquettes = multiply(plaquettes, p);
    bool all_zero = !even.logicals.empty();
    for (const auto& l : even.logicals) all_zero = all_zero && l.charge == 0;

    const ToricCode odd = build_toric({2, 1, 2, 3});
    std::vector<Residue> charges;
    for (const auto& l : odd.logicals) charges.push_back(l.charge);
    const bool violating = std::find(charges.begin(), charges.end(), Residue{2}) != charges.end();

    out.computed << "a=2,b=2: valid=" << validate(even.code).all() << " k=" << opt_text(logical_qudits(even.code))
                 << " prod A_s scalar=" << stars.is_scalar() << " prod B_p scalar=" << plaquettes.is_scalar()
                 << " all logical charges 0=" << all_zero << "; a=2,b=3: valid=" << validate(odd.code).all()
                 << " k=" << opt_text(logical_qudits(odd.code)) << " logical charges {";
    for (std::size_t i = 0; i < charges.size(); ++i) out.computed << (i ? "," : "") << charges[i];
    out.computed << "}";
    out.expected = "k=2 for both; products identity; charges 0; a charge-2 logical at b=3";
    out.require(validate(even.code).all() && logical_qudits(even.code) == 2u, "a=2,b=2 valid with k=2");
    out.require(stars.is_scalar() && plaquettes.is_scalar(), "global relations");
    out.require(all_zero, "all charges 0");
    out.require(validate(odd.code).all() && logical_qudits(odd.code) == 2u, "a=2,b=3 valid with k=2");
    out.require(violating, "charge-2 logical");
}

void check_chain(Outcome& out, const Options& o) {
    std::size_t ok = 0, total = 0;
    for (Residue d : {2, 3, 5}) {
        for (std::size_t n : {2u, 3u, 4u}) {
            ++total;
            const PfCode code = build_clock_chain(d, n);
            const auto k = logical_qudits(code);
            const auto dist = distance(code, distance_options(o));
            const auto lc = l_con(code);
            const bool good = validate(code).all() && k == 1u && dist.distance == 1u && lc.l_con == 2 * n;
            out.require(good, "D=" + std::to_string(d) + " n=" + std::to_string(n) + ": k=" + opt_text(k) +
                                  " d=" + opt_text(dist.distance) + " l_con=" + opt_text(lc.l_con));
            ok += good;
        }
    }
    out.computed << ok << "/" << total << " chains with k=1, d=1, l_con=2n";
    out.expected = "9/9";
}

void check_oracle(Outcome& out, const Options&) {
    std::size_t relations = 0, homs = 0;
    double worst = 0;
    for (Residue d = 2; d <= 5; ++d) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const oracle::DenseRep rep(d, n);
            for (const auto& c : oracle::relation_suite(rep)) {
                out.require(c.pass, c.name);
                worst = std::max(worst, c.error);
                ++relations;
            }
            const auto h = oracle::homomorphism_suite(rep, 1000, 1000 * d + n);
            out.require(h.pass, h.name);
            worst = std::max(worst, h.error);
            ++homs;
        }
    }

    const PfCode code = listed_8_1_3();
    const oracle::DenseRep rep(3, 4);
    const auto p = oracle::projector(rep, code);
    std::size_t errors = 0, agree = 0;
    auto test_error = [&](const PfOperator& e) {
        ++errors;
        const bool same = oracle::syndrome_sim(rep, code, e, p) == syndrome(code, e);
        out.require(same, "syndrome of " + to_string(e));
        agree += same;
    };
    test_error(PfOperator(3, 8));
    for (std::size_t i = 0; i < 8; ++i) {
        for (Residue a = 1; a < 3; ++a) {
            test_error(PfOperator::mode(3, 8, i, a));
            for (std::size_t j = i + 1; j < 8; ++j) {
                for (Residue b = 1; b < 3; ++b) {
                    std::vector<Residue> alpha(8, 0);
                    alpha[i] = a;
                    alpha[j] = b;
                    test_error(PfOperator(3, 0, alpha));
                }
            }
        }
    }
    out.computed << relations << " relation checks and " << homs
                 << " homomorphism suites x 1000 trials, worst error " << worst << "; syndromes agree on " << agree
                 << "/" << errors << " weight<=2 errors";
    out.expected = "all within 1e-9; all syndromes agree";
}

struct Entry {
    const char* title;
    double time_limit;
    void (*run)(Outcome&, const Options&);
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table{
        {"[[8,1,3]]_3 listed code", 1, check_8_1_3},
        {"minimality at D=3 by exhaustive search", 600, check_minimality},
        {"[[6,1,3]]_7 listed code", 60, check_6_1_3},
        {"D=6 doubled code", 60, check_d6},
        {"corpus: |S| * dim = D^n and oracle trace", 300, check_corpus},
        {"qudit embedding of [[5,1,3]]_3", 300, check_embedding},
        {"doubling to a CSS code", 60, check_doubling},
        {"toric code charges and relations", 30, check_toric},
        {"clock chain parameters", 60, check_chain},
        {"dense oracle property suite", 600, check_oracle},
    };
    return table;
}

}  // namespace

int check_count() { return static_cast<int>(entries().size()); }

CheckResult run_check(int id, const Options& options) {
    const Entry& e = entries().at(static_cast<std::size_t>(id - 1));
    CheckResult r;
    r.id = id;
    r.title = e.title;
    r.time_limit = e.time_limit;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
        e.run(out, options);
    } catch (const std::exception& ex) {
        out.pass = false;
        out.computed << "exception: " << ex.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.computed = out.computed.str();
    r.expected = out.expected;
    r.pass = out.pass;
    if (r.seconds > r.time_limit) {
        r.pass = false;
        r.computed += "; over the time limit";
    }
    return r;
}

std::vector<CheckResult> run_all(const Options& options, const std::function<void(const CheckResult&)>& on_result) {
    std::vector<CheckResult> results;
    for (int id = 1; id <= check_count(); ++id) {
        results.push_back(run_check(id, options));
        if (on_result) on_result(results.back());
    }
    return results;
}

std::string format_line(const CheckResult& r) {
    std::ostringstream os;
    os.precision(3);
    os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.computed << " (expected "
       << r.expected << ") t=" << std::fixed << r.seconds << "s/" << r.time_limit << "s";
    return os.str();
}

}  // namespace pfcodes::repro
