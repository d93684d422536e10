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

// pfcodes command-line driver.
//
// Exit status: 0 success / valid, 1 invalid code, 2 usage or format error,
// 3 search budget exceeded.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pfcodes/builders.hpp"
#include "pfcodes/code_io.hpp"
#include "pfcodes/dense_oracle.hpp"
#include "pfcodes/repro.hpp"
#include "pfcodes/search.hpp"

using namespace pfcodes;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kUsage = 2, kBudget = 3 };

struct Globals {
    int threads = 0;
    std::string out;
    bool json = false;
    bool canonical = false;
};

void emit(const Globals& g, const std::string& text) {
    if (g.out.empty() || g.out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw FormatError(g.out + ": cannot open for writing");
    f << text;
    std::cerr << "wrote " << g.out << "\n";
}

void emit_json(const Globals& g, const ordered_json& j) { emit(g, j.dump(2) + "\n"); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string residues(const std::vector<Residue>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

void print_flags(const ValidationFlags& f) {
    std::cout << "abelian:            " << yes_no(f.abelian) << "\n"
              << "parity-preserving:  " << yes_no(f.parity_ok) << "\n"
              << "phase-consistent:   " << yes_no(f.phase_ok) << "\n";
    for (const auto& p : f.problems) std::cout << "  - " << p << "\n";
}

std::string params_label(const CodeReport& r) {
    std::ostringstream os;
    os << "[[" << r.num_modes << "," << (r.k ? std::to_string(*r.k) : "?") << ",";
    os << (r.distance && r.distance->distance ? std::to_string(*r.distance->distance) : "?");
    os << "]]_" << r.modulus;
    return os.str();
}

void print_report(const CodeReport& r) {
    std::cout << "D = " << r.modulus << ", 2n = " << r.num_modes << "\n";
    print_flags(r.flags);
    if (!r.flags.all()) return;
    std::cout << "|S| = " << r.group_order.str() << "\n"
              << "codespace dim = " << r.codespace_dim.str() << "\n"
              << "k = " << (r.k ? std::to_string(*r.k) : "not an integer") << "\n";
    if (r.distance && r.distance->distance) {
        std::cout << "d = " << *r.distance->distance;
        if (r.distance->certificate) std::cout << "  (e.g. " << to_string(*r.distance->certificate) << ")";
        std::cout << "\n";
    } else if (r.distance) {
        std::cout << "d > " << r.distance->searched_weight << " (searched up to that weight)\n";
    } else {
        std::cout << "d = not computed\n";
    }
    if (!r.distance_note.empty()) std::cout << "  note: " << r.distance_note << "\n";
    if (r.l_con) {
        if (r.l_con->l_con) {
            std::cout << "l_con = " << *r.l_con->l_con << " (" << r.l_con->metric << ")";
            if (r.l_con->certificate) std::cout << "  (e.g. " << to_string(*r.l_con->certificate) << ")";
            std::cout << "\n";
        } else {
            std::cout << "l_con = none (every logical violates parity)\n";
        }
    }
    std::cout << "logical basis:\n";
    for (const auto& l : r.logicals) std::cout << "  " << to_string(l.op) << "   charge " << l.charge << "\n";
    std::cout << "parameters: " << params_label(r) << "\n";
}

int cmd_validate(const Globals& g, const std::string& file) {
    const CodeFile f = read_code_file(file);
    const auto flags = validate(f.code);
    if (g.json) {
        ordered_json j;
        j["valid"] = flags.all();
        j["abelian"] = flags.abelian;
        j["parity_ok"] = flags.parity_ok;
        j["phase_ok"] = flags.phase_ok;
        j["problems"] = flags.problems;
        emit_json(g, j);
    } else {
        print_flags(flags);
        std::cout << (flags.all() ? "valid" : "INVALID") << "\n";
    }
    return flags.all() ? kOk : kInvalid;
}

int cmd_params(const Globals& g, const std::string& file, std::optional<std::size_t> max_weight) {
    const CodeFile f = read_code_file(file);
    AnalyzeOptions opts;
    opts.distance.threads = g.threads;
    opts.distance.max_weight = max_weight;
    const CodeReport r = analyze(f.code, opts);
    if (g.json) {
        emit_json(g, report_to_json(r));
    } else {
        print_report(r);
    }
    return r.flags.all() ? kOk : kInvalid;
}

int cmd_syndrome(const Globals& g, const std::string& file, const std::string& error_text) {
    const CodeFile f = read_code_file(file);
    require_valid(f.code);
    const PfOperator e = parse_operator(error_text, f.code.modulus(), f.code.num_modes());
    const auto s = syndrome(f.code, e);
    if (g.json) {
        ordered_json j;
        j["error"] = operator_to_json(e);
        j["syndrome"] = s;
        emit_json(g, j);
    } else {
        std::cout << "error " << to_string(e) << " (weight " << weight(e) << ", charge " << charge(e) << ")\n"
                  << "syndrome " << residues(s) << "\n";
    }
    return kOk;
}

int cmd_search(const Globals& g, const std::string& file) {
    SearchSpec spec = search_spec_from_json(read_json_file(file));
    if (g.threads > 0) spec.threads = g.threads;
    try {
        check_search_spec(spec);
    } catch (const std::invalid_argument& e) {
        throw FormatError(file + ": " + e.what());
    }
    std::cerr << "estimated candidates: " << estimate_candidates(spec).str() << "\n";
    const SearchResult r = find_codes(spec);
    emit_json(g, search_result_to_json(r, g.canonical));
    const auto& c = r.certificate;
    std::cerr << r.hits.size() << " hit(s), " << c.evaluated << " evaluated"
              << (c.exhausted && r.hits.empty() ? ", none exists" : "") << (c.budget_exceeded ? ", budget exceeded" : "")
              << "\n";
    return c.budget_exceeded ? kBudget : kOk;
}

int write_code(const Globals& g, const PfCode& code, const Provenance& prov) {
    emit_json(g, code_to_json(code, prov));
    return kOk;
}

int cmd_embed(const Globals& g, const std::string& file) {
    const QuditCheckMatrix q = qudit_from_json(read_json_file(file));
    const PfCode code = embed_qudit_code(q);
    return write_code(g, code, {"embed", {{"source", file}}});
}

int cmd_double(const Globals& g, const std::string& file, bool distance) {
    const CodeFile f = read_code_file(file);
    const QuditCheckMatrix css = double_to_css(f.code);
    emit_json(g, qudit_to_json(css));
    const auto k = qudit_logical_count(css);
    std::cerr << "CSS code on " << css.num_qudits() << " qudits, " << css.rows().size() << " checks, k' = "
              << (k ? std::to_string(*k) : "?");
    if (distance) {
        const auto d = qudit_distance(css);
        std::cerr << ", d' = " << (d.distance ? std::to_string(*d.distance) : "?");
    }
    std::cerr << "\n";
    return kOk;
}

int cmd_double_d6(const Globals& g, const std::string& file) {
    const CodeFile f = read_code_file(file);
    return write_code(g, double_code_d6(f.code), {"double-d6", {{"source", file}}});
}

int cmd_toric(const Globals& g, const ToricSpec& spec) {
    const ToricCode t = build_toric(spec);
    for (const auto& l : t.logicals) {
        std::cerr << (l.direction == ToricLogical::Direction::Horizontal ? "horizontal" : "vertical")
                  << " logical, charge " << l.charge << ", weight " << weight(l.op) << "\n";
    }
    return write_code(g, t.code, {"toric", {{"p", spec.p}, {"l", spec.l}, {"a", spec.a}, {"b", spec.b}}});
}

int cmd_chain(const Globals& g, Residue d, std::size_t n) {
    return write_code(g, build_clock_chain(d, n), {"chain", {{"D", d}, {"n", n}}});
}

int cmd_make(const Globals& g, Residue d, std::size_t modes, const std::vector<std::string>& gens, bool raw) {
    std::vector<PfOperator> ops;
    for (const auto& text : gens) ops.push_back(parse_operator(text, d, modes));
    PfCode code(d, modes, std::move(ops));
    if (!raw) code = canonical_phases(code);
    return write_code(g, code, {"make", {{"generators", gens}, {"canonical_phases", !raw}}});
}

int cmd_five_qudit(const Globals& g, Residue d) {
    emit_json(g, qudit_to_json(five_qudit_code(d)));
    return kOk;
}

int cmd_oracle(const Globals&, Residue d, std::size_t n, const std::string& file, std::size_t trials) {
    bool ok = true;
    auto row = [&](const std::string& name, double err, bool pass) {
        std::cout << (pass ? "PASS  " : "FAIL  ") << name << "  (max error " << err << ")\n";
        ok = ok && pass;
    };
    std::optional<CodeFile> f;
    if (!file.empty()) {
        f = read_code_file(file);
        d = f->code.modulus();
        n = f->code.num_modes() / 2;
    }
    const oracle::DenseRep rep(d, n);
    std::cout << "D = " << d << ", n = " << n << ", dimension " << rep.dimension() << "\n";
    for (const auto& c : oracle::relation_suite(rep)) row(c.name, c.error, c.pass);
    const auto h = oracle::homomorphism_suite(rep, trials, 1);
    row(h.name, h.error, h.pass);
    if (f) {
        const PfCode& code = f->code;
        const auto p = oracle::projector(rep, code);
        const double dim = codespace_dim(code).convert_to<double>();
        row("trace(P) = " + std::to_string(p.trace) + " vs codespace dim " + codespace_dim(code).str(),
            std::abs(p.trace - dim), std::abs(p.trace - dim) < 1e-6);
        std::size_t agree = 0, total = 0;
        std::vector<PfOperator> errors{PfOperator(d, 2 * n)};
        for (std::size_t i = 0; i < 2 * n; ++i)
            for (Residue a = 1; a < d; ++a) errors.push_back(PfOperator::mode(d, 2 * n, i, a));
        for (std::size_t i = 0; i < 2 * n; ++i)
            for (std::size_t j = i + 1; j < 2 * n; ++j)
                for (Residue a = 1; a < d; ++a)
                    for (Residue b = 1; b < d; ++b) {
                        std::vector<Residue> alpha(2 * n, 0);
                        alpha[i] = a;
                        alpha[j] = b;
                        errors.emplace_back(d, 0, alpha);
                    }
        for (const auto& e : errors) {
            ++total;
            agree += oracle::syndrome_sim(rep, code, e, p) == syndrome(code, e);
        }
        row("simulated syndromes agree on " + std::to_string(agree) + "/" + std::to_string(total) +
                " errors of weight <= 2",
            0, agree == total);
    }
    return ok ? kOk : kInvalid;
}

int cmd_repro(const Globals& g, const std::string& corpus) {
    repro::Options opts;
    opts.corpus_dir = corpus;
    opts.threads = g.threads;
    int failed = 0;
    const auto results = repro::run_all(opts, [&](const repro::CheckResult& r) {
        std::cout << repro::format_line(r) << std::endl;
        failed += !r.pass;
    });
    std::cout << "\n| # | check | result | time (s) |\n|---|---|---|---|\n";
    for (const auto& r : results) {
        std::cout << "| " << r.id << " | " << r.title << " | " << (r.pass ? "PASS" : "FAIL") << " | " << r.seconds
                  << " |\n";
    }
    std::cout << "\n" << results.size() - failed << "/" << results.size() << " checks passed\n";
    return failed == 0 ? kOk : kInvalid;
}

int default_threads() {
    if (const char* env = std::getenv("PFCODES_THREADS")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (const std::exception&) {
            std::cerr << "ignoring PFCODES_THREADS=" << env << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Parafermion stabilizer code toolkit"};
    app.require_subcommand(1);
    Globals g;
    g.threads = default_threads();
    app.add_option("--threads", g.threads, "Worker cap for search and distance (0 = all; env PFCODES_THREADS)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("-o,--out", g.out, "Write output to this file instead of stdout");
    app.add_flag("--json", g.json, "JSON output for validate, params and syndrome");
    app.add_flag("--canonical", g.canonical, "Deterministic JSON (omit wall time) for search");

    std::string file, error_text, corpus = "codes";
    std::optional<std::size_t> max_weight;
    Residue d = 3;
    std::size_t n = 2, trials = 1000;
    bool css_distance = false;
    ToricSpec toric{2, 1, 2, 2};

    auto* validate_cmd = app.add_subcommand("validate", "Check the stabilizer conditions of a code file");
    validate_cmd->add_option("file", file, "Code file")->required();
    auto* params_cmd = app.add_subcommand("params", "Report |S|, k, d, l_con and a logical basis");
    params_cmd->add_option("file", file, "Code file")->required();
    params_cmd->add_option("--max-weight", max_weight, "Cap the distance search at this weight");
    auto* syndrome_cmd = app.add_subcommand("syndrome", "Syndrome of an error, e.g. --error \"g1 g3^2\"");
    syndrome_cmd->add_option("file", file, "Code file")->required();
    syndrome_cmd->add_option("--error", error_text, "Operator text")->required();
    auto* search_cmd = app.add_subcommand("search", "Run a code search from a spec file");
    search_cmd->add_option("spec", file, "Search spec file")->required();
    auto* embed_cmd = app.add_subcommand("embed", "Map a qudit stabilizer code to parafermions (4 modes per qudit)");
    embed_cmd->add_option("file", file, "Qudit code file")->required();
    auto* double_cmd = app.add_subcommand("double", "CSS code with X checks S*Lambda and Z checks S");
    double_cmd->add_option("file", file, "Code file")->required();
    double_cmd->add_flag("--distance", css_distance, "Also compute d' by brute force");
    auto* d6_cmd = app.add_subcommand("double-d6", "Lift a D=3 code to D=6");
    d6_cmd->add_option("file", file, "D=3 code file")->required();
    auto* toric_cmd = app.add_subcommand("toric", "Toric code on an a x b torus with D = p^(2l)");
    toric_cmd->add_option("--p", toric.p, "Prime")->required();
    toric_cmd->add_option("--l", toric.l, "Exponent, D = p^(2l)")->required();
    toric_cmd->add_option("--a", toric.a, "Horizontal size")->required();
    toric_cmd->add_option("--b", toric.b, "Vertical size")->required();
    auto* chain_cmd = app.add_subcommand("chain", "Clock-model chain code");
    chain_cmd->add_option("--D", d, "Modulus")->required()->check(CLI::Range(2, 64));
    chain_cmd->add_option("--n", n, "Number of mode pairs")->required();
    std::vector<std::string> gen_texts;
    std::size_t modes = 0;
    bool raw = false;
    auto* make_cmd = app.add_subcommand("make", "Code file from operator text, e.g. --gen \"g1^-1 g2 g4^-1 g6\"");
    make_cmd->add_option("--D", d, "Modulus")->required()->check(CLI::Range(2, 64));
    make_cmd->add_option("--modes", modes, "Number of modes 2n")->required();
    make_cmd->add_option("--gen", gen_texts, "Generator (repeatable)")->required();
    make_cmd->add_flag("--raw", raw, "Keep the phases as written instead of choosing canonical ones");
    auto* five_cmd = app.add_subcommand("five-qudit", "The cyclic [[5,1,3]]_D qudit code");
    five_cmd->add_option("--D", d, "Modulus")->required()->check(CLI::Range(2, 64));
    auto* oracle_cmd = app.add_subcommand("oracle", "Dense-matrix cross-checks");
    oracle_cmd->add_option("--D", d, "Modulus")->check(CLI::Range(2, 64));
    oracle_cmd->add_option("--n", n, "Number of qudits (2n modes)");
    oracle_cmd->add_option("--file", file, "Also check projector trace and syndromes of this code");
    oracle_cmd->add_option("--trials", trials, "Random products for the homomorphism check");
    auto* repro_cmd = app.add_subcommand("repro-paper", "Recompute every published result");
    repro_cmd->add_option("--corpus", corpus, "Code corpus directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e);
        return status == 0 ? kOk : kUsage;
    }

    try {
        if (*validate_cmd) return cmd_validate(g, file);
        if (*params_cmd) return cmd_params(g, file, max_weight);
        if (*syndrome_cmd) return cmd_syndrome(g, file, error_text);
        if (*search_cmd) return cmd_search(g, file);
        if (*embed_cmd) return cmd_embed(g, file);
        if (*double_cmd) return cmd_double(g, file, css_distance);
        if (*d6_cmd) return cmd_double_d6(g, file);
        if (*toric_cmd) return cmd_toric(g, toric);
        if (*chain_cmd) return cmd_chain(g, d, n);
        if (*make_cmd) return cmd_make(g, d, modes, gen_texts, raw);
        if (*five_cmd) return cmd_five_qudit(g, d);
        if (*oracle_cmd) return cmd_oracle(g, d, n, file, trials);
        if (*repro_cmd) return cmd_repro(g, corpus);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvalidCodeError& e) {
        std::cerr << "invalid code: " << e.what() << "\n";
        return kInvalid;
    } catch (const PhaseAssignmentError& e) {
        std::cerr << "invalid code: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
