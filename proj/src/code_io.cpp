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

#include "pfcodes/code_io.hpp"

#include <fstream>
#include <sstream>

namespace pfcodes {

using json = nlohmann::ordered_json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw FormatError(path + ": " + what); }

const json& field(const json& obj, const std::string& path, const char* name) {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(name);
    if (it == obj.end()) fail(path, std::string("missing field \"") + name + "\"");
    return *it;
}

std::int64_t get_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<std::int64_t>();
}

std::int64_t get_int_in(const json& v, const std::string& path, std::int64_t lo, std::int64_t hi) {
    const auto x = get_int(v, path);
    if (x < lo || x >= hi) fail(path, std::to_string(x) + " is outside [" + std::to_string(lo) + ", " + std::to_string(hi) + ")");
    return x;
}

std::size_t get_size(const json& v, const std::string& path) {
    const auto x = get_int(v, path);
    if (x < 0) fail(path, "expected a nonnegative integer");
    return static_cast<std::size_t>(x);
}

std::vector<Residue> residue_vector(const json& v, const std::string& path, std::size_t length, Residue modulus) {
    if (!v.is_array()) fail(path, "expected an array");
    if (v.size() != length) fail(path, "expected " + std::to_string(length) + " entries, got " + std::to_string(v.size()));
    std::vector<Residue> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(get_int_in(v[i], path + "[" + std::to_string(i) + "]", 0, modulus));
    return out;
}

void check_version(const json& j) {
    const auto v = get_int(field(j, "$", "format_version"), "$.format_version");
    if (v != kCodeFormatVersion) fail("$.format_version", "unsupported version " + std::to_string(v));
}

Residue read_modulus(const json& j) {
    return get_int_in(field(j, "$", "D"), "$.D", 2, kMaxModulus);
}

std::string big_string(const BigCount& c) { return c.str(); }

ordered_json lcon_to_json(const LconResult& r) {
    ordered_json j;
    j["metric"] = r.metric;
    j["l_con"] = r.l_con ? ordered_json(*r.l_con) : ordered_json(nullptr);
    j["certificate"] = r.certificate ? operator_to_json(*r.certificate) : ordered_json(nullptr);
    return j;
}

}  // namespace

ordered_json operator_to_json(const PfOperator& op) {
    ordered_json j;
    j["mu"] = op.mu();
    j["alpha"] = std::vector<Residue>(op.alpha().begin(), op.alpha().end());
    return j;
}

ordered_json code_to_json(const PfCode& code, const std::optional<Provenance>& provenance) {
    ordered_json j;
    j["format_version"] = kCodeFormatVersion;
    j["D"] = code.modulus();
    j["num_modes"] = code.num_modes();
    ordered_json gens = ordered_json::array();
    for (const auto& g : code.generators()) gens.push_back(operator_to_json(g));
    j["generators"] = std::move(gens);
    if (code.has_layout()) j["mode_layout"] = code.layout();
    if (provenance) {
        j["provenance"] = {{"builder", provenance->builder}, {"params", provenance->params}};
    }
    return j;
}

CodeFile code_from_json(const json& j) {
    if (!j.is_object()) fail("$", "expected an object");
    check_version(j);
    const Residue d = read_modulus(j);
    const std::size_t modes = get_size(field(j, "$", "num_modes"), "$.num_modes");
    if (modes == 0 || modes % 2 != 0) fail("$.num_modes", "must be a positive even number");

    const json& gens_json = field(j, "$", "generators");
    if (!gens_json.is_array()) fail("$.generators", "expected an array");
    std::vector<PfOperator> gens;
    for (std::size_t i = 0; i < gens_json.size(); ++i) {
        const std::string path = "$.generators[" + std::to_string(i) + "]";
        const json& g = gens_json[i];
        const Residue mu = get_int_in(field(g, path, "mu"), path + ".mu", 0, 2 * d);
        gens.emplace_back(d, mu, residue_vector(field(g, path, "alpha"), path + ".alpha", modes, d));
    }

    ModeLayout layout;
    if (auto it = j.find("mode_layout"); it != j.end()) {
        if (!it->is_array()) fail("$.mode_layout", "expected an array of coordinate arrays");
        if (it->size() != modes) fail("$.mode_layout", "expected one coordinate array per mode");
        std::size_t dim = 0;
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string path = "$.mode_layout[" + std::to_string(i) + "]";
            const json& c = (*it)[i];
            if (!c.is_array() || c.empty()) fail(path, "expected a nonempty integer array");
            if (i == 0) dim = c.size();
            if (c.size() != dim) fail(path, "all coordinates need the same dimension");
            std::vector<std::int64_t> coords;
            for (std::size_t a = 0; a < c.size(); ++a) coords.push_back(get_int(c[a], path + "[" + std::to_string(a) + "]"));
            layout.push_back(std::move(coords));
        }
    }

    std::optional<Provenance> provenance;
    if (auto it = j.find("provenance"); it != j.end()) {
        const json& b = field(*it, "$.provenance", "builder");
        if (!b.is_string()) fail("$.provenance.builder", "expected a string");
        Provenance p{b.get<std::string>()};
        if (auto pit = it->find("params"); pit != it->end()) p.params = *pit;
        provenance = std::move(p);
    }
    return {PfCode(d, modes, std::move(gens), std::move(layout)), std::move(provenance)};
}

ordered_json qudit_to_json(const QuditCheckMatrix& q) {
    ordered_json j;
    j["format_version"] = kCodeFormatVersion;
    j["D"] = q.modulus();
    j["num_qudits"] = q.num_qudits();
    ordered_json rows = ordered_json::array();
    for (const auto& r : q.rows()) rows.push_back({{"x", r.x}, {"z", r.z}});
    j["rows"] = std::move(rows);
    return j;
}

QuditCheckMatrix qudit_from_json(const json& j) {
    if (!j.is_object()) fail("$", "expected an object");
    check_version(j);
    const Residue d = read_modulus(j);
    const std::size_t n = get_size(field(j, "$", "num_qudits"), "$.num_qudits");
    if (n == 0) fail("$.num_qudits", "must be positive");
    const json& rows_json = field(j, "$", "rows");
    if (!rows_json.is_array()) fail("$.rows", "expected an array");
    std::vector<QuditRow> rows;
    for (std::size_t i = 0; i < rows_json.size(); ++i) {
        const std::string path = "$.rows[" + std::to_string(i) + "]";
        rows.push_back({residue_vector(field(rows_json[i], path, "x"), path + ".x", n, d),
                        residue_vector(field(rows_json[i], path, "z"), path + ".z", n, d)});
    }
    return {d, n, std::move(rows)};
}

ordered_json search_spec_to_json(const SearchSpec& spec) {
    ordered_json j;
    j["format_version"] = kCodeFormatVersion;
    j["D"] = spec.modulus;
    j["num_modes"] = spec.num_modes;
    j["target_k"] = spec.target_k;
    j["target_d"] = spec.target_d;
    j["mode"] = spec.mode == SearchMode::Exhaustive ? "exhaustive" : "randomized";
    j["generator_count"] = spec.generator_count ? ordered_json(*spec.generator_count) : ordered_json(nullptr);
    j["symmetry"] = spec.symmetry;
    j["max_hits"] = spec.max_hits;
    j["budget"] = spec.budget;
    j["seed"] = spec.seed;
    j["samples"] = spec.samples;
    return j;
}

SearchSpec search_spec_from_json(const json& j) {
    if (!j.is_object()) fail("$", "expected an object");
    check_version(j);
    SearchSpec s;
    s.modulus = read_modulus(j);
    s.num_modes = get_size(field(j, "$", "num_modes"), "$.num_modes");
    s.target_k = get_size(field(j, "$", "target_k"), "$.target_k");
    s.target_d = get_size(field(j, "$", "target_d"), "$.target_d");
    if (auto it = j.find("mode"); it != j.end()) {
        if (*it == "exhaustive") {
            s.mode = SearchMode::Exhaustive;
        } else if (*it == "randomized") {
            s.mode = SearchMode::Randomized;
        } else {
            fail("$.mode", "expected \"exhaustive\" or \"randomized\"");
        }
    }
    if (auto it = j.find("generator_count"); it != j.end() && !it->is_null())
        s.generator_count = get_size(*it, "$.generator_count");
    if (auto it = j.find("symmetry"); it != j.end()) {
        if (!it->is_boolean()) fail("$.symmetry", "expected true or false");
        s.symmetry = it->get<bool>();
    }
    if (auto it = j.find("max_hits"); it != j.end()) s.max_hits = get_size(*it, "$.max_hits");
    if (auto it = j.find("budget"); it != j.end()) s.budget = get_size(*it, "$.budget");
    if (auto it = j.find("seed"); it != j.end()) s.seed = get_size(*it, "$.seed");
    if (auto it = j.find("samples"); it != j.end()) s.samples = get_size(*it, "$.samples");
    try {
        check_search_spec(s);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("$: ") + e.what());
    }
    return s;
}

ordered_json report_to_json(const CodeReport& r) {
    ordered_json j;
    j["D"] = r.modulus;
    j["num_modes"] = r.num_modes;
    j["valid"] = r.flags.all();
    j["abelian"] = r.flags.abelian;
    j["parity_ok"] = r.flags.parity_ok;
    j["phase_ok"] = r.flags.phase_ok;
    j["problems"] = r.flags.problems;
    if (!r.flags.all()) return j;
    j["group_order"] = big_string(r.group_order);
    j["codespace_dim"] = big_string(r.codespace_dim);
    j["k"] = r.k ? ordered_json(*r.k) : ordered_json(nullptr);
    if (r.distance) {
        j["d"] = r.distance->distance ? ordered_json(*r.distance->distance) : ordered_json(nullptr);
        j["distance_searched_weight"] = r.distance->searched_weight;
        j["distance_certificate"] =
            r.distance->certificate ? operator_to_json(*r.distance->certificate) : ordered_json(nullptr);
    } else {
        j["d"] = nullptr;
    }
    if (!r.distance_note.empty()) j["distance_note"] = r.distance_note;
    j["l_con"] = r.l_con ? lcon_to_json(*r.l_con) : ordered_json(nullptr);
    ordered_json logicals = ordered_json::array();
    for (const auto& l : r.logicals) {
        ordered_json e = operator_to_json(l.op);
        e["charge"] = l.charge;
        logicals.push_back(std::move(e));
    }
    j["logicals"] = std::move(logicals);
    return j;
}

ordered_json search_result_to_json(const SearchResult& result, bool canonical) {
    const auto& c = result.certificate;
    ordered_json cert;
    cert["spec"] = search_spec_to_json(c.spec);
    cert["strategy"] = c.strategy;
    cert["estimated_candidates"] = big_string(c.estimated_candidates);
    cert["evaluated"] = c.evaluated;
    cert["skipped_by_symmetry"] = c.skipped_by_symmetry;
    cert["rejected_phase"] = c.rejected_phase;
    cert["rejected_k"] = c.rejected_k;
    cert["rejected_distance"] = c.rejected_distance;
    cert["exhausted"] = c.exhausted;
    cert["stopped_at_max_hits"] = c.stopped_at_max_hits;
    cert["budget_exceeded"] = c.budget_exceeded;
    std::ostringstream digest;
    digest << std::hex << c.digest;
    cert["digest"] = digest.str();
    cert["none_exists"] = c.exhausted && result.hits.empty() && c.spec.mode == SearchMode::Exhaustive;
    if (!canonical) cert["wall_seconds"] = c.wall_seconds;

    ordered_json j;
    ordered_json hits = ordered_json::array();
    for (const auto& h : result.hits) {
        ordered_json e;
        e["k"] = h.k;
        e["d"] = h.d;
        e["code"] = code_to_json(h.code);
        hits.push_back(std::move(e));
    }
    j["hits"] = std::move(hits);
    j["certificate"] = std::move(cert);
    return j;
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw FormatError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": invalid JSON");
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parse_json_text(buf.str());
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << j.dump(2) << '\n';
}

CodeFile read_code_file(const std::string& path) {
    const json j = read_json_file(path);
    try {
        return code_from_json(j);
    } catch (const FormatError& e) {
        throw FormatError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void write_code_file(const std::string& path, const PfCode& code, const std::optional<Provenance>& provenance) {
    write_json_file(path, code_to_json(code, provenance));
}

}  // namespace pfcodes
