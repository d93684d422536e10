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

// JSON file formats. Schemas are described in docs/formats.md.

#ifndef PFCODES_CODE_IO_HPP
#define PFCODES_CODE_IO_HPP

#include <nlohmann/json.hpp>
#include <optional>
#include <stdexcept>
#include <string>

#include "pfcodes/qudit_code.hpp"
#include "pfcodes/search.hpp"
#include "pfcodes/stab_code.hpp"

namespace pfcodes {

/// Malformed input. The message names the offending field path (or the line
/// and column for JSON syntax errors).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Provenance {
    std::string builder;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();

    bool operator==(const Provenance&) const = default;
};

struct CodeFile {
    PfCode code;
    std::optional<Provenance> provenance;
};

inline constexpr int kCodeFormatVersion = 1;

nlohmann::ordered_json code_to_json(const PfCode& code, const std::optional<Provenance>& provenance = {});
CodeFile code_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json qudit_to_json(const QuditCheckMatrix& q);
QuditCheckMatrix qudit_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json search_spec_to_json(const SearchSpec& spec);
SearchSpec search_spec_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json operator_to_json(const PfOperator& op);
nlohmann::ordered_json report_to_json(const CodeReport& report);
/// Wall time is left out when `canonical` is set so the output is reproducible.
nlohmann::ordered_json search_result_to_json(const SearchResult& result, bool canonical);

/// Parses JSON text, reporting syntax errors as "line L, column C: ...".
nlohmann::ordered_json parse_json_text(const std::string& text);
nlohmann::ordered_json read_json_file(const std::string& path);
/// Writes with two-space indentation and a trailing newline.
void write_json_file(const std::string& path, const nlohmann::ordered_json& j);

CodeFile read_code_file(const std::string& path);
void write_code_file(const std::string& path, const PfCode& code, const std::optional<Provenance>& provenance = {});

}  // namespace pfcodes

#endif  // PFCODES_CODE_IO_HPP
