/*
 * Copyright 2026 The spyscan Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spyscan::metrics {

/// Surface-syntax rules for the token scanner. Defaults target Scala test
/// code.
///
/// Rules files are line oriented, `key = value[,value...]`, with `#` comment
/// lines. Keys match the member names below; block_comment takes exactly two
/// values. An empty value disables an optional single-token rule.
struct TokenRuleset {
    std::string line_comment = "//";
    std::pair<std::string, std::string> block_comment{"/*", "*/"};
    std::vector<std::string> string_delimiters{"\"\"\"", "\""};
    std::string quoted_identifier = "`";
    std::vector<std::string> branch_keywords{"if", "while", "for", "case", "&&", "||"};
    std::vector<std::string> mutable_keywords{"var"};
    /// A capitalised name segment containing one of these marks a mutable
    /// collection construction.
    std::vector<std::string> mutable_fragments{"Buffer"};
    /// A qualifier segment, like the `mutable` in `collection.mutable.Set`.
    std::vector<std::string> mutable_qualifiers{"mutable"};
    std::string function_keyword = "def";
    std::string arrow = "=>";
    /// A group containing this token on its own is a placeholder lambda.
    std::string placeholder = "_";
    std::string case_keyword = "case";
    std::string match_keyword = "match";
    std::string type_ascription = ":";
    std::string import_keyword = "import";
};

class RulesError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

TokenRuleset parse_rules(std::string_view text);
TokenRuleset load_rules(const std::filesystem::path& path);

/// Throws RulesError if a required rule is empty or malformed.
void validate(const TokenRuleset& rules);

}  // namespace spyscan::metrics
