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

#include <spyscan/metrics/ruleset.hpp>

#include <fstream>
#include <sstream>

namespace spyscan::metrics {
namespace {

std::string trim(std::string_view s)
{
    constexpr std::string_view ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(ws);
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view value)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= value.size()) {
        const auto comma = value.find(',', start);
        const auto piece = trim(value.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                    : comma - start));
        if (!piece.empty()) {
            out.push_back(piece);
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::string single(const std::vector<std::string>& values, const std::string& key, std::size_t line_no)
{
    if (values.size() > 1) {
        throw RulesError("rules line " + std::to_string(line_no) + ": '" + key + "' takes a single value");
    }
    return values.empty() ? std::string() : values.front();
}

}  // namespace

TokenRuleset parse_rules(std::string_view text)
{
    TokenRuleset rules;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw RulesError("rules line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = trim(std::string_view(line).substr(0, eq));
        const auto values = split_list(std::string_view(line).substr(eq + 1));

        if (key == "line_comment") {
            rules.line_comment = single(values, key, line_no);
        } else if (key == "block_comment") {
            if (values.empty()) {
                rules.block_comment = {};
            } else if (values.size() != 2) {
                throw RulesError("rules line " + std::to_string(line_no) + ": block_comment needs open,close");
            } else {
                rules.block_comment = {values[0], values[1]};
            }
        } else if (key == "string_delimiters") {
            rules.string_delimiters = values;
        } else if (key == "quoted_identifier") {
            rules.quoted_identifier = single(values, key, line_no);
        } else if (key == "branch_keywords") {
            rules.branch_keywords = values;
        } else if (key == "mutable_keywords") {
            rules.mutable_keywords = values;
        } else if (key == "mutable_fragments") {
            rules.mutable_fragments = values;
        } else if (key == "mutable_qualifiers") {
            rules.mutable_qualifiers = values;
        } else if (key == "function_keyword") {
            rules.function_keyword = single(values, key, line_no);
        } else if (key == "arrow") {
            rules.arrow = single(values, key, line_no);
        } else if (key == "placeholder") {
            rules.placeholder = single(values, key, line_no);
        } else if (key == "case_keyword") {
            rules.case_keyword = single(values, key, line_no);
        } else if (key == "match_keyword") {
            rules.match_keyword = single(values, key, line_no);
        } else if (key == "type_ascription") {
            rules.type_ascription = single(values, key, line_no);
        } else if (key == "import_keyword") {
            rules.import_keyword = single(values, key, line_no);
        } else {
            throw RulesError("rules line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    validate(rules);
    return rules;
}

TokenRuleset load_rules(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw RulesError("cannot read rules file " + path.string());
    }
    std::ostringstream content;
    content << in.rdbuf();
    return parse_rules(content.str());
}

void validate(const TokenRuleset& rules)
{
    if (rules.function_keyword.empty()) {
        throw RulesError("function_keyword must not be empty");
    }
    if (rules.branch_keywords.empty()) {
        throw RulesError("branch_keywords must not be empty");
    }
    if (rules.block_comment.first.empty() != rules.block_comment.second.empty()) {
        throw RulesError("block_comment needs both delimiters or neither");
    }
    for (const auto& d : rules.string_delimiters) {
        if (d.empty()) {
            throw RulesError("string delimiters must not be empty");
        }
    }
}

}  // namespace spyscan::metrics
