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

#include <spyscan/metrics/analyzer.hpp>

#include <algorithm>
#include <cctype>
#include <limits>
#include <optional>

namespace spyscan::metrics {
namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

bool is_punct(const Token& t, char c)
{
    return t.kind == TokenKind::punct && t.text.size() == 1 && t.text[0] == c;
}

bool is_word(const Token& t, std::string_view word)
{
    return !word.empty() && t.kind == TokenKind::identifier && t.text == word;
}

bool is_op(const Token& t, std::string_view op)
{
    return !op.empty() && t.kind == TokenKind::op && t.text == op;
}

bool is_name(const Token& t)
{
    return t.kind == TokenKind::identifier || t.kind == TokenKind::quoted_identifier;
}

std::string display_name(const Token& t)
{
    std::string name = t.text;
    if (t.kind == TokenKind::quoted_identifier) {
        std::replace(name.begin(), name.end(), ' ', '_');
    }
    return name;
}

bool name_matches(const Token& t, std::string_view name)
{
    return t.text == name || display_name(t) == name;
}

bool contains(const std::vector<std::string>& list, std::string_view s)
{
    return std::find(list.begin(), list.end(), s) != list.end();
}

bool is_branch(const Token& t, const TokenRuleset& rules)
{
    return (t.kind == TokenKind::identifier || t.kind == TokenKind::op) && contains(rules.branch_keywords, t.text);
}

// Index of the token opening the braced body of the function whose name is
// at `name_index`, or npos when it has none.
std::size_t find_body_open(const std::vector<Token>& tokens, std::size_t name_index, const TokenRuleset& rules)
{
    int depth = 0;
    for (std::size_t i = name_index + 1; i < tokens.size(); ++i) {
        const Token& t = tokens[i];
        if (is_punct(t, '(') || is_punct(t, '[')) {
            ++depth;
        } else if (is_punct(t, ')') || is_punct(t, ']')) {
            if (depth == 0) {
                return npos;
            }
            --depth;
        } else if (depth == 0) {
            if (is_punct(t, '{')) {
                return i;
            }
            if (is_op(t, "=")) {
                return i + 1 < tokens.size() && is_punct(tokens[i + 1], '{') ? i + 1 : npos;
            }
            if (is_punct(t, '}') || is_punct(t, ';') || is_word(t, rules.function_keyword)) {
                return npos;
            }
        }
    }
    return npos;
}

std::optional<std::size_t> find_matching_close(const std::vector<Token>& tokens, std::size_t open)
{
    int depth = 0;
    for (std::size_t i = open; i < tokens.size(); ++i) {
        if (is_punct(tokens[i], '{')) {
            ++depth;
        } else if (is_punct(tokens[i], '}')) {
            if (--depth == 0) {
                return i;
            }
        }
    }
    return std::nullopt;
}

FunctionSpan make_span(const SourceFile& file, std::size_t keyword, std::size_t open, std::size_t close)
{
    const auto& tokens = file.tokens().tokens;
    FunctionSpan span;
    span.file_id = file.id();
    span.name = display_name(tokens[keyword + 1]);
    span.keyword_token = keyword;
    span.open_token = open;
    span.close_token = close;
    span.signature_line = tokens[keyword].line;
    span.open_line = tokens[open].line;
    span.body_begin = span.open_line + 1;
    span.body_end = std::max(span.body_begin, tokens[close].line);
    return span;
}

struct BodyCounts {
    std::size_t branches = 0;
    std::size_t nested_functions = 0;
    std::size_t anonymous_functions = 0;
    std::size_t mutable_bindings = 0;
    std::size_t mutable_constructions = 0;
};

bool chain_is_mutable_construction(const std::vector<Token>& tokens, std::size_t start, std::size_t end,
                                   const TokenRuleset& rules)
{
    for (std::size_t j = start; j < end; j += 2) {
        const Token& seg = tokens[j];
        if (seg.kind != TokenKind::identifier) {
            break;
        }
        const bool followed_by_dot = j + 1 < end && is_punct(tokens[j + 1], '.');
        if (followed_by_dot && contains(rules.mutable_qualifiers, seg.text)) {
            return true;
        }
        if (std::isupper(static_cast<unsigned char>(seg.text.front()))) {
            for (const auto& fragment : rules.mutable_fragments) {
                if (seg.text.find(fragment) != std::string::npos) {
                    return true;
                }
            }
        }
        if (!followed_by_dot) {
            break;
        }
    }
    return false;
}

BodyCounts scan_body(const SourceFile& file, const FunctionSpan& span, const TokenRuleset& rules)
{
    struct Frame {
        char open;
        bool in_type = false;
        std::size_t type_line = 0;
        bool placeholder = false;
    };

    const auto& tokens = file.tokens().tokens;
    BodyCounts counts;
    std::vector<Frame> frames{Frame{'{'}};
    bool pending_case = false;
    std::size_t import_line = npos;

    for (std::size_t i = span.open_token + 1; i < span.close_token; ++i) {
        const Token& t = tokens[i];
        const Token* prev = i > span.open_token + 1 ? &tokens[i - 1] : nullptr;
        Frame& top = frames.back();
        if (top.open == '{' && top.in_type && t.line != top.type_line) {
            top.in_type = false;
        }
        if (is_word(t, rules.import_keyword)) {
            import_line = t.line;
            continue;
        }
        if (t.line == import_line) {
            continue;
        }

        if (t.kind == TokenKind::punct) {
            const char c = t.text[0];
            if (c == '(' || c == '[' || c == '{') {
                if (c == '{' && i + 1 < span.close_token && is_word(tokens[i + 1], rules.case_keyword) &&
                    !(prev && is_word(*prev, rules.match_keyword))) {
                    ++counts.anonymous_functions;
                }
                frames.push_back(Frame{c});
            } else if (c == ')' || c == ']' || c == '}') {
                if (frames.size() > 1) {
                    if (frames.back().placeholder) {
                        ++counts.anonymous_functions;
                    }
                    frames.pop_back();
                }
            } else if (c == ',' || c == ';') {
                top.in_type = false;
            }
            continue;
        }

        if (t.kind == TokenKind::op) {
            if (is_op(t, rules.type_ascription)) {
                top.in_type = true;
                top.type_line = t.line;
            } else if (is_op(t, "=")) {
                top.in_type = false;
            } else if (is_op(t, rules.arrow)) {
                if (pending_case) {
                    pending_case = false;
                    top.in_type = false;
                } else if (!top.in_type) {
                    ++counts.anonymous_functions;
                }
            }
            if (is_branch(t, rules)) {
                ++counts.branches;
            }
            continue;
        }

        if (t.kind != TokenKind::identifier) {
            continue;
        }
        if (is_word(t, rules.function_keyword) && i + 1 < span.close_token && is_name(tokens[i + 1])) {
            ++counts.nested_functions;
        }
        if (is_word(t, rules.case_keyword)) {
            pending_case = true;
        }
        if (is_branch(t, rules)) {
            ++counts.branches;
        }
        if (contains(rules.mutable_keywords, t.text)) {
            ++counts.mutable_bindings;
        }
        if (is_word(t, rules.placeholder) && !pending_case && !top.in_type && top.open != '[') {
            top.placeholder = true;
        }
        const bool chain_start = !(prev && is_punct(*prev, '.'));
        if (chain_start && !top.in_type && chain_is_mutable_construction(tokens, i, span.close_token, rules)) {
            ++counts.mutable_constructions;
        }
    }
    return counts;
}

}  // namespace

FunctionSpan extract_span(const SourceFile& file, std::string_view name, const TokenRuleset& rules)
{
    const auto& tokens = file.tokens().tokens;
    std::vector<std::size_t> keywords;
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        if (is_word(tokens[i], rules.function_keyword) && is_name(tokens[i + 1]) && name_matches(tokens[i + 1], name)) {
            keywords.push_back(i);
        }
    }
    const std::string where = file.id().empty() ? std::string() : " in " + file.id();
    if (keywords.empty()) {
        throw MetricsError(MetricsError::Code::not_found, "function '" + std::string(name) + "' not found" + where);
    }
    if (keywords.size() > 1) {
        throw MetricsError(MetricsError::Code::ambiguous,
                           "function '" + std::string(name) + "' defined " + std::to_string(keywords.size()) +
                               " times" + where);
    }
    const std::size_t keyword = keywords.front();
    const std::size_t open = find_body_open(tokens, keyword + 1, rules);
    if (open == npos) {
        throw MetricsError(MetricsError::Code::no_body,
                           "function '" + std::string(name) + "' has no braced body" + where);
    }
    const auto close = find_matching_close(tokens, open);
    if (!close) {
        throw MetricsError(MetricsError::Code::unbalanced_braces,
                           "unbalanced braces in function '" + std::string(name) + "'" + where);
    }
    return make_span(file, keyword, open, *close);
}

FunctionSpan extract_span(std::string_view text, std::string_view name, const TokenRuleset& rules)
{
    return extract_span(SourceFile({}, text, rules), name, rules);
}

std::vector<FunctionSpan> outermost_functions(const SourceFile& file, const TokenRuleset& rules)
{
    const auto& tokens = file.tokens().tokens;
    std::vector<FunctionSpan> out;
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        if (!is_word(tokens[i], rules.function_keyword) || !is_name(tokens[i + 1])) {
            continue;
        }
        const std::size_t open = find_body_open(tokens, i + 1, rules);
        if (open == npos) {
            continue;
        }
        const auto close = find_matching_close(tokens, open);
        if (!close) {
            throw MetricsError(MetricsError::Code::unbalanced_braces,
                               "unbalanced braces in function '" + display_name(tokens[i + 1]) + "' in " + file.id());
        }
        out.push_back(make_span(file, i, open, *close));
        i = *close;
    }
    return out;
}

std::size_t count_loc(const SourceFile& file, const FunctionSpan& span)
{
    std::vector<bool> code(span.body_lines(), false);
    const auto& tokens = file.tokens().tokens;
    for (std::size_t i = span.open_token + 1; i < span.close_token; ++i) {
        for (std::size_t line = tokens[i].line; line <= tokens[i].end_line; ++line) {
            if (line >= span.body_begin && line < span.body_end) {
                code[line - span.body_begin] = true;
            }
        }
    }
    return static_cast<std::size_t>(std::count(code.begin(), code.end(), true));
}

std::size_t count_cc(const SourceFile& file, const FunctionSpan& span, const TokenRuleset& rules)
{
    const auto counts = scan_body(file, span, rules);
    return 1 + counts.nested_functions + counts.anonymous_functions + counts.branches;
}

std::size_t count_mut(const SourceFile& file, const FunctionSpan& span, const TokenRuleset& rules)
{
    const auto counts = scan_body(file, span, rules);
    return counts.mutable_bindings + counts.mutable_constructions;
}

FunctionMetrics measure(const SourceFile& file, const FunctionSpan& span, const TokenRuleset& rules)
{
    return {count_mut(file, span, rules), count_loc(file, span), count_cc(file, span, rules)};
}

int compare_delta(const FunctionMetrics& before, const FunctionMetrics& after)
{
    if (before.loc == 0) {
        throw DivisionByZero("LOC delta undefined for an empty 'before' body");
    }
    const long long diff = static_cast<long long>(after.loc) - static_cast<long long>(before.loc);
    const long long num = 100 * (diff < 0 ? -diff : diff);
    const long long den = static_cast<long long>(before.loc);
    const long long magnitude = (2 * num + den) / (2 * den);
    return static_cast<int>(diff < 0 ? -magnitude : magnitude);
}

std::string format_percent(int percent)
{
    return std::to_string(percent) + "%";
}

}  // namespace spyscan::metrics
