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

// Test-code complexity per function: mutable state (Mut), lines of code
// (LOC) and cyclomatic complexity (CC), all counted on tokens.
//
// LOC counts non-blank, non-comment lines strictly inside the body: the line
// holding the opening brace and the line of the final closing brace are not
// counted, inner closing-brace lines are.
//
// CC sums 1 + branch points over every function component in the span: the
// function itself, nested named functions, and anonymous functions (an arrow
// outside type and case-clause position, a `{ case` block, or a group holding
// a placeholder).
//
// Mut counts mutable-binding keywords plus mutable-collection constructions
// (one per dotted name chain).

#include <spyscan/metrics/ruleset.hpp>
#include <spyscan/metrics/tokenizer.hpp>

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spyscan::metrics {

class MetricsError : public std::runtime_error {
public:
    enum class Code { not_found, ambiguous, unbalanced_braces, no_body };

    MetricsError(Code code, const std::string& message) : std::runtime_error(message), code_(code) {}

    Code code() const { return code_; }

private:
    Code code_;
};

class DivisionByZero : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Tokenized text of one input file.
class SourceFile {
public:
    SourceFile(std::string id, std::string_view text, const TokenRuleset& rules)
        : id_(std::move(id)), tokens_(tokenize(text, rules))
    {
    }

    const std::string& id() const { return id_; }
    const TokenizedSource& tokens() const { return tokens_; }

private:
    std::string id_;
    TokenizedSource tokens_;
};

struct FunctionSpan {
    std::string file_id;
    std::string name;  // quoted names have spaces replaced by '_'
    std::size_t signature_line = 0;
    std::size_t open_line = 0;
    std::size_t body_begin = 0;  // first body line
    std::size_t body_end = 0;    // one past the last body line
    std::size_t keyword_token = 0;
    std::size_t open_token = 0;
    std::size_t close_token = 0;

    std::size_t body_lines() const { return body_end - body_begin; }
};

struct FunctionMetrics {
    std::size_t mut = 0;
    std::size_t loc = 0;
    std::size_t cc = 1;

    friend bool operator==(const FunctionMetrics&, const FunctionMetrics&) = default;
};

/// The unique function called `name` (raw or underscore form).
FunctionSpan extract_span(const SourceFile& file, std::string_view name, const TokenRuleset& rules);

FunctionSpan extract_span(std::string_view text, std::string_view name, const TokenRuleset& rules);

/// Braced functions not nested inside another braced function, in order.
std::vector<FunctionSpan> outermost_functions(const SourceFile& file, const TokenRuleset& rules);

std::size_t count_loc(const SourceFile& file, const FunctionSpan& span);
std::size_t count_cc(const SourceFile& file, const FunctionSpan& span, const TokenRuleset& rules);
std::size_t count_mut(const SourceFile& file, const FunctionSpan& span, const TokenRuleset& rules);

FunctionMetrics measure(const SourceFile& file, const FunctionSpan& span, const TokenRuleset& rules);

/// Change in LOC as a whole percentage, rounded half away from zero.
int compare_delta(const FunctionMetrics& before, const FunctionMetrics& after);

/// "-73%"
std::string format_percent(int percent);

}  // namespace spyscan::metrics
