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

#include <spyscan/metrics/ruleset.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace spyscan::metrics {

enum class TokenKind {
    identifier,
    quoted_identifier,  // text is the name without the quotes
    number,
    string,
    op,     // run of operator characters, e.g. `+=`, `=>`, `:`
    punct,  // one of ( ) [ ] { } , ; .
};

struct Token {
    TokenKind kind;
    std::string text;
    std::size_t line = 0;      // 0-based line of the first character
    std::size_t end_line = 0;  // last line the token touches (multi-line strings)
};

struct TokenizedSource {
    std::vector<Token> tokens;
    std::size_t line_count = 0;
};

/// Splits source text into tokens. Comments are dropped; string literals
/// become single tokens, so braces and keywords inside either are invisible
/// to the analyzer.
TokenizedSource tokenize(std::string_view source, const TokenRuleset& rules);

}  // namespace spyscan::metrics
