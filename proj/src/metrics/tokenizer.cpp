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

#include <spyscan/metrics/tokenizer.hpp>

#include <algorithm>

namespace spyscan::metrics {
namespace {

bool is_ident_start(unsigned char c)
{
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_char(unsigned char c)
{
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(unsigned char c)
{
    return c >= '0' && c <= '9';
}

bool is_op_char(unsigned char c)
{
    constexpr std::string_view ops = "!#%&*+-/:<=>?@\\^|~";
    return ops.find(static_cast<char>(c)) != std::string_view::npos;
}

bool is_punct(unsigned char c)
{
    constexpr std::string_view punct = "()[]{},;.";
    return punct.find(static_cast<char>(c)) != std::string_view::npos;
}

class Scanner {
public:
    Scanner(std::string_view src, const TokenRuleset& rules) : src_(src), rules_(rules)
    {
        delimiters_ = rules.string_delimiters;
        std::sort(delimiters_.begin(), delimiters_.end(),
                  [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
    }

    TokenizedSource run()
    {
        TokenizedSource out;
        while (pos_ < src_.size()) {
            const unsigned char c = static_cast<unsigned char>(src_[pos_]);
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
                ++pos_;
            } else if (starts_comment()) {
                skip_comment();
            } else if (const auto* delim = string_delimiter_here()) {
                out.tokens.push_back(scan_string(*delim));
            } else if (!rules_.quoted_identifier.empty() && at(rules_.quoted_identifier)) {
                out.tokens.push_back(scan_quoted_identifier());
            } else if (is_ident_start(c)) {
                out.tokens.push_back(scan_while(TokenKind::identifier, is_ident_char));
            } else if (is_digit(c)) {
                out.tokens.push_back(scan_number());
            } else if (is_op_char(c)) {
                out.tokens.push_back(scan_operator());
            } else {
                // punctuation, and anything unrecognised, as a single character
                out.tokens.push_back({is_punct(c) ? TokenKind::punct : TokenKind::op, std::string(1, src_[pos_]),
                                      line_, line_});
                ++pos_;
            }
        }
        out.line_count = src_.empty() ? 0 : line_ + (src_.back() == '\n' ? 0 : 1);
        return out;
    }

private:
    bool at(std::string_view s) const { return !s.empty() && src_.substr(pos_, s.size()) == s; }

    bool starts_comment() const { return at(rules_.line_comment) || at(rules_.block_comment.first); }

    void skip_comment()
    {
        if (at(rules_.line_comment)) {
            while (pos_ < src_.size() && src_[pos_] != '\n') {
                ++pos_;
            }
            return;
        }
        pos_ += rules_.block_comment.first.size();
        while (pos_ < src_.size() && !at(rules_.block_comment.second)) {
            if (src_[pos_] == '\n') {
                ++line_;
            }
            ++pos_;
        }
        pos_ = std::min(src_.size(), pos_ + rules_.block_comment.second.size());
    }

    const std::string* string_delimiter_here() const
    {
        for (const auto& d : delimiters_) {
            if (at(d)) {
                return &d;
            }
        }
        return nullptr;
    }

    Token scan_string(const std::string& delim)
    {
        Token tok{TokenKind::string, {}, line_, line_};
        const std::size_t start = pos_;
        pos_ += delim.size();
        const bool escapes = delim.size() == 1;
        while (pos_ < src_.size() && !at(delim)) {
            if (escapes && src_[pos_] == '\\' && pos_ + 1 < src_.size()) {
                if (src_[pos_ + 1] == '\n') {
                    ++line_;
                }
                pos_ += 2;
                continue;
            }
            if (src_[pos_] == '\n') {
                ++line_;
            }
            ++pos_;
        }
        pos_ = std::min(src_.size(), pos_ + delim.size());
        tok.text = std::string(src_.substr(start, pos_ - start));
        tok.end_line = line_;
        return tok;
    }

    Token scan_quoted_identifier()
    {
        const auto& q = rules_.quoted_identifier;
        Token tok{TokenKind::quoted_identifier, {}, line_, line_};
        pos_ += q.size();
        const std::size_t start = pos_;
        while (pos_ < src_.size() && !at(q) && src_[pos_] != '\n') {
            ++pos_;
        }
        tok.text = std::string(src_.substr(start, pos_ - start));
        if (at(q)) {
            pos_ += q.size();
        }
        return tok;
    }

    template <typename Pred>
    Token scan_while(TokenKind kind, Pred pred)
    {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && pred(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        return {kind, std::string(src_.substr(start, pos_ - start)), line_, line_};
    }

    Token scan_number()
    {
        const std::size_t start = pos_;
        while (pos_ < src_.size()) {
            const unsigned char c = static_cast<unsigned char>(src_[pos_]);
            if (is_ident_char(c)) {
                ++pos_;
            } else if (c == '.' && pos_ + 1 < src_.size() && is_digit(static_cast<unsigned char>(src_[pos_ + 1]))) {
                ++pos_;
            } else {
                break;
            }
        }
        return {TokenKind::number, std::string(src_.substr(start, pos_ - start)), line_, line_};
    }

    Token scan_operator()
    {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && is_op_char(static_cast<unsigned char>(src_[pos_])) && !starts_comment()) {
            ++pos_;
        }
        return {TokenKind::op, std::string(src_.substr(start, pos_ - start)), line_, line_};
    }

    std::string_view src_;
    const TokenRuleset& rules_;
    std::vector<std::string> delimiters_;
    std::size_t pos_ = 0;
    std::size_t line_ = 0;
};

}  // namespace

TokenizedSource tokenize(std::string_view source, const TokenRuleset& rules)
{
    return Scanner(source, rules).run();
}

}  // namespace spyscan::metrics
