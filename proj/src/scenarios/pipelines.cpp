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

#include <spyscan/scenarios/pipelines.hpp>

#include <spyscan/format.hpp>

#include <charconv>
#include <cmath>
#include <system_error>

namespace spyscan::scenarios {
namespace {

std::string_view trim(std::string_view s)
{
    constexpr std::string_view ws = " \t\r\n\f\v";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

// Attaches 1-based line numbers as lines pass through parse_decimal.
class NumberedParser {
public:
    double operator()(const std::string& line) { return parse_decimal(line, ++line_number_); }

private:
    std::size_t line_number_ = 0;
};

}  // namespace

ParseError::ParseError(std::size_t line_number, std::string content)
    : std::runtime_error("line " + std::to_string(line_number) + ": cannot parse '" + content + "' as a number"),
      line_number_(line_number),
      content_(std::move(content))
{
}

double parse_decimal(std::string_view text, std::size_t line_number)
{
    std::string_view body = trim(text);
    if (!body.empty() && body.front() == '+') {
        body.remove_prefix(1);
    }
    double value = 0.0;
    const auto* begin = body.data();
    const auto* end = body.data() + body.size();
    const auto res = std::from_chars(begin, end, value);
    if (body.empty() || res.ec != std::errc{} || res.ptr != end || !std::isfinite(value)) {
        throw ParseError(line_number, std::string(text));
    }
    return value;
}

bool StreamLineSource::has_next()
{
    if (pending_) {
        return true;
    }
    if (eof_) {
        return false;
    }
    std::string line;
    if (std::getline(*in_, line)) {
        pending_ = std::move(line);
        return true;
    }
    eof_ = true;
    return false;
}

std::string StreamLineSource::next()
{
    if (!has_next()) {
        throw lazy::EndOfIteration();
    }
    std::string line = std::move(*pending_);
    pending_.reset();
    return line;
}

std::string format_average(const CumAvgState& state)
{
    return std::to_string(state.count) + ": " + format_decimal(state.sum / static_cast<double>(state.count));
}

lazy::AnyIterator<std::string> cum_avg_pipeline(lazy::AnyIterator<std::string> lines, ScanVariant variant)
{
    auto values = lazy::map(std::move(lines), NumberedParser{});
    auto step = [](const CumAvgState& acc, double value) { return CumAvgState{acc.count + 1, acc.sum + value}; };
    auto results = lazy::scan_left(variant, std::move(values), CumAvgState{}, step);
    return lazy::map(lazy::drop(std::move(results), 1), format_average);
}

std::int64_t convert_temperature(double raw)
{
    return static_cast<std::int64_t>(std::round(raw / 20.0));
}

lazy::AnyIterator<std::string> temp_conv_pipeline(lazy::AnyIterator<std::string> lines)
{
    auto values = lazy::map(std::move(lines), NumberedParser{});
    return lazy::map(std::move(values), [](double raw) { return std::to_string(convert_temperature(raw)); });
}

bool CountingSource::has_next()
{
    spy::mark(*log_, "probe", spy::Value{-cur_});
    return cur_ < max_;
}

std::int64_t CountingSource::next()
{
    if (cur_ >= max_) {
        throw lazy::EndOfIteration();
    }
    return cur_++;
}

}  // namespace spyscan::scenarios
