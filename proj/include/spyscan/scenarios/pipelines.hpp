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

// Line-oriented stream pipelines (cumulative average, temperature
// conversion) and the small helpers the scenarios build on.

#include <spyscan/lazy/adapters.hpp>
#include <spyscan/lazy/pull_iterator.hpp>
#include <spyscan/lazy/scan_left.hpp>
#include <spyscan/spy/interaction_log.hpp>

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace spyscan::scenarios {

using lazy::ScanVariant;

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line_number, std::string content);

    std::size_t line_number() const { return line_number_; }
    const std::string& content() const { return content_; }

private:
    std::size_t line_number_;
    std::string content_;
};

/// Parses a decimal number, ignoring surrounding whitespace. Throws
/// ParseError tagged with `line_number` otherwise.
double parse_decimal(std::string_view text, std::size_t line_number);

/// Pulls lines from an istream. has_next() blocks until a full line (or end
/// of input) is available; nothing is read before the first call.
class StreamLineSource {
public:
    using value_type = std::string;

    explicit StreamLineSource(std::istream& in) : in_(&in) {}

    bool has_next();
    std::string next();

private:
    std::istream* in_;
    std::optional<std::string> pending_;
    bool eof_ = false;
};

struct CumAvgState {
    std::int64_t count = 0;
    double sum = 0.0;
};

/// "count: average", e.g. "2: 6.5".
std::string format_average(const CumAvgState& state);

/// parse -> scanLeft((0, 0.0)) -> drop(1) -> format. With the fixed scan the
/// j-th output line needs exactly j input lines.
lazy::AnyIterator<std::string> cum_avg_pipeline(lazy::AnyIterator<std::string> lines, ScanVariant variant);

/// parse -> round(value / 20), half away from zero -> integer text.
lazy::AnyIterator<std::string> temp_conv_pipeline(lazy::AnyIterator<std::string> lines);

std::int64_t convert_temperature(double raw);

/// Yields cur = 1, 2, ... while cur < max. Every has_next() leaves a
/// Mark("probe", -cur) in the log, i.e. the value it would yield next (or the
/// bound once exhausted).
class CountingSource {
public:
    using value_type = std::int64_t;

    CountingSource(std::int64_t max, spy::SharedLog log) : max_(max), log_(std::move(log)) {}

    bool has_next();
    std::int64_t next();

private:
    std::int64_t cur_ = 1;
    std::int64_t max_;
    spy::SharedLog log_;
};

/// Returns the value stored under `key`, evaluating `thunk()` and storing its
/// result only when the key is absent. If the thunk throws nothing is stored.
template <typename Map, typename Key, typename Thunk>
typename Map::mapped_type& get_or_else_update(Map& store, const Key& key, Thunk&& thunk)
{
    if (auto it = store.find(key); it != store.end()) {
        return it->second;
    }
    auto value = thunk();
    return store.emplace(key, std::move(value)).first->second;
}

}  // namespace spyscan::scenarios
