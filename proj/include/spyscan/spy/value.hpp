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

// Loosely typed values captured by spies: elements, arguments, results.

#include <cstdint>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <type_traits>
#include <utility>
#include <variant>

namespace spyscan::spy {

using Value = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

std::string render(const Value& value);

/// The integer payload, if the value holds one.
std::optional<std::int64_t> as_integer(const Value& value);

namespace detail {

template <typename T>
concept Streamable = requires(std::ostream& os, const T& v) { os << v; };

template <typename T>
concept TupleLike = requires { std::tuple_size<T>::value; };

template <typename T>
concept Iterable = requires(const T& v) {
    std::begin(v);
    std::end(v);
};

}  // namespace detail

template <typename T>
Value to_value(const T& v)
{
    using U = std::remove_cvref_t<T>;
    if constexpr (std::is_same_v<U, Value>) {
        return v;
    } else if constexpr (std::is_same_v<U, bool>) {
        return Value{v};
    } else if constexpr (std::is_integral_v<U>) {
        return Value{static_cast<std::int64_t>(v)};
    } else if constexpr (std::is_floating_point_v<U>) {
        return Value{static_cast<double>(v)};
    } else if constexpr (std::is_convertible_v<const U&, std::string_view>) {
        return Value{std::string(std::string_view(v))};
    } else if constexpr (detail::TupleLike<U>) {
        std::string out = "(";
        std::apply(
            [&out](const auto&... parts) {
                bool first = true;
                ((out += (first ? "" : ", "), out += render(to_value(parts)), first = false), ...);
            },
            v);
        out += ")";
        return Value{std::move(out)};
    } else if constexpr (detail::Iterable<U>) {
        std::string out = "[";
        bool first = true;
        for (const auto& item : v) {
            if (!first) {
                out += ", ";
            }
            out += render(to_value(item));
            first = false;
        }
        out += "]";
        return Value{std::move(out)};
    } else if constexpr (detail::Streamable<U>) {
        std::ostringstream os;
        os << v;
        return Value{os.str()};
    } else {
        return Value{std::string("<opaque>")};
    }
}

}  // namespace spyscan::spy
