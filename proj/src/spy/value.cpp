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

#include <spyscan/spy/value.hpp>

#include <spyscan/format.hpp>

namespace spyscan::spy {

std::string render(const Value& value)
{
    struct Visitor {
        std::string operator()(std::monostate) const { return "()"; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(std::int64_t i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_decimal(d); }
        std::string operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, value);
}

std::optional<std::int64_t> as_integer(const Value& value)
{
    if (const auto* i = std::get_if<std::int64_t>(&value)) {
        return *i;
    }
    return std::nullopt;
}

}  // namespace spyscan::spy
