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

#include <spyscan/spy/verification.hpp>

#include <filesystem>
#include <sstream>

namespace spyscan::spy {
namespace {

std::string_view method_name(EventKind kind)
{
    switch (kind) {
    case EventKind::has_next:
        return "hasNext()";
    case EventKind::next:
        return "next()";
    case EventKind::apply:
        return "apply()";
    case EventKind::mark:
        return "mark()";
    }
    return "?";
}

std::string times(std::size_t n)
{
    return std::to_string(n) + (n == 1 ? " time" : " times");
}

void describe_site(std::ostringstream& os, const InteractionEvent& e)
{
    os << "-> at ordinal " << e.ordinal << ": " << describe(e);
    if (e.where.line() != 0) {
        os << " (called from " << std::filesystem::path(e.where.file_name()).filename().string() << ':'
           << e.where.line() << ')';
    }
    os << '\n';
}

}  // namespace

VerificationFailure::VerificationFailure(std::string subject, EventKind kind, std::size_t wanted, std::size_t actual,
                                         std::vector<std::uint64_t> offending, const std::string& message)
    : std::runtime_error(message),
      subject_(std::move(subject)),
      kind_(kind),
      wanted_(wanted),
      actual_(actual),
      offending_(std::move(offending))
{
}

std::optional<VerificationFailure> check_called_times(const InteractionLog& log, std::string_view subject,
                                                      EventKind kind, std::size_t wanted)
{
    const auto ordinals = matching_ordinals(log, subject, kind);
    const std::size_t actual = ordinals.size();
    if (actual == wanted) {
        return std::nullopt;
    }

    std::ostringstream os;
    os << subject << '.' << method_name(kind) << ": wanted " << times(wanted) << ", actual " << times(actual)
       << '\n';

    std::vector<std::uint64_t> offending;
    const auto events = log.events();
    if (actual > wanted) {
        offending.assign(ordinals.begin() + static_cast<std::ptrdiff_t>(wanted), ordinals.end());
        os << (wanted == 0 ? "Never wanted here:\n" : "Wanted only " + times(wanted) + ", unwanted from here:\n");
        os << "-> verification of " << subject << '.' << method_name(kind) << " after ordinal "
           << (events.empty() ? 0 : events.back().ordinal) << '\n';
        os << "But invoked here:\n";
        for (auto ord : offending) {
            describe_site(os, events[ord]);
        }
    } else {
        offending = ordinals;
        os << "Wanted but invoked only " << times(actual) << ":\n";
        for (auto ord : offending) {
            describe_site(os, events[ord]);
        }
        if (events.empty()) {
            os << "-> log is empty\n";
        } else {
            os << "-> log holds ordinals 0.." << events.back().ordinal << '\n';
        }
    }
    return VerificationFailure(std::string(subject), kind, wanted, actual, std::move(offending), os.str());
}

void assert_called_times(const InteractionLog& log, std::string_view subject, EventKind kind, std::size_t wanted)
{
    if (auto failure = check_called_times(log, subject, kind, wanted)) {
        throw *failure;
    }
}

void assert_never(const InteractionLog& log, std::string_view subject, EventKind kind)
{
    assert_called_times(log, subject, kind, 0);
}

}  // namespace spyscan::spy
