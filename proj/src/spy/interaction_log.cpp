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

#include <spyscan/spy/interaction_log.hpp>

#include <algorithm>

namespace spyscan::spy {

std::string_view kind_name(EventKind kind)
{
    switch (kind) {
    case EventKind::has_next:
        return "HasNext";
    case EventKind::next:
        return "Next";
    case EventKind::apply:
        return "Apply";
    case EventKind::mark:
        return "Mark";
    }
    return "?";
}

std::uint64_t InteractionLog::append(InteractionEvent event)
{
    event.ordinal = events_.size();
    events_.push_back(std::move(event));
    return events_.back().ordinal;
}

std::string InteractionLog::fresh_subject(std::string_view hint)
{
    const auto taken = [this](const std::string& s) {
        return std::find(subjects_.begin(), subjects_.end(), s) != subjects_.end();
    };
    std::string candidate(hint);
    for (std::size_t n = 1; taken(candidate); ++n) {
        candidate = std::string(hint) + "#" + std::to_string(n);
    }
    subjects_.push_back(candidate);
    return candidate;
}

std::size_t times_called(const InteractionLog& log, std::string_view subject, EventKind kind)
{
    const auto events = log.events();
    return static_cast<std::size_t>(std::count_if(events.begin(), events.end(), [&](const InteractionEvent& e) {
        return e.kind == kind && e.subject == subject;
    }));
}

std::vector<std::uint64_t> matching_ordinals(const InteractionLog& log, std::string_view subject, EventKind kind)
{
    std::vector<std::uint64_t> out;
    for (const auto& e : log.events()) {
        if (e.kind == kind && e.subject == subject) {
            out.push_back(e.ordinal);
        }
    }
    return out;
}

void mark(InteractionLog& log, std::string tag, Value value)
{
    InteractionEvent event;
    event.subject = "mark";
    event.kind = EventKind::mark;
    event.tag = std::move(tag);
    event.outcome = std::move(value);
    log.append(std::move(event));
}

std::vector<std::int64_t> encode_trace(const InteractionLog& log, const TraceEncoder& encoder)
{
    std::vector<std::int64_t> out;
    for (const auto& e : log.events()) {
        if (auto code = encoder(e)) {
            out.push_back(*code);
        }
    }
    return out;
}

std::optional<std::int64_t> signed_trace_encoder(const InteractionEvent& event)
{
    if (event.signal != Signal::none) {
        return std::nullopt;
    }
    const auto value = as_integer(event.outcome);
    if (!value) {
        return std::nullopt;
    }
    switch (event.kind) {
    case EventKind::next:
    case EventKind::apply:
        return -*value;
    case EventKind::mark:
        return *value;
    case EventKind::has_next:
        break;
    }
    return std::nullopt;
}

std::string describe(const InteractionEvent& event)
{
    std::string out = std::to_string(event.ordinal);
    out += ' ';
    out += kind_name(event.kind);
    out += ' ';
    switch (event.signal) {
    case Signal::end_of_iteration:
        out += "end";
        return out;
    case Signal::error:
        out += "error";
        return out;
    case Signal::none:
        break;
    }
    if (event.kind == EventKind::mark) {
        out += event.tag;
        out += '=';
    }
    out += render(event.outcome);
    return out;
}

}  // namespace spyscan::spy
