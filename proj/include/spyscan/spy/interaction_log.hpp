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

#include <spyscan/spy/value.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <source_location>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spyscan::spy {

enum class EventKind { has_next, next, apply, mark };

std::string_view kind_name(EventKind kind);

/// How a recorded call ended.
enum class Signal {
    none,
    end_of_iteration,  // next() on an exhausted iterator
    error,             // any other exception
};

struct InteractionEvent {
    std::uint64_t ordinal = 0;  // assigned by the log
    std::string subject;
    EventKind kind = EventKind::mark;
    /// HasNext: the bool answer. Next: the element. Apply: the result.
    /// Mark: the user value.
    Value outcome;
    Signal signal = Signal::none;
    std::string tag;          // Mark only
    std::vector<Value> args;  // Apply only
    std::source_location where{};
};

/// Append-only, ordered record of spied calls and marks. Ordinals are
/// 0..size()-1 in append order. One log may be shared by several spies;
/// the subject id tells them apart.
class InteractionLog {
public:
    /// Appends and returns the ordinal assigned to the event.
    std::uint64_t append(InteractionEvent event);

    std::span<const InteractionEvent> events() const { return events_; }
    std::size_t size() const { return events_.size(); }
    bool empty() const { return events_.empty(); }

    /// Returns `hint` if unused by any subject handed out so far, else
    /// `hint#n` for the first free n.
    std::string fresh_subject(std::string_view hint);

private:
    std::vector<InteractionEvent> events_;
    std::vector<std::string> subjects_;
};

using SharedLog = std::shared_ptr<InteractionLog>;

inline SharedLog make_log()
{
    return std::make_shared<InteractionLog>();
}

std::size_t times_called(const InteractionLog& log, std::string_view subject, EventKind kind);

/// Ordinals of the events matching subject and kind, in order.
std::vector<std::uint64_t> matching_ordinals(const InteractionLog& log, std::string_view subject, EventKind kind);

void mark(InteractionLog& log, std::string tag, Value value);

using TraceEncoder = std::function<std::optional<std::int64_t>(const InteractionEvent&)>;

std::vector<std::int64_t> encode_trace(const InteractionLog& log, const TraceEncoder& encoder);

/// Next v -> -v, Apply r -> -r, Mark v -> v; everything else (HasNext,
/// end-signalled calls, non-integer payloads) is dropped.
std::optional<std::int64_t> signed_trace_encoder(const InteractionEvent& event);

/// One-line rendering used by the CLI: `ordinal kind outcome`.
std::string describe(const InteractionEvent& event);

}  // namespace spyscan::spy
