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

// Auto-generated test spies. A spy behaves exactly like what it wraps and
// additionally appends one event per call to a shared InteractionLog.
//
//     auto log = spy::make_log();
//     auto it = spy::wrap_spy(lazy::from_values({1, 2, 3}), log, "it");
//     auto result = lazy::scan_left_fixed(std::move(it), 0, std::plus<>{});
//     result.next();
//     spy::verify(*log, "it").next().never();

#include <spyscan/lazy/pull_iterator.hpp>
#include <spyscan/spy/interaction_log.hpp>

#include <exception>
#include <functional>
#include <source_location>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace spyscan::spy {

template <lazy::PullIterator I>
class SpyIterator {
public:
    using value_type = lazy::element_t<I>;

    SpyIterator(I inner, SharedLog log, std::string subject)
        : inner_(std::move(inner)), log_(std::move(log)), subject_(std::move(subject))
    {
    }

    bool has_next(std::source_location where = std::source_location::current())
    {
        bool answer = false;
        try {
            answer = inner_.has_next();
        } catch (...) {
            record(EventKind::has_next, Value{}, Signal::error, where);
            throw;
        }
        record(EventKind::has_next, Value{answer}, Signal::none, where);
        return answer;
    }

    value_type next(std::source_location where = std::source_location::current())
    {
        try {
            value_type v = inner_.next();
            record(EventKind::next, to_value(v), Signal::none, where);
            return v;
        } catch (const lazy::EndOfIteration&) {
            record(EventKind::next, Value{}, Signal::end_of_iteration, where);
            throw;
        } catch (...) {
            record(EventKind::next, Value{}, Signal::error, where);
            throw;
        }
    }

    const std::string& subject() const { return subject_; }
    const SharedLog& log() const { return log_; }

private:
    void record(EventKind kind, Value outcome, Signal signal, std::source_location where)
    {
        InteractionEvent event;
        event.subject = subject_;
        event.kind = kind;
        event.outcome = std::move(outcome);
        event.signal = signal;
        event.where = where;
        log_->append(std::move(event));
    }

    I inner_;
    SharedLog log_;
    std::string subject_;
};

template <lazy::PullIterator I>
SpyIterator<I> wrap_spy(I inner, SharedLog log, std::string subject = {})
{
    if (subject.empty()) {
        subject = log->fresh_subject("iterator");
    }
    return SpyIterator<I>(std::move(inner), std::move(log), std::move(subject));
}

/// Spy over a callable of any arity. Records the arguments (captured before
/// the call) and the result of every application.
template <typename F>
class SpyFunction {
public:
    SpyFunction(F inner, SharedLog log, std::string subject)
        : inner_(std::move(inner)), log_(std::move(log)), subject_(std::move(subject))
    {
    }

    template <typename... Args>
        requires std::invocable<F&, Args...>
    decltype(auto) operator()(Args&&... args)
    {
        std::vector<Value> recorded{to_value(args)...};
        using R = std::invoke_result_t<F&, Args...>;
        try {
            if constexpr (std::is_void_v<R>) {
                std::invoke(inner_, std::forward<Args>(args)...);
                record(std::move(recorded), Value{}, Signal::none);
            } else {
                R result = std::invoke(inner_, std::forward<Args>(args)...);
                record(std::move(recorded), to_value(result), Signal::none);
                return result;
            }
        } catch (...) {
            record(std::move(recorded), Value{}, Signal::error);
            throw;
        }
    }

    const std::string& subject() const { return subject_; }

private:
    void record(std::vector<Value> args, Value outcome, Signal signal)
    {
        InteractionEvent event;
        event.subject = subject_;
        event.kind = EventKind::apply;
        event.args = std::move(args);
        event.outcome = std::move(outcome);
        event.signal = signal;
        log_->append(std::move(event));
    }

    F inner_;
    SharedLog log_;
    std::string subject_;
};

template <typename F>
SpyFunction<F> wrap_spy_fn(F inner, SharedLog log, std::string subject = {})
{
    if (subject.empty()) {
        subject = log->fresh_subject("function");
    }
    return SpyFunction<F>(std::move(inner), std::move(log), std::move(subject));
}

}  // namespace spyscan::spy
