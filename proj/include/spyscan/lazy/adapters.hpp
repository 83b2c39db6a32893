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

#include <spyscan/lazy/pull_iterator.hpp>

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace spyscan::lazy {

// --- map -------------------------------------------------------------------

/// Element-wise image of the upstream. Each next() performs exactly one
/// upstream next().
template <PullIterator I, typename F>
class MapIterator {
public:
    using value_type = std::decay_t<std::invoke_result_t<F&, element_t<I>>>;

    MapIterator(I upstream, F f) : upstream_(std::move(upstream)), f_(std::move(f)) {}

    bool has_next() { return upstream_.has_next(); }

    value_type next() { return std::invoke(f_, upstream_.next()); }

private:
    I upstream_;
    F f_;
};

template <PullIterator I, typename F>
MapIterator<I, F> map(I upstream, F f)
{
    return MapIterator<I, F>(std::move(upstream), std::move(f));
}

// --- drop ------------------------------------------------------------------

/// Skips the first n upstream elements, on first demand rather than at
/// construction.
template <PullIterator I>
class DropIterator {
public:
    using value_type = element_t<I>;

    DropIterator(I upstream, std::size_t n) : upstream_(std::move(upstream)), remaining_(n) {}

    bool has_next()
    {
        skip();
        return upstream_.has_next();
    }

    value_type next()
    {
        skip();
        return upstream_.next();
    }

private:
    void skip()
    {
        while (remaining_ > 0 && upstream_.has_next()) {
            upstream_.next();
            --remaining_;
        }
        remaining_ = 0;
    }

    I upstream_;
    std::size_t remaining_;
};

template <PullIterator I>
DropIterator<I> drop(I upstream, std::size_t n)
{
    return DropIterator<I>(std::move(upstream), n);
}

// --- chain -----------------------------------------------------------------

/// All of `first`, then all of `second`. The has_next() answer is cached until
/// the next next(), so repeated probes do not reach the upstreams.
template <PullIterator A, PullIterator B>
    requires std::convertible_to<element_t<B>, element_t<A>>
class ChainIterator {
public:
    using value_type = element_t<A>;

    ChainIterator(A first, B second) : first_(std::move(first)), second_(std::move(second)) {}

    bool has_next()
    {
        if (!decided_) {
            if (on_first_) {
                if (first_.has_next()) {
                    ready_ = true;
                } else {
                    on_first_ = false;
                }
            }
            if (!on_first_) {
                ready_ = second_.has_next();
            }
            decided_ = true;
        }
        return ready_;
    }

    value_type next()
    {
        if (!has_next()) {
            throw EndOfIteration();
        }
        ready_ = false;
        decided_ = false;
        return on_first_ ? first_.next() : static_cast<value_type>(second_.next());
    }

private:
    A first_;
    B second_;
    bool on_first_ = true;
    bool decided_ = false;  // has_next() answer is cached
    bool ready_ = false;
};

template <PullIterator A, PullIterator B>
ChainIterator<A, B> chain(A first, B second)
{
    return ChainIterator<A, B>(std::move(first), std::move(second));
}

// --- sliding / grouped -----------------------------------------------------

struct WindowSpec {
    std::size_t size = 1;
    std::size_t step = 1;

    WindowSpec(std::size_t size_, std::size_t step_) : size(size_), step(step_)
    {
        if (size == 0 || step == 0) {
            throw std::invalid_argument("window size and step must be at least 1");
        }
    }
};

/// Full windows of `size` elements advancing by `step`. The k-th window costs
/// at most size + (k - 1) * step upstream pulls in total; partial trailing
/// windows are never produced.
template <PullIterator I>
class SlidingIterator {
public:
    using value_type = std::vector<element_t<I>>;

    SlidingIterator(I upstream, WindowSpec spec) : upstream_(std::move(upstream)), spec_(spec) {}

    bool has_next()
    {
        if (!decided_) {
            fill();
            decided_ = true;
        }
        return ready_;
    }

    value_type next()
    {
        if (!has_next()) {
            throw EndOfIteration();
        }
        value_type window(buffer_.begin(), buffer_.end());
        decided_ = false;
        ready_ = false;
        pending_advance_ = true;
        return window;
    }

private:
    void fill()
    {
        if (exhausted_) {
            return;
        }
        if (pending_advance_) {
            pending_advance_ = false;
            std::size_t to_drop = spec_.step;
            while (to_drop > 0 && !buffer_.empty()) {
                buffer_.pop_front();
                --to_drop;
            }
            // step > size: elements between windows are pulled and discarded.
            while (to_drop > 0) {
                if (!upstream_.has_next()) {
                    exhausted_ = true;
                    return;
                }
                upstream_.next();
                --to_drop;
            }
        }
        while (buffer_.size() < spec_.size) {
            if (!upstream_.has_next()) {
                exhausted_ = true;
                return;
            }
            buffer_.push_back(upstream_.next());
        }
        ready_ = true;
    }

    I upstream_;
    WindowSpec spec_;
    std::deque<element_t<I>> buffer_;
    bool decided_ = false;
    bool ready_ = false;
    bool pending_advance_ = false;
    bool exhausted_ = false;
};

template <PullIterator I>
SlidingIterator<I> sliding(I upstream, WindowSpec spec)
{
    return SlidingIterator<I>(std::move(upstream), spec);
}

template <PullIterator I>
SlidingIterator<I> grouped(I upstream, std::size_t size)
{
    return SlidingIterator<I>(std::move(upstream), WindowSpec(size, size));
}

}  // namespace spyscan::lazy
