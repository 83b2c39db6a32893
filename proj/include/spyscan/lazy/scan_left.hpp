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

// Prefix scan over a pull iterator, in two variants.
//
//   ScanLeftFixed  yields z without touching the upstream, then computes each
//                  further value only when it is asked for.
//   ScanLeftBuggy  yields the same values, but every next() pulls the
//                  following upstream element before returning the current
//                  one. Kept to reproduce the one-element-late behaviour.

#include <spyscan/lazy/pull_iterator.hpp>

#include <cstdint>
#include <functional>
#include <type_traits>
#include <utility>

namespace spyscan::lazy {

enum class ScanState : std::uint8_t {
    initial = 0,
    consumed_initial = 1,
    upstream_has_next = 2,
    done = 3,
};

template <PullIterator I, typename Acc, typename Op>
    requires std::convertible_to<std::invoke_result_t<Op&, const Acc&, element_t<I>>, Acc>
class ScanLeftFixed {
public:
    using value_type = Acc;

    ScanLeftFixed(I upstream, Acc z, Op op) : upstream_(std::move(upstream)), op_(std::move(op)), accum_(std::move(z)) {}

    bool has_next()
    {
        switch (state_) {
        case ScanState::initial:
        case ScanState::upstream_has_next:
            return true;
        case ScanState::done:
            return false;
        case ScanState::consumed_initial:
            break;
        }
        if (upstream_.has_next()) {
            state_ = ScanState::upstream_has_next;
            return true;
        }
        state_ = ScanState::done;
        return false;
    }

    Acc next()
    {
        switch (state_) {
        case ScanState::initial:
            state_ = ScanState::consumed_initial;
            return accum_;
        case ScanState::consumed_initial:
            return gen();
        case ScanState::upstream_has_next:
            state_ = ScanState::consumed_initial;
            return gen();
        case ScanState::done:
            break;
        }
        throw EndOfIteration();
    }

    ScanState state() const { return state_; }
    const Acc& accumulator() const { return accum_; }

private:
    Acc gen()
    {
        Acc res = std::invoke(op_, std::as_const(accum_), upstream_.next());
        accum_ = res;
        return res;
    }

    I upstream_;
    Op op_;
    Acc accum_;
    ScanState state_ = ScanState::initial;
};

template <PullIterator I, typename Acc, typename Op>
    requires std::convertible_to<std::invoke_result_t<Op&, const Acc&, element_t<I>>, Acc>
class ScanLeftBuggy {
public:
    using value_type = Acc;

    ScanLeftBuggy(I upstream, Acc z, Op op) : upstream_(std::move(upstream)), op_(std::move(op)), elem_(std::move(z)) {}

    bool has_next() const { return alive_; }

    Acc next()
    {
        if (!alive_) {
            throw EndOfIteration();
        }
        Acc res = elem_;
        // Premature pull: the upstream is advanced before `res` is handed out.
        if (upstream_.has_next()) {
            elem_ = std::invoke(op_, std::as_const(elem_), upstream_.next());
        } else {
            alive_ = false;
        }
        return res;
    }

    bool alive() const { return alive_; }

private:
    I upstream_;
    Op op_;
    Acc elem_;
    bool alive_ = true;
};

template <PullIterator I, typename Acc, typename Op>
ScanLeftFixed<I, Acc, Op> scan_left_fixed(I upstream, Acc z, Op op)
{
    return ScanLeftFixed<I, Acc, Op>(std::move(upstream), std::move(z), std::move(op));
}

template <PullIterator I, typename Acc, typename Op>
ScanLeftBuggy<I, Acc, Op> scan_left_buggy(I upstream, Acc z, Op op)
{
    return ScanLeftBuggy<I, Acc, Op>(std::move(upstream), std::move(z), std::move(op));
}

enum class ScanVariant { fixed, buggy };

/// Runtime choice between the two variants, erased to AnyIterator<Acc>.
template <PullIterator I, typename Acc, typename Op>
AnyIterator<Acc> scan_left(ScanVariant variant, I upstream, Acc z, Op op)
{
    if (variant == ScanVariant::fixed) {
        return scan_left_fixed(std::move(upstream), std::move(z), std::move(op));
    }
    return scan_left_buggy(std::move(upstream), std::move(z), std::move(op));
}

}  // namespace spyscan::lazy
