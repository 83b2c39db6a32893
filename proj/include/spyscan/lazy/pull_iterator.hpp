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

// Pull-based lazy iterators.
//
// A pull iterator is any movable type with a `value_type` and two members:
//
//     bool has_next();
//     value_type next();   // throws EndOfIteration when exhausted
//
// Adapters in this library hold their upstream by value and never touch it
// until their own has_next()/next() is called.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <source_location>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace spyscan::lazy {

/// Raised by next() on an exhausted iterator.
class EndOfIteration : public std::runtime_error {
public:
    EndOfIteration() : std::runtime_error("next() called on an exhausted iterator") {}
};

template <typename I>
concept PullIterator = std::movable<I> && requires(I& it) {
    typename I::value_type;
    { it.has_next() } -> std::convertible_to<bool>;
    { it.next() } -> std::convertible_to<typename I::value_type>;
};

template <PullIterator I>
using element_t = typename I::value_type;

/// Calls `it.next(where)` when the iterator records call sites (spies do),
/// plain `it.next()` otherwise.
template <PullIterator I>
element_t<I> call_next(I& it, std::source_location where)
{
    if constexpr (requires { it.next(where); }) {
        return it.next(where);
    } else {
        return it.next();
    }
}

template <PullIterator I>
bool call_has_next(I& it, std::source_location where)
{
    if constexpr (requires { it.has_next(where); }) {
        return it.has_next(where);
    } else {
        return it.has_next();
    }
}

/// Finite source over an owned vector.
template <typename T>
class ValuesIterator {
public:
    using value_type = T;

    explicit ValuesIterator(std::vector<T> values) : values_(std::move(values)) {}

    bool has_next() const { return pos_ < values_.size(); }

    T next()
    {
        if (pos_ >= values_.size()) {
            throw EndOfIteration();
        }
        return values_[pos_++];
    }

private:
    std::vector<T> values_;
    std::size_t pos_ = 0;
};

template <typename T>
ValuesIterator<T> from_values(std::vector<T> values)
{
    return ValuesIterator<T>(std::move(values));
}

template <typename T>
ValuesIterator<T> from_values(std::initializer_list<T> values)
{
    return ValuesIterator<T>(std::vector<T>(values));
}

/// Infinite arithmetic sequence start, start + step, ...
class ArithmeticIterator {
public:
    using value_type = std::int64_t;

    ArithmeticIterator(std::int64_t start, std::int64_t step) : current_(start), step_(step) {}

    bool has_next() const { return true; }

    std::int64_t next()
    {
        const std::int64_t result = current_;
        current_ += step_;
        return result;
    }

private:
    std::int64_t current_;
    std::int64_t step_;
};

inline ArithmeticIterator from(std::int64_t start, std::int64_t step = 1)
{
    return ArithmeticIterator(start, step);
}

/// Type-erased, move-only pull iterator. Call sites passed to next() and
/// has_next() are forwarded to the wrapped iterator.
template <typename T>
class AnyIterator {
public:
    using value_type = T;

    template <typename I>
        requires(!std::same_as<std::remove_cvref_t<I>, AnyIterator> && PullIterator<std::remove_cvref_t<I>> &&
                 std::convertible_to<element_t<std::remove_cvref_t<I>>, T>)
    AnyIterator(I&& it) : impl_(std::make_unique<Model<std::remove_cvref_t<I>>>(std::forward<I>(it)))
    {
    }

    bool has_next(std::source_location where = std::source_location::current()) { return impl_->has_next(where); }

    T next(std::source_location where = std::source_location::current()) { return impl_->next(where); }

private:
    struct Concept {
        virtual ~Concept() = default;
        virtual bool has_next(std::source_location where) = 0;
        virtual T next(std::source_location where) = 0;
    };

    template <typename I>
    struct Model final : Concept {
        explicit Model(I it) : inner(std::move(it)) {}
        bool has_next(std::source_location where) override { return call_has_next(inner, where); }
        T next(std::source_location where) override { return call_next(inner, where); }
        I inner;
    };

    std::unique_ptr<Concept> impl_;
};

/// Alternates has_next()/next() until has_next() is false.
template <typename I, typename F>
    requires PullIterator<std::remove_cvref_t<I>>
void foreach(I&& src, F&& f)
{
    while (src.has_next()) {
        f(src.next());
    }
}

template <typename I>
    requires PullIterator<std::remove_cvref_t<I>>
std::vector<element_t<std::remove_cvref_t<I>>> collect(I&& src)
{
    std::vector<element_t<std::remove_cvref_t<I>>> out;
    foreach(src, [&out](auto&& v) { out.push_back(std::forward<decltype(v)>(v)); });
    return out;
}

}  // namespace spyscan::lazy
