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
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spyscan::lazy {

class IndexOutOfRange : public std::out_of_range {
public:
    IndexOutOfRange(std::size_t index, std::size_t length)
        : std::out_of_range("index " + std::to_string(index) + " out of range for stream of length " +
                            std::to_string(length)),
          index_(index)
    {
    }

    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Memoizing view over a pull iterator. Nothing is pulled at construction;
/// force(k) pulls just enough to cache index k, and cached cells never change.
template <PullIterator I>
class MemoStream {
public:
    using value_type = element_t<I>;

    explicit MemoStream(I upstream) : upstream_(std::move(upstream)) {}

    const value_type& force(std::size_t index)
    {
        while (cells_.size() <= index) {
            if (exhausted_at_ || !upstream_.has_next()) {
                exhausted_at_ = cells_.size();
                throw IndexOutOfRange(index, cells_.size());
            }
            cells_.push_back(upstream_.next());
        }
        return cells_[index];
    }

    std::size_t forced_count() const { return cells_.size(); }

    /// Length of the stream, once the upstream has reported exhaustion.
    std::optional<std::size_t> exhausted_at() const { return exhausted_at_; }

private:
    I upstream_;
    std::vector<value_type> cells_;
    std::optional<std::size_t> exhausted_at_;
};

template <PullIterator I>
MemoStream<I> to_memo_stream(I upstream)
{
    return MemoStream<I>(std::move(upstream));
}

}  // namespace spyscan::lazy
