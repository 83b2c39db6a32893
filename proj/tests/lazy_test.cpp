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

#include <spyscan/lazy/adapters.hpp>
#include <spyscan/lazy/memo_stream.hpp>
#include <spyscan/lazy/pull_iterator.hpp>
#include <spyscan/lazy/scan_left.hpp>
#include <spyscan/spy/spy.hpp>
#include <spyscan/spy/verification.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace {

using namespace spyscan;
using lazy::EndOfIteration;
using lazy::ScanState;
using spy::EventKind;

using Ints = std::vector<std::int64_t>;

template <typename I>
Ints take(I& it, std::size_t n)
{
    Ints out;
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(it.next());
    }
    return out;
}

static_assert(lazy::PullIterator<lazy::ValuesIterator<int>>);
static_assert(lazy::PullIterator<lazy::ArithmeticIterator>);
static_assert(lazy::PullIterator<lazy::AnyIterator<int>>);
static_assert(lazy::PullIterator<spy::SpyIterator<lazy::ArithmeticIterator>>);

TEST(FromValuesTest, YieldsInOrderThenEnds)
{
    auto it = lazy::from_values({1, 2, 3});
    EXPECT_EQ(it.next(), 1);
    EXPECT_EQ(it.next(), 2);
    EXPECT_EQ(it.next(), 3);
    EXPECT_THROW(it.next(), EndOfIteration);
}

TEST(FromValuesTest, EmptyAndSingleton)
{
    auto empty = lazy::from_values(std::vector<int>{});
    EXPECT_FALSE(empty.has_next());

    auto one = lazy::from_values({7});
    EXPECT_TRUE(one.has_next());
    EXPECT_EQ(one.next(), 7);
    EXPECT_FALSE(one.has_next());
}

TEST(FromTest, ArithmeticSequence)
{
    auto ones = lazy::from(1, 1);
    EXPECT_EQ(take(ones, 3), (Ints{1, 2, 3}));
    EXPECT_TRUE(ones.has_next());

    auto fives = lazy::from(0, 5);
    EXPECT_EQ(take(fives, 3), (Ints{0, 5, 10}));
}

TEST(FromTest, UntouchedSpyRecordsNothing)
{
    auto log = spy::make_log();
    auto it = spy::wrap_spy(lazy::from(1, 1), log, "it");
    EXPECT_EQ(log->size(), 0u);
    spy::verify(*log, "it").next().never();
}

TEST(MapTest, TemperatureRounding)
{
    auto it = lazy::map(lazy::from_values({127.0, 133.0, 95.0}),
                        [](double x) { return static_cast<std::int64_t>(std::round(x / 20)); });
    EXPECT_EQ(lazy::collect(it), (Ints{6, 7, 5}));
}

TEST(MapTest, IdentityAndLaziness)
{
    auto log = spy::make_log();
    auto it = lazy::map(spy::wrap_spy(lazy::from_values<std::int64_t>({1, 2, 3}), log, "src"),
                        [](std::int64_t x) { return x; });
    EXPECT_EQ(spy::times_called(*log, "src", EventKind::next), 0u);
    EXPECT_EQ(it.next(), 1);
    EXPECT_EQ(spy::times_called(*log, "src", EventKind::next), 1u);
    EXPECT_EQ(lazy::collect(it), (Ints{2, 3}));
}

TEST(DropTest, DropsSeedOfScan)
{
    auto scan = lazy::scan_left_fixed(lazy::from_values<std::int64_t>({1, 2, 3}), std::int64_t{0}, std::plus<>{});
    EXPECT_EQ(lazy::collect(lazy::drop(std::move(scan), 1)), (Ints{1, 3, 6}));
}

TEST(DropTest, ZeroAndOverDrop)
{
    EXPECT_EQ(lazy::collect(lazy::drop(lazy::from_values<std::int64_t>({1, 2}), 0)), (Ints{1, 2}));
    auto over = lazy::drop(lazy::from_values<std::int64_t>({1, 2}), 5);
    EXPECT_FALSE(over.has_next());
    EXPECT_THROW(over.next(), EndOfIteration);
}

TEST(DropTest, SkippingIsDeferred)
{
    auto log = spy::make_log();
    auto it = lazy::drop(spy::wrap_spy(lazy::from_values<std::int64_t>({1, 2, 3}), log, "src"), 2);
    EXPECT_EQ(log->size(), 0u);
    EXPECT_EQ(it.next(), 3);
    EXPECT_EQ(spy::times_called(*log, "src", EventKind::next), 3u);
}

TEST(ScanLeftFixedTest, RunningSums)
{
    auto it = lazy::scan_left_fixed(lazy::from_values<std::int64_t>({1, 2, 3}), std::int64_t{0}, std::plus<>{});
    EXPECT_EQ(lazy::collect(it), (Ints{0, 1, 3, 6}));
}

TEST(ScanLeftFixedTest, SeededCounting)
{
    auto it = lazy::scan_left_fixed(lazy::from_values<std::int64_t>({1, 2}), std::int64_t{10}, std::plus<>{});
    EXPECT_EQ(lazy::collect(it), (Ints{10, 11, 13}));
}

TEST(ScanLeftFixedTest, EmptySourceYieldsSeedOnly)
{
    auto it = lazy::scan_left_fixed(lazy::from_values(std::vector<std::int64_t>{}), std::int64_t{42}, std::plus<>{});
    EXPECT_EQ(it.state(), ScanState::initial);
    EXPECT_TRUE(it.has_next());
    EXPECT_EQ(it.next(), 42);
    EXPECT_EQ(it.state(), ScanState::consumed_initial);
    EXPECT_FALSE(it.has_next());
    EXPECT_EQ(it.state(), ScanState::done);
    EXPECT_THROW(it.next(), EndOfIteration);
}

TEST(ScanLeftFixedTest, InfiniteSquares)
{
    auto squares = lazy::map(lazy::from(1, 1), [](std::int64_t n) { return n * n; });
    auto it = lazy::scan_left_fixed(std::move(squares), std::int64_t{0}, std::plus<>{});
    EXPECT_EQ(it.next(), 0);
    EXPECT_EQ(it.next(), 1);
    EXPECT_EQ(it.next(), 5);
}

TEST(ScanLeftFixedTest, StateTransitions)
{
    auto it = lazy::scan_left_fixed(lazy::from_values<std::int64_t>({4}), std::int64_t{0}, std::plus<>{});
    EXPECT_EQ(it.state(), ScanState::initial);
    EXPECT_TRUE(it.has_next());
    EXPECT_EQ(it.state(), ScanState::initial);
    it.next();
    EXPECT_EQ(it.state(), ScanState::consumed_initial);
    EXPECT_TRUE(it.has_next());
    EXPECT_EQ(it.state(), ScanState::upstream_has_next);
    EXPECT_TRUE(it.has_next());
    EXPECT_EQ(it.state(), ScanState::upstream_has_next);
    EXPECT_EQ(it.next(), 4);
    EXPECT_EQ(it.accumulator(), 4);
    EXPECT_EQ(it.state(), ScanState::consumed_initial);
    EXPECT_FALSE(it.has_next());
    EXPECT_EQ(it.state(), ScanState::done);
    EXPECT_FALSE(it.has_next());
}

TEST(ScanLeftFixedTest, NextWithoutHasNextPullsDirectly)
{
    auto it = lazy::scan_left_fixed(lazy::from_values<std::int64_t>({1}), std::int64_t{0}, std::plus<>{});
    it.next();
    EXPECT_EQ(it.next(), 1);
    // State 1 with an exhausted upstream: the upstream's own error surfaces.
    EXPECT_THROW(it.next(), EndOfIteration);
}

TEST(ScanLeftBuggyTest, SameValuesAsFixed)
{
    auto it = lazy::scan_left_buggy(lazy::from_values<std::int64_t>({1, 2, 3}), std::int64_t{0}, std::plus<>{});
    EXPECT_EQ(lazy::collect(it), (Ints{0, 1, 3, 6}));
    EXPECT_FALSE(it.alive());
    EXPECT_THROW(it.next(), EndOfIteration);
}

TEST(ScanLeftBuggyTest, FirstNextPullsUpstream)
{
    auto fixed_log = spy::make_log();
    auto fixed = lazy::scan_left_fixed(spy::wrap_spy(lazy::from_values<std::int64_t>({1, 2, 3}), fixed_log, "it"),
                                       std::int64_t{0}, std::plus<>{});
    auto buggy_log = spy::make_log();
    auto buggy = lazy::scan_left_buggy(spy::wrap_spy(lazy::from_values<std::int64_t>({1, 2, 3}), buggy_log, "it"),
                                       std::int64_t{0}, std::plus<>{});
    EXPECT_EQ(fixed.next(), 0);
    EXPECT_EQ(buggy.next(), 0);
    EXPECT_EQ(spy::times_called(*fixed_log, "it", EventKind::next), 0u);
    EXPECT_EQ(spy::times_called(*buggy_log, "it", EventKind::next), 1u);
}

TEST(ScanLeftTest, RuntimeVariantSelection)
{
    for (auto variant : {lazy::ScanVariant::fixed, lazy::ScanVariant::buggy}) {
        auto it = lazy::scan_left(variant, lazy::from_values<std::int64_t>({2, 3}), std::int64_t{1},
                                  [](std::int64_t a, std::int64_t b) { return a * b; });
        EXPECT_EQ(lazy::collect(it), (Ints{1, 2, 6}));
    }
}

TEST(SlidingTest, OverlappingWindows)
{
    auto it = lazy::sliding(lazy::from_values<std::int64_t>({1, 2, 3, 4, 5}), lazy::WindowSpec(3, 1));
    EXPECT_EQ(lazy::collect(it), (std::vector<Ints>{{1, 2, 3}, {2, 3, 4}, {3, 4, 5}}));
}

TEST(SlidingTest, Grouped)
{
    auto it = lazy::grouped(lazy::from_values<std::int64_t>({1, 2, 3, 4}), 2);
    EXPECT_EQ(lazy::collect(it), (std::vector<Ints>{{1, 2}, {3, 4}}));
}

TEST(SlidingTest, NoPartialWindow)
{
    auto it = lazy::grouped(lazy::from_values<std::int64_t>({1, 2, 3}), 2);
    EXPECT_EQ(lazy::collect(it), (std::vector<Ints>{{1, 2}}));
    auto short_input = lazy::sliding(lazy::from_values<std::int64_t>({1, 2}), lazy::WindowSpec(3, 1));
    EXPECT_FALSE(short_input.has_next());
    EXPECT_THROW(short_input.next(), EndOfIteration);
}

TEST(SlidingTest, StepLargerThanSize)
{
    auto it = lazy::sliding(lazy::from_values<std::int64_t>({1, 2, 3, 4, 5, 6, 7}), lazy::WindowSpec(2, 3));
    EXPECT_EQ(lazy::collect(it), (std::vector<Ints>{{1, 2}, {4, 5}}));
}

TEST(SlidingTest, FirstWindowPullsExactlySize)
{
    auto log = spy::make_log();
    auto it = lazy::sliding(spy::wrap_spy(lazy::from_values<std::int64_t>({1, 2, 3, 4, 5}), log, "src"),
                            lazy::WindowSpec(3, 1));
    EXPECT_EQ(spy::times_called(*log, "src", EventKind::next), 0u);
    it.next();
    EXPECT_EQ(spy::times_called(*log, "src", EventKind::next), 3u);
}

TEST(SlidingTest, RejectsZeroSizeOrStep)
{
    EXPECT_THROW(lazy::WindowSpec(0, 1), std::invalid_argument);
    EXPECT_THROW(lazy::WindowSpec(1, 0), std::invalid_argument);
}

TEST(ChainTest, Concatenates)
{
    EXPECT_EQ(lazy::collect(lazy::chain(lazy::from_values({1}), lazy::from_values({2}))), (std::vector<int>{1, 2}));
    auto empty = lazy::chain(lazy::from_values(std::vector<int>{}), lazy::from_values(std::vector<int>{}));
    EXPECT_FALSE(empty.has_next());
    EXPECT_THROW(empty.next(), EndOfIteration);
}

TEST(ChainTest, RepeatedHasNextProbesOnce)
{
    auto log = spy::make_log();
    auto it = lazy::chain(spy::wrap_spy(lazy::from_values({1, 2}), log, "a"),
                          spy::wrap_spy(lazy::from_values(std::vector<int>{}), log, "b"));
    EXPECT_TRUE(it.has_next());
    EXPECT_TRUE(it.has_next());
    EXPECT_LE(spy::times_called(*log, "a", EventKind::has_next) + spy::times_called(*log, "b", EventKind::has_next),
              1u);
}

TEST(MemoStreamTest, ConstructionIsLazy)
{
    auto log = spy::make_log();
    auto stream = lazy::to_memo_stream(spy::wrap_spy(lazy::from_values({5, 6, 7}), log, "src"));
    EXPECT_EQ(log->size(), 0u);
    EXPECT_EQ(stream.forced_count(), 0u);
}

TEST(MemoStreamTest, ForcePullsOnlyWhatIsNeeded)
{
    auto log = spy::make_log();
    auto stream = lazy::to_memo_stream(spy::wrap_spy(lazy::from_values({5, 6, 7}), log, "src"));
    EXPECT_EQ(stream.force(2), 7);
    EXPECT_EQ(spy::times_called(*log, "src", EventKind::next), 3u);
    EXPECT_EQ(stream.force(2), 7);
    EXPECT_EQ(stream.force(1), 6);
    EXPECT_EQ(spy::times_called(*log, "src", EventKind::next), 3u);
}

TEST(MemoStreamTest, OutOfRange)
{
    auto empty = lazy::to_memo_stream(lazy::from_values(std::vector<int>{}));
    EXPECT_THROW(empty.force(0), lazy::IndexOutOfRange);
    EXPECT_EQ(empty.exhausted_at(), 0u);

    auto three = lazy::to_memo_stream(lazy::from_values({5, 6, 7}));
    EXPECT_THROW(three.force(3), lazy::IndexOutOfRange);
    EXPECT_EQ(three.force(0), 5);
    EXPECT_EQ(three.exhausted_at(), 3u);
}

TEST(ForeachTest, SumsAndEmpty)
{
    std::int64_t sum = 0;
    lazy::foreach(lazy::from_values<std::int64_t>({1, 2, 3}), [&](std::int64_t x) { sum += x; });
    EXPECT_EQ(sum, 6);

    int calls = 0;
    lazy::foreach(lazy::from_values(std::vector<int>{}), [&](int) { ++calls; });
    EXPECT_EQ(calls, 0);
}

TEST(ForeachTest, ProtocolOrder)
{
    auto log = spy::make_log();
    lazy::foreach(spy::wrap_spy(lazy::from_values({1, 2}), log, "src"), [](int) {});
    std::vector<EventKind> kinds;
    for (const auto& e : log->events()) {
        kinds.push_back(e.kind);
    }
    EXPECT_EQ(kinds, (std::vector<EventKind>{EventKind::has_next, EventKind::next, EventKind::has_next,
                                             EventKind::next, EventKind::has_next}));
}

TEST(AnyIteratorTest, ErasesAndForwards)
{
    lazy::AnyIterator<std::string> it = lazy::map(lazy::from_values({1, 2}), [](int x) { return std::to_string(x); });
    EXPECT_EQ(lazy::collect(it), (std::vector<std::string>{"1", "2"}));
    EXPECT_THROW(it.next(), EndOfIteration);
}

}  // namespace
