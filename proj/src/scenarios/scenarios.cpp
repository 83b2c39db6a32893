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

#include <spyscan/scenarios/scenarios.hpp>

#include <spyscan/lazy/adapters.hpp>
#include <spyscan/lazy/memo_stream.hpp>
#include <spyscan/lazy/pull_iterator.hpp>
#include <spyscan/scenarios/pipelines.hpp>
#include <spyscan/spy/spy.hpp>

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace spyscan::scenarios {

using spy::EventKind;

namespace {

constexpr std::array<std::int64_t, 10> kCanonicalTrace{10, -1, -1, -11, 11, -2, -2, -13, 13, -3};

template <typename T>
std::vector<std::string> render_all(const std::vector<T>& xs)
{
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) {
        out.push_back(spy::render(spy::to_value(x)));
    }
    return out;
}

bool has_reported_end(const spy::InteractionLog& log, std::string_view subject)
{
    const auto events = log.events();
    return std::any_of(events.begin(), events.end(), [&](const spy::InteractionEvent& e) {
        return e.subject == subject && e.kind == EventKind::has_next && e.outcome == spy::Value{false};
    });
}

std::string variant_suffix(ScanVariant variant)
{
    return variant == ScanVariant::fixed ? "fixed" : "buggy";
}

// Drives a line pipeline, noting how many lines had been read when each
// output appeared.
ScenarioReport run_line_pipeline(std::string name, const std::vector<std::string>& inputs,
                                 const std::vector<std::string>& expected,
                                 const std::function<lazy::AnyIterator<std::string>(lazy::AnyIterator<std::string>)>& build)
{
    ScenarioReport report;
    report.name = std::move(name);
    report.log = spy::make_log();
    auto lines = spy::wrap_spy(lazy::from_values(inputs), report.log, "lines");
    auto out = build(std::move(lines));

    std::vector<bool> after_end;
    lazy::foreach(out, [&](const std::string& line) {
        const auto reads = spy::times_called(*report.log, "lines", EventKind::next);
        report.values.push_back(line);
        report.step_counts.push_back(reads);
        after_end.push_back(has_reported_end(*report.log, "lines"));
        spy::mark(*report.log, "reads", spy::Value{static_cast<std::int64_t>(reads)});
    });
    report.trace = spy::encode_trace(*report.log, spy::signed_trace_encoder);

    report.expect("outputs equal the expected lines", report.values == expected);
    bool incremental = report.step_counts.size() == expected.size();
    for (std::size_t j = 0; incremental && j < report.step_counts.size(); ++j) {
        incremental = report.step_counts[j] == j + 1 && !after_end[j];
    }
    report.expect("output j appears after exactly j input lines, before end of input", incremental);
    return report;
}

}  // namespace

void ScenarioReport::expect(std::string description, bool holds)
{
    expectations.push_back({std::move(description), holds});
}

bool ScenarioReport::passed() const
{
    return !expectations.empty() &&
           std::all_of(expectations.begin(), expectations.end(), [](const Expectation& e) { return e.holds; });
}

std::span<const std::int64_t> canonical_scan_trace()
{
    return kCanonicalTrace;
}

ScenarioReport scan_lazy_scenario(ScanVariant variant)
{
    ScenarioReport report;
    report.name = "scan-lazy-" + variant_suffix(variant);
    report.log = spy::make_log();
    auto& log = *report.log;

    auto it = spy::wrap_spy(CountingSource(3, report.log), report.log, "it");
    auto op = spy::wrap_spy_fn([](std::int64_t sum, std::int64_t x) { return sum + x; }, report.log, "op");
    auto xy = lazy::scan_left(variant, std::move(it), std::int64_t{10}, op);

    std::vector<std::int64_t> scan;
    lazy::foreach(xy, [&](std::int64_t i) {
        scan.push_back(i);
        report.step_counts.push_back(spy::times_called(log, "it", EventKind::next));
        spy::mark(log, "emit", spy::Value{i});
    });
    report.values = render_all(scan);
    report.trace = spy::encode_trace(log, spy::signed_trace_encoder);

    report.expect("values are 10 11 13", scan == std::vector<std::int64_t>{10, 11, 13});
    report.expect("trace is 10 -1 -1 -11 11 -2 -2 -13 13 -3",
                  std::ranges::equal(report.trace, canonical_scan_trace()));
    report.expect("upstream next-counts per result are 0 1 2",
                  report.step_counts == std::vector<std::size_t>{0, 1, 2});
    return report;
}

ScenarioReport spy_scan_scenario(ScanVariant variant)
{
    ScenarioReport report;
    report.name = "scan-spy";
    report.log = spy::make_log();

    const std::vector<std::int64_t> input{1, 2, 3};
    const std::vector<std::int64_t> expected{0, 1, 3, 6};

    auto it = spy::wrap_spy(lazy::from_values(input), report.log, "it");
    auto result = lazy::scan_left(variant, std::move(it), std::int64_t{0}, std::plus<>{});

    bool values_ok = true;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        const std::int64_t v = result.next();
        report.values.push_back(std::to_string(v));
        values_ok = values_ok && v == expected[i];
        report.step_counts.push_back(spy::times_called(*report.log, "it", EventKind::next));
        if (auto failure = spy::check_called_times(*report.log, "it", EventKind::next, i)) {
            report.failure = std::move(failure);
            break;
        }
    }
    report.trace = spy::encode_trace(*report.log, spy::signed_trace_encoder);

    std::vector<std::int64_t> oracle{0};
    std::partial_sum(input.begin(), input.end(), std::back_inserter(oracle));

    report.expect("result values are 0 1 3 6", values_ok && report.values.size() == expected.size());
    report.expect("it.next() was called i times after result i", !report.failure.has_value());
    report.expect("expected values agree with the prefix-sum oracle", oracle == expected);
    return report;
}

ScenarioReport chain_scenario()
{
    ScenarioReport report;
    report.name = "chain-hasnext";
    report.log = spy::make_log();
    const auto& log = *report.log;

    auto a = spy::wrap_spy(lazy::from_values<std::int64_t>({1, 2}), report.log, "a");
    auto b = spy::wrap_spy(lazy::from_values<std::int64_t>({3}), report.log, "b");
    auto joined = lazy::chain(std::move(a), std::move(b));

    const auto probes = [&log](std::string_view side) { return spy::times_called(log, side, EventKind::has_next); };

    std::vector<std::int64_t> values;
    bool consistent = true;
    bool per_side_bound = true;
    bool first_side_total_bound = true;
    bool second_side_once = true;
    bool first_exhausted = false;
    while (true) {
        const auto a0 = probes("a");
        const auto b0 = probes("b");
        const bool r1 = joined.has_next();
        const bool r2 = joined.has_next();
        const bool r3 = joined.has_next();
        const auto da = probes("a") - a0;
        const auto db = probes("b") - b0;

        consistent = consistent && r1 == r2 && r2 == r3;
        per_side_bound = per_side_bound && da <= 1 && db <= 1;
        if (first_exhausted) {
            second_side_once = second_side_once && da == 0 && db == 1;
        }
        first_exhausted = first_exhausted || has_reported_end(log, "a");
        if (!r1) {
            break;
        }
        const auto a_pulls = spy::times_called(log, "a", EventKind::next);
        values.push_back(joined.next());
        if (spy::times_called(log, "a", EventKind::next) > a_pulls) {
            first_side_total_bound = first_side_total_bound && da + db <= 1;
        }
        report.step_counts.push_back(spy::times_called(log, "a", EventKind::next) +
                                     spy::times_called(log, "b", EventKind::next));
    }
    report.values = render_all(values);
    report.trace = spy::encode_trace(log, spy::signed_trace_encoder);

    report.expect("values are 1 2 3", values == std::vector<std::int64_t>{1, 2, 3});
    report.expect("repeated hasNext answers agree", consistent);
    report.expect("repeated hasNext probes each side at most once per position", per_side_bound);
    report.expect("while the first side has elements, at most one probe per position", first_side_total_bound);
    report.expect("after the first side is exhausted, the second is probed once per position", second_side_once);
    return report;
}

ScenarioReport sliding_scenario()
{
    ScenarioReport report;
    report.name = "sliding-pull";
    report.log = spy::make_log();
    const auto& log = *report.log;

    const auto brute_force = [](const std::vector<std::int64_t>& xs, std::size_t size, std::size_t step) {
        std::vector<std::vector<std::int64_t>> out;
        for (std::size_t start = 0; start + size <= xs.size(); start += step) {
            out.emplace_back(xs.begin() + static_cast<std::ptrdiff_t>(start),
                             xs.begin() + static_cast<std::ptrdiff_t>(start + size));
        }
        return out;
    };

    struct Case {
        std::string subject;
        std::vector<std::int64_t> input;
        std::size_t size;
        std::size_t step;
    };
    const std::vector<Case> cases{{"it", {1, 2, 3, 4, 5}, 3, 1}, {"grouped", {1, 2, 3, 4}, 2, 2}};

    bool lazy_construction = true;
    bool first_window_minimal = true;
    bool within_budget = true;
    bool windows_match = true;
    for (const auto& c : cases) {
        auto windows = lazy::sliding(spy::wrap_spy(lazy::from_values(c.input), report.log, c.subject),
                                     lazy::WindowSpec(c.size, c.step));
        const auto pulls = [&] { return spy::times_called(log, c.subject, EventKind::next); };
        lazy_construction = lazy_construction && pulls() == 0;

        std::vector<std::vector<std::int64_t>> got;
        while (windows.has_next()) {
            got.push_back(windows.next());
            const std::size_t k = got.size();
            report.step_counts.push_back(pulls());
            if (k == 1) {
                first_window_minimal = first_window_minimal && pulls() == c.size;
            }
            within_budget = within_budget && pulls() <= c.size + (k - 1) * c.step;
            report.values.push_back(spy::render(spy::to_value(got.back())));
        }
        windows_match = windows_match && got == brute_force(c.input, c.size, c.step);
    }
    report.trace = spy::encode_trace(log, spy::signed_trace_encoder);

    report.expect("constructing the adapter pulls nothing", lazy_construction);
    report.expect("the first window pulls exactly `size` elements", first_window_minimal);
    report.expect("window k pulls at most size + (k-1)*step elements", within_budget);
    report.expect("windows equal the brute-force slices", windows_match);
    return report;
}

ScenarioReport memo_scenario()
{
    ScenarioReport report;
    report.name = "memo-lazy";
    report.log = spy::make_log();
    const auto& log = *report.log;

    auto stream = lazy::to_memo_stream(spy::wrap_spy(lazy::from_values<std::int64_t>({5, 6, 7}), report.log, "it"));
    const auto pulls = [&log] { return spy::times_called(log, "it", EventKind::next); };

    const auto at_construction = pulls();
    const auto first = stream.force(2);
    const auto after_first = pulls();
    const auto second = stream.force(2);
    const auto after_second = pulls();
    const auto head = stream.force(0);
    const auto after_head = pulls();

    report.values = render_all(std::vector<std::int64_t>{first, second, head});
    report.step_counts = {at_construction, after_first, after_second, after_head};
    report.trace = spy::encode_trace(log, spy::signed_trace_encoder);

    report.expect("construction pulls nothing", at_construction == 0);
    report.expect("force(2) yields 7 after exactly 3 pulls", first == 7 && after_first == 3);
    report.expect("re-forcing index 2 pulls nothing", second == 7 && after_second == 3);
    report.expect("forcing a cached index pulls nothing", head == 5 && after_head == 3);
    return report;
}

ScenarioReport eval_once_scenario()
{
    ScenarioReport report;
    report.name = "eval-once";
    report.log = spy::make_log();
    const auto& log = *report.log;

    std::unordered_map<std::string, std::int64_t> empty_store;
    auto thunk = spy::wrap_spy_fn([] { return std::int64_t{7}; }, report.log, "thunk");
    const auto r1 = get_or_else_update(empty_store, std::string("k"), thunk);
    const auto applied_once = spy::times_called(log, "thunk", EventKind::apply);
    const auto r2 = get_or_else_update(empty_store, std::string("k"), thunk);
    const auto applied_twice = spy::times_called(log, "thunk", EventKind::apply);

    std::unordered_map<std::string, std::int64_t> filled_store{{"k", 5}};
    auto unused = spy::wrap_spy_fn([] { return std::int64_t{7}; }, report.log, "unused");
    const auto r3 = get_or_else_update(filled_store, std::string("k"), unused);
    const auto applied_present = spy::times_called(log, "unused", EventKind::apply);

    report.values = render_all(std::vector<std::int64_t>{r1, r2, r3});
    report.step_counts = {applied_once, applied_twice, applied_present};
    report.trace = spy::encode_trace(log, spy::signed_trace_encoder);

    report.expect("absent key: thunk applied once, value stored",
                  r1 == 7 && applied_once == 1 && empty_store.at("k") == 7);
    report.expect("repeated lookup: thunk still applied once", r2 == 7 && applied_twice == 1);
    report.expect("present key: thunk never applied", r3 == 5 && applied_present == 0);
    return report;
}

ScenarioReport cum_avg_scenario(ScanVariant variant)
{
    return run_line_pipeline("cumavg", {"6", "7", "2"}, {"1: 6.0", "2: 6.5", "3: 5.0"},
                             [variant](lazy::AnyIterator<std::string> lines) {
                                 return cum_avg_pipeline(std::move(lines), variant);
                             });
}

ScenarioReport temp_conv_scenario()
{
    return run_line_pipeline("tempconv", {"127", "133", "137", "95"}, {"6", "7", "7", "5"},
                             [](lazy::AnyIterator<std::string> lines) { return temp_conv_pipeline(std::move(lines)); });
}

std::span<const ScenarioEntry> scenario_catalog()
{
    static constexpr std::array<ScenarioEntry, 9> catalog{{
        {"scan-lazy-fixed", ScanVariant::fixed, false},
        {"scan-lazy-buggy", ScanVariant::buggy, false},
        {"scan-spy", std::nullopt, true},
        {"chain-hasnext", std::nullopt, false},
        {"sliding-pull", std::nullopt, false},
        {"memo-lazy", std::nullopt, false},
        {"eval-once", std::nullopt, false},
        {"cumavg", std::nullopt, true},
        {"tempconv", std::nullopt, false},
    }};
    return catalog;
}

std::optional<ScenarioReport> run_scenario(std::string_view name, ScanVariant variant)
{
    if (name == "scan-lazy-fixed") {
        return scan_lazy_scenario(ScanVariant::fixed);
    }
    if (name == "scan-lazy-buggy") {
        return scan_lazy_scenario(ScanVariant::buggy);
    }
    if (name == "scan-spy") {
        return spy_scan_scenario(variant);
    }
    if (name == "chain-hasnext") {
        return chain_scenario();
    }
    if (name == "sliding-pull") {
        return sliding_scenario();
    }
    if (name == "memo-lazy") {
        return memo_scenario();
    }
    if (name == "eval-once") {
        return eval_once_scenario();
    }
    if (name == "cumavg") {
        return cum_avg_scenario(variant);
    }
    if (name == "tempconv") {
        return temp_conv_scenario();
    }
    return std::nullopt;
}

}  // namespace spyscan::scenarios
