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

// Executable scenarios. Each one drives a small pipeline against spies and
// reports what it observed together with the expectations it checked.

#include <spyscan/lazy/scan_left.hpp>
#include <spyscan/spy/interaction_log.hpp>
#include <spyscan/spy/verification.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spyscan::scenarios {

using lazy::ScanVariant;

struct Expectation {
    std::string description;
    bool holds = false;
};

struct ScenarioReport {
    std::string name;
    std::vector<std::string> values;  // materialized results, rendered
    std::vector<std::int64_t> trace;  // encoded interaction trace
    /// Upstream next()-count observed after each produced result.
    std::vector<std::size_t> step_counts;
    std::vector<Expectation> expectations;
    std::optional<spy::VerificationFailure> failure;
    spy::SharedLog log;

    void expect(std::string description, bool holds);
    bool passed() const;
};

/// 10, -1, -1, -11, 11, -2, -2, -13, 13, -3
std::span<const std::int64_t> canonical_scan_trace();

/// Counting source 1..2 under scanLeft(10)(+) with a spied operator, drained
/// by foreach with each emission marked.
ScenarioReport scan_lazy_scenario(ScanVariant variant);

/// Spy over [1, 2, 3]; after the i-th result the upstream must have seen
/// exactly i next() calls.
ScenarioReport spy_scan_scenario(ScanVariant variant);

ScenarioReport chain_scenario();
ScenarioReport sliding_scenario();
ScenarioReport memo_scenario();
ScenarioReport eval_once_scenario();

/// Spied line source 6, 7, 2. Output j must appear after exactly j reads.
ScenarioReport cum_avg_scenario(ScanVariant variant);

ScenarioReport temp_conv_scenario();

struct ScenarioEntry {
    std::string_view name;
    /// Null when the scenario has no fixed/buggy choice.
    std::optional<ScanVariant> built_in_variant;
    bool takes_variant = false;
};

std::span<const ScenarioEntry> scenario_catalog();

/// Runs a scenario by its catalog name. `variant` applies to scenarios that
/// take one; scan-lazy-* carry their own. Returns nullopt for unknown names.
std::optional<ScenarioReport> run_scenario(std::string_view name, ScanVariant variant = ScanVariant::fixed);

}  // namespace spyscan::scenarios
