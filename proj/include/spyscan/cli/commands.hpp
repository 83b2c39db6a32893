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

#include <spyscan/lazy/scan_left.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace spyscan::cli {

enum class Program { cumavg, tempconv };

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitScenarioFailed = 1;
inline constexpr int kExitUsage = 2;

struct MetricsOptions {
    std::optional<std::filesystem::path> rules;
    std::vector<std::filesystem::path> files;
    std::vector<std::string> functions;
    std::vector<std::string> compares;  // "before:after"
};

struct CliConfig {
    enum class Subcommand { run, trace, metrics };
    Subcommand subcommand = Subcommand::run;
    Program program = Program::cumavg;
    std::optional<lazy::ScanVariant> impl;
    std::string scenario;
    MetricsOptions metrics;
};

/// Streams `in` through the program, flushing each output line before the
/// next input line is requested.
int cmd_run(Program program, lazy::ScanVariant impl, std::istream& in, std::ostream& out, std::ostream& err);

/// Prints `ordinal kind outcome` per event, the encoded trace, then PASS or
/// FAIL.
int cmd_trace(const std::string& scenario, std::optional<lazy::ScanVariant> impl, std::ostream& out,
              std::ostream& err);

int cmd_metrics(const MetricsOptions& options, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and dispatches.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace spyscan::cli
