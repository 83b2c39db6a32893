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

#include <spyscan/cli/commands.hpp>

#include <spyscan/metrics/analyzer.hpp>
#include <spyscan/metrics/ruleset.hpp>
#include <spyscan/scenarios/pipelines.hpp>
#include <spyscan/scenarios/scenarios.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace spyscan::cli {
namespace {

using lazy::ScanVariant;

struct LoadedFile {
    std::filesystem::path path;
    metrics::SourceFile source;
};

struct ResolvedFunction {
    const LoadedFile* file;
    metrics::FunctionSpan span;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path.string());
    }
    std::ostringstream content;
    content << in.rdbuf();
    return content.str();
}

ResolvedFunction resolve_function(const std::vector<LoadedFile>& files, const std::string& name,
                                  const metrics::TokenRuleset& rules)
{
    std::vector<ResolvedFunction> found;
    for (const auto& f : files) {
        try {
            found.push_back({&f, metrics::extract_span(f.source, name, rules)});
        } catch (const metrics::MetricsError& e) {
            if (e.code() != metrics::MetricsError::Code::not_found) {
                throw;
            }
        }
    }
    if (found.empty()) {
        throw metrics::MetricsError(metrics::MetricsError::Code::not_found, "function '" + name + "' not found");
    }
    if (found.size() > 1) {
        throw metrics::MetricsError(metrics::MetricsError::Code::ambiguous,
                                    "function '" + name + "' found in " + found[0].file->path.string() + " and " +
                                        found[1].file->path.string());
    }
    return found.front();
}

// A compare side names a file (by stem) holding a single outermost function,
// or a function.
ResolvedFunction resolve_side(const std::vector<LoadedFile>& files, const std::string& side,
                              const metrics::TokenRuleset& rules)
{
    for (const auto& f : files) {
        if (f.path.stem().string() != side) {
            continue;
        }
        auto spans = metrics::outermost_functions(f.source, rules);
        if (spans.size() != 1) {
            throw metrics::MetricsError(spans.empty() ? metrics::MetricsError::Code::not_found
                                                      : metrics::MetricsError::Code::ambiguous,
                                        f.path.string() + " holds " + std::to_string(spans.size()) +
                                            " top-level functions; name one explicitly");
        }
        return {&f, std::move(spans.front())};
    }
    return resolve_function(files, side, rules);
}

void write_metrics_row(std::ostream& out, const std::string& name, const metrics::FunctionMetrics& m)
{
    out << name << '\t' << m.mut << '\t' << m.loc << '\t' << m.cc << '\n';
}

}  // namespace

int cmd_run(Program program, ScanVariant impl, std::istream& in, std::ostream& out, std::ostream& err)
{
    try {
        lazy::AnyIterator<std::string> lines = scenarios::StreamLineSource(in);
        auto results = program == Program::cumavg ? scenarios::cum_avg_pipeline(std::move(lines), impl)
                                                  : scenarios::temp_conv_pipeline(std::move(lines));
        lazy::foreach(results, [&out](const std::string& line) { out << line << '\n' << std::flush; });
    } catch (const scenarios::ParseError& e) {
        out << std::flush;
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

int cmd_trace(const std::string& scenario, std::optional<ScanVariant> impl, std::ostream& out, std::ostream& err)
{
    const auto catalog = scenarios::scenario_catalog();
    const auto entry = std::find_if(catalog.begin(), catalog.end(),
                                    [&](const scenarios::ScenarioEntry& e) { return e.name == scenario; });
    if (entry == catalog.end()) {
        err << "error: unknown scenario '" << scenario << "'; valid names:";
        for (const auto& e : catalog) {
            err << ' ' << e.name;
        }
        err << '\n';
        return kExitUsage;
    }
    if (impl && entry->built_in_variant && *impl != *entry->built_in_variant) {
        err << "error: scenario '" << scenario << "' fixes its own implementation; drop --impl\n";
        return kExitUsage;
    }
    if (impl && !entry->built_in_variant && !entry->takes_variant) {
        err << "error: scenario '" << scenario << "' has no fixed/buggy variant\n";
        return kExitUsage;
    }

    const auto report = scenarios::run_scenario(scenario, impl.value_or(ScanVariant::fixed));
    for (const auto& event : report->log->events()) {
        out << spy::describe(event) << '\n';
    }
    for (std::size_t i = 0; i < report->trace.size(); ++i) {
        out << (i == 0 ? "" : " ") << report->trace[i];
    }
    out << '\n' << (report->passed() ? "PASS" : "FAIL") << '\n';

    for (const auto& e : report->expectations) {
        if (!e.holds) {
            err << "expectation failed: " << e.description << '\n';
        }
    }
    if (report->failure) {
        err << report->failure->what();
    }
    return report->passed() ? kExitOk : kExitScenarioFailed;
}

int cmd_metrics(const MetricsOptions& options, std::ostream& out, std::ostream& err)
{
    try {
        const metrics::TokenRuleset rules = options.rules ? metrics::load_rules(*options.rules) : metrics::TokenRuleset{};
        std::vector<LoadedFile> files;
        files.reserve(options.files.size());
        for (const auto& path : options.files) {
            const std::string text = read_file(path);
            files.push_back({path, metrics::SourceFile(path.string(), text, rules)});
        }

        std::ostringstream report;
        if (!options.compares.empty()) {
            report << "function\tmut_b\tloc_b\tloc_a\tloc_delta\tcc_b\tcc_a\n";
            for (const auto& spec : options.compares) {
                const auto colon = spec.find(':');
                if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size()) {
                    throw UsageError("--compare expects before:after, got '" + spec + "'");
                }
                const auto before = resolve_side(files, spec.substr(0, colon), rules);
                const auto after = resolve_side(files, spec.substr(colon + 1), rules);
                const auto mb = metrics::measure(before.file->source, before.span, rules);
                const auto ma = metrics::measure(after.file->source, after.span, rules);
                report << before.span.name << '\t' << mb.mut << '\t' << mb.loc << '\t' << ma.loc << '\t'
                       << metrics::format_percent(metrics::compare_delta(mb, ma)) << '\t' << mb.cc << '\t' << ma.cc
                       << '\n';
            }
        } else {
            report << "function\tmut\tloc\tcc\n";
            if (!options.functions.empty()) {
                for (const auto& name : options.functions) {
                    const auto fn = resolve_function(files, name, rules);
                    write_metrics_row(report, fn.span.name, metrics::measure(fn.file->source, fn.span, rules));
                }
            } else {
                for (const auto& f : files) {
                    for (const auto& span : metrics::outermost_functions(f.source, rules)) {
                        write_metrics_row(report, span.name, metrics::measure(f.source, span, rules));
                    }
                }
            }
        }
        out << report.str();
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Lazy iterator pipelines, spy-based scenario traces and test-code metrics", "spyscan"};
    app.require_subcommand(1);

    CliConfig config;
    const std::map<std::string, ScanVariant> impls{{"fixed", ScanVariant::fixed}, {"buggy", ScanVariant::buggy}};
    const std::map<std::string, Program> programs{{"cumavg", Program::cumavg}, {"tempconv", Program::tempconv}};

    ScanVariant run_impl = ScanVariant::fixed;
    auto* run = app.add_subcommand("run", "Stream stdin through a pipeline, one output line per input line");
    run->add_option("program", config.program, "cumavg | tempconv")
        ->required()
        ->transform(CLI::CheckedTransformer(programs, CLI::ignore_case));
    run->add_option("--impl", run_impl, "scanLeft implementation: fixed | buggy")
        ->transform(CLI::CheckedTransformer(impls, CLI::ignore_case));

    ScanVariant trace_impl = ScanVariant::fixed;
    auto* trace = app.add_subcommand("trace", "Run a named scenario and print its interaction log");
    trace->add_option("scenario", config.scenario, "scenario name")->required();
    auto* trace_impl_opt = trace->add_option("--impl", trace_impl, "scanLeft implementation: fixed | buggy")
                               ->transform(CLI::CheckedTransformer(impls, CLI::ignore_case));

    auto* metrics_cmd = app.add_subcommand("metrics", "Report Mut, LOC and CC for test functions");
    metrics_cmd->add_option("--rules", config.metrics.rules, "token rules file")->check(CLI::ExistingFile);
    auto* fn_opt = metrics_cmd->add_option("--function", config.metrics.functions, "function to report")
                       ->allow_extra_args(false);
    auto* cmp_opt =
        metrics_cmd->add_option("--compare", config.metrics.compares, "before:after pair, as file stems or names")
                        ->allow_extra_args(false);
    fn_opt->excludes(cmp_opt);
    metrics_cmd->add_option("files", config.metrics.files, "source files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (*run) {
        return cmd_run(config.program, run_impl, in, out, err);
    }
    if (*trace) {
        if (trace_impl_opt->count() > 0) {
            config.impl = trace_impl;
        }
        return cmd_trace(config.scenario, config.impl, out, err);
    }
    return cmd_metrics(config.metrics, out, err);
}

}  // namespace spyscan::cli
