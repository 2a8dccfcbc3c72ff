// Copyright 2026 The Sporadic SIC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// sporadic: build and verify the sporadic SICs and their companion line systems.
//
// Exit status: 0 all checks passed, 1 a check failed, 2 usage error, 3 I/O error.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sporadic/reports.hpp"

using namespace sporadic;

namespace {

struct Options {
    std::string family;
    std::string format = "json";
    double tolerance = 1e-10;
    std::uint64_t seed = 0;
    int restarts = 64;
    std::string output;
    std::vector<int> dims;
};

std::uint64_t seed_from_environment(std::uint64_t fallback) {
    const char *env = std::getenv("SPORADIC_SEED");
    if (env == nullptr || *env == '\0') {
        return fallback;
    }
    std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 20) {
        throw UsageError("SPORADIC_SEED must be a non-negative integer, got '" + s + "'");
    }
    try {
        return std::stoull(s);
    } catch (const std::out_of_range &) {
        throw UsageError("SPORADIC_SEED is out of range");
    }
}

RunConfig make_config(const Options &o, bool seed_given, bool needs_family) {
    RunConfig c;
    if (needs_family) {
        c.family = parse_family(o.family);
    }
    c.format = parse_format(o.format);
    c.tolerance = o.tolerance;
    c.seed = seed_given ? o.seed : seed_from_environment(o.seed);
    c.restarts = o.restarts;
    c.output = o.output;
    c.validate();
    return c;
}

std::string render_json(const Json &j) { return j.dump(2) + "\n"; }

std::string render_summary(const Json &j, Format f) {
    if (f == Format::Json) {
        return render_json(j);
    }
    std::string out;
    for (const auto &[key, value] : j.items()) {
        std::string v = value.is_string() ? value.get<std::string>() : value.dump();
        out += f == Format::Csv ? key + "," + v + "\n" : key + ": " + v + "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Build and verify the sporadic SICs, their duals and the exceptional line systems"};
    app.require_subcommand(1);
    Options o;

    auto add_family = [&](CLI::App *cmd) { cmd->add_option("--family", o.family, "Family name")->required(); };
    auto add_format = [&](CLI::App *cmd) {
        cmd->add_option("--format", o.format, "Output format: json, csv or text")->capture_default_str();
    };
    auto add_output = [&](CLI::App *cmd) { cmd->add_option("--output", o.output, "Write to this file instead of stdout"); };
    auto add_tolerance = [&](CLI::App *cmd) {
        cmd->add_option("--tolerance", o.tolerance, "Tolerance for floating-point checks")->capture_default_str();
    };
    std::vector<CLI::Option *> seed_options;
    auto add_seed = [&](CLI::App *cmd) {
        seed_options.push_back(
            cmd->add_option("--seed", o.seed, "Random seed (default 0, or SPORADIC_SEED when set)"));
    };

    CLI::App *build = app.add_subcommand("build", "Construct a family and summarize it");
    add_family(build);
    add_format(build);
    add_output(build);

    CLI::App *verify = app.add_subcommand("verify", "Run the check suite of one family");
    add_family(verify);
    add_tolerance(verify);
    add_seed(verify);
    add_format(verify);
    add_output(verify);

    CLI::App *report = app.add_subcommand("report-all", "Verify every family and emit one combined report");
    add_tolerance(report);
    add_seed(report);
    add_format(report);
    add_output(report);

    CLI::App *search = app.add_subcommand("entropy-search", "Search for minimum-entropy pure states");
    add_family(search);
    add_seed(search);
    search->add_option("--restarts", o.restarts, "Number of random restarts")->capture_default_str();
    add_format(search);
    add_output(search);

    CLI::App *incidence = app.add_subcommand("incidence", "Emit an incidence matrix (mub-dual, twin-incidence, fano-28)");
    add_family(incidence);
    add_format(incidence);
    add_output(incidence);

    CLI::App *bounds = app.add_subcommand("bounds", "Tabulate Gerzon, zero-count and Welch bounds");
    bounds->add_option("--dim", o.dims, "Dimensions to tabulate (default 2 3 7 8 23)");
    add_format(bounds);
    add_output(bounds);

    CLI::App *exporter = app.add_subcommand("export", "Write a family's data as JSON or CSV");
    add_family(exporter);
    add_format(exporter);
    add_output(exporter);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    bool seed_given = std::any_of(seed_options.begin(), seed_options.end(), [](CLI::Option *opt) { return opt->count() > 0; });

    try {
        if (build->parsed()) {
            RunConfig c = make_config(o, seed_given, true);
            emit(render_summary(build_summary(c.family), c.format), c, std::cout);
            return kExitPass;
        }
        if (verify->parsed()) {
            return run_verify(make_config(o, seed_given, true), std::cout).exit_status;
        }
        if (report->parsed()) {
            RunConfig c = make_config(o, seed_given, false);
            AggregateReport r = run_report_all(c);
            emit(render_report(r, c), c, std::cout);
            return r.combined.overall() ? kExitPass : kExitCheckFailure;
        }
        if (search->parsed()) {
            RunConfig c = make_config(o, seed_given, true);
            if (!is_sic_family(c.family)) {
                throw UsageError("entropy-search needs a SIC family");
            }
            EntropySearchReport r = entropy_search_command(c);
            emit(render_entropy_report(r, c), c, std::cout);
            return r.certificate.overall() ? kExitPass : kExitCheckFailure;
        }
        if (incidence->parsed()) {
            RunConfig c = make_config(o, seed_given, true);
            auto m = family_incidence(c.family);
            if (c.format == Format::Text) {
                throw UsageError("incidence supports json and csv");
            }
            emit(c.format == Format::Json ? render_json(incidence_to_json(m)) : incidence_to_csv(m), c, std::cout);
            return kExitPass;
        }
        if (bounds->parsed()) {
            RunConfig c = make_config(o, seed_given, false);
            std::vector<int> dims = o.dims.empty() ? std::vector<int>{2, 3, 7, 8, 23} : o.dims;
            emit(render_bounds(bounds_table(dims), c.format), c, std::cout);
            return kExitPass;
        }
        if (exporter->parsed()) {
            RunConfig c = make_config(o, seed_given, true);
            switch (c.format) {
                case Format::Json:
                    emit(render_json(export_json(c.family)), c, std::cout);
                    break;
                case Format::Csv:
                    emit(export_csv(c.family), c, std::cout);
                    break;
                case Format::Text:
                    throw UsageError("export supports json and csv");
            }
            return kExitPass;
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
