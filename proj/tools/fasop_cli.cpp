// SPDX-License-Identifier: Apache-2.0
//
// fasop: outage analysis for UAV-relayed rate-splitting downlinks with
// fluid-antenna ground users
// Copyright (C) 2026 The fasop authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fasop/config.hpp"
#include "fasop/report.hpp"
#include "fasop/validation.hpp"

namespace {

using namespace fasop::cli;

enum Exit : int { ok = 0, failure = 1, config_error = 2, infeasible_only = 3, gate_failure = 4, io_error = 5 };

struct Overrides {
    std::string config;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> modes;
    bool literal_typos = false;
};

void add_common(CLI::App* app, Overrides& o) {
    app->add_option("--config", o.config, "configuration file (JSON); defaults when omitted");
    app->add_option("--trials", o.trials, "Monte Carlo trials per point and user");
    app->add_option("--seed", o.seed, "Monte Carlo seed");
    app->add_option("--modes", o.modes, "comma list of exact, asymptotic, monte_carlo, noma");
    app->add_flag("--paper-literal-typos", o.literal_typos, "use the SINR expressions as printed");
}

RunSpec resolve(const Overrides& o) {
    RunSpec spec = o.config.empty() ? parse_config("", "<defaults>") : load_config(o.config);
    if (o.trials || o.seed) {
        if (!spec.mc)
            spec.mc.emplace();
        if (o.trials)
            spec.mc->trials = *o.trials;
        if (o.seed)
            spec.mc->seed = *o.seed;
    }
    if (o.modes)
        spec.modes = parse_modes(*o.modes);
    if (o.literal_typos)
        spec.scenario.paper_literal_typos = true;
    spec.validate();
    return spec;
}

template <class Writer>
void write_file(const std::string& path, Writer&& writer) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    writer(out);
    out.flush();
    if (!out)
        throw IoError("error writing '" + path + "'");
}

int run_command(const RunSpec& spec) {
    const SweepResult result = evaluate(spec);
    if (!spec.outputs.csv_path.empty())
        write_file(spec.outputs.csv_path, [&](std::ostream& o) { write_csv(o, result); });
    if (spec.outputs.svg_path)
        write_file(*spec.outputs.svg_path, [&](std::ostream& o) { write_svg(o, result); });
    write_summary(std::cout, result);
    if (result.all_infeasible()) {
        std::cerr << "every grid point is infeasible\n";
        return infeasible_only;
    }
    return ok;
}

int validate_command(const RunSpec& spec, const std::vector<int>& ids, const std::string& report_path) {
    const ValidationReport report = validate(spec, ids);
    for (const std::string& w : report.warnings)
        std::cerr << "warning: " << w << "\n";
    for (const CriterionResult& c : report.criteria) {
        const char* status = c.passed ? "PASS" : (c.blocking ? "FAIL" : "WARN");
        std::cerr << status << " criterion " << c.id << ": " << c.title << "\n";
        for (const std::string& n : c.notes)
            std::cerr << "    " << n << "\n";
    }
    const std::string text = report.to_json().dump(2) + "\n";
    if (report_path.empty())
        std::cout << text;
    else
        write_file(report_path, [&](std::ostream& o) { o << text; });
    return report.passed() ? ok : gate_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Outage probability of a UAV-relayed RSMA downlink with fluid-antenna users"};
    app.require_subcommand(1);

    Overrides run_o;
    std::string out_csv, out_svg;
    CLI::App* run = app.add_subcommand("run", "evaluate the configured sweep");
    add_common(run, run_o);
    run->add_option("--out", out_csv, "CSV output path");
    run->add_option("--svg", out_svg, "SVG chart output path");

    Overrides val_o;
    std::string report_path;
    std::vector<int> criteria;
    CLI::App* val = app.add_subcommand("validate", "run the acceptance suite on the configured scenario");
    add_common(val, val_o);
    val->add_option("--out", report_path, "JSON report path (standard output when omitted)");
    val->add_option("--criteria", criteria, "subset of criteria to run")->delimiter(',')->check(CLI::Range(1, criterion_count));

    app.add_subcommand("defaults", "print the default configuration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : config_error;
    }

    try {
        if (app.got_subcommand("defaults")) {
            std::cout << default_config_text();
            return ok;
        }
        if (app.got_subcommand(run)) {
            RunSpec spec = resolve(run_o);
            if (!out_csv.empty())
                spec.outputs.csv_path = out_csv;
            if (!out_svg.empty())
                spec.outputs.svg_path = out_svg;
            return run_command(spec);
        }
        RunSpec spec = resolve(val_o);
        if (!spec.mc)
            spec.mc.emplace();
        return validate_command(spec, criteria, report_path);
    } catch (const ConfigError& e) {
        std::cerr << (e.kind() == ConfigError::Kind::parse ? "config parse error: " : "config validation error: ")
                  << e.what() << "\n";
        return config_error;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return io_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failure;
    }
}
