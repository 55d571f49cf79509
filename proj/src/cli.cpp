/*
   Copyright 2026 The zdscheme Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "zdscheme/cli.hpp"

#include <chrono>
#include <iostream>
#include <regex>

#include "CLI11.hpp"
#include "zdscheme/errors.hpp"
#include "zdscheme/search.hpp"

namespace zds {

std::pair<int, int> parse_uniformity_pair(const std::string& text) {
    static const std::regex re(R"(\s*(\d+)\s*,\s*(\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw ParseError("uniformity pair must look like i,j (got \"" + text + "\")");
    try {
        return {std::stoi(m[1]), std::stoi(m[2])};
    } catch (const std::out_of_range&) {
        throw ParseError("uniformity pair out of range: \"" + text + "\"");
    }
}

std::pair<long long, long long> parse_range(const std::string& text) {
    static const std::regex re(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw ParseError("range must look like A..B (got \"" + text + "\")");
    try {
        return {std::stoll(m[1]), std::stoll(m[2])};
    } catch (const std::out_of_range&) {
        throw ParseError("range bound out of range: \"" + text + "\"");
    }
}

AnalysisReport analyze_input(const SchemeInput& input, const AnalysisOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const auto x = build_scheme(input.n, input.points);
    const auto a = analyze(x, options);
    const auto checks = run_checks(x, a);
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return make_report(input, x, a, checks, ms);
}

namespace {

struct AnalyzeFlags {
    bool json = false;
    int degree_bound = -1;
    std::vector<std::string> uniformity;
};

void add_analyze_flags(CLI::App* cmd, AnalyzeFlags& f) {
    cmd->add_flag("--json", f.json, "Write the report as JSON");
    cmd->add_option("--degree-bound", f.degree_bound, "Last degree of the Kaehler different window")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--uniformity", f.uniformity, "Decide (i,j)-uniformity, given as i,j (repeatable)");
}

int emit_report(const SchemeInput& input, const AnalyzeFlags& f, std::ostream& out, std::ostream& err) {
    AnalysisOptions opt;
    opt.kaehler_bound = f.degree_bound;
    for (const auto& u : f.uniformity) opt.uniformity.push_back(parse_uniformity_pair(u));
    const auto report = analyze_input(input, opt);
    if (f.json)
        out << report_to_json(report).dump(2) << "\n";
    else
        out << render_text(report);
    if (!report.checks_failed.empty()) {
        for (const auto& c : report.checks_failed) err << "invariant check failed: " << c << "\n";
        return kExitInvariant;
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Invariants of reduced zero-dimensional schemes in P^n over Q", "zdscheme"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    AnalyzeFlags analyze_flags;
    std::string file;
    auto* analyze_cmd = app.add_subcommand("analyze", "Analyze a scheme file");
    analyze_cmd->add_option("file", file, "Scheme JSON file")->required();
    add_analyze_flags(analyze_cmd, analyze_flags);

    AnalyzeFlags fixture_flags;
    std::string fixture_name;
    std::string fixture_dir = default_fixture_dir();
    bool list = false;
    auto* fixture_cmd = app.add_subcommand("fixture", "Analyze a bundled example");
    fixture_cmd->add_option("name", fixture_name, "Fixture name");
    fixture_cmd->add_option("--fixture-dir", fixture_dir, "Directory holding the fixture files");
    fixture_cmd->add_flag("--list", list, "List the bundled fixtures");
    add_analyze_flags(fixture_cmd, fixture_flags);

    std::string points = "2..8";
    std::string coords = "-3..3";
    SearchConfig search;
    bool search_json = false;
    search.reproducer_dir = "counterexamples";
    auto* search_cmd = app.add_subcommand("search", "Compare the Dedekind and Kaehler differents on random points in P^2");
    search_cmd->add_option("--points", points, "Point count range A..B")->capture_default_str();
    search_cmd->add_option("--coord-range", coords, "Coordinate range -C..C")->capture_default_str();
    search_cmd->add_option("--trials", search.trials, "Number of trials")->capture_default_str();
    search_cmd->add_option("--seed", search.seed, "RNG seed")->capture_default_str();
    search_cmd->add_option("--jobs", search.jobs, "Worker threads")->capture_default_str();
    search_cmd->add_option("--reproducer-dir", search.reproducer_dir, "Where disagreeing point sets are written")
        ->capture_default_str();
    search_cmd->add_flag("--json", search_json, "Write the summary as JSON");

    // CLI11 takes "-3..3" for an option name; glue such values to their flag
    std::vector<std::string> argv;
    for (size_t k = 0; k < args.size(); ++k) {
        if ((args[k] == "--coord-range" || args[k] == "--points") && k + 1 < args.size()) {
            argv.push_back(args[k] + "=" + args[k + 1]);
            ++k;
        } else {
            argv.push_back(args[k]);
        }
    }
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());

    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        // help and version requests come through here with exit code 0
        return app.exit(e, out, err) == 0 ? kExitOk : kExitParse;
    }

    try {
        if (analyze_cmd->parsed()) return emit_report(load_scheme_file(file), analyze_flags, out, err);
        if (fixture_cmd->parsed()) {
            if (list) {
                for (const auto& n : fixture_names()) out << n << "\n";
                return kExitOk;
            }
            if (fixture_name.empty()) throw ParseError("fixture name required (see --list)");
            return emit_report(load_fixture(fixture_name, fixture_dir), fixture_flags, out, err);
        }
        if (search_cmd->parsed()) {
            const auto [pa, pb] = parse_range(points);
            const auto [ca, cb] = parse_range(coords);
            if (ca != -cb) throw ParseError("coordinate range must be symmetric, -C..C");
            search.min_points = static_cast<int>(pa);
            search.max_points = static_cast<int>(pb);
            search.coord_range = static_cast<int>(cb);
            const auto summary = run_search(search);
            if (search_json)
                out << summary_to_json(summary).dump(2) << "\n";
            else
                out << render_summary(summary);
            return kExitOk;
        }
    } catch (const ParseError& e) {
        err << "zdscheme: parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionError& e) {
        err << "zdscheme: precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const InvariantError& e) {
        err << "zdscheme: internal invariant failed: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::exception& e) {
        err << "zdscheme: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace zds
