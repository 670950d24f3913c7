#pragma once

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "../problems/allocation.hpp"
#include "config.hpp"
#include "experiment.hpp"
#include "report.hpp"
#include "suites.hpp"

namespace ompcdpso::harness {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitRuntime = 2 };

inline Point parse_point(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ConfigError("--center expects 'x,y', got '" + text + "'");
    try {
        return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ConfigError("--center expects 'x,y', got '" + text + "'");
    }
}

// Entry point of the command-line tool; returns the process exit status.
inline int cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"Discrete PSO / onlooker multi-parent crossover experiment tool"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen-data", "Write a grid allocation instance file");
    int rows = 20, cols = 20;
    double spacing = 1.0;
    bool quadrant = false;
    std::vector<std::string> centers;
    std::string gen_out;
    gen->add_option("--rows", rows, "Grid rows")->required();
    gen->add_option("--cols", cols, "Grid columns")->required();
    gen->add_option("--spacing", spacing, "Distance between neighbouring demand points");
    gen->add_flag("--quadrant-centers", quadrant, "Place four centers at the quadrant centroids");
    gen->add_option("--center", centers, "Explicit center 'x,y' (repeatable)");
    gen->add_option("-o,--output", gen_out, "Instance file (stdout if omitted)");

    auto* run = app.add_subcommand("run", "Run one experiment config");
    std::string config_path;
    std::size_t run_threads = 0;
    run->add_option("config", config_path, "Experiment config file")->required();
    run->add_option("--threads", run_threads, "Override the number of worker threads");

    auto* bench = app.add_subcommand("bench", "Run a named suite across all four algorithms");
    std::string suite;
    SuiteOptions suite_opt;
    std::string bench_out = "results";
    std::size_t bench_runs = 0, bench_iters = 0;
    bench->add_option("suite", suite, "alloc-small | alloc-large | funcs-2d | funcs-30d")->required();
    bench->add_option("-o,--output", bench_out, "Root output directory");
    bench->add_option("--runs", bench_runs, "Override the number of runs");
    bench->add_option("--iterations", bench_iters, "Override the number of iterations");
    bench->add_option("--seed", suite_opt.base_seed, "Base seed");
    bench->add_option("--threads", suite_opt.threads, "Worker threads per campaign");

    auto* report = app.add_subcommand("report", "Aggregate summaries into a comparison table");
    std::vector<std::string> dirs;
    std::string report_csv_path, report_out;
    report->add_option("dirs", dirs, "Result directories")->required();
    report->add_option("--csv", report_csv_path, "Also write the table as CSV");
    report->add_option("-o,--output", report_out, "Write the text table here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, er;
        const int code = app.exit(e, o, er);
        out << o.str();
        err << er.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) {
            AllocationInstance inst = [&] {
                if (quadrant && !centers.empty())
                    throw ConfigError("--quadrant-centers and --center are mutually exclusive");
                if (quadrant)
                    return generate_grid_instance(rows, cols, spacing);
                if (centers.empty())
                    throw ConfigError("gen-data needs --quadrant-centers or at least one --center");
                std::vector<Point> pts;
                for (const auto& c : centers)
                    pts.push_back(parse_point(c));
                return generate_grid_instance(rows, cols, spacing, std::move(pts));
            }();
            if (gen_out.empty()) {
                write_instance(out, inst);
            } else {
                std::ostringstream buf;
                write_instance(buf, inst);
                write_text_file(gen_out, buf.str());
            }
            return kExitOk;
        }
        if (*run) {
            auto config = load_config(config_path);
            if (run_threads > 0)
                config.threads = run_threads;
            const auto result = run_experiment(config);
            for (const auto& s : result.summaries)
                out << "Algorithm " << to_string(config.algorithm.id) << "  Problem " << result.problem
                    << "  Iteration " << s.checkpoint << '\n'
                    << summary_text(s.table) << '\n';
            return kExitOk;
        }
        if (*bench) {
            suite_opt.output = bench_out;
            if (bench_runs > 0)
                suite_opt.runs = bench_runs;
            if (bench_iters > 0)
                suite_opt.iterations = bench_iters;
            const auto configs = suite_configs(suite, suite_opt);
            for (const auto& c : configs) {
                err << "running " << to_string(c.algorithm.id) << " on " << problem_label(c.problem) << '\n';
                run_experiment(c);
            }
            const auto root = std::filesystem::path(bench_out) / suite;
            const auto table = format_report(collect_report({root}));
            write_text_file(root / "report.txt", table);
            out << table;
            return kExitOk;
        }
        if (*report) {
            std::vector<std::filesystem::path> roots(dirs.begin(), dirs.end());
            const auto entries = collect_report(roots);
            const auto table = format_report(entries);
            if (!report_csv_path.empty())
                write_text_file(report_csv_path, report_csv(entries));
            if (report_out.empty())
                out << table;
            else
                write_text_file(report_out, table);
            return kExitOk;
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}

} // namespace ompcdpso::harness
