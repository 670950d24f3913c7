#pragma once

#include <algorithm>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "../problems/benchmarks.hpp"
#include "config.hpp"
#include "experiment.hpp"
#include "report.hpp"

namespace ompcdpso::harness {

struct SuiteOptions {
    std::filesystem::path output = "results";
    std::optional<std::size_t> runs;
    std::optional<std::size_t> iterations;
    std::uint64_t base_seed = 0;
    std::size_t threads = 1;
};

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"alloc-small", "alloc-large", "funcs-2d", "funcs-30d"};
    return names;
}

// Campaign configs of a named suite: every problem of the suite crossed with
// all four algorithms under the default parameters. Desk-scale overrides of
// runs/iterations drop checkpoints beyond the new horizon.
inline std::vector<ExperimentConfig> suite_configs(const std::string& suite, const SuiteOptions& opt)
{
    std::vector<ProblemConfig> problems;
    std::size_t runs = 0, iterations = 0;
    std::vector<std::size_t> checkpoints;
    if (suite == "alloc-small") {
        problems.push_back({"allocation", 20, 20, 1.0, true, {}, {}, 20, 0});
        runs = 20;
        iterations = 400;
        checkpoints = {100, 200, 300, 400};
    } else if (suite == "alloc-large") {
        problems.push_back({"allocation", 60, 60, 10.0, true, {}, {}, 20, 0});
        runs = 20;
        iterations = 3000;
        checkpoints = {500, 1000, 2000, 3000};
    } else if (suite == "funcs-2d" || suite == "funcs-30d") {
        const auto ids = suite == "funcs-2d" ? benchmarks_2d() : benchmarks_scalable();
        for (auto id : ids)
            problems.push_back({"benchmark", 20, 20, 1.0, true, {}, std::string(benchmark_name(id)), 20, 0});
        runs = 30;
        iterations = 500;
    } else {
        throw ConfigError("unknown suite '" + suite + "' (expected alloc-small, alloc-large, funcs-2d or funcs-30d)");
    }
    if (opt.runs)
        runs = *opt.runs;
    if (opt.iterations) {
        iterations = *opt.iterations;
        std::erase_if(checkpoints, [&](std::size_t cp) { return cp >= iterations; });
        if (!checkpoints.empty())
            checkpoints.push_back(iterations);
    }

    std::vector<ExperimentConfig> configs;
    for (const auto& p : problems)
        for (auto alg : kAllAlgorithms) {
            ExperimentConfig c;
            c.problem = p;
            c.algorithm.id = alg;
            c.runs = runs;
            c.iterations = iterations;
            c.base_seed = opt.base_seed;
            c.checkpoints = checkpoints;
            c.threads = opt.threads;
            c.output = (opt.output / suite / problem_label(p) / to_string(alg)).string();
            configs.push_back(std::move(c));
        }
    return configs;
}

} // namespace ompcdpso::harness
