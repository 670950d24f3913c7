#pragma once

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../algorithms/ba.hpp"
#include "../algorithms/dpso.hpp"
#include "../algorithms/ga.hpp"
#include "../algorithms/ompcdpso.hpp"
#include "../metrics.hpp"
#include "../problems/factory.hpp"
#include "config.hpp"

namespace ompcdpso::harness {

namespace fs = std::filesystem;

inline constexpr const char* kTraceHeader = "generation,best_of_generation,best_so_far,population_mean,elapsed_s";

inline std::string problem_label(const ProblemConfig& p)
{
    if (p.kind == "benchmark") {
        std::string label = p.function;
        if (p.dimension != 0)
            label += "-" + std::to_string(p.dimension) + "d";
        return label;
    }
    if (!p.instance.empty())
        return fs::path(p.instance).stem().string();
    return "alloc-" + std::to_string(p.rows) + "x" + std::to_string(p.cols);
}

inline ProblemInstance build_problem(const ProblemConfig& p)
{
    try {
        if (p.kind == "allocation") {
            if (!p.instance.empty())
                return make_allocation_problem(load_instance(p.instance), problem_label(p));
            if (!p.quadrant_centers)
                throw ConfigError("field 'problem.quadrant_centers': grid allocation needs quadrant centers "
                                  "(use 'instance' for custom centers)");
            return make_allocation_problem(generate_grid_instance(p.rows, p.cols, p.spacing), problem_label(p));
        }
        if (p.kind == "benchmark")
            return make_benchmark_problem(parse_benchmark_id(p.function), p.bits_per_dim, p.dimension);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("section [problem]: ") + e.what());
    }
    throw ConfigError("field 'problem.kind': unknown problem kind '" + p.kind + "'");
}

inline OmpcdpsoParams ompcdpso_params(const AlgorithmConfig& a, std::size_t iterations)
{
    OmpcdpsoParams p;
    p.population = a.pop;
    p.iterations = iterations;
    p.w_max = a.Wmax;
    p.w_min = a.Wmin;
    p.c1 = a.C1;
    p.c2 = a.C2;
    p.g_best_count = a.Gbest;
    p.onlookers_per_gbest = a.Onl;
    p.n_mpc = a.NMPC;
    p.neighborhood_max = a.Nbhd;
    return p;
}

inline DpsoParams dpso_params(const AlgorithmConfig& a, std::size_t iterations)
{
    return static_cast<DpsoParams>(ompcdpso_params(a, iterations));
}

inline GaParams ga_params(const AlgorithmConfig& a, std::size_t iterations)
{
    return {a.pop, iterations, a.Pc, a.Pm, a.Elit};
}

inline BaParams ba_params(const AlgorithmConfig& a, std::size_t iterations)
{
    return {a.pop, iterations, a.Emp, a.Onl, a.Sco, a.Nbhd};
}

inline void validate_params(const AlgorithmConfig& a, std::size_t iterations)
{
    try {
        switch (a.id) {
        case AlgorithmId::GA: ga_params(a, iterations).validate(); break;
        case AlgorithmId::BA: ba_params(a, iterations).validate(); break;
        case AlgorithmId::DPSO: dpso_params(a, iterations).validate(); break;
        case AlgorithmId::OMPCDPSO: ompcdpso_params(a, iterations).validate(); break;
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("section [algorithm]: ") + e.what());
    }
}

template <DiscreteProblem P>
RunResult run_algorithm(const P& problem, const AlgorithmConfig& a, std::size_t iterations, std::uint64_t seed)
{
    switch (a.id) {
    case AlgorithmId::GA: return run_ga(problem, ga_params(a, iterations), seed);
    case AlgorithmId::BA: return run_ba(problem, ba_params(a, iterations), seed);
    case AlgorithmId::DPSO: return run_dpso(problem, dpso_params(a, iterations), seed);
    case AlgorithmId::OMPCDPSO: return run_ompcdpso(problem, ompcdpso_params(a, iterations), seed);
    }
    throw ConfigError("unknown algorithm");
}

inline std::string trace_csv(const RunResult& run)
{
    std::string out = std::string(kTraceHeader) + '\n';
    for (const auto& r : run.records) {
        out += std::to_string(r.generation) + ',' + format_real(r.best_of_generation) + ',' +
               format_real(r.best_so_far) + ',' + format_real(r.population_mean) + ',' +
               format_real(r.elapsed_s, 6) + '\n';
    }
    return out;
}

// Mean best-so-far and best-of-generation across runs, per generation.
inline std::string curves_csv(std::span<const RunResult> runs)
{
    std::string out = "generation,mean_best_so_far,mean_best_of_generation\n";
    const std::size_t g = runs.front().records.size();
    const double q = static_cast<double>(runs.size());
    for (std::size_t k = 0; k < g; ++k) {
        double so_far = 0.0, bog = 0.0;
        for (const auto& r : runs) {
            so_far += r.records[k].best_so_far;
            bog += r.records[k].best_of_generation;
        }
        out += std::to_string(k + 1) + ',' + format_real(so_far / q) + ',' + format_real(bog / q) + '\n';
    }
    return out;
}

inline constexpr const char* kSummaryContextHeader = "algorithm,problem,checkpoint";

struct CheckpointSummary {
    std::size_t checkpoint = 0;
    SummaryTable table;
};

struct ExperimentResult {
    std::string problem;
    std::vector<RunResult> runs;
    std::vector<CheckpointSummary> summaries;
    std::vector<fs::path> files;
};

// Runs q = 0..Q-1 with seed base_seed + q. Each run owns its stream, so the
// results do not depend on how many worker threads execute them.
template <DiscreteProblem P>
std::vector<RunResult> execute_runs(const P& problem, const ExperimentConfig& c)
{
    std::vector<RunResult> runs(c.runs);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t q = next.fetch_add(1);
            if (q >= c.runs)
                return;
            try {
                runs[q] = run_algorithm(problem, c.algorithm, c.iterations, c.base_seed + q);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const std::size_t n_threads = std::min(c.threads, c.runs);
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return runs;
}

inline std::string trace_file_name(std::size_t q)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "trace_run_%03zu.csv", q);
    return buf;
}

inline void write_text_file(const fs::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    out << content;
    if (!out)
        throw std::runtime_error("failed writing '" + path.string() + "'");
}

// Validates everything, runs the campaign in memory, then writes:
//   trace_run_NNN.csv per run, summary_<checkpoint>.{csv,txt} per checkpoint,
//   curves.csv, and best.txt (final best genome per run).
inline ExperimentResult run_experiment(const ExperimentConfig& c)
{
    validate(c);
    validate_params(c.algorithm, c.iterations);
    const ProblemInstance problem = build_problem(c.problem);
    if (c.algorithm.id == AlgorithmId::OMPCDPSO && problem.dimension() < c.algorithm.Gbest)
        throw ConfigError("field 'algorithm.Gbest': exceeds the genome length " + std::to_string(problem.dimension()));

    ExperimentResult result;
    result.problem = problem_label(c.problem);
    result.runs = execute_runs(problem, c);
    for (auto cp : c.effective_checkpoints())
        result.summaries.push_back({cp, summarize(std::span<const RunResult>(result.runs), problem, cp)});

    const fs::path dir(c.output);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw std::runtime_error("cannot create output directory '" + dir.string() + "'");

    for (std::size_t q = 0; q < result.runs.size(); ++q) {
        result.files.push_back(dir / trace_file_name(q));
        write_text_file(result.files.back(), trace_csv(result.runs[q]));
    }
    const std::string alg = to_string(c.algorithm.id);
    for (const auto& s : result.summaries) {
        const std::string stem = "summary_" + std::to_string(s.checkpoint);
        result.files.push_back(dir / (stem + ".csv"));
        write_text_file(result.files.back(), std::string(kSummaryContextHeader) + ',' + summary_csv_header() + '\n' +
                                                 alg + ',' + result.problem + ',' + std::to_string(s.checkpoint) +
                                                 ',' + summary_csv_row(s.table) + '\n');
        result.files.push_back(dir / (stem + ".txt"));
        write_text_file(result.files.back(), "Algorithm " + alg + "\nProblem   " + result.problem +
                                                 "\nIteration " + std::to_string(s.checkpoint) + "\n" +
                                                 summary_text(s.table));
    }
    result.files.push_back(dir / "curves.csv");
    write_text_file(result.files.back(), curves_csv(result.runs));

    std::string best = "# run seed best_fitness genome\n";
    for (std::size_t q = 0; q < result.runs.size(); ++q)
        best += std::to_string(q) + ' ' + std::to_string(c.base_seed + q) + ' ' +
                format_real(result.runs[q].best_fitness) + ' ' +
                serialize_genome(result.runs[q].best_genome, problem.arity()) + '\n';
    result.files.push_back(dir / "best.txt");
    write_text_file(result.files.back(), best);
    return result;
}

} // namespace ompcdpso::harness
