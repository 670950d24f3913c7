#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"

namespace ompcdpso {

struct SummaryTable {
    double best = 0.0;
    double avg_best = 0.0;
    double std_dev = 0.0;
    double avg_bog = 0.0;
    std::optional<double> best_acc;
    std::optional<double> avg_acc;
    double avg_area = 0.0;
    std::optional<std::size_t> itr_best;
    std::optional<double> t_best;
    std::optional<double> avg_t_best;
    double avg_t_run = 0.0;
    std::size_t q_runs = 0;
    std::size_t g_generations = 0;
};

// Mean best-of-generation over Q runs of G generations each.
inline double avg_bog(std::span<const std::vector<double>> runs)
{
    if (runs.empty() || runs.front().empty())
        throw std::invalid_argument("avg_bog: need at least one run of at least one generation");
    const std::size_t g = runs.front().size();
    double total = 0.0;
    for (const auto& run : runs) {
        if (run.size() != g)
            throw std::invalid_argument("avg_bog: runs have different generation counts");
        for (double v : run)
            total += v;
    }
    return total / (static_cast<double>(runs.size()) * static_cast<double>(g));
}

// 1 at min_t, 0 at max_t; f is clamped into the band first.
inline double accuracy(double f, double min_t, double max_t)
{
    if (!(min_t < max_t))
        throw std::invalid_argument("accuracy: requires min_t < max_t");
    const double c = std::clamp(f, min_t, max_t);
    return (max_t - c) / (max_t - min_t);
}

// Literal relative-error orientation: 0 at min_t, 1 at max_t.
inline double relative_error(double f, double min_t, double max_t)
{
    return 1.0 - accuracy(f, min_t, max_t);
}

enum class AreaMode { raw, normalized };

// Discrete area under the BOG curve; normalized divides by G.
inline double area(std::span<const double> bog, AreaMode mode = AreaMode::raw)
{
    if (bog.empty())
        throw std::invalid_argument("area: empty curve");
    double total = 0.0;
    for (double v : bog)
        total += v;
    return mode == AreaMode::raw ? total : total / static_cast<double>(bog.size());
}

inline double avg_area(std::span<const std::vector<double>> runs, AreaMode mode = AreaMode::raw)
{
    if (runs.empty())
        throw std::invalid_argument("avg_area: no runs");
    double total = 0.0;
    for (const auto& run : runs)
        total += area(run, mode);
    return total / static_cast<double>(runs.size());
}

// Aggregates Q runs, optionally truncated to their first `upto` generations
// (checkpoint summaries reuse the same runs).
inline SummaryTable summarize(std::span<const RunResult> runs, std::optional<double> known_best,
                              std::optional<FitnessBounds> bounds, std::optional<std::size_t> upto = std::nullopt)
{
    if (runs.empty())
        throw std::invalid_argument("summarize: no runs");
    const std::size_t full = runs.front().records.size();
    for (const auto& r : runs)
        if (r.records.size() != full)
            throw std::invalid_argument("summarize: runs have different generation counts");
    const std::size_t g = upto ? *upto : full;
    if (g == 0 || g > full)
        throw std::invalid_argument("summarize: checkpoint outside the recorded generations");

    SummaryTable t;
    t.q_runs = runs.size();
    t.g_generations = g;
    const double q = static_cast<double>(runs.size());

    std::vector<double> bests;
    std::vector<std::vector<double>> bogs;
    for (const auto& r : runs) {
        bests.push_back(r.records[g - 1].best_so_far);
        std::vector<double> curve;
        curve.reserve(g);
        for (std::size_t k = 0; k < g; ++k)
            curve.push_back(r.records[k].best_of_generation);
        bogs.push_back(std::move(curve));
    }

    t.best = *std::min_element(bests.begin(), bests.end());
    double sum = 0.0;
    for (double b : bests)
        sum += b;
    t.avg_best = sum / q;
    double var = 0.0;
    for (double b : bests)
        var += (b - t.avg_best) * (b - t.avg_best);
    t.std_dev = std::sqrt(var / q);
    t.avg_bog = avg_bog(bogs);
    t.avg_area = avg_area(bogs);

    if (bounds) {
        t.best_acc = accuracy(t.best, bounds->min_t, bounds->max_t);
        double acc = 0.0;
        for (double b : bests)
            acc += accuracy(b, bounds->min_t, bounds->max_t);
        t.avg_acc = acc / q;
    }

    double run_time = 0.0;
    for (const auto& r : runs)
        run_time += g == full ? r.total_time : r.records[g - 1].elapsed_s;
    t.avg_t_run = run_time / q;

    if (known_best) {
        std::optional<std::size_t> best_run;
        double t_best_sum = 0.0;
        std::size_t attained = 0;
        std::vector<std::optional<std::size_t>> hit(runs.size());
        for (std::size_t i = 0; i < runs.size(); ++i) {
            for (std::size_t k = 0; k < g; ++k) {
                if (attains(runs[i].records[k].best_so_far, *known_best)) {
                    hit[i] = k;
                    break;
                }
            }
            if (!hit[i])
                continue;
            ++attained;
            t_best_sum += runs[i].records[*hit[i]].elapsed_s;
            // Best run: lowest best, then earliest attainment, then lowest index.
            if (!best_run || bests[i] < bests[*best_run] ||
                (bests[i] == bests[*best_run] && *hit[i] < *hit[*best_run]))
                best_run = i;
        }
        if (best_run) {
            t.itr_best = runs[*best_run].records[*hit[*best_run]].generation;
            t.t_best = runs[*best_run].records[*hit[*best_run]].elapsed_s;
            t.avg_t_best = t_best_sum / static_cast<double>(attained);
        }
    }
    return t;
}

template <typename Problem>
    requires requires(const Problem& p) {
        p.known_best();
        p.bounds();
    }
SummaryTable summarize(std::span<const RunResult> runs, const Problem& problem,
                       std::optional<std::size_t> upto = std::nullopt)
{
    return summarize(runs, problem.known_best(), problem.bounds(), upto);
}

// --- serialization --------------------------------------------------------

inline constexpr const char* kSummaryLabels[] = {"Best",   "AvgBest", "StdDev", "AvgBOG",
                                                 "BestAcc", "AvgAcc", "AvgArea", "ItrBest",
                                                 "TBest",  "AvgTBest", "AvgTRun"};

inline std::string format_real(double v, int precision = 17)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

namespace detail {

inline std::vector<std::string> summary_cells(const SummaryTable& t, int precision)
{
    const auto real = [precision](double v) { return format_real(v, precision); };
    const auto opt = [&](const std::optional<double>& v) { return v ? real(*v) : std::string("-"); };
    return {real(t.best),
            real(t.avg_best),
            real(t.std_dev),
            real(t.avg_bog),
            opt(t.best_acc),
            opt(t.avg_acc),
            real(t.avg_area),
            t.itr_best ? std::to_string(*t.itr_best) : std::string("-"),
            opt(t.t_best),
            opt(t.avg_t_best),
            real(t.avg_t_run)};
}

} // namespace detail

// Header line matching summary_csv_row(), without the leading context columns.
inline std::string summary_csv_header()
{
    std::string h;
    for (const char* label : kSummaryLabels) {
        if (!h.empty())
            h += ',';
        h += label;
    }
    return h + ",Runs,Generations";
}

inline std::string summary_csv_row(const SummaryTable& t)
{
    std::string row;
    for (const auto& cell : detail::summary_cells(t, 17)) {
        if (!row.empty())
            row += ',';
        row += cell;
    }
    return row + ',' + std::to_string(t.q_runs) + ',' + std::to_string(t.g_generations);
}

inline std::string summary_text(const SummaryTable& t)
{
    std::ostringstream os;
    const auto cells = detail::summary_cells(t, 8);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        char line[128];
        std::snprintf(line, sizeof line, "%-9s %s\n", kSummaryLabels[i], cells[i].c_str());
        os << line;
    }
    return os.str();
}

} // namespace ompcdpso
