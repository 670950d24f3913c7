#include <gtest/gtest.h>

#include <cmath>

#include "ompcdpso/metrics.hpp"

using namespace ompcdpso;

namespace {

// A synthetic run whose best-so-far is the running minimum of `bog`, with
// elapsed time equal to the generation index.
RunResult synthetic_run(const std::vector<double>& bog, double total_time = -1)
{
    RunResult r;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < bog.size(); ++k) {
        best = std::min(best, bog[k]);
        r.records.push_back({k + 1, bog[k], best, bog[k] + 1, static_cast<double>(k + 1)});
    }
    r.best_fitness = best;
    r.total_time = total_time < 0 ? static_cast<double>(bog.size()) + 0.5 : total_time;
    return r;
}

} // namespace

TEST(AvgBog, Examples)
{
    const std::vector<std::vector<double>> one{{7}};
    EXPECT_EQ(avg_bog(one), 7.0);
    const std::vector<std::vector<double>> two{{3, 1}, {5, 3}};
    EXPECT_EQ(avg_bog(two), 3.0);
    const std::vector<std::vector<double>> flat(4, std::vector<double>(9, 2.5));
    EXPECT_EQ(avg_bog(flat), 2.5);
    const std::vector<std::vector<double>> ragged{{1, 2}, {3}};
    EXPECT_THROW(avg_bog(ragged), std::invalid_argument);
    EXPECT_THROW(avg_bog(std::span<const std::vector<double>>{}), std::invalid_argument);
}

TEST(AvgBog, MatchesDirectSummation)
{
    RngStream rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t q = 1 + rng.below(10), g = 1 + rng.below(200);
        std::vector<std::vector<double>> runs(q, std::vector<double>(g));
        long double total = 0;
        for (auto& run : runs)
            for (auto& v : run) {
                v = rng.uniform() * 1e4 - 5e3;
                total += v;
            }
        const double expect = static_cast<double>(total / (q * g));
        ASSERT_NEAR(avg_bog(runs), expect, 1e-12 * std::max(1.0, std::abs(expect)) * 10);
    }
}

TEST(Accuracy, Endpoints)
{
    EXPECT_EQ(accuracy(1524.7, 1524.7, 5772.6), 1.0);
    EXPECT_EQ(accuracy(5772.6, 1524.7, 5772.6), 0.0);
    EXPECT_EQ(accuracy(3.0, 2.0, 4.0), 0.5);
    EXPECT_EQ(accuracy(-1.0, 2.0, 4.0), 1.0);
    EXPECT_EQ(accuracy(9.0, 2.0, 4.0), 0.0);
    EXPECT_EQ(relative_error(2.0, 2.0, 4.0), 0.0);
    EXPECT_THROW(accuracy(1.0, 2.0, 2.0), std::invalid_argument);
}

TEST(Accuracy, MonotoneAndBounded)
{
    double prev = 2.0;
    for (int k = -10; k <= 110; ++k) {
        const double a = accuracy(k, 0.0, 100.0);
        ASSERT_GE(a, 0.0);
        ASSERT_LE(a, 1.0);
        ASSERT_LE(a, prev);
        prev = a;
    }
}

TEST(Area, Examples)
{
    const std::vector<double> c(5, 2.0);
    EXPECT_EQ(area(c), 10.0);
    EXPECT_EQ(area(c, AreaMode::normalized), 2.0);
    const std::vector<double> one{4.25};
    EXPECT_EQ(area(one), 4.25);
    EXPECT_EQ(area(one, AreaMode::normalized), 4.25);
    EXPECT_THROW(area(std::vector<double>{}), std::invalid_argument);
}

TEST(Area, NonIncreasingCurveBound)
{
    RngStream rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> curve(1 + rng.below(50));
        double v = 100;
        for (auto& x : curve) {
            v -= rng.below(3) == 0 ? rng.uniform() : 0.0;
            x = v;
        }
        const double lower = static_cast<double>(curve.size()) * curve.back();
        ASSERT_GE(area(curve), lower - 1e-9);
        const bool constant = curve.front() == curve.back();
        ASSERT_EQ(std::abs(area(curve) - lower) < 1e-12, constant);
    }
}

TEST(Summary, TwoRuns)
{
    const std::vector<RunResult> runs{synthetic_run({6, 3}), synthetic_run({7, 5})};
    const auto t = summarize(runs, std::nullopt, std::nullopt);
    EXPECT_EQ(t.best, 3.0);
    EXPECT_EQ(t.avg_best, 4.0);
    EXPECT_EQ(t.std_dev, 1.0);
    EXPECT_EQ(t.avg_bog, 21.0 / 4);
    EXPECT_EQ(t.avg_area, 10.5);
    EXPECT_FALSE(t.best_acc);
    EXPECT_FALSE(t.itr_best);
    EXPECT_EQ(t.q_runs, 2u);
    EXPECT_EQ(t.g_generations, 2u);
    EXPECT_EQ(t.avg_t_run, 2.5);
}

TEST(Summary, SingletonRoundTripsRunFields)
{
    const std::vector<RunResult> runs{synthetic_run({9, 4, 4, 2}, 7.0)};
    const auto t = summarize(runs, 2.0, FitnessBounds{2.0, 10.0});
    EXPECT_EQ(t.best, runs[0].best_fitness);
    EXPECT_EQ(t.avg_best, t.best);
    EXPECT_EQ(t.std_dev, 0.0);
    EXPECT_EQ(t.best_acc, 1.0);
    EXPECT_EQ(t.avg_acc, 1.0);
    EXPECT_EQ(t.itr_best, 4u);
    EXPECT_EQ(t.t_best, 4.0);
    EXPECT_EQ(t.avg_t_best, 4.0);
    EXPECT_EQ(t.avg_t_run, 7.0);
    EXPECT_EQ(t.avg_area, 19.0);
}

TEST(Summary, UnattainedHasNoHitFields)
{
    const std::vector<RunResult> runs{synthetic_run({9, 5}), synthetic_run({8, 6})};
    const auto t = summarize(runs, 1.0, FitnessBounds{1.0, 9.0});
    EXPECT_FALSE(t.itr_best);
    EXPECT_FALSE(t.t_best);
    EXPECT_FALSE(t.avg_t_best);
    EXPECT_EQ(t.best_acc, 0.5);
    EXPECT_EQ(t.avg_acc, (0.5 + 3.0 / 8) / 2);
}

TEST(Summary, BestRunPrefersEarliestHit)
{
    const std::vector<RunResult> runs{synthetic_run({5, 4, 1}), synthetic_run({1, 1, 1}), synthetic_run({3, 3, 3})};
    const auto t = summarize(runs, 1.0, std::nullopt);
    EXPECT_EQ(t.itr_best, 1u);
    EXPECT_EQ(t.t_best, 1.0);
    EXPECT_EQ(t.avg_t_best, 2.0);
}

TEST(Summary, CheckpointTruncation)
{
    const std::vector<RunResult> runs{synthetic_run({9, 6, 1, 1}, 10.0), synthetic_run({8, 7, 7, 2}, 12.0)};
    const auto t = summarize(runs, 1.0, std::nullopt, 2);
    EXPECT_EQ(t.g_generations, 2u);
    EXPECT_EQ(t.best, 6.0);
    EXPECT_EQ(t.avg_best, 6.5);
    EXPECT_EQ(t.avg_bog, 7.5);
    EXPECT_FALSE(t.itr_best);
    EXPECT_EQ(t.avg_t_run, 2.0);
    const auto full = summarize(runs, 1.0, std::nullopt);
    EXPECT_EQ(full.avg_t_run, 11.0);
    EXPECT_EQ(full.itr_best, 3u);
    EXPECT_THROW(summarize(runs, 1.0, std::nullopt, 5), std::invalid_argument);
    EXPECT_THROW(summarize(runs, 1.0, std::nullopt, 0), std::invalid_argument);
}

TEST(Summary, Errors)
{
    EXPECT_THROW(summarize(std::span<const RunResult>{}, std::nullopt, std::nullopt), std::invalid_argument);
    const std::vector<RunResult> ragged{synthetic_run({1, 2}), synthetic_run({1})};
    EXPECT_THROW(summarize(ragged, std::nullopt, std::nullopt), std::invalid_argument);
}

TEST(Summary, Invariants)
{
    RngStream rng(4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<RunResult> runs;
        const std::size_t g = 1 + rng.below(30);
        for (std::size_t q = 0; q < 1 + rng.below(6); ++q) {
            std::vector<double> bog(g);
            for (auto& v : bog)
                v = 10 + rng.uniform() * 90;
            runs.push_back(synthetic_run(bog));
        }
        const auto t = summarize(runs, 10.0, FitnessBounds{10.0, 100.0});
        ASSERT_LE(t.best, t.avg_best + 1e-12);
        ASSERT_GE(t.std_dev, 0.0);
        ASSERT_GE(*t.best_acc, 0.0);
        ASSERT_LE(*t.avg_acc, 1.0);
    }
}

TEST(Serialization, TextBlockLabelsAndDashes)
{
    const std::vector<RunResult> runs{synthetic_run({6, 3})};
    const auto text = summary_text(summarize(runs, std::nullopt, std::nullopt));
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> labels;
    while (std::getline(in, line))
        labels.push_back(line.substr(0, line.find(' ')));
    EXPECT_EQ(labels, (std::vector<std::string>{"Best", "AvgBest", "StdDev", "AvgBOG", "BestAcc", "AvgAcc", "AvgArea",
                                                "ItrBest", "TBest", "AvgTBest", "AvgTRun"}));
    EXPECT_NE(text.find("BestAcc   -"), std::string::npos);
    EXPECT_NE(text.find("ItrBest   -"), std::string::npos);
}

TEST(Serialization, CsvRowMatchesHeader)
{
    const std::vector<RunResult> runs{synthetic_run({6, 3}), synthetic_run({5, 1})};
    const auto t = summarize(runs, 1.0, FitnessBounds{1.0, 7.0});
    const auto header = summary_csv_header(), row = summary_csv_row(t);
    EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(row.begin(), row.end(), ','));
    EXPECT_EQ(header.rfind("Best,AvgBest,", 0), 0u);
    EXPECT_EQ(row.rfind("1,2,1,", 0), 0u);
    EXPECT_EQ(format_real(0.1), "0.10000000000000001");
    EXPECT_EQ(std::stod(format_real(1.0 / 3)), 1.0 / 3);
}
