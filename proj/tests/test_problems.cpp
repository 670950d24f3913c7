#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "ompcdpso/problems/allocation.hpp"
#include "ompcdpso/problems/benchmarks.hpp"
#include "ompcdpso/problems/binary_codec.hpp"
#include "ompcdpso/problems/factory.hpp"

using namespace ompcdpso;

namespace {

AllocationInstance line_instance()
{
    return AllocationInstance({{0, 0}, {10, 0}}, {{1, 0}, {9, 0}, {0, 1}});
}

// Every genome of N^M, visited in lexicographic order.
void for_each_assignment(std::size_t m, std::size_t n, const std::function<void(const Genome&)>& visit)
{
    Genome g(m, 0);
    for (;;) {
        visit(g);
        std::size_t i = 0;
        while (i < m && ++g[i] == n)
            g[i++] = 0;
        if (i == m)
            return;
    }
}

AllocationInstance random_instance(RngStream& rng, std::size_t m, std::size_t n)
{
    auto pt = [&] { return Point{rng.uniform() * 20 - 10, rng.uniform() * 20 - 10}; };
    std::vector<Point> centers(n), demands(m);
    for (auto& c : centers)
        c = pt();
    for (auto& d : demands)
        d = pt();
    return AllocationInstance(centers, demands);
}

double eval_at(BenchmarkId id, std::vector<double> x)
{
    const auto spec = benchmark_spec(id, id == BenchmarkId::ROSENBROCK || is_scalable(id) ? x.size() : 0);
    return eval_benchmark(spec, x);
}

} // namespace

TEST(Grid, TwoByTwoWithCentroid)
{
    const auto inst = generate_grid_instance(2, 2, 1.0, {{0.5, 0.5}});
    EXPECT_EQ(inst.demands(), (std::vector<Point>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
    EXPECT_EQ(inst.centers(), (std::vector<Point>{{0.5, 0.5}}));
}

TEST(Grid, PaperSizes)
{
    const auto small = generate_grid_instance(20, 20, 1.0);
    EXPECT_EQ(small.num_demands(), 400u);
    EXPECT_EQ(small.num_centers(), 4u);
    const auto large = generate_grid_instance(60, 60, 1.0);
    EXPECT_EQ(large.num_demands(), 3600u);
    EXPECT_EQ(large.num_centers(), 4u);
}

TEST(Grid, QuadrantCentroids)
{
    EXPECT_EQ(quadrant_centroids(20, 20, 1.0), (std::vector<Point>{{4.5, 4.5}, {4.5, 14.5}, {14.5, 4.5}, {14.5, 14.5}}));
    EXPECT_EQ(quadrant_centroids(4, 6, 2.0), (std::vector<Point>{{1, 2}, {1, 8}, {5, 2}, {5, 8}}));
}

TEST(Grid, Errors)
{
    EXPECT_THROW(generate_grid_instance(3, 4), std::invalid_argument);
    EXPECT_THROW(generate_grid_instance(4, 5), std::invalid_argument);
    EXPECT_THROW(generate_grid_instance(1, 4, 1.0, {{0, 0}}), std::invalid_argument);
    EXPECT_THROW(generate_grid_instance(4, 4, 0.0), std::invalid_argument);
    EXPECT_THROW(AllocationInstance({}, {{0, 0}}), std::invalid_argument);
}

// Reference optima from an independent Python evaluation of the same geometry.
TEST(Grid, OracleValuesOfGeneratedInstances)
{
    const auto small = generate_grid_instance(20, 20, 1.0);
    EXPECT_NEAR(allocation_oracle(small).fitness, 1524.7789966986072, 1e-9);
    EXPECT_NEAR(allocation_worst(small), 5772.6548285120625, 1e-9);
    const auto large = generate_grid_instance(60, 60, 10.0);
    EXPECT_NEAR(allocation_oracle(large).fitness, 413032.07730984717, 1e-6);
    EXPECT_NEAR(allocation_worst(large), 1558906.583156643, 1e-6);
}

TEST(Grid, OracleAssignsEachQuadrantToItsCentroid)
{
    const auto inst = generate_grid_instance(20, 20, 1.0);
    const auto best = allocation_oracle(inst);
    for (int r = 0; r < 20; ++r)
        for (int c = 0; c < 20; ++c)
            ASSERT_EQ(best.genome[static_cast<std::size_t>(r * 20 + c)], static_cast<Gene>((r >= 10) * 2 + (c >= 10)));
}

TEST(Allocation, DistanceMatrix)
{
    RngStream rng(3);
    const auto inst = random_instance(rng, 7, 3);
    for (std::size_t j = 0; j < 7; ++j)
        for (std::size_t i = 0; i < 3; ++i) {
            const double dx = inst.demands()[j].x - inst.centers()[i].x;
            const double dy = inst.demands()[j].y - inst.centers()[i].y;
            const double d = std::sqrt(dx * dx + dy * dy);
            ASSERT_NEAR(inst.dist(j, i), d, 1e-12 * std::max(1.0, d));
        }
}

TEST(Allocation, FitnessExamples)
{
    const auto inst = line_instance();
    EXPECT_DOUBLE_EQ(allocation_fitness(inst, from_labels("1,2,1")), 3.0);
    EXPECT_NEAR(allocation_fitness(inst, from_labels("2,2,2")), 9 + 1 + std::sqrt(101.0), 1e-12);
    EXPECT_NEAR(allocation_fitness(inst, from_labels("2,2,2")), 20.0499, 1e-4);
    const AllocationInstance single({{0, 0}, {3, 4}}, {{0, 0}});
    EXPECT_DOUBLE_EQ(allocation_fitness(single, {1}), single.dist(0, 1));
    EXPECT_THROW(allocation_fitness(inst, {0, 0}), std::invalid_argument);
    EXPECT_THROW(allocation_fitness(inst, {0, 0, 2}), std::invalid_argument);
}

TEST(Allocation, OracleExamples)
{
    const auto best = allocation_oracle(line_instance());
    EXPECT_EQ(to_labels(best.genome), "1,2,1");
    EXPECT_DOUBLE_EQ(best.fitness, 3.0);

    const AllocationInstance one({{1, 1}}, {{0, 0}, {4, 5}, {1, 1}});
    const auto b1 = allocation_oracle(one);
    EXPECT_EQ(b1.genome, (Genome{0, 0, 0}));
    EXPECT_DOUBLE_EQ(b1.fitness, std::sqrt(2.0) + 5.0);
    EXPECT_DOUBLE_EQ(allocation_worst(one), b1.fitness);

    const AllocationInstance coincident({{2, 2}, {7, 7}}, {{2, 2}});
    EXPECT_EQ(allocation_oracle(coincident).fitness, 0.0);

    const AllocationInstance tie({{-1, 0}, {1, 0}}, {{0, 0}});
    EXPECT_EQ(allocation_oracle(tie).genome, (Genome{0}));
}

TEST(Allocation, WorstExamples)
{
    const AllocationInstance inst({{0, 0}, {10, 0}}, {{1, 0}, {9, 0}});
    EXPECT_DOUBLE_EQ(allocation_worst(inst), 18.0);
    RngStream rng(8);
    const auto r = random_instance(rng, 5, 2);
    double brute = -1;
    for_each_assignment(5, 2, [&](const Genome& g) { brute = std::max(brute, allocation_fitness(r, g)); });
    EXPECT_NEAR(allocation_worst(r), brute, 1e-12 * brute);
}

TEST(Allocation, OracleMatchesExhaustiveEnumeration)
{
    RngStream rng(2718);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng.below(6), n = 1 + rng.below(3);
        const auto inst = random_instance(rng, m, n);
        double brute = std::numeric_limits<double>::infinity();
        for_each_assignment(m, n, [&](const Genome& g) { brute = std::min(brute, allocation_fitness(inst, g)); });
        ASSERT_EQ(allocation_oracle(inst).fitness, brute) << "trial " << trial;
    }
}

TEST(Allocation, FitnessWithinSeparableBounds)
{
    RngStream rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 1 + rng.below(40), n = 1 + rng.below(6);
        const auto inst = random_instance(rng, m, n);
        const double lo = allocation_oracle(inst).fitness, hi = allocation_worst(inst);
        const std::vector<Gene> arity(m, static_cast<Gene>(n));
        for (int k = 0; k < 20; ++k) {
            const double f = allocation_fitness(inst, random_genome(arity, rng));
            ASSERT_GE(f, lo - 1e-9);
            ASSERT_LE(f, hi + 1e-9);
        }
    }
}

TEST(Allocation, InstanceFileRoundTrip)
{
    RngStream rng(12);
    const auto inst = random_instance(rng, 9, 3);
    std::stringstream ss;
    write_instance(ss, inst);
    const auto back = read_instance(ss);
    EXPECT_EQ(back.centers(), inst.centers());
    EXPECT_EQ(back.demands(), inst.demands());
}

TEST(Allocation, InstanceFileErrors)
{
    std::istringstream empty("");
    EXPECT_THROW(read_instance(empty), std::runtime_error);
    std::istringstream bad_header("x y\n");
    EXPECT_THROW(read_instance(bad_header), std::runtime_error);
    std::istringstream truncated("2 1\n0 0\n1 1\n");
    EXPECT_THROW(read_instance(truncated), std::runtime_error);
    std::istringstream bad_row("1 1\n0 0\n1 oops\n");
    EXPECT_THROW(read_instance(bad_row), std::runtime_error);
    EXPECT_THROW(load_instance("/nonexistent/instance.txt"), std::runtime_error);
}

TEST(Benchmarks, SpecExamples)
{
    EXPECT_NEAR(eval_at(BenchmarkId::GP, {0, -1}), 3.0, 1e-12);
    EXPECT_NEAR(eval_at(BenchmarkId::CM, {0, 0}), -0.2, 1e-15);
    EXPECT_NEAR(eval_at(BenchmarkId::BF1, {0, 0}), 0.0, 1e-15);
    EXPECT_EQ(eval_at(BenchmarkId::SPHERE, std::vector<double>(30, 0.0)), 0.0);
}

// The tabulated location (0, 15) is rounded; the listed minimum sits at
// x2 = +-14.9451... and (0, 15) itself evaluates to 225 - 225^2 + 1e-5 * 225^4.
TEST(Benchmarks, DekkersAarts)
{
    EXPECT_NEAR(eval_at(BenchmarkId::DA, {0, 15}), 225.0 - 50625.0 + 25628.90625, 1e-9);
    EXPECT_NEAR(eval_at(BenchmarkId::DA, {0, 14.945112201901676}), -24776.5183, 1e-3);
    EXPECT_NEAR(eval_at(BenchmarkId::DA, {0, -14.945112201901676}), -24776.5183, 1e-3);
}

TEST(Benchmarks, ListedOptima)
{
    for (auto id : benchmarks_2d()) {
        const auto spec = benchmark_spec(id);
        ASSERT_TRUE(spec.best_value.has_value()) << spec.name;
        ASSERT_FALSE(spec.best_points.empty()) << spec.name;
        for (const auto& p : spec.best_points) {
            EXPECT_TRUE(within_bounds(spec, p)) << spec.name;
            EXPECT_NEAR(eval_benchmark(spec, p), *spec.best_value, 1e-3) << spec.name;
        }
    }
    for (auto id : benchmarks_scalable()) {
        const auto spec = benchmark_spec(id);
        EXPECT_EQ(spec.dimension, 30u);
        if (!spec.best_value)
            continue;
        for (const auto& p : spec.best_points)
            EXPECT_NEAR(eval_benchmark(spec, p), *spec.best_value, 1e-9) << spec.name;
    }
}

TEST(Benchmarks, OriginValues)
{
    for (auto id : {BenchmarkId::SPHERE, BenchmarkId::RASTRIGIN, BenchmarkId::ACKLEY, BenchmarkId::GRIEWANK})
        EXPECT_NEAR(eval_at(id, std::vector<double>(30, 0.0)), 0.0, 1e-12) << benchmark_name(id);
}

TEST(Benchmarks, Symmetries)
{
    for (double a : {-5.0, 5.0})
        for (double b : {-5.0, 5.0})
            EXPECT_EQ(eval_at(BenchmarkId::BL, {a, b}), 0.0);
    const auto cb6 = benchmark_spec(BenchmarkId::CB6);
    EXPECT_EQ(eval_benchmark(cb6, cb6.best_points[0]), eval_benchmark(cb6, cb6.best_points[1]));
}

TEST(Benchmarks, HandComputedValues)
{
    using std::numbers::pi;
    // Sum of x_i^2 for x = (1, 2, 3).
    EXPECT_DOUBLE_EQ(eval_at(BenchmarkId::SPHERE, {1, 2, 3}), 14.0);
    // |x| sum plus product: 6 + 6.
    EXPECT_DOUBLE_EQ(eval_at(BenchmarkId::SCHWEFEL222, {1, -2, 3}), 12.0);
    // Prefix sums 1, 3, 6.
    EXPECT_DOUBLE_EQ(eval_at(BenchmarkId::SCHWEFEL12, {1, 2, 3}), 46.0);
    EXPECT_DOUBLE_EQ(eval_at(BenchmarkId::MAXABS, {1, -7, 3}), 7.0);
    EXPECT_DOUBLE_EQ(eval_at(BenchmarkId::ROSENBROCK, {0, 0}), 1.0);
    // floor(x + 0.5): 1, -2, 0.
    EXPECT_DOUBLE_EQ(eval_at(BenchmarkId::STEP, {0.6, -1.6, 0.4}), 5.0);
    EXPECT_DOUBLE_EQ(eval_at(BenchmarkId::QUARTICNOISE, {1, 1}), 3.0);
    EXPECT_NEAR(eval_at(BenchmarkId::RASTRIGIN, {1.0}), 1.0, 1e-12);
    EXPECT_NEAR(eval_at(BenchmarkId::SCHWEFEL, {pi * pi / 4}), -pi * pi / 4 * std::sin(pi / 2), 1e-12);
    EXPECT_NEAR(eval_at(BenchmarkId::EP, {pi, pi}), -1.0, 1e-15);
    EXPECT_NEAR(eval_at(BenchmarkId::SF1, {0, 0}), 0.0, 1e-15);
    EXPECT_NEAR(eval_at(BenchmarkId::SF2, {0, 0}), 0.0, 1e-15);
}

TEST(Benchmarks, QuarticNoiseDrawsFromStream)
{
    const auto spec = benchmark_spec(BenchmarkId::QUARTICNOISE, 2);
    const std::vector<double> x{1, 1};
    RngStream a(4), b(4), ref(4);
    const double fa = eval_benchmark(spec, x, &a);
    EXPECT_EQ(fa, eval_benchmark(spec, x, &b));
    EXPECT_EQ(fa, 3.0 + ref.uniform());
    EXPECT_NE(fa, eval_benchmark(spec, x, &a));
}

TEST(Benchmarks, NamesAndErrors)
{
    EXPECT_EQ(benchmarks_2d().size(), 14u);
    EXPECT_EQ(benchmarks_scalable().size(), 13u);
    for (auto id : benchmarks_2d())
        EXPECT_EQ(parse_benchmark_id(benchmark_name(id)), id);
    EXPECT_THROW(parse_benchmark_id("NOPE"), std::invalid_argument);
    EXPECT_THROW(benchmark_spec(BenchmarkId::GP, 3), std::invalid_argument);
    EXPECT_THROW(eval_at(BenchmarkId::SPHERE, {}), std::invalid_argument);
    const auto gp = benchmark_spec(BenchmarkId::GP);
    EXPECT_THROW(eval_benchmark(gp, std::vector<double>{0.0}), std::invalid_argument);
    EXPECT_FALSE(benchmark_spec(BenchmarkId::SCHWEFEL).best_value.has_value());
    EXPECT_FALSE(within_bounds(gp, std::vector<double>{3.0, 0.0}));
}

TEST(Codec, DecodeExamples)
{
    const BinaryCodec codec(4, {-10, -10}, {10, 10});
    EXPECT_EQ(codec.decode(Genome(8, 0)), (std::vector<double>{-10, -10}));
    EXPECT_EQ(codec.decode(Genome(8, 1)), (std::vector<double>{10, 10}));
    const auto v = codec.decode({0, 1, 0, 1, 0, 0, 0, 0});
    EXPECT_NEAR(v[0], -10 + 5 * 20.0 / 15, 1e-12);
    EXPECT_NEAR(v[0], -3.3333333333333, 1e-12);
    EXPECT_EQ(v[1], -10.0);
}

TEST(Codec, Errors)
{
    const BinaryCodec codec(4, {-1}, {1});
    EXPECT_THROW(codec.decode({0, 2, 0, 0}), std::invalid_argument);
    EXPECT_THROW(codec.decode({0, 1}), std::invalid_argument);
    EXPECT_THROW(BinaryCodec(1, {0}, {1}), std::invalid_argument);
    EXPECT_THROW(BinaryCodec(4, {1}, {0}), std::invalid_argument);
    EXPECT_THROW(BinaryCodec(4, {0, 0}, {1}), std::invalid_argument);
}

TEST(Codec, GridValuesRoundTrip)
{
    RngStream rng(77);
    for (int trial = 0; trial < 2000; ++trial) {
        const unsigned bits = 2 + static_cast<unsigned>(rng.below(29));
        const double lo = -100 * rng.uniform() - 1, hi = 100 * rng.uniform() + 1;
        const BinaryCodec codec(bits, {lo, lo}, {hi, hi});
        const std::uint64_t k0 = rng.below(codec.max_code() + 1), k1 = rng.below(codec.max_code() + 1);
        const std::vector<double> x{codec.value_of(0, k0), codec.value_of(1, k1)};
        const auto back = codec.decode(codec.encode(x));
        for (int d = 0; d < 2; ++d)
            ASSERT_NEAR(back[d], x[d], 1e-12 * std::max(1.0, std::abs(x[d])));
    }
}

TEST(Codec, DecodedValuesStayInBox)
{
    RngStream rng(5);
    const BinaryCodec codec(20, {-5.12, 0}, {5.12, 15});
    for (int trial = 0; trial < 2000; ++trial) {
        const auto x = codec.decode(random_genome(std::vector<Gene>(40, 2), rng));
        ASSERT_GE(x[0], -5.12);
        ASSERT_LE(x[0], 5.12);
        ASSERT_GE(x[1], 0.0);
        ASSERT_LE(x[1], 15.0);
    }
}

TEST(Factory, AllocationProblem)
{
    const auto p = make_allocation_problem(generate_grid_instance(20, 20, 1.0));
    EXPECT_EQ(p.dimension(), 400u);
    for (auto a : p.arity())
        ASSERT_EQ(a, 4u);
    ASSERT_TRUE(p.known_best().has_value());
    EXPECT_NEAR(*p.known_best(), 1524.7789966986072, 1e-9);
    ASSERT_TRUE(p.bounds().has_value());
    EXPECT_EQ(p.bounds()->min_t, *p.known_best());
    EXPECT_NEAR(p.bounds()->max_t, 5772.6548285120625, 1e-9);
    RngStream rng(0);
    EXPECT_EQ(p.evaluate(allocation_oracle(generate_grid_instance(20, 20, 1.0)).genome, rng), *p.known_best());
}

TEST(Factory, BenchmarkProblems)
{
    const auto bl = make_benchmark_problem(BenchmarkId::BL, 20);
    EXPECT_EQ(bl.dimension(), 40u);
    for (auto a : bl.arity())
        ASSERT_EQ(a, 2u);
    EXPECT_EQ(bl.known_best(), 0.0);
    EXPECT_FALSE(bl.bounds().has_value());
    EXPECT_EQ(make_benchmark_problem(BenchmarkId::SPHERE, 20).dimension(), 600u);

    const auto gp = make_benchmark_problem(BenchmarkId::GP, 20);
    const BinaryCodec codec(20, {-2, -2}, {2, 2});
    const std::vector<double> x{0.0, -1.0};
    RngStream rng(0);
    const auto g = codec.encode(x);
    EXPECT_EQ(gp.evaluate(g, rng), eval_benchmark(benchmark_spec(BenchmarkId::GP), codec.decode(g)));
    EXPECT_NEAR(gp.evaluate(g, rng), 3.0, 1e-3);
}
