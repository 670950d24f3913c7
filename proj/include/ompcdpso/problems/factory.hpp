#pragma once

#include <memory>
#include <string>
#include <utility>

#include "../core.hpp"
#include "allocation.hpp"
#include "benchmarks.hpp"
#include "binary_codec.hpp"

namespace ompcdpso {

inline constexpr unsigned kDefaultBitsPerDim = 20;

// Allocation: one gene per demand over N centers. The oracle and the
// farthest-center assignment give the accuracy bounds and the known best.
inline ProblemInstance make_allocation_problem(std::shared_ptr<const AllocationInstance> inst,
                                               std::string name = "allocation")
{
    const double best = allocation_oracle(*inst).fitness;
    const double worst = allocation_worst(*inst);
    std::optional<FitnessBounds> bounds;
    if (best < worst)
        bounds = FitnessBounds{best, worst};
    std::vector<Gene> arity(inst->num_demands(), static_cast<Gene>(inst->num_centers()));
    return ProblemInstance(
        std::move(name), std::move(arity),
        [inst](const Genome& g, RngStream&) { return allocation_fitness(*inst, g); }, bounds, best);
}

inline ProblemInstance make_allocation_problem(AllocationInstance inst, std::string name = "allocation")
{
    return make_allocation_problem(std::make_shared<const AllocationInstance>(std::move(inst)),
                                   std::move(name));
}

// Benchmark: binary genome of bits_per_dim * n_dims genes decoded onto the
// function's box. Accuracy bounds only when the caller supplies them.
inline ProblemInstance make_benchmark_problem(BenchmarkId id, unsigned bits_per_dim = kDefaultBitsPerDim,
                                              std::size_t dimension = 0,
                                              std::optional<FitnessBounds> bounds = std::nullopt)
{
    auto spec = std::make_shared<const BenchmarkSpec>(benchmark_spec(id, dimension));
    auto codec = std::make_shared<const BinaryCodec>(bits_per_dim, spec->lower, spec->upper);
    std::vector<Gene> arity(codec->genome_length(), 2);
    const bool noisy = id == BenchmarkId::QUARTICNOISE;
    return ProblemInstance(
        std::string(spec->name), std::move(arity),
        [spec, codec, noisy](const Genome& g, RngStream& rng) {
            std::vector<double> x;
            codec->decode_into(g, x);
            return eval_benchmark(*spec, x, noisy ? &rng : nullptr);
        },
        bounds, spec->best_value);
}

} // namespace ompcdpso
