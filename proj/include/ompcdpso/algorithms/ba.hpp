#pragma once

#include <cstdint>
#include <vector>

#include "common.hpp"

namespace ompcdpso {

// Site-based bees algorithm. Each generation the `employed` best solutions are
// sites searched by onlookers at cycling Hamming distances; the `scouts`
// worst solutions are replaced by fresh random ones.
template <DiscreteProblem P>
RunResult run_ba(const P& problem, const BaParams& params, std::uint64_t seed)
{
    params.validate();
    RngStream rng(seed);
    Evaluator<P> eval(problem, rng);
    RunTracker tracker(problem.known_best());

    std::vector<Scored> pop;
    pop.reserve(params.population);
    for (std::size_t i = 0; i < params.population; ++i)
        pop.push_back(eval.scored(random_genome(problem, rng)));
    for (const auto& p : pop)
        tracker.offer(p);

    for (std::size_t gen = 1; gen <= params.iterations; ++gen) {
        const auto order = rank_order(pop);
        if (params.onlookers > 0)
            for (std::size_t r = 0; r < params.employed; ++r)
                improve_with_onlookers(pop[order[r]], params.onlookers, params.neighborhood_max, problem, eval,
                                       rng);
        for (std::size_t r = pop.size() - params.scouts; r < pop.size(); ++r)
            pop[order[r]] = eval.scored(random_genome(problem, rng));
        for (const auto& p : pop)
            tracker.offer(p);
        tracker.record(gen, min_fitness(pop), mean_fitness(pop));
    }
    return tracker.finish(eval.count());
}

} // namespace ompcdpso
