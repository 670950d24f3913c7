#pragma once

#include <cstdint>
#include <vector>

#include "common.hpp"

namespace ompcdpso {

// Discrete PSO with mutation/crossover movement (the PAN scheme).
template <DiscreteProblem P>
RunResult run_dpso(const P& problem, const DpsoParams& params, std::uint64_t seed)
{
    params.validate();
    RngStream rng(seed);
    Evaluator<P> eval(problem, rng);
    RunTracker tracker(problem.known_best());
    const auto arity = problem.arity();

    std::vector<Scored> swarm;
    swarm.reserve(params.population);
    for (std::size_t i = 0; i < params.population; ++i)
        swarm.push_back(eval.scored(random_genome(problem, rng)));
    std::vector<Scored> pbest = swarm;
    for (const auto& p : pbest)
        tracker.offer(p);

    for (std::size_t gen = 1; gen <= params.iterations; ++gen) {
        const double w = inertia(gen - 1, params.iterations, params.w_max, params.w_min);
        const Genome gbest = tracker.best().genome;
        for (std::size_t i = 0; i < swarm.size(); ++i) {
            swarm[i] = eval.scored(dpso_particle_update(swarm[i].genome, pbest[i].genome, gbest, arity, w,
                                                        params.c1, params.c2, rng));
            pbest[i] = pbest_update(swarm[i], pbest[i]);
            tracker.offer(pbest[i]);
        }
        tracker.record(gen, min_fitness(swarm), mean_fitness(swarm));
    }
    return tracker.finish(eval.count());
}

} // namespace ompcdpso
