#pragma once

#include <cstdint>
#include <vector>

#include "common.hpp"

namespace ompcdpso {

// Evaluations spent in one generation of run_ompcdpso.
inline std::uint64_t ompcdpso_evaluations_per_generation(const OmpcdpsoParams& p)
{
    return p.population + p.g_best_count * p.onlookers_per_gbest + p.n_mpc;
}

// Discrete PSO whose global best is refined each generation through a pool of
// the best personal bests: onlooker neighborhood search around each pool
// member, then multi-parent crossover across the whole pool. The best pool
// member challenges the tracked global best, which then drives the swarm.
template <DiscreteProblem P>
RunResult run_ompcdpso(const P& problem, const OmpcdpsoParams& params, std::uint64_t seed)
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
        for (std::size_t i = 0; i < swarm.size(); ++i)
            pbest[i] = pbest_update(swarm[i], pbest[i]);

        auto pool = select_global_bests(pbest, params.g_best_count);
        onlooker_phase(pool, params.onlookers_per_gbest, params.neighborhood_max, problem, eval, rng);
        mpc_phase(pool, params.n_mpc, eval, rng);
        tracker.offer(pool.front());

        const double w = inertia(gen - 1, params.iterations, params.w_max, params.w_min);
        const Genome gbest = tracker.best().genome;
        for (std::size_t i = 0; i < swarm.size(); ++i) {
            swarm[i] = eval.scored(dpso_particle_update(swarm[i].genome, pbest[i].genome, gbest, arity, w,
                                                        params.c1, params.c2, rng));
            tracker.offer(swarm[i]);
        }
        tracker.record(gen, std::min(min_fitness(swarm), pool.front().fitness), mean_fitness(swarm));
    }
    return tracker.finish(eval.count());
}

} // namespace ompcdpso
