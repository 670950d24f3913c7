#pragma once

#include <cstdint>
#include <vector>

#include "common.hpp"

namespace ompcdpso {

// Rank-proportional roulette: rank r (0 = best) of n has weight n - r.
inline std::size_t rank_roulette(std::span<const std::size_t> order, RngStream& rng)
{
    const std::uint64_t n = order.size();
    std::uint64_t ticket = rng.below(n * (n + 1) / 2);
    for (std::size_t r = 0; r < order.size(); ++r) {
        const std::uint64_t weight = n - r;
        if (ticket < weight)
            return order[r];
        ticket -= weight;
    }
    return order.back();
}

// Generational GA: elites carried over, rank-roulette parents, single-point
// crossover with probability pc (both children kept), per-child mutation with
// probability pm.
template <DiscreteProblem P>
RunResult run_ga(const P& problem, const GaParams& params, std::uint64_t seed)
{
    params.validate();
    RngStream rng(seed);
    Evaluator<P> eval(problem, rng);
    RunTracker tracker(problem.known_best());
    const auto arity = problem.arity();
    const bool can_mutate = mutable_count(arity) > 0;

    std::vector<Scored> pop;
    pop.reserve(params.population);
    for (std::size_t i = 0; i < params.population; ++i)
        pop.push_back(eval.scored(random_genome(problem, rng)));
    for (const auto& p : pop)
        tracker.offer(p);

    for (std::size_t gen = 1; gen <= params.iterations; ++gen) {
        const auto order = rank_order(pop);
        std::vector<Scored> next;
        next.reserve(params.population);
        for (std::size_t e = 0; e < params.elite_count; ++e)
            next.push_back(pop[order[e]]);
        while (next.size() < params.population) {
            const Genome& a = pop[rank_roulette(order, rng)].genome;
            const Genome& b = pop[rank_roulette(order, rng)].genome;
            Genome children[2] = {a, b};
            if (rng.uniform() < params.pc && a.size() >= 2) {
                auto pair = single_point_crossover(a, b, rng);
                children[0] = std::move(pair.first);
                children[1] = std::move(pair.second);
            }
            for (auto& child : children) {
                if (next.size() == params.population)
                    break;
                if (rng.uniform() < params.pm && can_mutate)
                    child = mutate_one(std::move(child), arity, rng);
                next.push_back(eval.scored(std::move(child)));
                tracker.offer(next.back());
            }
        }
        pop = std::move(next);
        tracker.record(gen, min_fitness(pop), mean_fitness(pop));
    }
    return tracker.finish(eval.count());
}

} // namespace ompcdpso
