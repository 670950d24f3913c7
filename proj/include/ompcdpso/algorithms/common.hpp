#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "../core.hpp"
#include "../operators.hpp"

namespace ompcdpso {

struct DpsoParams {
    std::size_t population = 100;
    std::size_t iterations = 400;
    double w_max = 0.9;
    double w_min = 0.4;
    double c1 = 0.5;
    double c2 = 0.5;

    void validate() const
    {
        if (population < 2)
            throw std::invalid_argument("pop must be at least 2");
        if (!(0.0 <= w_min && w_min <= w_max && w_max <= 1.0))
            throw std::invalid_argument("Wmin/Wmax must satisfy 0 <= Wmin <= Wmax <= 1");
        if (!(0.0 <= c1 && c1 <= 1.0) || !(0.0 <= c2 && c2 <= 1.0))
            throw std::invalid_argument("C1 and C2 must lie in [0, 1]");
    }
};

struct OmpcdpsoParams : DpsoParams {
    std::size_t g_best_count = 20;
    std::size_t onlookers_per_gbest = 6;
    std::size_t n_mpc = 20;
    std::size_t neighborhood_max = 3;

    void validate() const
    {
        DpsoParams::validate();
        if (g_best_count < 1 || g_best_count > population)
            throw std::invalid_argument("Gbest must lie in [1, pop]");
        if (onlookers_per_gbest < 1)
            throw std::invalid_argument("Onl must be at least 1");
        if (n_mpc < 1)
            throw std::invalid_argument("NMPC must be at least 1");
        if (neighborhood_max < 1)
            throw std::invalid_argument("neighborhood_max must be at least 1");
    }
};

struct GaParams {
    std::size_t population = 100;
    std::size_t iterations = 400;
    double pc = 0.8;
    double pm = 0.25;
    std::size_t elite_count = 10;

    void validate() const
    {
        if (population < 2)
            throw std::invalid_argument("pop must be at least 2");
        if (!(0.0 <= pc && pc <= 1.0) || !(0.0 <= pm && pm <= 1.0))
            throw std::invalid_argument("Pc and Pm must lie in [0, 1]");
        if (elite_count >= population)
            throw std::invalid_argument("Elit must be smaller than pop");
    }
};

struct BaParams {
    std::size_t population = 100;
    std::size_t iterations = 400;
    std::size_t employed = 50;
    std::size_t onlookers = 6;
    std::size_t scouts = 50;
    std::size_t neighborhood_max = 3;

    void validate() const
    {
        if (population < 2)
            throw std::invalid_argument("pop must be at least 2");
        if (employed + scouts > population)
            throw std::invalid_argument("Emp + Sco must not exceed pop");
        if (neighborhood_max < 1)
            throw std::invalid_argument("neighborhood_max must be at least 1");
    }
};

// Counts every fitness evaluation of one run.
template <DiscreteProblem P>
class Evaluator {
public:
    Evaluator(const P& problem, RngStream& rng) : problem_(problem), rng_(rng) {}

    double operator()(const Genome& g)
    {
        ++count_;
        return problem_.evaluate(g, rng_);
    }

    Scored scored(Genome g)
    {
        const double f = (*this)(g);
        return {std::move(g), f};
    }

    std::uint64_t count() const { return count_; }

private:
    const P& problem_;
    RngStream& rng_;
    std::uint64_t count_ = 0;
};

// Greedy best-so-far bookkeeping and per-generation trace.
class RunTracker {
public:
    explicit RunTracker(std::optional<double> known_best)
        : known_best_(known_best), start_(std::chrono::steady_clock::now())
    {
    }

    // Replaces the incumbent only on strict improvement.
    bool offer(const Scored& candidate)
    {
        if (!has_best_ || candidate.fitness < best_.fitness) {
            best_ = candidate;
            has_best_ = true;
            return true;
        }
        return false;
    }

    const Scored& best() const { return best_; }

    double elapsed() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    void record(std::size_t generation, double best_of_generation, double population_mean)
    {
        GenerationRecord rec;
        rec.generation = generation;
        rec.best_of_generation = best_of_generation;
        rec.best_so_far = best_.fitness;
        rec.population_mean = population_mean;
        rec.elapsed_s = elapsed();
        if (known_best_ && !result_.itr_best && attains(best_.fitness, *known_best_)) {
            result_.itr_best = generation;
            result_.t_best = rec.elapsed_s;
        }
        result_.records.push_back(rec);
    }

    RunResult finish(std::uint64_t evaluations)
    {
        result_.best_genome = best_.genome;
        result_.best_fitness = best_.fitness;
        result_.total_time = elapsed();
        result_.evaluations = evaluations;
        return std::move(result_);
    }

private:
    std::optional<double> known_best_;
    std::chrono::steady_clock::time_point start_;
    Scored best_;
    bool has_best_ = false;
    RunResult result_;
};

inline double min_fitness(std::span<const Scored> pop)
{
    double m = pop.front().fitness;
    for (const auto& s : pop)
        m = std::min(m, s.fitness);
    return m;
}

inline double mean_fitness(std::span<const Scored> pop)
{
    double s = 0.0;
    for (const auto& p : pop)
        s += p.fitness;
    return s / static_cast<double>(pop.size());
}

// Indices ordered by fitness, ties by lower index.
inline std::vector<std::size_t> rank_order(std::span<const Scored> pop)
{
    std::vector<std::size_t> idx(pop.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return pop[a].fitness < pop[b].fitness; });
    return idx;
}

// Personal-best rule: the incumbent survives ties.
inline const Scored& pbest_update(const Scored& current, const Scored& previous_pbest)
{
    return current.fitness < previous_pbest.fitness ? current : previous_pbest;
}

// Three chained probabilistic stages: mutation gated by w, crossover with the
// personal best gated by c1, crossover with the global best gated by c2.
// Each crossover keeps one of its two children at random.
inline Genome dpso_particle_update(const Genome& x, const Genome& pbest, const Genome& gbest,
                                   std::span<const Gene> arity, double w, double c1, double c2,
                                   RngStream& rng)
{
    if (x.size() != pbest.size() || x.size() != gbest.size())
        throw std::invalid_argument("dpso_particle_update: genome lengths differ");
    Genome lambda = x;
    if (rng.uniform() < w && mutable_count(arity) > 0)
        lambda = mutate_one(std::move(lambda), arity, rng);
    Genome delta = rng.uniform() < c1 ? crossover_pick_one(lambda, pbest, rng) : std::move(lambda);
    return rng.uniform() < c2 ? crossover_pick_one(delta, gbest, rng) : delta;
}

// The g lowest-fitness personal bests, sorted, ties by lower particle index.
inline std::vector<Scored> select_global_bests(std::span<const Scored> pbests, std::size_t g)
{
    if (g < 1 || g > pbests.size())
        throw std::invalid_argument("select_global_bests: g outside [1, population]");
    const auto order = rank_order(pbests);
    std::vector<Scored> out;
    out.reserve(g);
    for (std::size_t k = 0; k < g; ++k)
        out.push_back(pbests[order[k]]);
    return out;
}

// Distance of the j-th onlooker (1-based), cycling 1..nbhd_max.
inline std::size_t onlooker_distance(std::size_t j, std::size_t nbhd_max)
{
    return (j - 1) % nbhd_max + 1;
}

// Sends `onl` onlookers around one site and keeps the best of them if it is
// strictly better than the site. Distances are capped by the number of
// mutable positions. Returns false when the site cannot move at all.
template <DiscreteProblem P>
bool improve_with_onlookers(Scored& site, std::size_t onl, std::size_t nbhd_max, const P& problem,
                            Evaluator<P>& eval, RngStream& rng)
{
    const auto arity = problem.arity();
    const std::size_t movable = mutable_count(arity);
    if (movable == 0)
        return false;
    std::optional<Scored> best;
    for (std::size_t j = 1; j <= onl; ++j) {
        const std::size_t k = std::min(onlooker_distance(j, nbhd_max), movable);
        Scored cand = eval.scored(onlooker_neighbor(site.genome, k, arity, rng));
        if (!best || cand.fitness < best->fitness)
            best = std::move(cand);
    }
    if (best && best->fitness < site.fitness)
        site = std::move(*best);
    return true;
}

template <DiscreteProblem P>
void onlooker_phase(std::vector<Scored>& gbests, std::size_t onl, std::size_t nbhd_max, const P& problem,
                    Evaluator<P>& eval, RngStream& rng)
{
    if (onl < 1)
        throw std::invalid_argument("onlooker_phase: onl must be at least 1");
    for (auto& site : gbests)
        improve_with_onlookers(site, onl, nbhd_max, problem, eval, rng);
}

// n_mpc children from all E pool members, then an elitist merge keeping the
// E best (incumbents win ties). The pool comes back sorted by fitness.
template <DiscreteProblem P>
void mpc_phase(std::vector<Scored>& gbests, std::size_t n_mpc, Evaluator<P>& eval, RngStream& rng)
{
    if (gbests.empty())
        throw std::invalid_argument("mpc_phase: empty global-best pool");
    if (n_mpc < 1)
        throw std::invalid_argument("mpc_phase: n_mpc must be at least 1");
    std::vector<Genome> parents;
    parents.reserve(gbests.size());
    for (const auto& s : gbests)
        parents.push_back(s.genome);
    const std::size_t e = gbests.size();
    std::vector<Scored> merged = gbests;
    merged.reserve(e + n_mpc);
    for (std::size_t c = 0; c < n_mpc; ++c)
        merged.push_back(eval.scored(multi_parent_crossover(parents, rng)));
    std::stable_sort(merged.begin(), merged.end(),
                     [](const Scored& a, const Scored& b) { return a.fitness < b.fitness; });
    merged.resize(e);
    gbests = std::move(merged);
}

} // namespace ompcdpso
