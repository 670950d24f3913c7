#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "core.hpp"
#include "rng.hpp"

namespace ompcdpso {

// Linearly annealed inertia weight.
inline double inertia(std::size_t t, std::size_t iter_max, double w_max, double w_min)
{
    if (iter_max == 0)
        throw std::invalid_argument("inertia: iter_max must be positive");
    if (t > iter_max)
        throw std::invalid_argument("inertia: t exceeds iter_max");
    return w_max - static_cast<double>(t) * (w_max - w_min) / static_cast<double>(iter_max);
}

namespace detail {

inline std::vector<std::size_t> mutable_positions(std::span<const Gene> arity)
{
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < arity.size(); ++i)
        if (arity[i] >= 2)
            pos.push_back(i);
    return pos;
}

// Uniform over [0, arity) minus `current`.
inline Gene other_value(Gene current, Gene arity, RngStream& rng)
{
    auto v = static_cast<Gene>(rng.below(arity - 1));
    return v >= current ? v + 1 : v;
}

} // namespace detail

// One gene at a uniformly chosen mutable position takes a different value.
inline Genome mutate_one(Genome g, std::span<const Gene> arity, RngStream& rng)
{
    if (g.size() != arity.size())
        throw std::invalid_argument("mutate_one: genome length does not match arity");
    const auto pos = detail::mutable_positions(arity);
    if (pos.empty())
        throw std::invalid_argument("mutate_one: no position admits a second value");
    const std::size_t i = pos[rng.below(pos.size())];
    g[i] = detail::other_value(g[i], arity[i], rng);
    return g;
}

inline std::pair<Genome, Genome> crossover_at(const Genome& a, const Genome& b, std::size_t cut)
{
    if (a.size() != b.size())
        throw std::invalid_argument("crossover: parents differ in length");
    if (cut > a.size())
        throw std::invalid_argument("crossover: cut beyond genome");
    Genome c1 = a, c2 = b;
    for (std::size_t i = cut; i < a.size(); ++i) {
        c1[i] = b[i];
        c2[i] = a[i];
    }
    return {std::move(c1), std::move(c2)};
}

// Cut drawn uniformly from [1, M-1] so both parents contribute to each child.
inline std::pair<Genome, Genome> single_point_crossover(const Genome& a, const Genome& b, RngStream& rng)
{
    if (a.size() != b.size())
        throw std::invalid_argument("single_point_crossover: parents differ in length");
    if (a.size() < 2)
        throw std::invalid_argument("single_point_crossover: genomes shorter than 2 have no interior cut");
    const auto cut = static_cast<std::size_t>(rng.uniform_int(1, static_cast<std::int64_t>(a.size()) - 1));
    return crossover_at(a, b, cut);
}

// Crossover followed by a fair pick of one child. Length-1 genomes have no
// interior cut, so the pick is between the two parents themselves.
inline Genome crossover_pick_one(const Genome& a, const Genome& b, RngStream& rng)
{
    if (a.size() < 2) {
        if (a.size() != b.size())
            throw std::invalid_argument("crossover: parents differ in length");
        return rng.below(2) == 0 ? a : b;
    }
    auto children = single_point_crossover(a, b, rng);
    return rng.below(2) == 0 ? std::move(children.first) : std::move(children.second);
}

// Lengths of the E contiguous segments covering M genes; the first M % E
// segments are one gene longer.
inline std::vector<std::size_t> segment_lengths(std::size_t m, std::size_t e)
{
    if (e == 0)
        throw std::invalid_argument("segment_lengths: need at least one segment");
    if (m < e)
        throw std::invalid_argument("segment_lengths: fewer genes than segments");
    std::vector<std::size_t> len(e, m / e);
    for (std::size_t s = 0; s < m % e; ++s)
        ++len[s];
    return len;
}

// Child built from E parents where segment s is copied from parents[order[s]].
inline Genome multi_parent_crossover_with(std::span<const Genome> parents, std::span<const std::size_t> order)
{
    if (parents.empty())
        throw std::invalid_argument("multi_parent_crossover: no parents");
    if (order.size() != parents.size())
        throw std::invalid_argument("multi_parent_crossover: permutation size mismatch");
    const std::size_t m = parents.front().size();
    for (const auto& p : parents)
        if (p.size() != m)
            throw std::invalid_argument("multi_parent_crossover: parents differ in length");
    const auto len = segment_lengths(m, parents.size());
    Genome child(m, 0);
    std::size_t at = 0;
    for (std::size_t s = 0; s < len.size(); ++s) {
        const Genome& src = parents[order[s]];
        for (std::size_t k = 0; k < len[s]; ++k, ++at)
            child[at] = src[at];
    }
    return child;
}

// Every parent supplies exactly one segment under a uniform random permutation.
inline Genome multi_parent_crossover(std::span<const Genome> parents, RngStream& rng)
{
    std::vector<std::size_t> order(parents.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(order);
    return multi_parent_crossover_with(parents, order);
}

// Exactly k distinct mutable positions change, so hamming(g, out) == k.
inline Genome onlooker_neighbor(Genome g, std::size_t k, std::span<const Gene> arity, RngStream& rng)
{
    if (g.size() != arity.size())
        throw std::invalid_argument("onlooker_neighbor: genome length does not match arity");
    const auto pos = detail::mutable_positions(arity);
    if (k < 1 || k > pos.size())
        throw std::invalid_argument("onlooker_neighbor: distance " + std::to_string(k) +
                                    " outside [1, " + std::to_string(pos.size()) + "]");
    for (std::size_t idx : rng.sample(pos.size(), k)) {
        const std::size_t i = pos[idx];
        g[i] = detail::other_value(g[i], arity[i], rng);
    }
    return g;
}

} // namespace ompcdpso
