#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rng.hpp"

namespace ompcdpso {

using Gene = std::uint32_t;

// Fixed-length integer solution. The alphabet of each position lives on the
// problem, so a Genome is only meaningful next to its ProblemInstance.
struct Genome {
    std::vector<Gene> genes;

    Genome() = default;
    explicit Genome(std::vector<Gene> g) : genes(std::move(g)) {}
    Genome(std::initializer_list<Gene> g) : genes(g) {}
    Genome(std::size_t n, Gene value) : genes(n, value) {}

    std::size_t size() const { return genes.size(); }
    bool empty() const { return genes.empty(); }
    Gene& operator[](std::size_t i) { return genes[i]; }
    Gene operator[](std::size_t i) const { return genes[i]; }
    auto begin() { return genes.begin(); }
    auto end() { return genes.end(); }
    auto begin() const { return genes.begin(); }
    auto end() const { return genes.end(); }

    bool operator==(const Genome&) const = default;
};

// A genome together with its cached fitness.
struct Scored {
    Genome genome;
    double fitness = std::numeric_limits<double>::infinity();
};

struct FitnessBounds {
    double min_t;
    double max_t;
};

// Evaluatable minimization problem over per-position finite alphabets.
// The evaluator receives the run's random stream; deterministic problems
// ignore it, noisy ones draw from it.
class ProblemInstance {
public:
    using Evaluator = std::function<double(const Genome&, RngStream&)>;

    ProblemInstance(std::string name, std::vector<Gene> arity, Evaluator evaluate,
                    std::optional<FitnessBounds> bounds = std::nullopt,
                    std::optional<double> known_best = std::nullopt)
        : name_(std::move(name)), arity_(std::move(arity)), evaluate_(std::move(evaluate)),
          bounds_(bounds), known_best_(known_best)
    {
        if (arity_.empty())
            throw std::invalid_argument("ProblemInstance: dimension must be at least 1");
        if (std::any_of(arity_.begin(), arity_.end(), [](Gene a) { return a < 1; }))
            throw std::invalid_argument("ProblemInstance: every arity must be at least 1");
        if (!evaluate_)
            throw std::invalid_argument("ProblemInstance: missing evaluator");
        if (bounds_ && !(bounds_->min_t < bounds_->max_t))
            throw std::invalid_argument("ProblemInstance: bounds require min_t < max_t");
    }

    const std::string& name() const { return name_; }
    std::size_t dimension() const { return arity_.size(); }
    std::span<const Gene> arity() const { return arity_; }
    const std::optional<FitnessBounds>& bounds() const { return bounds_; }
    const std::optional<double>& known_best() const { return known_best_; }

    double evaluate(const Genome& g, RngStream& rng) const { return evaluate_(g, rng); }

    bool is_valid(const Genome& g) const
    {
        if (g.size() != arity_.size())
            return false;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] >= arity_[i])
                return false;
        return true;
    }

private:
    std::string name_;
    std::vector<Gene> arity_;
    Evaluator evaluate_;
    std::optional<FitnessBounds> bounds_;
    std::optional<double> known_best_;
};

// Anything the optimizers can run on.
template <typename P>
concept DiscreteProblem = requires(const P& p, const Genome& g, RngStream& rng) {
    { p.dimension() } -> std::convertible_to<std::size_t>;
    { p.arity() } -> std::convertible_to<std::span<const Gene>>;
    { p.evaluate(g, rng) } -> std::convertible_to<double>;
    { p.known_best() } -> std::convertible_to<std::optional<double>>;
};

struct GenerationRecord {
    std::size_t generation = 0;
    double best_of_generation = 0.0;
    double best_so_far = 0.0;
    double population_mean = 0.0;
    double elapsed_s = 0.0;
};

struct RunResult {
    std::vector<GenerationRecord> records;
    Genome best_genome;
    double best_fitness = std::numeric_limits<double>::infinity();
    std::optional<std::size_t> itr_best;
    std::optional<double> t_best;
    double total_time = 0.0;
    std::uint64_t evaluations = 0;
};

// Tolerance for "the known optimum was reached".
inline bool attains(double fitness, double known_best)
{
    return std::abs(fitness - known_best) <= 1e-9 * std::max(1.0, std::abs(known_best));
}

inline std::size_t mutable_count(std::span<const Gene> arity)
{
    return static_cast<std::size_t>(
        std::count_if(arity.begin(), arity.end(), [](Gene a) { return a >= 2; }));
}

inline Genome random_genome(std::span<const Gene> arity, RngStream& rng)
{
    Genome g;
    g.genes.reserve(arity.size());
    for (Gene a : arity)
        g.genes.push_back(static_cast<Gene>(rng.below(a)));
    return g;
}

template <DiscreteProblem P>
Genome random_genome(const P& problem, RngStream& rng)
{
    return random_genome(problem.arity(), rng);
}

inline std::size_t hamming(const Genome& a, const Genome& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("hamming: incompatible genome lengths " +
                                    std::to_string(a.size()) + " and " + std::to_string(b.size()));
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += a[i] != b[i];
    return d;
}

// Comma-separated 1-based labels, the allocation-facing representation.
inline std::string to_labels(const Genome& g)
{
    std::string out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(static_cast<std::uint64_t>(g[i]) + 1);
    }
    return out;
}

inline Genome from_labels(const std::string& text)
{
    Genome g;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long long label = 0;
        try {
            label = std::stoull(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("from_labels: bad label '" + item + "'");
        }
        if (used != item.size() || label == 0)
            throw std::invalid_argument("from_labels: bad label '" + item + "'");
        g.genes.push_back(static_cast<Gene>(label - 1));
    }
    return g;
}

inline std::string to_bitstring(const Genome& g)
{
    std::string out;
    out.reserve(g.size());
    for (Gene b : g) {
        if (b > 1)
            throw std::invalid_argument("to_bitstring: genome is not binary");
        out += b ? '1' : '0';
    }
    return out;
}

inline Genome from_bitstring(const std::string& bits)
{
    Genome g;
    g.genes.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("from_bitstring: unexpected character");
        g.genes.push_back(c == '1');
    }
    return g;
}

// Bitstring when every alphabet is binary, labels otherwise.
inline std::string serialize_genome(const Genome& g, std::span<const Gene> arity)
{
    const bool binary = std::all_of(arity.begin(), arity.end(), [](Gene a) { return a == 2; });
    return binary ? to_bitstring(g) : to_labels(g);
}

} // namespace ompcdpso
