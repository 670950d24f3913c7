#pragma once

#include <cmath>
#include <cstddef>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "../core.hpp"

namespace ompcdpso {

struct Point {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Point&) const = default;
};

// Demand points, service centers and the demand-by-center distance matrix.
class AllocationInstance {
public:
    AllocationInstance(std::vector<Point> centers, std::vector<Point> demands)
        : centers_(std::move(centers)), demands_(std::move(demands))
    {
        if (centers_.empty() || demands_.empty())
            throw std::invalid_argument("AllocationInstance: need at least one center and one demand");
        dist_.resize(demands_.size() * centers_.size());
        for (std::size_t j = 0; j < demands_.size(); ++j)
            for (std::size_t i = 0; i < centers_.size(); ++i)
                dist_[j * centers_.size() + i] = std::hypot(demands_[j].x - centers_[i].x,
                                                            demands_[j].y - centers_[i].y);
    }

    std::size_t num_centers() const { return centers_.size(); }
    std::size_t num_demands() const { return demands_.size(); }
    const std::vector<Point>& centers() const { return centers_; }
    const std::vector<Point>& demands() const { return demands_; }

    double dist(std::size_t demand, std::size_t center) const
    {
        return dist_[demand * centers_.size() + center];
    }

private:
    std::vector<Point> centers_;
    std::vector<Point> demands_;
    std::vector<double> dist_;
};

// Regular rows x cols demand grid; demand (r, c) sits at (r * spacing, c * spacing),
// enumerated row-major.
inline std::vector<Point> grid_demands(int rows, int cols, double spacing)
{
    if (rows < 2 || cols < 2)
        throw std::invalid_argument("grid: rows and cols must be at least 2");
    if (!(spacing > 0.0))
        throw std::invalid_argument("grid: spacing must be positive");
    std::vector<Point> demands;
    demands.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            demands.push_back({r * spacing, c * spacing});
    return demands;
}

// Centroids of the four equal quadrants, ordered (low row, low col),
// (low row, high col), (high row, low col), (high row, high col).
inline std::vector<Point> quadrant_centroids(int rows, int cols, double spacing)
{
    if (rows % 2 != 0 || cols % 2 != 0)
        throw std::invalid_argument("grid: quadrant centers need even rows and cols (got " +
                                    std::to_string(rows) + "x" + std::to_string(cols) + ")");
    const auto mid = [spacing](int lo, int hi) { return spacing * (lo + hi) / 2.0; };
    const double x_lo = mid(0, rows / 2 - 1), x_hi = mid(rows / 2, rows - 1);
    const double y_lo = mid(0, cols / 2 - 1), y_hi = mid(cols / 2, cols - 1);
    return {{x_lo, y_lo}, {x_lo, y_hi}, {x_hi, y_lo}, {x_hi, y_hi}};
}

inline AllocationInstance generate_grid_instance(int rows, int cols, double spacing = 1.0)
{
    auto demands = grid_demands(rows, cols, spacing);
    return AllocationInstance(quadrant_centroids(rows, cols, spacing), std::move(demands));
}

inline AllocationInstance generate_grid_instance(int rows, int cols, double spacing,
                                                 std::vector<Point> centers)
{
    return AllocationInstance(std::move(centers), grid_demands(rows, cols, spacing));
}

// Total distance from every demand to its assigned center.
inline double allocation_fitness(const AllocationInstance& inst, const Genome& g)
{
    if (g.size() != inst.num_demands())
        throw std::invalid_argument("allocation_fitness: genome length does not match demand count");
    double total = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) {
        if (g[j] >= inst.num_centers())
            throw std::invalid_argument("allocation_fitness: center index out of range");
        total += inst.dist(j, g[j]);
    }
    return total;
}

// The objective is separable per demand, so nearest-center assignment is the
// global optimum. Ties go to the lowest center index.
inline Scored allocation_oracle(const AllocationInstance& inst)
{
    Scored best;
    best.genome.genes.resize(inst.num_demands());
    best.fitness = 0.0;
    for (std::size_t j = 0; j < inst.num_demands(); ++j) {
        std::size_t arg = 0;
        for (std::size_t i = 1; i < inst.num_centers(); ++i)
            if (inst.dist(j, i) < inst.dist(j, arg))
                arg = i;
        best.genome[j] = static_cast<Gene>(arg);
        best.fitness += inst.dist(j, arg);
    }
    return best;
}

inline double allocation_worst(const AllocationInstance& inst)
{
    double total = 0.0;
    for (std::size_t j = 0; j < inst.num_demands(); ++j) {
        double far = 0.0;
        for (std::size_t i = 0; i < inst.num_centers(); ++i)
            far = std::max(far, inst.dist(j, i));
        total += far;
    }
    return total;
}

// Instance file: "M N" header, N center lines, then M demand lines ("x y").
inline void write_instance(std::ostream& os, const AllocationInstance& inst)
{
    os << inst.num_demands() << ' ' << inst.num_centers() << '\n';
    os << std::setprecision(17);
    for (const auto& p : inst.centers())
        os << p.x << ' ' << p.y << '\n';
    for (const auto& p : inst.demands())
        os << p.x << ' ' << p.y << '\n';
}

inline AllocationInstance read_instance(std::istream& is)
{
    std::size_t m = 0, n = 0;
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() {
        while (std::getline(is, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                return true;
        }
        return false;
    };
    if (!next_line())
        throw std::runtime_error("instance: empty file");
    {
        std::istringstream hdr(line);
        if (!(hdr >> m >> n) || m == 0 || n == 0)
            throw std::runtime_error("instance line " + std::to_string(lineno) + ": expected 'M N' header");
    }
    auto read_points = [&](std::size_t count, const char* what) {
        std::vector<Point> pts;
        pts.reserve(count);
        for (std::size_t k = 0; k < count; ++k) {
            if (!next_line())
                throw std::runtime_error(std::string("instance: truncated ") + what + " section");
            std::istringstream row(line);
            Point p;
            if (!(row >> p.x >> p.y))
                throw std::runtime_error("instance line " + std::to_string(lineno) + ": expected 'x y'");
            pts.push_back(p);
        }
        return pts;
    };
    auto centers = read_points(n, "center");
    auto demands = read_points(m, "demand");
    return AllocationInstance(std::move(centers), std::move(demands));
}

inline AllocationInstance load_instance(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open instance file '" + path + "'");
    return read_instance(in);
}

} // namespace ompcdpso
