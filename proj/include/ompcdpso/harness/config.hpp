#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "../metrics.hpp"
#include "../problems/benchmarks.hpp"

namespace ompcdpso::harness {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class AlgorithmId { GA, BA, DPSO, OMPCDPSO };

inline const char* to_string(AlgorithmId id)
{
    switch (id) {
    case AlgorithmId::GA: return "GA";
    case AlgorithmId::BA: return "BA";
    case AlgorithmId::DPSO: return "DPSO";
    case AlgorithmId::OMPCDPSO: return "OMPCDPSO";
    }
    return "?";
}

inline AlgorithmId parse_algorithm_id(const std::string& name)
{
    for (auto id : {AlgorithmId::GA, AlgorithmId::BA, AlgorithmId::DPSO, AlgorithmId::OMPCDPSO})
        if (name == to_string(id))
            return id;
    throw ConfigError("unknown algorithm id '" + name + "' (expected GA, BA, DPSO or OMPCDPSO)");
}

inline constexpr AlgorithmId kAllAlgorithms[] = {AlgorithmId::GA, AlgorithmId::BA, AlgorithmId::DPSO,
                                                 AlgorithmId::OMPCDPSO};

struct ProblemConfig {
    std::string kind; // "allocation" or "benchmark"
    // allocation: either a generated grid or an instance file
    int rows = 20;
    int cols = 20;
    double spacing = 1.0;
    bool quadrant_centers = true;
    std::string instance;
    // benchmark
    std::string function;
    unsigned bits_per_dim = 20;
    std::size_t dimension = 0;

    bool operator==(const ProblemConfig&) const = default;
};

// Field names follow the usual parameter-table labels.
struct AlgorithmConfig {
    AlgorithmId id = AlgorithmId::OMPCDPSO;
    std::size_t pop = 100;
    double Pc = 0.8;
    double Pm = 0.25;
    std::size_t Elit = 10;
    std::size_t Onl = 6;
    std::size_t Emp = 50;
    std::size_t Sco = 50;
    double Wmax = 0.9;
    double Wmin = 0.4;
    double C1 = 0.5;
    double C2 = 0.5;
    std::size_t Gbest = 20;
    std::size_t NMPC = 20;
    std::size_t Nbhd = 3;

    bool operator==(const AlgorithmConfig&) const = default;
};

struct ExperimentConfig {
    ProblemConfig problem;
    AlgorithmConfig algorithm;
    std::size_t runs = 20;
    std::size_t iterations = 400;
    std::uint64_t base_seed = 0;
    std::vector<std::size_t> checkpoints;
    std::string output;
    std::size_t threads = 1;

    // Checkpoints in effect: the configured ones, or just the final iteration.
    std::vector<std::size_t> effective_checkpoints() const
    {
        return checkpoints.empty() ? std::vector<std::size_t>{iterations} : checkpoints;
    }

    bool operator==(const ExperimentConfig&) const = default;
};

namespace detail {

using boost::property_tree::ptree;

inline const std::set<std::string>& known_keys(const std::string& section)
{
    static const std::set<std::string> problem{"kind",     "rows",     "cols",         "spacing",  "quadrant_centers",
                                               "instance", "function", "bits_per_dim", "dimension"};
    static const std::set<std::string> algorithm{"id", "pop",  "Pc", "Pm", "Elit",  "Onl",  "Emp", "Sco",
                                                 "Wmax", "Wmin", "C1", "C2", "Gbest", "NMPC", "Nbhd"};
    static const std::set<std::string> run{"runs", "iterations", "base_seed", "checkpoints", "output", "threads"};
    static const std::set<std::string> none;
    if (section == "problem")
        return problem;
    if (section == "algorithm")
        return algorithm;
    if (section == "run")
        return run;
    return none;
}

inline std::string trim(std::string s)
{
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& field, const std::string& text)
{
    std::istringstream ss(trim(text));
    T value{};
    if constexpr (std::is_unsigned_v<T>) {
        if (!ss.str().empty() && ss.str().front() == '-')
            throw ConfigError("field '" + field + "': expected a non-negative integer, got '" + text + "'");
    }
    if (!(ss >> value) || !ss.eof())
        throw ConfigError("field '" + field + "': cannot parse '" + text + "'");
    return value;
}

inline bool parse_bool(const std::string& field, const std::string& text)
{
    const auto t = trim(text);
    if (t == "true" || t == "1" || t == "yes")
        return true;
    if (t == "false" || t == "0" || t == "no")
        return false;
    throw ConfigError("field '" + field + "': expected true/false, got '" + text + "'");
}

class Reader {
public:
    explicit Reader(const ptree& root) : root_(root) {}

    bool has(const std::string& path) const { return root_.get_child_optional(ptree::path_type(path, '.')).has_value(); }

    std::string raw(const std::string& path) const
    {
        auto v = root_.get_optional<std::string>(ptree::path_type(path, '.'));
        if (!v)
            throw ConfigError("missing required field '" + path + "'");
        return trim(*v);
    }

    template <typename T>
    void number(const std::string& path, T& out) const
    {
        if (has(path))
            out = parse_number<T>(path, raw(path));
    }

    void text(const std::string& path, std::string& out) const
    {
        if (has(path))
            out = raw(path);
    }

private:
    const ptree& root_;
};

} // namespace detail

inline void validate(const ExperimentConfig& c)
{
    if (c.problem.kind != "allocation" && c.problem.kind != "benchmark")
        throw ConfigError("field 'problem.kind': unknown problem kind '" + c.problem.kind +
                          "' (expected allocation or benchmark)");
    if (c.problem.kind == "benchmark") {
        if (c.problem.function.empty())
            throw ConfigError("missing required field 'problem.function'");
        try {
            parse_benchmark_id(c.problem.function);
        } catch (const std::invalid_argument&) {
            throw ConfigError("field 'problem.function': unknown benchmark '" + c.problem.function + "'");
        }
    }
    if (c.runs < 1)
        throw ConfigError("field 'run.runs': must be at least 1");
    if (c.output.empty())
        throw ConfigError("missing required field 'run.output'");
    if (c.threads < 1)
        throw ConfigError("field 'run.threads': must be at least 1");
    if (!std::is_sorted(c.checkpoints.begin(), c.checkpoints.end()))
        throw ConfigError("field 'run.checkpoints': must be sorted ascending");
    for (auto cp : c.effective_checkpoints())
        if (cp < 1 || cp > c.iterations)
            throw ConfigError("field 'run.checkpoints': " + std::to_string(cp) + " outside [1, iterations]");
}

inline ExperimentConfig parse_config(std::istream& in, const std::string& origin = "config")
{
    detail::ptree root;
    try {
        boost::property_tree::ini_parser::read_ini(in, root);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigError(origin + ":" + std::to_string(e.line()) + ": " + e.message());
    }
    for (const auto& [section, body] : root) {
        if (!body.data().empty())
            throw ConfigError(origin + ": key '" + section + "' must live inside a section");
        const auto& keys = detail::known_keys(section);
        if (keys.empty())
            throw ConfigError(origin + ": unknown section '[" + section + "]'");
        for (const auto& kv : body)
            if (!keys.count(kv.first))
                throw ConfigError(origin + ": unknown field '" + section + "." + kv.first + "'");
    }

    detail::Reader r(root);
    ExperimentConfig c;
    c.problem.kind = r.raw("problem.kind");
    r.number("problem.rows", c.problem.rows);
    r.number("problem.cols", c.problem.cols);
    r.number("problem.spacing", c.problem.spacing);
    if (r.has("problem.quadrant_centers"))
        c.problem.quadrant_centers = detail::parse_bool("problem.quadrant_centers", r.raw("problem.quadrant_centers"));
    r.text("problem.instance", c.problem.instance);
    r.text("problem.function", c.problem.function);
    r.number("problem.bits_per_dim", c.problem.bits_per_dim);
    r.number("problem.dimension", c.problem.dimension);

    c.algorithm.id = parse_algorithm_id(r.raw("algorithm.id"));
    auto& a = c.algorithm;
    r.number("algorithm.pop", a.pop);
    r.number("algorithm.Pc", a.Pc);
    r.number("algorithm.Pm", a.Pm);
    r.number("algorithm.Elit", a.Elit);
    r.number("algorithm.Onl", a.Onl);
    r.number("algorithm.Emp", a.Emp);
    r.number("algorithm.Sco", a.Sco);
    r.number("algorithm.Wmax", a.Wmax);
    r.number("algorithm.Wmin", a.Wmin);
    r.number("algorithm.C1", a.C1);
    r.number("algorithm.C2", a.C2);
    r.number("algorithm.Gbest", a.Gbest);
    r.number("algorithm.NMPC", a.NMPC);
    r.number("algorithm.Nbhd", a.Nbhd);

    c.runs = detail::parse_number<std::size_t>("run.runs", r.raw("run.runs"));
    c.iterations = detail::parse_number<std::size_t>("run.iterations", r.raw("run.iterations"));
    r.number("run.base_seed", c.base_seed);
    r.number("run.threads", c.threads);
    c.output = r.raw("run.output");
    if (r.has("run.checkpoints")) {
        std::stringstream ss(r.raw("run.checkpoints"));
        std::string item;
        while (std::getline(ss, item, ','))
            c.checkpoints.push_back(detail::parse_number<std::size_t>("run.checkpoints", item));
    }
    validate(c);
    return c;
}

inline ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in, path);
}

inline std::string serialize_config(const ExperimentConfig& c)
{
    std::ostringstream os;
    const auto real = [](double v) { return format_real(v); };
    os << "[problem]\n"
       << "kind = " << c.problem.kind << '\n'
       << "rows = " << c.problem.rows << '\n'
       << "cols = " << c.problem.cols << '\n'
       << "spacing = " << real(c.problem.spacing) << '\n'
       << "quadrant_centers = " << (c.problem.quadrant_centers ? "true" : "false") << '\n';
    if (!c.problem.instance.empty())
        os << "instance = " << c.problem.instance << '\n';
    if (!c.problem.function.empty())
        os << "function = " << c.problem.function << '\n';
    os << "bits_per_dim = " << c.problem.bits_per_dim << '\n'
       << "dimension = " << c.problem.dimension << "\n\n";

    const auto& a = c.algorithm;
    os << "[algorithm]\n"
       << "id = " << to_string(a.id) << '\n'
       << "pop = " << a.pop << '\n'
       << "Pc = " << real(a.Pc) << '\n'
       << "Pm = " << real(a.Pm) << '\n'
       << "Elit = " << a.Elit << '\n'
       << "Onl = " << a.Onl << '\n'
       << "Emp = " << a.Emp << '\n'
       << "Sco = " << a.Sco << '\n'
       << "Wmax = " << real(a.Wmax) << '\n'
       << "Wmin = " << real(a.Wmin) << '\n'
       << "C1 = " << real(a.C1) << '\n'
       << "C2 = " << real(a.C2) << '\n'
       << "Gbest = " << a.Gbest << '\n'
       << "NMPC = " << a.NMPC << '\n'
       << "Nbhd = " << a.Nbhd << "\n\n";

    os << "[run]\n"
       << "runs = " << c.runs << '\n'
       << "iterations = " << c.iterations << '\n'
       << "base_seed = " << c.base_seed << '\n';
    if (!c.checkpoints.empty()) {
        os << "checkpoints = ";
        for (std::size_t i = 0; i < c.checkpoints.size(); ++i)
            os << (i ? "," : "") << c.checkpoints[i];
        os << '\n';
    }
    os << "output = " << c.output << '\n'
       << "threads = " << c.threads << '\n';
    return os.str();
}

} // namespace ompcdpso::harness
