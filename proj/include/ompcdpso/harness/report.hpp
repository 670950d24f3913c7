#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "../metrics.hpp"
#include "config.hpp"
#include "csv.hpp"

namespace ompcdpso::harness {

// One algorithm/problem cell of a comparison table, taken from the latest
// checkpoint summary found in a result directory.
struct ReportEntry {
    std::string algorithm;
    std::string problem;
    std::size_t checkpoint = 0;
    double best = 0.0;
    double mean = 0.0;
    double std_dev = 0.0;
    double avg_time = 0.0;
    std::filesystem::path source;
};

inline double parse_cell(const std::string& text, const std::string& where)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used == text.size())
            return v;
    } catch (const std::exception&) {
    }
    throw std::runtime_error(where + ": expected a number, got '" + text + "'");
}

inline std::vector<ReportEntry> read_summary_csv(const std::filesystem::path& path)
{
    const auto table = read_csv(path.string());
    const auto alg = table.column("algorithm"), prob = table.column("problem"), cp = table.column("checkpoint");
    const auto best = table.column("Best"), avg = table.column("AvgBest"), sd = table.column("StdDev"),
               t = table.column("AvgTRun");
    std::vector<ReportEntry> out;
    for (const auto& row : table.rows) {
        const auto where = path.string();
        out.push_back({row[alg], row[prob], static_cast<std::size_t>(parse_cell(row[cp], where)),
                       parse_cell(row[best], where), parse_cell(row[avg], where), parse_cell(row[sd], where),
                       parse_cell(row[t], where), path});
    }
    return out;
}

// Scans each root recursively; within a directory the highest checkpoint wins.
inline std::vector<ReportEntry> collect_report(const std::vector<std::filesystem::path>& roots)
{
    namespace fs = std::filesystem;
    std::map<fs::path, ReportEntry> latest;
    for (const auto& root : roots) {
        if (!fs::is_directory(root))
            throw std::runtime_error("report: '" + root.string() + "' is not a directory");
        std::vector<fs::path> files;
        for (const auto& entry : fs::recursive_directory_iterator(root)) {
            const auto name = entry.path().filename().string();
            if (entry.is_regular_file() && name.rfind("summary_", 0) == 0 && entry.path().extension() == ".csv")
                files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end());
        for (const auto& f : files)
            for (auto& e : read_summary_csv(f)) {
                auto it = latest.find(f.parent_path());
                if (it == latest.end() || e.checkpoint > it->second.checkpoint)
                    latest[f.parent_path()] = std::move(e);
            }
    }
    std::vector<ReportEntry> out;
    for (auto& [dir, e] : latest)
        out.push_back(std::move(e));
    if (out.empty())
        throw std::runtime_error("report: no summary files found");
    return out;
}

inline int algorithm_rank(const std::string& name)
{
    for (int i = 0; i < 4; ++i)
        if (name == to_string(kAllAlgorithms[i]))
            return i;
    return 4;
}

// Problem blocks with Best / Mean / Std / AvgTime rows and one column per algorithm.
inline std::string format_report(std::vector<ReportEntry> entries)
{
    std::stable_sort(entries.begin(), entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
        if (a.problem != b.problem)
            return a.problem < b.problem;
        return algorithm_rank(a.algorithm) < algorithm_rank(b.algorithm);
    });
    std::ostringstream os;
    std::size_t i = 0;
    while (i < entries.size()) {
        std::size_t j = i;
        while (j < entries.size() && entries[j].problem == entries[i].problem)
            ++j;
        char buf[64];
        os << "Function " << entries[i].problem << '\n';
        std::snprintf(buf, sizeof buf, "%-8s", "Result");
        os << buf;
        for (std::size_t k = i; k < j; ++k) {
            std::snprintf(buf, sizeof buf, " %16s", entries[k].algorithm.c_str());
            os << buf;
        }
        os << '\n';
        const auto row = [&](const char* label, auto get) {
            std::snprintf(buf, sizeof buf, "%-8s", label);
            os << buf;
            for (std::size_t k = i; k < j; ++k) {
                std::snprintf(buf, sizeof buf, " %16.10g", get(entries[k]));
                os << buf;
            }
            os << '\n';
        };
        row("Best", [](const ReportEntry& e) { return e.best; });
        row("Mean", [](const ReportEntry& e) { return e.mean; });
        row("Std", [](const ReportEntry& e) { return e.std_dev; });
        row("AvgTime", [](const ReportEntry& e) { return e.avg_time; });
        os << '\n';
        i = j;
    }
    return os.str();
}

inline std::string report_csv(const std::vector<ReportEntry>& entries)
{
    std::string out = "problem,algorithm,checkpoint,Best,Mean,Std,AvgTime\n";
    for (const auto& e : entries)
        out += e.problem + ',' + e.algorithm + ',' + std::to_string(e.checkpoint) + ',' + format_real(e.best) + ',' +
               format_real(e.mean) + ',' + format_real(e.std_dev) + ',' + format_real(e.avg_time, 6) + '\n';
    return out;
}

} // namespace ompcdpso::harness
