#pragma once

// Shared helpers for the test binaries.

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "sbal/graph.hpp"

namespace testutil {

// Builds a graph from (source, target, weight) triples; pairs must be
// unique so no aggregation kicks in.
inline sbal::SignedDigraph make_graph(
    const std::vector<std::tuple<std::string, std::string, double>>& arcs) {
    std::vector<sbal::SignedEdgeRecord> records;
    records.reserve(arcs.size());
    std::int64_t i = 0;
    for (const auto& [s, t, w] : arcs) records.push_back({s, t, w, i++});
    return sbal::build_graph(records, sbal::AggregationPolicy::Mean);
}

// Random signed digraph: every ordered pair (u != v) gets an arc with
// probability edge_p; the arc is positive with probability sign_p.
// Node names are zero-padded so name order equals numeric order.
inline sbal::SignedDigraph random_graph(std::mt19937& rng, int n, double edge_p, double sign_p) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::tuple<std::string, std::string, double>> arcs;
    char buf[16];
    auto name = [&](int i) {
        std::snprintf(buf, sizeof buf, "n%03d", i);
        return std::string(buf);
    };
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            if (coin(rng) >= edge_p) continue;
            arcs.emplace_back(name(u), name(v), coin(rng) < sign_p ? 1.0 : -1.0);
        }
    // Nodes with no arcs would vanish (build collects names from records),
    // which is fine for these tests.
    if (arcs.empty()) arcs.emplace_back(name(0), name(1), 1.0);
    return make_graph(arcs);
}

// Same graph with every sign negated.
inline sbal::SignedDigraph negated(const sbal::SignedDigraph& g) {
    std::vector<std::tuple<std::string, std::string, double>> arcs;
    for (sbal::SignedDigraph::NodeId u = 0; u < static_cast<sbal::SignedDigraph::NodeId>(g.node_count()); ++u)
        for (const auto& a : g.out(u)) arcs.emplace_back(g.name(u), g.name(a.to), -a.weight);
    return make_graph(arcs);
}

// Unique temp file that cleans up after itself.
class TempFile {
public:
    explicit TempFile(const std::string& contents, const std::string& suffix = ".txt") {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("sbal_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) +
                 suffix);
        std::ofstream out(path_);
        out << contents;
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }
    std::string str() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

} // namespace testutil
