#pragma once

#include <cstddef>
#include <optional>

#include "sbal/graph.hpp"

namespace sbal {

// Descriptive measures.  Fields that are undefined for the given graph
// (e.g. density with n < 2, path length with a singleton component) are
// left empty.
struct NetworkStats {
    std::size_t node_count = 0;
    std::size_t edge_count = 0;
    std::optional<double> density;                 // m / (n (n-1))
    std::optional<double> transitivity;            // closed / all directed two-paths
    std::optional<double> degree_centralization;   // Freeman, total degree
    std::optional<double> average_path_length;     // within largest undirected component
    std::optional<double> clustering_coefficient;  // mean local, undirected projection
    std::size_t component_count = 0;               // weak components
    std::size_t largest_component_size = 0;
};

NetworkStats descriptive_stats(const SignedDigraph& g);

} // namespace sbal
