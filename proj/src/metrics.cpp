#include "sbal/metrics.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace sbal {

namespace {

using NodeId = SignedDigraph::NodeId;

// closed / all directed two-paths (u->v->w, u != w; closed iff u->w).
std::optional<double> directed_transitivity(const SignedDigraph& g) {
    std::uint64_t paths = 0, closed = 0;
    const auto n = static_cast<NodeId>(g.node_count());
    for (NodeId v = 0; v < n; ++v) {
        for (const auto& ain : g.in(v)) {
            if (ain.to == v) continue;
            for (const auto& aout : g.out(v)) {
                if (aout.to == v || aout.to == ain.to) continue;
                ++paths;
                if (g.has_arc(ain.to, aout.to)) ++closed;
            }
        }
    }
    if (paths == 0) return std::nullopt;
    return static_cast<double>(closed) / static_cast<double>(paths);
}

// Mean local clustering on the undirected projection, over nodes with at
// least two neighbors (so isolates and pendants never shift the value).
std::optional<double> mean_local_clustering(const SignedDigraph& g) {
    const auto n = static_cast<NodeId>(g.node_count());
    double sum = 0.0;
    std::size_t eligible = 0;
    for (NodeId u = 0; u < n; ++u) {
        auto nb = g.neighbors(u);
        std::size_t k = nb.size();
        if (k < 2) continue;
        std::uint64_t links = 0;
        for (std::size_t i = 0; i < k; ++i) {
            auto ni = g.neighbors(nb[i]);
            for (std::size_t j = i + 1; j < k; ++j)
                if (std::binary_search(ni.begin(), ni.end(), nb[j])) ++links;
        }
        sum += 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
        ++eligible;
    }
    if (eligible == 0) return std::nullopt;
    return sum / static_cast<double>(eligible);
}

std::optional<double> freeman_centralization(const SignedDigraph& g) {
    const auto n = static_cast<NodeId>(g.node_count());
    if (n < 3) return std::nullopt;
    std::size_t dmax = 0;
    for (NodeId u = 0; u < n; ++u) dmax = std::max(dmax, g.degree(u));
    double sum = 0.0;
    for (NodeId u = 0; u < n; ++u) sum += static_cast<double>(dmax - g.degree(u));
    double denom = 2.0 * static_cast<double>(n - 1) * static_cast<double>(n - 2);
    return sum / denom;
}

} // namespace

NetworkStats descriptive_stats(const SignedDigraph& g) {
    NetworkStats s;
    const auto n = static_cast<NodeId>(g.node_count());
    s.node_count = g.node_count();
    s.edge_count = g.arc_count();

    if (n >= 2)
        s.density = static_cast<double>(g.arc_count()) /
                    (static_cast<double>(n) * static_cast<double>(n - 1));

    s.transitivity = directed_transitivity(g);
    s.degree_centralization = freeman_centralization(g);
    s.clustering_coefficient = mean_local_clustering(g);

    // Weak components over the undirected projection.
    std::vector<NodeId> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<NodeId>> members;
    for (NodeId u = 0; u < n; ++u) {
        if (comp[static_cast<std::size_t>(u)] != -1) continue;
        auto id = static_cast<NodeId>(members.size());
        members.emplace_back();
        std::queue<NodeId> q;
        q.push(u);
        comp[static_cast<std::size_t>(u)] = id;
        while (!q.empty()) {
            NodeId x = q.front();
            q.pop();
            members[static_cast<std::size_t>(id)].push_back(x);
            for (NodeId y : g.neighbors(x)) {
                if (comp[static_cast<std::size_t>(y)] != -1) continue;
                comp[static_cast<std::size_t>(y)] = id;
                q.push(y);
            }
        }
    }
    s.component_count = members.size();
    const std::vector<NodeId>* largest = nullptr;
    for (const auto& m : members)
        if (!largest || m.size() > largest->size()) largest = &m;
    s.largest_component_size = largest ? largest->size() : 0;

    // Mean shortest-path length over unordered node pairs of the largest
    // component (undirected hops).
    if (largest && largest->size() >= 2) {
        std::uint64_t dist_sum = 0, pairs = 0;
        std::vector<int> dist(static_cast<std::size_t>(n));
        for (NodeId src : *largest) {
            std::fill(dist.begin(), dist.end(), -1);
            std::queue<NodeId> q;
            q.push(src);
            dist[static_cast<std::size_t>(src)] = 0;
            while (!q.empty()) {
                NodeId x = q.front();
                q.pop();
                for (NodeId y : g.neighbors(x)) {
                    if (dist[static_cast<std::size_t>(y)] != -1) continue;
                    dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                    q.push(y);
                }
            }
            for (NodeId dst : *largest) {
                if (dst <= src) continue;
                dist_sum += static_cast<std::uint64_t>(dist[static_cast<std::size_t>(dst)]);
                ++pairs;
            }
        }
        s.average_path_length = static_cast<double>(dist_sum) / static_cast<double>(pairs);
    }

    return s;
}

} // namespace sbal
