#include "sbal/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <tuple>

namespace sbal {

std::optional<SignedDigraph::NodeId> SignedDigraph::index_of(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<NodeId>(it - names_.begin());
}

const SignedDigraph::Arc* SignedDigraph::arc(NodeId u, NodeId v) const {
    const auto& arcs = out_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(arcs.begin(), arcs.end(), v,
                               [](const Arc& a, NodeId id) { return a.to < id; });
    if (it == arcs.end() || it->to != v) return nullptr;
    return &*it;
}

void SignedDigraph::check_node(NodeId u) const {
    if (u < 0 || static_cast<std::size_t>(u) >= names_.size())
        throw std::out_of_range("SignedDigraph: no node with index " + std::to_string(u));
}

SignedDigraph SignedDigraph::from_arcs(std::vector<std::string> names,
                                       std::vector<std::tuple<NodeId, NodeId, double>> arcs) {
    SignedDigraph g;
    g.names_ = std::move(names);
    std::size_t n = g.names_.size();
    g.out_.resize(n);
    g.in_.resize(n);
    g.nbrs_.resize(n);
    for (const auto& [u, v, w] : arcs) {
        g.out_[static_cast<std::size_t>(u)].push_back({v, w});
        g.in_[static_cast<std::size_t>(v)].push_back({u, w});
        if (u == v) {
            ++g.self_loops_;
        } else {
            g.nbrs_[static_cast<std::size_t>(u)].push_back(v);
            g.nbrs_[static_cast<std::size_t>(v)].push_back(u);
        }
        ++g.arc_count_;
    }
    auto by_target = [](const Arc& a, const Arc& b) { return a.to < b.to; };
    for (std::size_t i = 0; i < n; ++i) {
        std::sort(g.out_[i].begin(), g.out_[i].end(), by_target);
        std::sort(g.in_[i].begin(), g.in_[i].end(), by_target);
        auto& nb = g.nbrs_[i];
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
}

SignedDigraph build_graph(std::span<const SignedEdgeRecord> edges, AggregationPolicy policy) {
    using NodeId = SignedDigraph::NodeId;

    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (e.source.empty() || e.target.empty())
            throw std::invalid_argument("build_graph: record " + std::to_string(i) +
                                        " has an empty node id");
        if (!std::isfinite(e.weight) || e.weight == 0.0)
            throw std::invalid_argument("build_graph: record " + std::to_string(i) +
                                        " has weight " + std::to_string(e.weight) +
                                        " (must be finite and nonzero)");
    }

    std::vector<std::string> names;
    names.reserve(edges.size() * 2);
    for (const auto& e : edges) {
        names.push_back(e.source);
        names.push_back(e.target);
    }
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());

    auto index_of = [&](const std::string& s) {
        return static_cast<NodeId>(std::lower_bound(names.begin(), names.end(), s) -
                                   names.begin());
    };

    struct Obs {
        double weight;
        std::int64_t ordinal;
        std::size_t stream_pos;
    };
    std::map<std::pair<NodeId, NodeId>, std::vector<Obs>> groups;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        groups[{index_of(e.source), index_of(e.target)}].push_back({e.weight, e.ordinal, i});
    }

    std::vector<std::tuple<NodeId, NodeId, double>> arcs;
    arcs.reserve(groups.size());
    for (auto& [pair, obs] : groups) {
        double w = 0.0;
        switch (policy) {
            case AggregationPolicy::Mean: {
                // Sum in value order so the mean never depends on record order.
                std::vector<double> ws;
                ws.reserve(obs.size());
                for (const auto& o : obs) ws.push_back(o.weight);
                std::sort(ws.begin(), ws.end());
                double sum = 0.0;
                for (double x : ws) sum += x;
                w = sum / static_cast<double>(ws.size());
                break;
            }
            case AggregationPolicy::First: {
                const Obs* best = &obs[0];
                for (const auto& o : obs)
                    if (std::tie(o.ordinal, o.stream_pos) < std::tie(best->ordinal, best->stream_pos))
                        best = &o;
                w = best->weight;
                break;
            }
            case AggregationPolicy::Last: {
                const Obs* best = &obs[0];
                for (const auto& o : obs)
                    if (std::tie(o.ordinal, o.stream_pos) > std::tie(best->ordinal, best->stream_pos))
                        best = &o;
                w = best->weight;
                break;
            }
        }
        if (w == 0.0) continue; // combined score neutral -> no edge
        arcs.emplace_back(pair.first, pair.second, w);
    }

    return SignedDigraph::from_arcs(std::move(names), std::move(arcs));
}

SignedDigraph prune(const SignedDigraph& g, PruneOptions opts) {
    using NodeId = SignedDigraph::NodeId;
    const auto n = static_cast<NodeId>(g.node_count());

    std::vector<std::tuple<NodeId, NodeId, double>> arcs;
    arcs.reserve(g.arc_count());
    for (NodeId u = 0; u < n; ++u)
        for (const auto& a : g.out(u)) {
            if (opts.self_loops && a.to == u) continue;
            arcs.emplace_back(u, a.to, a.weight);
        }

    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    if (opts.isolates || opts.pendants) {
        for (;;) {
            std::vector<std::size_t> deg(static_cast<std::size_t>(n), 0);
            for (const auto& [u, v, w] : arcs) {
                deg[static_cast<std::size_t>(u)]++;
                deg[static_cast<std::size_t>(v)]++;
            }
            bool changed = false;
            for (NodeId u = 0; u < n; ++u) {
                if (removed[static_cast<std::size_t>(u)]) continue;
                std::size_t d = deg[static_cast<std::size_t>(u)];
                if ((opts.isolates && d == 0) || (opts.pendants && d == 1)) {
                    removed[static_cast<std::size_t>(u)] = true;
                    changed = true;
                }
            }
            if (!changed) break;
            std::erase_if(arcs, [&](const auto& t) {
                return removed[static_cast<std::size_t>(std::get<0>(t))] ||
                       removed[static_cast<std::size_t>(std::get<1>(t))];
            });
        }
    }

    std::vector<std::string> names;
    std::vector<NodeId> remap(static_cast<std::size_t>(n), -1);
    for (NodeId u = 0; u < n; ++u) {
        if (removed[static_cast<std::size_t>(u)]) continue;
        remap[static_cast<std::size_t>(u)] = static_cast<NodeId>(names.size());
        names.push_back(g.name(u));
    }
    for (auto& [u, v, w] : arcs) {
        u = remap[static_cast<std::size_t>(u)];
        v = remap[static_cast<std::size_t>(v)];
    }
    return SignedDigraph::from_arcs(std::move(names), std::move(arcs));
}

void apply_alias_map(std::vector<SignedEdgeRecord>& records,
                     const std::unordered_map<std::string, std::string>& aliases) {
    for (auto& r : records) {
        if (auto it = aliases.find(r.source); it != aliases.end()) r.source = it->second;
        if (auto it = aliases.find(r.target); it != aliases.end()) r.target = it->second;
    }
}

void apply_alias_map(std::vector<RawRecord>& records,
                     const std::unordered_map<std::string, std::string>& aliases) {
    for (auto& r : records) {
        if (auto it = aliases.find(r.source); it != aliases.end()) r.source = it->second;
        if (auto it = aliases.find(r.target); it != aliases.end()) r.target = it->second;
    }
}

} // namespace sbal
