#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sbal/records.hpp"

namespace sbal {

enum class AggregationPolicy { Mean, First, Last };

// Immutable signed directed graph.  Node ids are opaque strings; indices
// are assigned in sorted-name order so identical inputs always produce
// identical node numbering regardless of record order.
class SignedDigraph {
public:
    using NodeId = std::int32_t;

    struct Arc {
        NodeId to;
        double weight; // nonzero; sign(weight) is the edge sign
        int sign() const { return weight > 0 ? +1 : -1; }
    };

    std::size_t node_count() const { return names_.size(); }
    std::size_t arc_count() const { return arc_count_; }

    const std::string& name(NodeId u) const { return names_[static_cast<std::size_t>(u)]; }
    std::span<const std::string> names() const { return names_; }
    std::optional<NodeId> index_of(std::string_view name) const;

    // Out-/in-arcs sorted by target/source id.  Self-loops, when present,
    // appear in both lists.
    std::span<const Arc> out(NodeId u) const { return out_[static_cast<std::size_t>(u)]; }
    std::span<const Arc> in(NodeId u) const { return in_[static_cast<std::size_t>(u)]; }

    // Sorted union of out- and in-neighbors, excluding u itself.
    std::span<const NodeId> neighbors(NodeId u) const { return nbrs_[static_cast<std::size_t>(u)]; }

    // nullptr when the arc u->v is absent.
    const Arc* arc(NodeId u, NodeId v) const;
    bool has_arc(NodeId u, NodeId v) const { return arc(u, v) != nullptr; }

    // In-degree + out-degree; a self-loop contributes 2.
    std::size_t degree(NodeId u) const {
        return out_[static_cast<std::size_t>(u)].size() + in_[static_cast<std::size_t>(u)].size();
    }

    std::size_t self_loop_count() const { return self_loops_; }

    void check_node(NodeId u) const;

private:
    std::vector<std::string> names_; // sorted; index == NodeId
    std::vector<std::vector<Arc>> out_;
    std::vector<std::vector<Arc>> in_;
    std::vector<std::vector<NodeId>> nbrs_;
    std::size_t arc_count_ = 0;
    std::size_t self_loops_ = 0;

    SignedDigraph() = default;
    // names must be sorted and unique; arcs are (source, target, weight).
    static SignedDigraph from_arcs(std::vector<std::string> names,
                                   std::vector<std::tuple<NodeId, NodeId, double>> arcs);

    friend SignedDigraph build_graph(std::span<const SignedEdgeRecord>, AggregationPolicy);
    friend SignedDigraph prune(const SignedDigraph&, struct PruneOptions);
};

// Combines duplicate (source, target) records into one edge per ordered
// pair.  Mean sums scores in sorted order (permutation-invariant); first
// and last pick by ordinal, breaking ties by stream position.  Pairs whose
// combined score is exactly zero are dropped.
SignedDigraph build_graph(std::span<const SignedEdgeRecord> edges, AggregationPolicy policy);

struct PruneOptions {
    bool self_loops = true;
    bool isolates = true;
    bool pendants = true; // total degree exactly 1, peeled to fixpoint
};

// Returns a pruned copy; the input graph is untouched.  Self-loops are
// removed first (when flagged), then isolate/pendant peeling iterates
// until nothing changes.
SignedDigraph prune(const SignedDigraph& g, PruneOptions opts = {});

// Rewrites record endpoints through an alias -> canonical map; names that
// are not aliases pass through unchanged.
void apply_alias_map(std::vector<SignedEdgeRecord>& records,
                     const std::unordered_map<std::string, std::string>& aliases);
void apply_alias_map(std::vector<RawRecord>& records,
                     const std::unordered_map<std::string, std::string>& aliases);

} // namespace sbal
