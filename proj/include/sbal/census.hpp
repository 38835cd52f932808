#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "sbal/graph.hpp"

namespace sbal {

// The 16 MAN (mutual/asymmetric/null) triad isomorphism classes, in the
// conventional census order.
enum class TriadType : std::uint8_t {
    T003, T012, T102, T021D, T021U, T021C, T111D, T111U,
    T030T, T030C, T201, T120D, T120U, T120C, T210, T300,
};

inline constexpr std::array<TriadType, 16> kAllTriadTypes = {
    TriadType::T003,  TriadType::T012,  TriadType::T102,  TriadType::T021D,
    TriadType::T021U, TriadType::T021C, TriadType::T111D, TriadType::T111U,
    TriadType::T030T, TriadType::T030C, TriadType::T201,  TriadType::T120D,
    TriadType::T120U, TriadType::T120C, TriadType::T210,  TriadType::T300,
};

// The four classes whose semicycles are all transitive; only these enter
// balance computation.
inline constexpr std::array<TriadType, 4> kTransitiveTypes = {
    TriadType::T030T, TriadType::T120D, TriadType::T120U, TriadType::T300,
};

std::string_view to_string(TriadType t);
std::optional<TriadType> triad_type_from_string(std::string_view s);

constexpr bool is_transitive(TriadType t) {
    return t == TriadType::T030T || t == TriadType::T120D ||
           t == TriadType::T120U || t == TriadType::T300;
}

// 0..3 for 030T/120D/120U/300, -1 otherwise.
constexpr int transitive_index(TriadType t) {
    switch (t) {
        case TriadType::T030T: return 0;
        case TriadType::T120D: return 1;
        case TriadType::T120U: return 2;
        case TriadType::T300: return 3;
        default: return -1;
    }
}

// Number of transitive semicycles the type contains (0 for the other 12).
constexpr int transitive_semicycle_count(TriadType t) {
    switch (t) {
        case TriadType::T030T: return 1;
        case TriadType::T120D: return 2;
        case TriadType::T120U: return 2;
        case TriadType::T300: return 6;
        default: return 0;
    }
}

enum class DyadKind : std::uint8_t { Null, Asymmetric, Mutual };
enum class DyadDirection : std::uint8_t { None, Forward, Backward };

struct DyadState {
    DyadKind kind = DyadKind::Null;
    DyadDirection direction = DyadDirection::None; // meaningful only when Asymmetric
    bool operator==(const DyadState&) const = default;
};

DyadState dyad_state(const SignedDigraph& g, SignedDigraph::NodeId u, SignedDigraph::NodeId v);

struct CensusTable {
    std::array<std::uint64_t, 16> counts{};

    std::uint64_t& operator[](TriadType t) { return counts[static_cast<std::size_t>(t)]; }
    std::uint64_t operator[](TriadType t) const { return counts[static_cast<std::size_t>(t)]; }
    std::uint64_t total() const;
    bool operator==(const CensusTable&) const = default;
};

// 6-bit adjacency code for the ordered triple (u,v,w):
// bit 0: u->v, bit 1: v->u, bit 2: u->w, bit 3: w->u, bit 4: v->w, bit 5: w->v.
int triad_code(const SignedDigraph& g, SignedDigraph::NodeId u, SignedDigraph::NodeId v,
               SignedDigraph::NodeId w);

// MAN class for a 6-bit code; total function, invariant under any
// reordering of the underlying triple.
TriadType classify_code(int code);

// Classifies three distinct nodes; order does not matter.
TriadType classify_triad(const SignedDigraph& g, SignedDigraph::NodeId a,
                         SignedDigraph::NodeId b, SignedDigraph::NodeId c);

// Exact counts over all C(n,3) triples.  Connected triples are found by
// walking linked node pairs; the null-heavy classes (003/012/102) are
// derived analytically instead of enumerated.  Results are identical for
// every thread count.
CensusTable full_census(const SignedDigraph& g, unsigned threads = 1);

struct TransitiveTriad {
    TriadType type;
    std::array<SignedDigraph::NodeId, 3> nodes; // ascending
};

// Streams every triad of a transitive type whose minimum node lies in
// [first, last), in ascending (a,b,c) order.
void for_each_transitive_triad(const SignedDigraph& g, SignedDigraph::NodeId first,
                               SignedDigraph::NodeId last,
                               const std::function<void(const TransitiveTriad&)>& fn);

inline void for_each_transitive_triad(const SignedDigraph& g,
                                      const std::function<void(const TransitiveTriad&)>& fn) {
    for_each_transitive_triad(g, 0, static_cast<SignedDigraph::NodeId>(g.node_count()), fn);
}

std::vector<TransitiveTriad> enumerate_transitive_triads(const SignedDigraph& g);

} // namespace sbal
