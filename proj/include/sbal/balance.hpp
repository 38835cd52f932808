#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sbal/census.hpp"
#include "sbal/graph.hpp"
#include "sbal/rational.hpp"

namespace sbal {

// Ordered triple (a,b,c) with arcs a->b, b->c, a->c; non-cyclic by
// construction.  Signs are stored in that arc order.
struct Semicycle {
    std::array<SignedDigraph::NodeId, 3> nodes;
    std::array<int, 3> signs;

    int sign() const { return signs[0] * signs[1] * signs[2]; }
};

int semicycle_sign(const Semicycle& s);

// All transitive semicycles of one triad, in lexicographic order of the
// ordered triple.  Exactly 1/2/2/6 results for 030T/120D/120U/300; any
// other triad class is rejected.
std::vector<Semicycle> transitive_semicycles(const SignedDigraph& g,
                                             std::array<SignedDigraph::NodeId, 3> triad);

// Same, but also checks the caller's expectation of the triad's class.
std::vector<Semicycle> transitive_semicycles(const SignedDigraph& g,
                                             std::array<SignedDigraph::NodeId, 3> triad,
                                             TriadType expected);

enum class BalanceClass : std::uint8_t {
    CompletelyBalanced,
    PartiallyBalanced,
    CompletelyImbalanced,
};

std::string_view to_string(BalanceClass c);

struct TriadBalance {
    TriadType type = TriadType::T030T;
    std::array<SignedDigraph::NodeId, 3> nodes{}; // ascending
    int positive = 0; // positive semicycles
    int total = 0;    // all semicycles: 1, 2, or 6 by type

    Rational fraction() const { return Rational(positive, total); }
    BalanceClass classification() const {
        if (positive == total) return BalanceClass::CompletelyBalanced;
        if (positive == 0) return BalanceClass::CompletelyImbalanced;
        return BalanceClass::PartiallyBalanced;
    }
};

TriadBalance triad_balance(const SignedDigraph& g, const TransitiveTriad& triad);

struct TypeBalance {
    TriadType type = TriadType::T030T;
    std::uint64_t triad_count = 0;
    std::uint64_t cb = 0;
    std::uint64_t pb = 0;
    std::uint64_t ci = 0;
    std::uint64_t nonzero = 0; // triads with at least one positive semicycle
    std::uint64_t zero = 0;    // triad_count - nonzero

    // Mean of member fractions; empty when triad_count == 0.
    std::optional<Rational> ratio;
    // Secondary reading: nonzero / triad_count.
    std::optional<Rational> nonzero_share;

    bool operator==(const TypeBalance&) const = default;
};

// Aggregates balances of one type; every member must carry that type.
TypeBalance type_balance_ratio(std::span<const TriadBalance> balances, TriadType type);

// Mean of defined per-type ratios; empty when no type has any triads.
std::optional<Rational> overall_balance(std::span<const TypeBalance> types);

// Semicycle sign-pattern census, keyed by the number of negative signs:
// index 0 = +++, 1 = ++-, 2 = +--, 3 = ---.
struct SignCensus {
    std::array<std::uint64_t, 4> counts{};

    std::uint64_t total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
    std::optional<Rational> ratio(int negatives) const {
        auto t = total();
        if (t == 0) return std::nullopt;
        return Rational::of(counts[static_cast<std::size_t>(negatives)], t);
    }
    bool operator==(const SignCensus&) const = default;
};

inline constexpr std::array<std::string_view, 4> kSignPatternNames = {"+++", "++-", "+--", "---"};

SignCensus sign_census(std::span<const Semicycle> semicycles);

struct BalanceReport {
    std::array<TypeBalance, 4> per_type{}; // 030T, 120D, 120U, 300
    std::optional<Rational> overall;
    SignCensus signs;

    std::uint64_t triad_total() const {
        std::uint64_t t = 0;
        for (const auto& tb : per_type) t += tb.triad_count;
        return t;
    }
    bool operator==(const BalanceReport&) const = default;
};

// Full pipeline: enumerate transitive triads, score each, aggregate per
// type, average over non-empty types, and tally semicycle signs.  Exact
// arithmetic throughout; identical output for every thread count.
BalanceReport network_balance(const SignedDigraph& g, unsigned threads = 1);

} // namespace sbal
