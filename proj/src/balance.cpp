#include "sbal/balance.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

namespace sbal {

namespace {

// The six orderings (a,b,c) of a triple, with the adjacency-code bits the
// ordering needs (arcs a->b, b->c, a->c).  Bit layout as in triad_code.
struct Ordering {
    std::uint8_t a, b, c;
    std::uint8_t ab, bc, ac;
};

constexpr Ordering kOrderings[6] = {
    {0, 1, 2, 0, 4, 2}, {0, 2, 1, 2, 5, 0}, {1, 0, 2, 1, 2, 4},
    {1, 2, 0, 4, 3, 1}, {2, 0, 1, 3, 0, 5}, {2, 1, 0, 5, 1, 3},
};

// Arc endpoints (as triple positions) per code bit.
constexpr std::uint8_t kBitFrom[6] = {0, 1, 0, 2, 1, 2};
constexpr std::uint8_t kBitTo[6] = {1, 0, 2, 0, 2, 1};

// Signs of the arcs present in `code`, indexed by code bit.
void arc_signs(const SignedDigraph& g, const std::array<SignedDigraph::NodeId, 3>& t, int code,
               int out_signs[6]) {
    for (int bit = 0; bit < 6; ++bit) {
        if (!(code & (1 << bit))) continue;
        out_signs[bit] = g.arc(t[kBitFrom[bit]], t[kBitTo[bit]])->sign();
    }
}

std::array<SignedDigraph::NodeId, 3> sorted_triple(std::array<SignedDigraph::NodeId, 3> t) {
    std::sort(t.begin(), t.end());
    return t;
}

} // namespace

int semicycle_sign(const Semicycle& s) { return s.sign(); }

std::string_view to_string(BalanceClass c) {
    switch (c) {
        case BalanceClass::CompletelyBalanced: return "CB";
        case BalanceClass::PartiallyBalanced: return "PB";
        case BalanceClass::CompletelyImbalanced: return "CI";
    }
    return "?";
}

std::vector<Semicycle> transitive_semicycles(const SignedDigraph& g,
                                             std::array<SignedDigraph::NodeId, 3> triad) {
    auto t = sorted_triple(triad);
    TriadType type = classify_triad(g, t[0], t[1], t[2]);
    if (!is_transitive(type))
        throw std::invalid_argument("transitive_semicycles: triad class " +
                                    std::string(to_string(type)) +
                                    " is not one of 030T/120D/120U/300");

    int code = triad_code(g, t[0], t[1], t[2]);
    int signs[6] = {};
    arc_signs(g, t, code, signs);

    std::vector<Semicycle> out;
    out.reserve(static_cast<std::size_t>(transitive_semicycle_count(type)));
    for (const auto& o : kOrderings) {
        int need = (1 << o.ab) | (1 << o.bc) | (1 << o.ac);
        if ((code & need) != need) continue;
        out.push_back({{t[o.a], t[o.b], t[o.c]}, {signs[o.ab], signs[o.bc], signs[o.ac]}});
    }
    return out;
}

std::vector<Semicycle> transitive_semicycles(const SignedDigraph& g,
                                             std::array<SignedDigraph::NodeId, 3> triad,
                                             TriadType expected) {
    auto t = sorted_triple(triad);
    TriadType actual = classify_triad(g, t[0], t[1], t[2]);
    if (actual != expected)
        throw std::invalid_argument("transitive_semicycles: triad is " +
                                    std::string(to_string(actual)) + ", expected " +
                                    std::string(to_string(expected)));
    return transitive_semicycles(g, triad);
}

TriadBalance triad_balance(const SignedDigraph& g, const TransitiveTriad& triad) {
    auto semis = transitive_semicycles(g, triad.nodes, triad.type);
    TriadBalance tb;
    tb.type = triad.type;
    tb.nodes = sorted_triple(triad.nodes);
    tb.total = static_cast<int>(semis.size());
    for (const auto& s : semis)
        if (s.sign() > 0) ++tb.positive;
    return tb;
}

TypeBalance type_balance_ratio(std::span<const TriadBalance> balances, TriadType type) {
    if (!is_transitive(type))
        throw std::invalid_argument("type_balance_ratio: " + std::string(to_string(type)) +
                                    " is not a transitive type");
    TypeBalance out;
    out.type = type;
    __int128 sum6 = 0; // fraction numerators over the common denominator 6
    for (std::size_t i = 0; i < balances.size(); ++i) {
        const TriadBalance& b = balances[i];
        if (b.type != type)
            throw std::invalid_argument("type_balance_ratio: balance " + std::to_string(i) +
                                        " has type " + std::string(to_string(b.type)) +
                                        ", expected " + std::string(to_string(type)));
        ++out.triad_count;
        switch (b.classification()) {
            case BalanceClass::CompletelyBalanced: ++out.cb; break;
            case BalanceClass::PartiallyBalanced: ++out.pb; break;
            case BalanceClass::CompletelyImbalanced: ++out.ci; break;
        }
        if (b.positive > 0) ++out.nonzero;
        sum6 += b.positive * (6 / b.total);
    }
    out.zero = out.triad_count - out.nonzero;
    if (out.triad_count > 0) {
        out.ratio = Rational::of(sum6, 6 * static_cast<__int128>(out.triad_count));
        out.nonzero_share = Rational::of(out.nonzero, out.triad_count);
    }
    return out;
}

std::optional<Rational> overall_balance(std::span<const TypeBalance> types) {
    Rational sum;
    int k = 0;
    for (const auto& t : types) {
        if (t.triad_count == 0) continue;
        if (!t.ratio) throw std::invalid_argument("overall_balance: non-empty type without ratio");
        sum = sum + *t.ratio;
        ++k;
    }
    if (k == 0) return std::nullopt;
    return sum / Rational(k, 1);
}

SignCensus sign_census(std::span<const Semicycle> semicycles) {
    SignCensus out;
    for (const auto& s : semicycles) {
        int neg = 0;
        for (int x : s.signs)
            if (x < 0) ++neg;
        ++out.counts[static_cast<std::size_t>(neg)];
    }
    return out;
}

namespace {

struct BalanceAcc {
    std::uint64_t count[4] = {};
    std::uint64_t cb[4] = {};
    std::uint64_t pb[4] = {};
    std::uint64_t ci[4] = {};
    std::uint64_t nonzero[4] = {};
    std::uint64_t sum6[4] = {}; // per-triad fraction numerators over denominator 6
    std::uint64_t signs[4] = {}; // semicycles by number of negative arcs

    void merge(const BalanceAcc& o) {
        for (int i = 0; i < 4; ++i) {
            count[i] += o.count[i];
            cb[i] += o.cb[i];
            pb[i] += o.pb[i];
            ci[i] += o.ci[i];
            nonzero[i] += o.nonzero[i];
            sum6[i] += o.sum6[i];
            signs[i] += o.signs[i];
        }
    }
};

void balance_stripe(const SignedDigraph& g, unsigned stripe, unsigned step, BalanceAcc& acc) {
    using NodeId = SignedDigraph::NodeId;
    const auto n = static_cast<NodeId>(g.node_count());

    auto visit = [&](const TransitiveTriad& triad) {
        int idx = transitive_index(triad.type);
        int code = triad_code(g, triad.nodes[0], triad.nodes[1], triad.nodes[2]);
        int arc_sign[6] = {};
        arc_signs(g, triad.nodes, code, arc_sign);

        int positive = 0, total = 0;
        for (const auto& o : kOrderings) {
            int need = (1 << o.ab) | (1 << o.bc) | (1 << o.ac);
            if ((code & need) != need) continue;
            ++total;
            int neg = (arc_sign[o.ab] < 0) + (arc_sign[o.bc] < 0) + (arc_sign[o.ac] < 0);
            ++acc.signs[neg];
            if (neg % 2 == 0) ++positive;
        }

        ++acc.count[idx];
        if (positive == total)
            ++acc.cb[idx];
        else if (positive == 0)
            ++acc.ci[idx];
        else
            ++acc.pb[idx];
        if (positive > 0) ++acc.nonzero[idx];
        acc.sum6[idx] += static_cast<std::uint64_t>(positive) *
                         static_cast<std::uint64_t>(6 / total);
    };

    for (NodeId u = static_cast<NodeId>(stripe); u < n; u += static_cast<NodeId>(step))
        for_each_transitive_triad(g, u, u + 1, visit);
}

} // namespace

BalanceReport network_balance(const SignedDigraph& g, unsigned threads) {
    BalanceAcc acc;
    const std::size_t n = g.node_count();

    if (threads <= 1 || n < 3) {
        balance_stripe(g, 0, 1, acc);
    } else {
        unsigned t = std::min<unsigned>(threads, static_cast<unsigned>(n));
        std::vector<BalanceAcc> parts(t);
        std::vector<std::thread> workers;
        workers.reserve(t);
        for (unsigned k = 0; k < t; ++k)
            workers.emplace_back([&g, k, t, &parts] { balance_stripe(g, k, t, parts[k]); });
        for (auto& w : workers) w.join();
        for (const auto& part : parts) acc.merge(part);
    }

    BalanceReport report;
    for (int i = 0; i < 4; ++i) {
        TypeBalance& tb = report.per_type[static_cast<std::size_t>(i)];
        tb.type = kTransitiveTypes[static_cast<std::size_t>(i)];
        tb.triad_count = acc.count[i];
        tb.cb = acc.cb[i];
        tb.pb = acc.pb[i];
        tb.ci = acc.ci[i];
        tb.nonzero = acc.nonzero[i];
        tb.zero = acc.count[i] - acc.nonzero[i];
        if (tb.triad_count > 0) {
            tb.ratio = Rational::of(acc.sum6[i], 6 * static_cast<__int128>(tb.triad_count));
            tb.nonzero_share = Rational::of(tb.nonzero, tb.triad_count);
        }
    }
    report.overall = overall_balance(report.per_type);
    for (int i = 0; i < 4; ++i) report.signs.counts[static_cast<std::size_t>(i)] = acc.signs[i];
    return report;
}

} // namespace sbal
