#include "sbal/oracle.hpp"

#include <stdexcept>
#include <string>

#include "sbal/errors.hpp"

namespace sbal {

namespace {

using NodeId = SignedDigraph::NodeId;

void check_cap(const SignedDigraph& g, std::size_t max_nodes, const char* who) {
    if (g.node_count() > max_nodes)
        throw DomainError(std::string(who) + ": graph has " + std::to_string(g.node_count()) +
                          " nodes, above the oracle cap of " + std::to_string(max_nodes));
}

// First-principles MAN classification from the three dyad states and
// their arrangement.  Intentionally shares nothing with the production
// code-table classifier.
TriadType naive_classify(const SignedDigraph& g, NodeId x, NodeId y, NodeId z) {
    const NodeId nodes[3] = {x, y, z};
    struct Pair {
        NodeId a, b;
        bool ab, ba;
    };
    Pair pairs[3] = {
        {x, y, g.has_arc(x, y), g.has_arc(y, x)},
        {x, z, g.has_arc(x, z), g.has_arc(z, x)},
        {y, z, g.has_arc(y, z), g.has_arc(z, y)},
    };

    int mutuals = 0, asyms = 0;
    for (const auto& p : pairs) {
        if (p.ab && p.ba) ++mutuals;
        else if (p.ab || p.ba) ++asyms;
    }
    int nulls = 3 - mutuals - asyms;

    (void)nulls;
    switch (mutuals * 10 + asyms) {
        case 0: return TriadType::T003;
        case 1: return TriadType::T012;
        case 10: return TriadType::T102;
        case 20: return TriadType::T201;
        case 30: return TriadType::T300;
        case 21: return TriadType::T210;
        case 2: { // two asymmetric arcs: out-star, in-star, or chain
            int outdeg[3] = {}, indeg[3] = {};
            for (const auto& p : pairs) {
                if (!(p.ab ^ p.ba)) continue;
                NodeId from = p.ab ? p.a : p.b;
                NodeId to = p.ab ? p.b : p.a;
                for (int i = 0; i < 3; ++i) {
                    if (nodes[i] == from) ++outdeg[i];
                    if (nodes[i] == to) ++indeg[i];
                }
            }
            for (int i = 0; i < 3; ++i) {
                if (outdeg[i] == 2) return TriadType::T021D; // one source feeds two
                if (indeg[i] == 2) return TriadType::T021U;  // two feed one sink
            }
            return TriadType::T021C; // a chain
        }
        case 3: { // three asymmetric arcs: transitive or a rotation cycle
            int outdeg[3] = {};
            for (const auto& p : pairs) {
                NodeId from = p.ab ? p.a : p.b;
                for (int i = 0; i < 3; ++i)
                    if (nodes[i] == from) ++outdeg[i];
            }
            // A 3-cycle gives every node out-degree 1; the transitive
            // orientation has a node of out-degree 2.
            for (int i = 0; i < 3; ++i)
                if (outdeg[i] == 2) return TriadType::T030T;
            return TriadType::T030C;
        }
        case 11: { // one mutual pair plus one asymmetric arc
            for (const auto& p : pairs) {
                if (!(p.ab ^ p.ba)) continue;
                NodeId from = p.ab ? p.a : p.b;
                // Third node = the one not in the mutual dyad; the asym arc
                // always touches it.  Arrow leaving the mutual pair -> 111U,
                // arrow entering it -> 111D.
                bool from_in_mutual = false;
                for (const auto& q : pairs)
                    if (q.ab && q.ba && (q.a == from || q.b == from)) from_in_mutual = true;
                return from_in_mutual ? TriadType::T111U : TriadType::T111D;
            }
            break;
        }
        case 12: { // one mutual pair plus two asymmetric arcs
            NodeId third = -1;
            for (const auto& p : pairs)
                if (p.ab && p.ba)
                    for (int i = 0; i < 3; ++i)
                        if (nodes[i] != p.a && nodes[i] != p.b) third = nodes[i];
            int third_out = 0, third_in = 0;
            for (const auto& p : pairs) {
                if (!(p.ab ^ p.ba)) continue;
                NodeId from = p.ab ? p.a : p.b;
                if (from == third) ++third_out;
                else ++third_in;
            }
            if (third_out == 2) return TriadType::T120D; // apex feeds the pair
            if (third_in == 2) return TriadType::T120U;  // pair feeds the apex
            return TriadType::T120C;                     // one each way
        }
        default: break;
    }
    throw std::logic_error("naive_classify: unreachable dyad combination");
}

} // namespace

CensusTable brute_force_census(const SignedDigraph& g, std::size_t max_nodes) {
    check_cap(g, max_nodes, "brute_force_census");
    CensusTable table{};
    const auto n = static_cast<NodeId>(g.node_count());
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            for (NodeId k = j + 1; k < n; ++k) ++table[naive_classify(g, i, j, k)];
    return table;
}

BalanceReport brute_force_balance(const SignedDigraph& g, std::size_t max_nodes) {
    check_cap(g, max_nodes, "brute_force_balance");

    struct TypeAcc {
        std::uint64_t count = 0, cb = 0, pb = 0, ci = 0, nonzero = 0;
        Rational fraction_sum; // exact sum of per-triad fractions
    };
    TypeAcc acc[4];
    SignCensus signs;

    const auto n = static_cast<NodeId>(g.node_count());
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            for (NodeId k = j + 1; k < n; ++k) {
                TriadType type = naive_classify(g, i, j, k);
                int idx = transitive_index(type);
                if (idx < 0) continue;

                // Try all six orderings directly against the arc set.
                const NodeId t[3] = {i, j, k};
                const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
                int positive = 0, total = 0;
                for (const auto& p : perms) {
                    NodeId a = t[p[0]], b = t[p[1]], c = t[p[2]];
                    const auto* ab = g.arc(a, b);
                    const auto* bc = g.arc(b, c);
                    const auto* ac = g.arc(a, c);
                    if (!ab || !bc || !ac) continue;
                    ++total;
                    int neg = (ab->sign() < 0) + (bc->sign() < 0) + (ac->sign() < 0);
                    ++signs.counts[static_cast<std::size_t>(neg)];
                    if ((ab->sign() * bc->sign() * ac->sign()) > 0) ++positive;
                }

                TypeAcc& a = acc[idx];
                ++a.count;
                if (positive == total) ++a.cb;
                else if (positive == 0) ++a.ci;
                else ++a.pb;
                if (positive > 0) ++a.nonzero;
                a.fraction_sum = a.fraction_sum + Rational(positive, total);
            }
        }
    }

    BalanceReport report;
    Rational ratio_sum;
    int defined = 0;
    for (int idx = 0; idx < 4; ++idx) {
        TypeBalance& tb = report.per_type[static_cast<std::size_t>(idx)];
        tb.type = kTransitiveTypes[static_cast<std::size_t>(idx)];
        tb.triad_count = acc[idx].count;
        tb.cb = acc[idx].cb;
        tb.pb = acc[idx].pb;
        tb.ci = acc[idx].ci;
        tb.nonzero = acc[idx].nonzero;
        tb.zero = acc[idx].count - acc[idx].nonzero;
        if (tb.triad_count > 0) {
            tb.ratio = acc[idx].fraction_sum / Rational(static_cast<long long>(tb.triad_count), 1);
            tb.nonzero_share = Rational::of(tb.nonzero, tb.triad_count);
            ratio_sum = ratio_sum + *tb.ratio;
            ++defined;
        }
    }
    if (defined > 0) report.overall = ratio_sum / Rational(defined, 1);
    report.signs = signs;
    return report;
}

} // namespace sbal
