#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sbal/balance.hpp"
#include "sbal/oracle.hpp"

#include "helpers.hpp"

using sbal::BalanceClass;
using sbal::Rational;
using sbal::Semicycle;
using sbal::SignedDigraph;
using sbal::TriadBalance;
using sbal::TriadType;
using sbal::TypeBalance;
using testutil::make_graph;

namespace {

std::array<SignedDigraph::NodeId, 3> ids(const SignedDigraph& g, const char* a, const char* b,
                                         const char* c) {
    return {*g.index_of(a), *g.index_of(b), *g.index_of(c)};
}

// Table-style rows: count triads at (positive, total) for one type.
void add_rows(std::vector<TriadBalance>& out, TriadType type, int positive, int total,
              std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i)
        out.push_back({type, {0, 1, 2}, positive, total});
}

} // namespace

TEST_CASE("transitive semicycles come out in lexicographic order") {
    // single forward path: one semicycle, arcs in (a->b, b->c, a->c) order
    auto path = make_graph({{"a", "b", 1.0}, {"b", "c", -1.0}, {"a", "c", 1.0}});
    auto cycles = sbal::transitive_semicycles(path, ids(path, "a", "b", "c"), TriadType::T030T);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].nodes == ids(path, "a", "b", "c"));
    CHECK(cycles[0].signs == std::array<int, 3>{1, -1, 1});
    CHECK(cycles[0].sign() == -1);
    CHECK(sbal::semicycle_sign(cycles[0]) == -1);

    // mutual pair {b,c} feeding into apex a: (b,c,a) then (c,b,a)
    auto up = make_graph({{"b", "c", 1.0}, {"c", "b", 1.0}, {"b", "a", 1.0}, {"c", "a", -1.0}});
    auto up_cycles = sbal::transitive_semicycles(up, ids(up, "a", "b", "c"), TriadType::T120U);
    REQUIRE(up_cycles.size() == 2);
    CHECK(up_cycles[0].nodes == ids(up, "b", "c", "a"));
    CHECK(up_cycles[0].signs == std::array<int, 3>{1, -1, 1});
    CHECK(up_cycles[1].nodes == ids(up, "c", "b", "a"));
    CHECK(up_cycles[1].signs == std::array<int, 3>{1, 1, -1});

    // apex a feeding the mutual pair: (a,b,c) then (a,c,b)
    auto down = make_graph({{"a", "b", 1.0}, {"a", "c", 1.0}, {"b", "c", 1.0}, {"c", "b", 1.0}});
    auto down_cycles = sbal::transitive_semicycles(down, ids(down, "a", "b", "c"), TriadType::T120D);
    REQUIRE(down_cycles.size() == 2);
    CHECK(down_cycles[0].nodes == ids(down, "a", "b", "c"));
    CHECK(down_cycles[1].nodes == ids(down, "a", "c", "b"));

    // complete triple: all six orderings, lexicographic
    std::vector<std::tuple<std::string, std::string, double>> full;
    for (const char* s : {"a", "b", "c"})
        for (const char* t : {"a", "b", "c"})
            if (std::string(s) != t) full.emplace_back(s, t, 1.0);
    auto complete = make_graph(full);
    auto all = sbal::transitive_semicycles(complete, ids(complete, "a", "b", "c"), TriadType::T300);
    REQUIRE(all.size() == 6);
    std::array<std::array<const char*, 3>, 6> expected = {{
        {"a", "b", "c"}, {"a", "c", "b"}, {"b", "a", "c"},
        {"b", "c", "a"}, {"c", "a", "b"}, {"c", "b", "a"},
    }};
    for (std::size_t i = 0; i < 6; ++i)
        CHECK(all[i].nodes == ids(complete, expected[i][0], expected[i][1], expected[i][2]));

    // triad order given by the caller is irrelevant
    CHECK(sbal::transitive_semicycles(path, ids(path, "c", "a", "b")).size() == 1);
}

TEST_CASE("transitive_semicycles rejects other classes") {
    auto cycle = make_graph({{"a", "b", 1.0}, {"b", "c", 1.0}, {"c", "a", 1.0}});
    CHECK_THROWS_AS(sbal::transitive_semicycles(cycle, ids(cycle, "a", "b", "c")),
                    std::invalid_argument);
    auto path = make_graph({{"a", "b", 1.0}, {"b", "c", -1.0}, {"a", "c", 1.0}});
    CHECK_THROWS_AS(sbal::transitive_semicycles(path, ids(path, "a", "b", "c"), TriadType::T300),
                    std::invalid_argument);
}

TEST_CASE("semicycle_sign multiplies signs") {
    Semicycle s{{0, 1, 2}, {1, 1, 1}};
    CHECK(sbal::semicycle_sign(s) == 1);
    s.signs = {1, 1, -1};
    CHECK(sbal::semicycle_sign(s) == -1);
    s.signs = {1, -1, -1};
    CHECK(sbal::semicycle_sign(s) == 1);
    s.signs = {-1, -1, -1};
    CHECK(sbal::semicycle_sign(s) == -1);
}

TEST_CASE("triad_balance on hand-built triads") {
    // negative apex arm makes both 120D semicycles negative
    auto arm = make_graph({{"a", "b", -1.0}, {"a", "c", 1.0}, {"b", "c", 1.0}, {"c", "b", 1.0}});
    auto triads = sbal::enumerate_transitive_triads(arm);
    REQUIRE(triads.size() == 1);
    auto tb = sbal::triad_balance(arm, triads[0]);
    CHECK(tb.type == TriadType::T120D);
    CHECK(tb.positive == 0);
    CHECK(tb.total == 2);
    CHECK(tb.classification() == BalanceClass::CompletelyImbalanced);
    CHECK(tb.fraction() == Rational(0, 1));

    // one negative mutual direction splits the pair: 1 of 2 positive
    auto split = make_graph({{"a", "b", 1.0}, {"a", "c", 1.0}, {"b", "c", -1.0}, {"c", "b", 1.0}});
    tb = sbal::triad_balance(split, sbal::enumerate_transitive_triads(split)[0]);
    CHECK(tb.positive == 1);
    CHECK(tb.total == 2);
    CHECK(tb.classification() == BalanceClass::PartiallyBalanced);
    CHECK(tb.fraction() == Rational(1, 2));

    // all-positive forward path is completely balanced
    auto path = make_graph({{"a", "b", 1.0}, {"b", "c", 1.0}, {"a", "c", 1.0}});
    tb = sbal::triad_balance(path, sbal::enumerate_transitive_triads(path)[0]);
    CHECK(tb.type == TriadType::T030T);
    CHECK(tb.positive == 1);
    CHECK(tb.total == 1);
    CHECK(tb.classification() == BalanceClass::CompletelyBalanced);

    CHECK(sbal::to_string(BalanceClass::CompletelyBalanced) == "CB");
    CHECK(sbal::to_string(BalanceClass::PartiallyBalanced) == "PB");
    CHECK(sbal::to_string(BalanceClass::CompletelyImbalanced) == "CI");
}

TEST_CASE("type_balance_ratio reproduces published-style tables") {
    // 2120 fully positive, 161 half-positive, 109 fully negative
    std::vector<TriadBalance> rows;
    add_rows(rows, TriadType::T120D, 2, 2, 2120);
    add_rows(rows, TriadType::T120D, 1, 2, 161);
    add_rows(rows, TriadType::T120D, 0, 2, 109);
    auto tb = sbal::type_balance_ratio(rows, TriadType::T120D);
    CHECK(tb.triad_count == 2390);
    CHECK(tb.cb == 2120);
    CHECK(tb.pb == 161);
    CHECK(tb.ci == 109);
    CHECK(tb.nonzero == 2281);
    CHECK(tb.zero == 109);
    REQUIRE(tb.ratio.has_value());
    CHECK(*tb.ratio == Rational::of(4401, 4780));
    CHECK(tb.ratio->percent() == "92.07");
    REQUIRE(tb.nonzero_share.has_value());
    CHECK(*tb.nonzero_share == Rational::of(2281, 2390));

    // single-semicycle type: no partial class possible
    rows.clear();
    add_rows(rows, TriadType::T030T, 1, 1, 4129);
    add_rows(rows, TriadType::T030T, 0, 1, 385);
    auto t030 = sbal::type_balance_ratio(rows, TriadType::T030T);
    CHECK(t030.pb == 0);
    CHECK(*t030.ratio == Rational::of(4129, 4514));
    CHECK(t030.ratio->percent() == "91.47");

    // six-semicycle type with a mixed partial population
    rows.clear();
    add_rows(rows, TriadType::T300, 6, 6, 2696);
    add_rows(rows, TriadType::T300, 3, 6, 316);
    add_rows(rows, TriadType::T300, 4, 6, 23);
    add_rows(rows, TriadType::T300, 0, 6, 21);
    auto t300 = sbal::type_balance_ratio(rows, TriadType::T300);
    CHECK(t300.triad_count == 3056);
    CHECK(t300.pb == 339);
    CHECK(t300.ratio->percent() == "93.89");

    // empty span: counts are zero and the mean is undefined
    auto empty = sbal::type_balance_ratio({}, TriadType::T120U);
    CHECK(empty.triad_count == 0);
    CHECK_FALSE(empty.ratio.has_value());
    CHECK_FALSE(empty.nonzero_share.has_value());

    // type mismatch and non-transitive types are rejected
    rows.clear();
    add_rows(rows, TriadType::T300, 6, 6, 1);
    CHECK_THROWS_AS(sbal::type_balance_ratio(rows, TriadType::T120U), std::invalid_argument);
    CHECK_THROWS_AS(sbal::type_balance_ratio(rows, TriadType::T030C), std::invalid_argument);
}

TEST_CASE("overall_balance averages only populated types") {
    std::vector<TriadBalance> rows;
    add_rows(rows, TriadType::T030T, 1, 1, 4129);
    add_rows(rows, TriadType::T030T, 0, 1, 385);
    std::vector<TypeBalance> types(4);
    types[0] = sbal::type_balance_ratio(rows, TriadType::T030T);
    types[1].type = TriadType::T120D;
    types[2].type = TriadType::T120U;
    types[3].type = TriadType::T300;
    auto overall = sbal::overall_balance(types);
    REQUIRE(overall.has_value());
    CHECK(*overall == Rational::of(4129, 4514)); // empty types do not dilute

    CHECK_FALSE(sbal::overall_balance(std::vector<TypeBalance>(4)).has_value());

    // four-type mean, matching the published table
    rows.clear();
    add_rows(rows, TriadType::T120D, 2, 2, 2120);
    add_rows(rows, TriadType::T120D, 1, 2, 161);
    add_rows(rows, TriadType::T120D, 0, 2, 109);
    types[1] = sbal::type_balance_ratio(rows, TriadType::T120D);
    rows.clear();
    add_rows(rows, TriadType::T120U, 2, 2, 3244);
    add_rows(rows, TriadType::T120U, 1, 2, 167);
    add_rows(rows, TriadType::T120U, 0, 2, 204);
    types[2] = sbal::type_balance_ratio(rows, TriadType::T120U);
    rows.clear();
    add_rows(rows, TriadType::T300, 6, 6, 2696);
    add_rows(rows, TriadType::T300, 3, 6, 316);
    add_rows(rows, TriadType::T300, 4, 6, 23);
    add_rows(rows, TriadType::T300, 0, 6, 21);
    types[3] = sbal::type_balance_ratio(rows, TriadType::T300);
    auto avg = sbal::overall_balance(types);
    REQUIRE(avg.has_value());
    CHECK(avg->percent() == "92.37");
}

TEST_CASE("sign_census tallies negative counts") {
    std::vector<Semicycle> cycles = {
        {{0, 1, 2}, {1, 1, 1}},
        {{0, 1, 2}, {1, -1, 1}},
        {{0, 1, 2}, {-1, -1, 1}},
        {{0, 1, 2}, {-1, -1, -1}},
        {{0, 1, 2}, {1, 1, 1}},
    };
    auto census = sbal::sign_census(cycles);
    CHECK(census.counts == std::array<std::uint64_t, 4>{2, 1, 1, 1});
    CHECK(census.total() == 5);
    CHECK(*census.ratio(0) == Rational(2, 5));
    CHECK(*census.ratio(3) == Rational(1, 5));
    CHECK_FALSE(sbal::SignCensus{}.ratio(0).has_value());
    CHECK(sbal::kSignPatternNames[1] == "++-");
}

TEST_CASE("network_balance matches the brute-force oracle") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> size(3, 12);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    const double sign_ps[] = {0.1, 0.5, 0.9};
    for (int trial = 0; trial < 30; ++trial) {
        auto g = testutil::random_graph(rng, size(rng), density(rng), sign_ps[trial % 3]);
        auto fast = sbal::network_balance(g);
        auto slow = sbal::brute_force_balance(g);
        CHECK(fast == slow);

        auto census = sbal::full_census(g);
        for (const auto& tb : fast.per_type) {
            CHECK(tb.triad_count == census[tb.type]);
            CHECK(tb.cb + tb.pb + tb.ci == tb.triad_count);
            CHECK(tb.nonzero + tb.zero == tb.triad_count);
        }
        // every 030T triad is all-or-nothing
        CHECK(fast.per_type[0].pb == 0);
        // semicycle totals follow the census multiplicities
        std::uint64_t expected_semicycles = census[TriadType::T030T] +
                                            2 * census[TriadType::T120D] +
                                            2 * census[TriadType::T120U] +
                                            6 * census[TriadType::T300];
        CHECK(fast.signs.total() == expected_semicycles);
    }
}

TEST_CASE("negating every sign flips the report") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 10; ++trial) {
        auto g = testutil::random_graph(rng, 10, 0.5, 0.6);
        auto base = sbal::network_balance(g);
        auto flipped = sbal::network_balance(testutil::negated(g));
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& a = base.per_type[i];
            const auto& b = flipped.per_type[i];
            CHECK(a.triad_count == b.triad_count);
            CHECK(a.cb == b.ci);
            CHECK(a.ci == b.cb);
            CHECK(a.pb == b.pb);
            if (a.ratio) CHECK(*a.ratio + *b.ratio == Rational(1, 1));
        }
        if (base.overall) CHECK(*base.overall + *flipped.overall == Rational(1, 1));
        // a semicycle with k negatives gains 3-k under negation
        for (int k = 0; k < 4; ++k) CHECK(base.signs.counts[k] == flipped.signs.counts[3 - k]);
    }
}

TEST_CASE("network_balance is thread-count independent") {
    std::mt19937 rng(88);
    auto g = testutil::random_graph(rng, 18, 0.3, 0.4);
    auto one = sbal::network_balance(g, 1);
    for (unsigned threads : {2u, 4u, 7u}) CHECK(sbal::network_balance(g, threads) == one);
}

TEST_CASE("complete positive mutual graph is perfectly balanced") {
    std::vector<std::tuple<std::string, std::string, double>> arcs;
    const char* names[] = {"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) arcs.emplace_back(names[i], names[j], 1.0);
    auto report = sbal::network_balance(make_graph(arcs));
    REQUIRE(report.overall.has_value());
    CHECK(*report.overall == Rational(1, 1));
    CHECK(report.per_type[3].triad_count == 4);
    CHECK(report.per_type[3].cb == 4);
    CHECK(report.signs.counts == std::array<std::uint64_t, 4>{24, 0, 0, 0});
    CHECK(report.triad_total() == 4);

    // no transitive triads at all: everything empty
    auto cycle = sbal::network_balance(make_graph({{"a", "b", 1.0}, {"b", "c", 1.0}, {"c", "a", 1.0}}));
    CHECK_FALSE(cycle.overall.has_value());
    CHECK(cycle.triad_total() == 0);
    CHECK(cycle.signs.total() == 0);
}
