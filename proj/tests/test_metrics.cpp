#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <queue>
#include <random>
#include <vector>

#include "sbal/metrics.hpp"

#include "helpers.hpp"

using sbal::descriptive_stats;
using sbal::NetworkStats;
using sbal::SignedDigraph;
using testutil::make_graph;

namespace {

// Matrix-based re-computation of every measure, for cross-checking the
// production code on small graphs.
NetworkStats naive_stats(const SignedDigraph& g) {
    const int n = static_cast<int>(g.node_count());
    std::vector<std::vector<bool>> A(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (const auto& arc : g.out(u)) A[u][arc.to] = true;
    std::vector<std::vector<bool>> U(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && (A[u][v] || A[v][u])) U[u][v] = true;

    NetworkStats s;
    s.node_count = g.node_count();
    s.edge_count = g.arc_count();
    if (n >= 2) s.density = static_cast<double>(g.arc_count()) / (double(n) * double(n - 1));

    long long paths = 0, closed = 0;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w) {
                if (u == v || v == w || u == w) continue;
                if (A[u][v] && A[v][w]) {
                    ++paths;
                    if (A[u][w]) ++closed;
                }
            }
    if (paths > 0) s.transitivity = double(closed) / double(paths);

    if (n >= 3) {
        std::vector<int> deg(n, 0);
        for (int u = 0; u < n; ++u)
            for (const auto& arc : g.out(u)) {
                deg[u]++;
                deg[arc.to]++;
            }
        int dmax = 0;
        for (int d : deg) dmax = std::max(dmax, d);
        double sum = 0;
        for (int d : deg) sum += dmax - d;
        s.degree_centralization = sum / (2.0 * (n - 1) * (n - 2));
    }

    double csum = 0;
    int eligible = 0;
    for (int u = 0; u < n; ++u) {
        std::vector<int> nb;
        for (int v = 0; v < n; ++v)
            if (U[u][v]) nb.push_back(v);
        if (nb.size() < 2) continue;
        int links = 0;
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (U[nb[i]][nb[j]]) ++links;
        csum += 2.0 * links / (double(nb.size()) * double(nb.size() - 1));
        ++eligible;
    }
    if (eligible > 0) s.clustering_coefficient = csum / eligible;

    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> members;
    for (int u = 0; u < n; ++u) {
        if (comp[u] != -1) continue;
        members.emplace_back();
        std::queue<int> q;
        q.push(u);
        comp[u] = int(members.size()) - 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            members.back().push_back(x);
            for (int y = 0; y < n; ++y)
                if (U[x][y] && comp[y] == -1) {
                    comp[y] = comp[x];
                    q.push(y);
                }
        }
    }
    s.component_count = members.size();
    const std::vector<int>* largest = nullptr;
    for (const auto& m : members)
        if (!largest || m.size() > largest->size()) largest = &m;
    s.largest_component_size = largest ? largest->size() : 0;

    if (largest && largest->size() >= 2) {
        long long dsum = 0, pairs = 0;
        for (int src : *largest) {
            std::vector<int> dist(n, -1);
            std::queue<int> q;
            q.push(src);
            dist[src] = 0;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y = 0; y < n; ++y)
                    if (U[x][y] && dist[y] == -1) {
                        dist[y] = dist[x] + 1;
                        q.push(y);
                    }
            }
            for (int dst : *largest)
                if (dst > src) {
                    dsum += dist[dst];
                    ++pairs;
                }
        }
        s.average_path_length = double(dsum) / double(pairs);
    }
    return s;
}

void check_close(const std::optional<double>& got, const std::optional<double>& want) {
    REQUIRE(got.has_value() == want.has_value());
    if (got) CHECK(std::abs(*got - *want) <= 1e-12);
}

} // namespace

TEST_CASE("complete mutual digraph") {
    std::vector<std::tuple<std::string, std::string, double>> arcs;
    const char* names[] = {"a", "b", "c", "d"};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) arcs.emplace_back(names[i], names[j], 1.0);
    auto s = descriptive_stats(make_graph(arcs));
    CHECK(s.node_count == 4);
    CHECK(s.edge_count == 12);
    CHECK(*s.density == 1.0);
    CHECK(*s.transitivity == 1.0);
    CHECK(*s.degree_centralization == 0.0);
    CHECK(*s.clustering_coefficient == 1.0);
    CHECK(s.component_count == 1);
    CHECK(s.largest_component_size == 4);
    CHECK(*s.average_path_length == 1.0);
}

TEST_CASE("single arc") {
    auto s = descriptive_stats(make_graph({{"a", "b", -1.0}}));
    CHECK(s.node_count == 2);
    CHECK(s.edge_count == 1);
    CHECK(*s.density == 0.5);
    CHECK_FALSE(s.transitivity.has_value());         // no directed two-paths
    CHECK_FALSE(s.degree_centralization.has_value()); // needs three nodes
    CHECK_FALSE(s.clustering_coefficient.has_value());
    CHECK(s.component_count == 1);
    CHECK(*s.average_path_length == 1.0);
}

TEST_CASE("empty graph") {
    auto s = descriptive_stats(sbal::build_graph({}, sbal::AggregationPolicy::Mean));
    CHECK(s.node_count == 0);
    CHECK(s.edge_count == 0);
    CHECK_FALSE(s.density.has_value());
    CHECK_FALSE(s.average_path_length.has_value());
    CHECK(s.component_count == 0);
    CHECK(s.largest_component_size == 0);
}

TEST_CASE("out-star by hand") {
    auto s = descriptive_stats(
        make_graph({{"a", "b", 1.0}, {"a", "c", 1.0}, {"a", "d", 1.0}}));
    CHECK(*s.density == doctest::Approx(0.25).epsilon(1e-12));
    CHECK_FALSE(s.transitivity.has_value());
    CHECK(*s.degree_centralization == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(*s.average_path_length == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(*s.clustering_coefficient == 0.0); // hub has neighbors, none linked
}

TEST_CASE("directed path by hand") {
    auto s = descriptive_stats(
        make_graph({{"a", "b", 1.0}, {"b", "c", 1.0}, {"c", "d", 1.0}}));
    CHECK(*s.transitivity == 0.0); // two open two-paths
    CHECK(*s.degree_centralization == doctest::Approx(1.0 / 6).epsilon(1e-12));
    CHECK(*s.average_path_length == doctest::Approx(10.0 / 6).epsilon(1e-12));
    CHECK(*s.clustering_coefficient == 0.0);
}

TEST_CASE("mutual pair gives no two-paths") {
    auto s = descriptive_stats(make_graph({{"a", "b", 1.0}, {"b", "a", -1.0}}));
    CHECK_FALSE(s.transitivity.has_value()); // u->v->u loops back, never counted
    CHECK(*s.density == 1.0);
}

TEST_CASE("isolates shift only size-dependent measures") {
    auto g = make_graph({{"a", "b", 1.0}, {"b", "c", 1.0}, {"a", "c", 1.0}});
    std::vector<sbal::SignedEdgeRecord> records = {
        {"a", "b", 1.0, 0}, {"b", "c", 1.0, 1}, {"a", "c", 1.0, 2},
        {"z", "a", 1.0, 3}, {"z", "a", -1.0, 4}, // z survives as an isolate
    };
    auto with_iso = sbal::build_graph(records, sbal::AggregationPolicy::Mean);
    auto base = descriptive_stats(g);
    auto iso = descriptive_stats(with_iso);
    CHECK(iso.node_count == base.node_count + 1);
    CHECK(iso.component_count == base.component_count + 1);
    CHECK(iso.largest_component_size == base.largest_component_size);
    check_close(iso.transitivity, base.transitivity);
    check_close(iso.clustering_coefficient, base.clustering_coefficient);
    check_close(iso.average_path_length, base.average_path_length);
    CHECK(*iso.density < *base.density);
}

TEST_CASE("signs never matter") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        auto g = testutil::random_graph(rng, 9, 0.3, 0.5);
        auto a = descriptive_stats(g);
        auto b = descriptive_stats(testutil::negated(g));
        CHECK(a.edge_count == b.edge_count);
        check_close(a.density, b.density);
        check_close(a.transitivity, b.transitivity);
        check_close(a.degree_centralization, b.degree_centralization);
        check_close(a.clustering_coefficient, b.clustering_coefficient);
        check_close(a.average_path_length, b.average_path_length);
        CHECK(a.component_count == b.component_count);
    }
}

TEST_CASE("two components") {
    auto s = descriptive_stats(make_graph(
        {{"a", "b", 1.0}, {"b", "a", 1.0}, {"c", "d", 1.0}, {"d", "e", 1.0}}));
    CHECK(s.component_count == 2);
    CHECK(s.largest_component_size == 3);
    CHECK(*s.average_path_length == doctest::Approx(4.0 / 3).epsilon(1e-12));
}

TEST_CASE("production agrees with the matrix reference") {
    std::mt19937 rng(555);
    std::uniform_int_distribution<int> size(2, 14);
    std::uniform_real_distribution<double> density(0.05, 0.8);
    for (int trial = 0; trial < 12; ++trial) {
        auto g = testutil::random_graph(rng, size(rng), density(rng), 0.5);
        auto fast = descriptive_stats(g);
        auto slow = naive_stats(g);
        CHECK(fast.node_count == slow.node_count);
        CHECK(fast.edge_count == slow.edge_count);
        check_close(fast.density, slow.density);
        check_close(fast.transitivity, slow.transitivity);
        check_close(fast.degree_centralization, slow.degree_centralization);
        check_close(fast.clustering_coefficient, slow.clustering_coefficient);
        check_close(fast.average_path_length, slow.average_path_length);
        CHECK(fast.component_count == slow.component_count);
        CHECK(fast.largest_component_size == slow.largest_component_size);
    }
}
