#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "tough/algorithms.hpp"
#include "tough/graph.hpp"

using namespace tough;

namespace {

Graph from_mask(int n, std::uint32_t mask) {
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1) g.add_edge(i, j);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

int brute_connectivity(const Graph& g) {
    int n = g.vertex_count();
    if (g.is_complete()) return n - 1;
    int best = n - 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.set(v);
        if (s.count() >= best) continue;
        if (component_count(g, s) >= 2) best = s.count();
    }
    return best;
}

VertexSet brute_cut_vertices(const Graph& g) {
    int n = g.vertex_count();
    VertexSet out(n);
    for (int v = 0; v < n; ++v)
        if (component_count(g, VertexSet::of(n, {v})) >= 2) out.set(v);
    return out;
}

int brute_independence(const Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (((mask >> u) & 1) && ((mask >> v) & 1) && g.has_edge(u, v)) ok = false;
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

bool brute_bipartite(const Graph& g) {
    int n = g.vertex_count();
    for (std::uint32_t side = 0; side < (1u << n); ++side) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (((side >> u) & 1) == ((side >> v) & 1)) ok = false;
        if (ok) return true;
    }
    return false;
}

void check_cycle_valid(const Graph& g, const std::vector<int>& cyc) {
    int n = g.vertex_count();
    REQUIRE(static_cast<int>(cyc.size()) == n);
    CHECK(cyc[0] == 0);
    std::vector<bool> seen(n, false);
    for (int v : cyc) {
        REQUIRE(v >= 0);
        REQUIRE(v < n);
        CHECK_FALSE(seen[v]);
        seen[v] = true;
    }
    for (int i = 0; i < n; ++i) CHECK(g.has_edge(cyc[i], cyc[(i + 1) % n]));
}

}  // namespace

TEST_CASE("connectivity, cut vertices, independence agree with brute force up to n=5") {
    for (int n = 1; n <= 5; ++n) {
        int m = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            Graph g = from_mask(n, mask);
            CAPTURE(n);
            CAPTURE(mask);
            CHECK(independence_number(g) == brute_independence(g));
            CHECK(is_bipartite(g).has_value() == brute_bipartite(g));
            if (!is_connected(g)) continue;
            CHECK(connectivity(g) == brute_connectivity(g));
            CHECK(cut_vertices(g) == brute_cut_vertices(g));
        }
    }
}

TEST_CASE("bipartite colorings are proper and canonical") {
    auto c6 = is_bipartite(Graph::cycle(6));
    REQUIRE(c6.has_value());
    CHECK(c6->class_a == VertexSet::of(6, {0, 2, 4}));
    CHECK(c6->class_b == VertexSet::of(6, {1, 3, 5}));
    CHECK_FALSE(is_bipartite(Graph::cycle(5)).has_value());

    Graph two_edges(4);
    two_edges.add_edge(0, 1);
    two_edges.add_edge(2, 3);
    auto c = is_bipartite(two_edges);
    REQUIRE(c.has_value());
    // each component anchors its smallest vertex in class_a
    CHECK(c->class_a == VertexSet::of(4, {0, 2}));
    CHECK(c->class_b == VertexSet::of(4, {1, 3}));

    auto kb = is_bipartite(Graph::complete_bipartite(2, 3));
    REQUIRE(kb.has_value());
    CHECK(kb->class_a == VertexSet::of(5, {0, 1}));
    CHECK(kb->class_b == VertexSet::of(5, {2, 3, 4}));
}

TEST_CASE("named instances") {
    Graph p = petersen();
    CHECK(connectivity(p) == 3);
    CHECK(independence_number(p) == 4);
    CHECK(cut_vertices(p).empty());
    CHECK(is_regular(p, 3));
    CHECK_FALSE(is_regular(p, 4));
    CHECK_FALSE(is_bipartite(p).has_value());

    CHECK(connectivity(Graph::complete_bipartite(2, 3)) == 2);
    CHECK(independence_number(Graph::complete_bipartite(2, 3)) == 3);
    CHECK(connectivity(Graph::complete(6)) == 5);
    CHECK(connectivity(Graph::path(5)) == 1);
    CHECK(cut_vertices(Graph::path(4)) == VertexSet::of(4, {1, 2}));
    CHECK(cut_vertices(Graph::star(5)) == VertexSet::of(6, {0}));
    CHECK(is_regular(Graph::cycle(5), 2));
    CHECK(is_regular(Graph(3), 0));
}

TEST_CASE("hamiltonian cycle search") {
    auto k4 = find_hamiltonian_cycle(Graph::complete(4));
    REQUIRE(k4.has_value());
    check_cycle_valid(Graph::complete(4), *k4);

    auto c7 = find_hamiltonian_cycle(Graph::cycle(7));
    REQUIRE(c7.has_value());
    check_cycle_valid(Graph::cycle(7), *c7);

    CHECK_FALSE(find_hamiltonian_cycle(Graph::path(4)).has_value());
    CHECK_FALSE(find_hamiltonian_cycle(Graph::star(3)).has_value());
    CHECK_FALSE(find_hamiltonian_cycle(Graph::complete_bipartite(2, 3)).has_value());
    // 1-tough but no hamiltonian cycle
    CHECK_FALSE(find_hamiltonian_cycle(petersen()).has_value());

    auto kb22 = find_hamiltonian_cycle(Graph::complete_bipartite(2, 2));
    REQUIRE(kb22.has_value());
    check_cycle_valid(Graph::complete_bipartite(2, 2), *kb22);

    CHECK_THROWS_AS(find_hamiltonian_cycle(Graph::complete(2)), std::invalid_argument);
}
