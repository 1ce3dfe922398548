#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "tough/graph.hpp"

using namespace tough;

TEST_CASE("vertex set basics") {
    VertexSet s(10);
    CHECK(s.universe_size() == 10);
    CHECK(s.empty());
    CHECK(s.count() == 0);
    s.set(3);
    s.set(7);
    CHECK(s.test(3));
    CHECK(s.test(7));
    CHECK_FALSE(s.test(0));
    CHECK(s.count() == 2);
    s.reset(3);
    CHECK_FALSE(s.test(3));
    CHECK(s.count() == 1);
    CHECK_THROWS_AS(s.set(10), std::out_of_range);
    CHECK_THROWS_AS(s.test(-1), std::out_of_range);
}

TEST_CASE("vertex set construction helpers") {
    auto s = VertexSet::of(6, {1, 4, 5});
    CHECK(s.to_indices() == std::vector<int>{1, 4, 5});
    auto w = VertexSet::from_word(5, 0b10110);
    CHECK(w.to_indices() == std::vector<int>{1, 2, 4});
    CHECK(w.as_word() == 0b10110u);
    CHECK_THROWS_AS(VertexSet(70).as_word(), std::logic_error);
}

TEST_CASE("vertex set algebra") {
    auto a = VertexSet::of(8, {0, 2, 4});
    auto b = VertexSet::of(8, {2, 3});
    CHECK(a.intersects(b));
    CHECK_FALSE(a.intersects(VertexSet::of(8, {1, 5})));
    CHECK(VertexSet::of(8, {2, 4}).is_subset_of(a));
    CHECK_FALSE(b.is_subset_of(a));
    auto u = a;
    u |= b;
    CHECK(u == VertexSet::of(8, {0, 2, 3, 4}));
    auto i = a;
    i &= b;
    CHECK(i == VertexSet::of(8, {2}));
    CHECK(a != b);
}

TEST_CASE("vertex set spans multiple words") {
    VertexSet s(130);
    s.set(0);
    s.set(64);
    s.set(129);
    CHECK(s.count() == 3);
    CHECK(s.to_indices() == std::vector<int>{0, 64, 129});
    CHECK(s.word_count() == 3);
}

TEST_CASE("graph construction and edge updates") {
    CHECK_THROWS_AS(Graph(0), std::invalid_argument);
    Graph g(4);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(2) == 2);
    CHECK(g.degree(1) == 0);
    g.remove_edge(0, 2);
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
    CHECK_THROWS_AS(g.has_edge(-1, 0), std::out_of_range);
}

TEST_CASE("edges come out sorted by endpoints") {
    Graph g = Graph::cycle(4);
    std::vector<std::pair<int, int>> want = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
    CHECK(g.edges() == want);
    CHECK(g.neighbors(0) == VertexSet::of(4, {1, 3}));
}

TEST_CASE("builders produce the expected shapes") {
    CHECK(Graph::path(1).edge_count() == 0);
    CHECK(Graph::path(5).edge_count() == 4);
    CHECK(Graph::cycle(5).edge_count() == 5);
    CHECK(Graph::cycle(2).edge_count() == 1);  // no closing edge below 3
    CHECK(Graph::complete(5).edge_count() == 10);
    CHECK(Graph::complete(5).is_complete());
    CHECK(Graph::complete(1).is_complete());
    CHECK_FALSE(Graph::cycle(4).is_complete());
    Graph kb = Graph::complete_bipartite(2, 3);
    CHECK(kb.vertex_count() == 5);
    CHECK(kb.edge_count() == 6);
    CHECK_FALSE(kb.has_edge(0, 1));
    CHECK(kb.has_edge(0, 2));
    Graph st = Graph::star(4);
    CHECK(st.vertex_count() == 5);
    CHECK(st.degree(0) == 4);
    CHECK(Graph::cycle(3) == Graph::complete(3));
    CHECK(Graph::path(3) != Graph::cycle(3));
}

TEST_CASE("graphs wider than one adjacency word") {
    Graph g(70);
    g.add_edge(0, 69);
    g.add_edge(64, 65);
    CHECK(g.has_edge(69, 0));
    CHECK(g.degree(0) == 1);
    CHECK(g.neighbors(0).to_indices() == std::vector<int>{69});
    CHECK(g.edge_count() == 2);
}

TEST_CASE("component census after deletions") {
    Graph c6 = Graph::cycle(6);
    auto lab = components(c6, VertexSet::of(6, {0, 3}));
    CHECK(lab.count == 2);
    // removed slots get -1, ids follow the smallest vertex of each part
    CHECK(lab.label == std::vector<int>{-1, 0, 0, -1, 1, 1});
    CHECK(component_count(c6, VertexSet::of(6, {0, 3})) == 2);
    CHECK(component_count(c6, VertexSet(6)) == 1);
    CHECK(component_count(c6, VertexSet::of(6, {0})) == 1);
}

TEST_CASE("census edge cases") {
    Graph g(3);  // no edges at all
    auto lab = components(g, VertexSet(3));
    CHECK(lab.count == 3);
    CHECK(lab.label == std::vector<int>{0, 1, 2});
    auto all = VertexSet::of(3, {0, 1, 2});
    auto gone = components(g, all);
    CHECK(gone.count == 0);
    CHECK(gone.label == std::vector<int>{-1, -1, -1});
    CHECK(is_connected(Graph::path(4)));
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(Graph(1)));
}
