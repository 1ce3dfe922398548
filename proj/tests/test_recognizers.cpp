#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tough/algorithms.hpp"
#include "tough/graph.hpp"
#include "tough/harness.hpp"
#include "tough/rational.hpp"
#include "tough/recognizers.hpp"
#include "tough/solver.hpp"

using namespace tough;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph prism() {
    Graph g(6);
    for (int i = 0; i < 3; ++i) {
        g.add_edge(i, (i + 1) % 3);
        g.add_edge(3 + i, 3 + (i + 1) % 3);
        g.add_edge(i, 3 + i);
    }
    return g;
}

}  // namespace

TEST_CASE("cubic classifier covers all four classes") {
    CHECK(classify_cubic(Graph::complete(4)).kind == CubicClass::CompleteK4);

    auto bridged = classify_cubic(bridged_cubic_example());
    CHECK(bridged.kind == CubicClass::TauOneHalf);
    REQUIRE(bridged.cut_vertex.has_value());
    CHECK(component_count(bridged_cubic_example(),
                          VertexSet::of(10, {*bridged.cut_vertex})) == 2);

    auto branchy = classify_cubic(three_branch_cubic_example());
    CHECK(branchy.kind == CubicClass::TauOneThird);
    REQUIRE(branchy.cut_vertex.has_value());
    CHECK(component_count(three_branch_cubic_example(),
                          VertexSet::of(16, {*branchy.cut_vertex})) == 3);

    CHECK(classify_cubic(petersen()).kind == CubicClass::TauAtLeastTwoThirds);
    CHECK_FALSE(classify_cubic(petersen()).cut_vertex.has_value());
    CHECK(classify_cubic(prism()).kind == CubicClass::TauAtLeastTwoThirds);
    CHECK(classify_cubic(Graph::complete_bipartite(3, 3)).kind ==
          CubicClass::TauAtLeastTwoThirds);
}

TEST_CASE("cubic classes agree with exact toughness") {
    auto tv = toughness(bridged_cubic_example());
    CHECK(*tv.value == Rational(1, 2));
    auto tv3 = toughness(three_branch_cubic_example());
    CHECK(*tv3.value == Rational(1, 3));
    CHECK(*toughness(petersen()).value >= Rational(2, 3));
    CHECK(*toughness(prism()).value >= Rational(2, 3));
}

TEST_CASE("cubic classifier input validation") {
    CHECK_THROWS_AS(classify_cubic(Graph::path(3)), std::invalid_argument);
    CHECK_THROWS_AS(classify_cubic(Graph::cycle(4)), std::invalid_argument);
    CHECK_THROWS_AS(classify_cubic(disjoint_union(Graph::complete(4), Graph::complete(4))),
                    std::invalid_argument);
}

TEST_CASE("threshold decisions below two thirds") {
    Graph b = bridged_cubic_example();
    CHECK(decide_cubic_t_tough(b, Rational(1, 3)));
    CHECK(decide_cubic_t_tough(b, Rational(1, 2)));
    CHECK_FALSE(decide_cubic_t_tough(b, Rational(3, 5)));

    Graph t3 = three_branch_cubic_example();
    CHECK(decide_cubic_t_tough(t3, Rational(1, 3)));
    CHECK_FALSE(decide_cubic_t_tough(t3, Rational(1, 2)));

    CHECK(decide_cubic_t_tough(petersen(), Rational(3, 5)));
    CHECK(decide_cubic_t_tough(Graph::complete(4), Rational(3, 5)));

    CHECK_THROWS_AS(decide_cubic_t_tough(b, Rational(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(decide_cubic_t_tough(b, Rational(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(decide_cubic_t_tough(b, Rational(0, 1)), std::invalid_argument);
}

TEST_CASE("half tough four regular recognition is connectivity") {
    CHECK(recognize_half_tough_4regular(Graph::complete(5)));
    CHECK(recognize_half_tough_4regular(octahedron()));
    CHECK_FALSE(recognize_half_tough_4regular(disjoint_union(octahedron(), octahedron())));
    CHECK_FALSE(recognize_half_tough_4regular(disjoint_union(Graph::complete(5), octahedron())));

    // matches the exact solver on connected instances
    CHECK(toughness(octahedron()).at_least(Rational(1, 2)));
    CHECK(toughness(disjoint_union(octahedron(), octahedron())).kind ==
          ToughnessValue::Kind::Zero);

    CHECK_THROWS_AS(recognize_half_tough_4regular(Graph::cycle(5)), std::invalid_argument);
    CHECK_THROWS_AS(recognize_half_tough_4regular(petersen()), std::invalid_argument);
}

TEST_CASE("unimplemented recognition stays unimplemented") {
    CHECK_FALSE(three_halves_tough_cubic_stub(petersen()).has_value());
    CHECK_FALSE(three_halves_tough_cubic_stub(Graph::complete(4)).has_value());
}
