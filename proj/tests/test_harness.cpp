#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "tough/algorithms.hpp"
#include "tough/codec.hpp"
#include "tough/graph.hpp"
#include "tough/harness.hpp"
#include "tough/solver.hpp"

using namespace tough;

namespace {

HarnessConfig small_config(int m) {
    HarnessConfig cfg;
    cfg.workers = 1;
    cfg.clamp_to(m);
    return cfg;
}

}  // namespace

TEST_CASE("reference oracle pins the basics") {
    auto p3 = oracle_toughness(Graph::path(3));
    REQUIRE(p3.kind == ToughnessValue::Kind::Finite);
    CHECK(*p3.value == Rational(1, 2));
    CHECK(*p3.tough_set == VertexSet::of(3, {1}));
    CHECK(*oracle_toughness(Graph::cycle(4)).value == Rational(1, 1));
    CHECK(oracle_toughness(Graph::complete(3)).kind == ToughnessValue::Kind::Infinite);
    CHECK(oracle_toughness(Graph(2)).kind == ToughnessValue::Kind::Zero);
    CHECK_THROWS_AS(oracle_toughness(Graph(17)), SizeCapError);
}

TEST_CASE("clamped harness passes everywhere") {
    auto result = run_all(small_config(4));
    REQUIRE(result.reports.size() == 10);
    CHECK(result.ok());
    CHECK(result.reports[0].check_id == "solver_oracle_agreement");
    CHECK(result.reports[9].check_id == "cubic_recognizer");
    for (const auto& r : result.reports) {
        CAPTURE(r.check_id);
        CHECK(r.passed());
    }
}

TEST_CASE("individual checks report their corpus sizes") {
    auto cfg = small_config(5);
    auto solver = check_solver_agreement(cfg);
    CHECK(solver.passed());
    CHECK(solver.corpus_size == 1 + 1 + 4 + 38 + 728);
    CHECK(solver.mode == CheckReport::Mode::Exhaustive);

    auto rational = check_rational_bounds(cfg);
    CHECK(rational.passed());
    CHECK(rational.corpus_size == 1 + 4 + 38 + 728);
    CHECK_FALSE(rational.notes.empty());

    auto gk = check_gk_trichotomy(cfg);
    CHECK(gk.passed());
    CHECK(gk.corpus_size == (1 + 1 + 4 + 38) * 2 * 3);
}

TEST_CASE("an injected fault in the doubling is caught and replayable") {
    HarnessConfig cfg;
    cfg.workers = 1;
    cfg.clamp_to(3);
    cfg.bg_fault_hook = [](Graph& b) {
        if (b.vertex_count() == 6) b.remove_edge(0, 3);
    };
    auto rep = check_bg_identity(cfg);
    CHECK_FALSE(rep.passed());
    // every 3-vertex input (4 labeled connected graphs) trips the degree check
    CHECK(rep.failures.size() == 4);
    for (const auto& f : rep.failures) {
        Graph g = parse_graph6(f.graph6);
        CHECK(g.vertex_count() == 3);
        CHECK(is_connected(g));
        CHECK_FALSE(f.detail.empty());
    }
}

TEST_CASE("reports are identical for any worker count") {
    HarnessConfig a;
    a.workers = 1;
    a.clamp_to(6);
    HarnessConfig b = a;
    b.workers = 4;
    auto ra = run_all(a);
    auto rb = run_all(b);
    REQUIRE(ra.reports.size() == rb.reports.size());
    for (std::size_t i = 0; i < ra.reports.size(); ++i) {
        const auto& x = ra.reports[i];
        const auto& y = rb.reports[i];
        CAPTURE(x.check_id);
        CHECK(x.check_id == y.check_id);
        CHECK(x.corpus_size == y.corpus_size);
        CHECK(x.mode == y.mode);
        CHECK(x.seed == y.seed);
        CHECK(x.sample_count == y.sample_count);
        CHECK(x.notes == y.notes);
        REQUIRE(x.failures.size() == y.failures.size());
        for (std::size_t j = 0; j < x.failures.size(); ++j) {
            CHECK(x.failures[j].graph6 == y.failures[j].graph6);
            CHECK(x.failures[j].detail == y.failures[j].detail);
        }
        // elapsed_seconds and max_item_seconds are timing, allowed to differ
    }
}

TEST_CASE("constructed hard instances are genuinely not 1-tough") {
    auto all = non_one_tough_4regular_instances(24);
    REQUIRE(all.size() == 6);
    std::vector<int> sizes;
    for (const auto& g : all) sizes.push_back(g.vertex_count());
    CHECK(sizes == std::vector<int>{11, 12, 13, 17, 20, 23});
    for (const auto& g : all) {
        CHECK(is_regular(g, 4));
        CHECK(is_connected(g));
        auto d = decide_t_tough(g, Rational(1, 1));
        REQUIRE_FALSE(d.tough);
        CHECK(verify_witness(g, Rational(1, 1), *d.witness));
    }
    CHECK(non_one_tough_4regular_instances(13).size() == 3);
    CHECK(non_one_tough_4regular_instances(10).empty());
}

TEST_CASE("named cubic instances") {
    Graph b = bridged_cubic_example();
    CHECK(b.vertex_count() == 10);
    CHECK(is_regular(b, 3));
    CHECK(is_connected(b));
    // (4,9) is a bridge
    Graph cutb = b;
    cutb.remove_edge(4, 9);
    CHECK_FALSE(is_connected(cutb));

    Graph t = three_branch_cubic_example();
    CHECK(t.vertex_count() == 16);
    CHECK(is_regular(t, 3));
    CHECK(component_count(t, VertexSet::of(16, {0})) == 3);
}

TEST_CASE("small named builders") {
    Graph oct = octahedron();
    CHECK(oct.vertex_count() == 6);
    CHECK(is_regular(oct, 4));
    CHECK(is_connected(oct));
    Graph two = disjoint_union(Graph::cycle(3), Graph::path(2));
    CHECK(two.vertex_count() == 5);
    CHECK(two.edge_count() == 4);
    CHECK(two.has_edge(0, 1));
    CHECK(two.has_edge(3, 4));
    CHECK_FALSE(is_connected(two));
}

TEST_CASE("gadget lemma check stays heuristic and reports sampling metadata") {
    HarnessConfig cfg;
    cfg.workers = 1;
    cfg.clamp_to(13);            // keeps three hard instances, trims the rest
    cfg.samples_per_order = 1;
    cfg.heuristic_budget = 400;
    auto rep = check_gadget_lemmas(cfg);
    CHECK(rep.passed());
    CHECK(rep.mode == CheckReport::Mode::Heuristic);
    CHECK(rep.seed == cfg.seed);
    CHECK(rep.corpus_size > 0);
    CHECK_FALSE(rep.notes.empty());
}
