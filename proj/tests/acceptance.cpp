// End-to-end acceptance gate. Runs the full verification harness once over the
// default corpora plus the bundled fixture files, then grades eleven criteria,
// printing exactly one PASS/FAIL line each. Exit status is the failure count.
//
// Wall-clock budgets are stated for an 8-worker machine. Every timed sweep
// splits into independent work units, so elapsed time scales inversely with
// the worker count; budgets are rescaled by 8/workers for the host we're on.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "tough/graph.hpp"
#include "tough/harness.hpp"
#include "tough/rational.hpp"
#include "tough/solver.hpp"

using namespace tough;

namespace {

int failures = 0;

void grade(int id, const std::string& what, bool ok, const std::string& extra = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", id, what.c_str(),
                extra.empty() ? "" : " -- ", extra.c_str());
    if (!ok) ++failures;
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

std::string secs(double s) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1fs", s);
    return buf;
}

}  // namespace

int main() {
    HarnessConfig cfg;
    cfg.workers = 0;  // use the machine
    const std::string data = TOUGH_TEST_DATA_DIR;
    for (const char* f : {"cubic04.g6", "cubic06.g6", "cubic08.g6", "cubic10.g6", "cubic12.g6",
                          "cubic14.g6"})
        cfg.cubic_corpus_paths.push_back(data + "/" + f);
    cfg.fourreg_corpus_paths.push_back(data + "/quartic10.g6");

    const int workers = cfg.effective_workers();
    const double scale = 8.0 / workers;
    std::printf("running with %d worker(s); time budgets scaled by %.2f\n", workers, scale);

    RunAllResult all = run_all(cfg, nullptr);
    std::map<std::string, const CheckReport*> rep;
    for (const auto& r : all.reports) rep[r.check_id] = &r;
    auto R = [&](const char* id) -> const CheckReport& { return *rep.at(id); };

    // 1: solver vs unpruned reference, every labeled connected graph, n <= 7
    {
        const CheckReport& r = R("solver_oracle_agreement");
        auto tp = toughness(petersen());
        auto to = oracle_toughness(petersen());
        bool pet = tp.kind == ToughnessValue::Kind::Finite && *tp.value == Rational(4, 3) &&
                   *to.value == Rational(4, 3) && *tp.tough_set == *to.tough_set;
        bool ok = r.passed() && r.corpus_size == 1893732 && pet &&
                  r.elapsed_seconds < 60.0 * scale;
        grade(1, "exact solver matches the unpruned reference on all 1893732 connected graphs to n=7",
              ok, secs(r.elapsed_seconds));
    }

    // 2: doubled graph identity tau(B) = min(2 tau, 1), n <= 6, exact
    {
        const CheckReport& r = R("bg_identity");
        grade(2, "bipartite double halves-and-caps toughness on every connected graph to n=6",
              r.passed() && r.corpus_size == 27476 && r.elapsed_seconds < 300.0 * scale,
              secs(r.elapsed_seconds));
    }

    // 3: doubling never lowers connectivity
    {
        const CheckReport& r = R("bg_connectivity");
        grade(3, "bipartite double never lowers connectivity, same corpus",
              r.passed() && r.corpus_size == 27476);
    }

    // 4: clique-expansion sign trichotomy with exact predicted cutset arithmetic
    {
        const CheckReport& r = R("gk_trichotomy");
        grade(4, "clique expansion lands on the predicted side of the target ratio (264 instances)",
              r.passed() && r.corpus_size == 264);
    }

    // 5: near-regular blocks r in {5,6,7,8}
    {
        const CheckReport& r = R("hr_blocks");
        grade(5, "near-regular blocks pass degree/parity/cycle checks with toughness >= 1",
              r.passed() && r.corpus_size == 4);
    }

    // 6: gadget threshold transfer verified on >= 5 hard non-1-tough instances
    {
        const CheckReport& r = R("gadget_lemmas");
        auto hard = non_one_tough_4regular_instances(cfg.max_instance_vertices);
        bool instances = hard.size() >= 5;
        for (const auto& g : hard) {
            auto d = decide_t_tough(g, Rational(1, 1));
            instances = instances && !d.tough && verify_witness(g, Rational(1, 1), *d.witness);
        }
        grade(6, "component counts add up exactly when blocks are attached to non-1-tough inputs",
              r.passed() && r.mode == CheckReport::Mode::Heuristic && r.corpus_size == 28 &&
                  instances);
    }

    // 7: cubic classifier exact agreement plus per-item latency
    {
        const CheckReport& r = R("cubic_recognizer");
        bool ok = r.passed() && r.corpus_size == 11186136 && r.max_item_seconds < 0.010;
        char extra[96];
        std::snprintf(extra, sizeof extra, "slowest classify %.3fms over %lld graphs",
                      r.max_item_seconds * 1e3, r.corpus_size);
        grade(7, "cubic classifier agrees with ground truth everywhere, under 10ms per graph", ok,
              extra);
    }

    // 8: 4-regular half-toughness is connectivity, through the n=10 fixture
    {
        const CheckReport& r = R("fourreg_recognizer");
        grade(8, "4-regular graphs are half-tough exactly when connected, corpus through n=10",
              r.passed() && r.corpus_size == 1044280);
    }

    // 9: spanning procedure hits toughness exactly 1/2 on every eligible input
    {
        const CheckReport& r = R("spanning_half_tough");
        grade(9, "spanning subgraph procedure lands on toughness exactly 1/2, all inputs to n=7",
              r.passed() && r.corpus_size == 1893730);
    }

    // 10: value bounds and minimum gaps
    {
        const CheckReport& r = R("rational_bounds");
        grade(10, "toughness fractions stay within n-1 and distinct values differ by more than 1/n^2",
              r.passed() && r.corpus_size == 27475);
    }

    // 11: the whole suite, inside budget, zero failures
    grade(11, "full verification run finishes inside the wall-clock budget with zero failures",
          all.ok() && all.elapsed_seconds < 600.0 * scale, secs(all.elapsed_seconds));

    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all 11 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
