#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "tough/graph.hpp"
#include "tough/solver.hpp"

namespace tough {

struct CheckFailure {
    std::string graph6;  // replay string for the offending input ("" for corpus-level facts)
    std::string detail;
};

struct CheckReport {
    std::string check_id;
    long long corpus_size = 0;
    std::vector<CheckFailure> failures;
    double elapsed_seconds = 0;
    double max_item_seconds = 0;  // slowest single item, where the check tracks it
    enum class Mode { Exhaustive, Sampled, Heuristic } mode = Mode::Exhaustive;
    std::uint64_t seed = 0;         // meaningful for Sampled/Heuristic
    long long sample_count = 0;     // meaningful for Sampled/Heuristic
    std::vector<std::string> notes;

    bool passed() const { return failures.empty(); }
};

struct HarnessConfig {
    int workers = 0;  // 0 = hardware concurrency

    int solver_max_n = 7;     // solver-vs-oracle + codec roundtrip sweep
    int spanning_max_n = 7;
    int bg_max_n = 6;
    int gk_max_n = 4;
    int rational_max_n = 6;
    std::vector<int> hr_orders = {5, 6, 7, 8};
    std::vector<int> lemma_orders = {5, 6};
    int lemma_min_instances = 5;
    int max_instance_vertices = 24;  // constructed-instance checks skip above this

    int cubic_generated_max_n = 10;
    int fourreg_generated_max_n = 9;
    std::vector<std::string> cubic_corpus_paths;    // graph6 files, n <= 14
    std::vector<std::string> fourreg_corpus_paths;  // graph6 files, n <= 10

    std::uint64_t seed = 1;
    int heuristic_budget = 4000;
    int samples_per_order = 3;  // 1-tough inputs per r on the heuristic side

    // test-only corruption hook applied to each doubled graph before checking
    std::function<void(Graph&)> bg_fault_hook;

    // scale every corpus/instance bound down to at most m
    void clamp_to(int m);
    int effective_workers() const;
};

// Unpruned single-threaded reference: every subset in plain mask order.
// Ground truth for everything else; refuses n > 16.
ToughnessValue oracle_toughness(const Graph& g);

CheckReport check_solver_agreement(const HarnessConfig& cfg);
CheckReport check_bg_identity(const HarnessConfig& cfg);
CheckReport check_bg_connectivity(const HarnessConfig& cfg);
CheckReport check_gk_trichotomy(const HarnessConfig& cfg);
CheckReport check_hr(const HarnessConfig& cfg);
CheckReport check_gadget_lemmas(const HarnessConfig& cfg);
CheckReport check_cubic_recognizer(const HarnessConfig& cfg);
CheckReport check_fourreg_recognizer(const HarnessConfig& cfg);
CheckReport check_spanning_half_tough(const HarnessConfig& cfg);
CheckReport check_rational_bounds(const HarnessConfig& cfg);

struct RunAllResult {
    std::vector<CheckReport> reports;
    double elapsed_seconds = 0;
    bool ok() const {
        for (const auto& r : reports)
            if (!r.passed()) return false;
        return true;
    }
};

// every check, cheap first; progress lines to *progress when given
RunAllResult run_all(const HarnessConfig& cfg, std::ostream* progress = nullptr);

// connected non-1-tough 4-regular instances (cut-vertex chains of near-clique
// blocks), smallest first within the vertex budget
std::vector<Graph> non_one_tough_4regular_instances(int max_vertices);

// named cubic instances with cut structure (the generated corpora cannot reach
// the 3-component class, which needs 16 vertices)
Graph bridged_cubic_example();       // n=10, tau 1/2, has a bridge
Graph three_branch_cubic_example();  // n=16, tau 1/3, cut vertex leaves 3 parts

Graph disjoint_union(const Graph& a, const Graph& b);
Graph octahedron();

}  // namespace tough
