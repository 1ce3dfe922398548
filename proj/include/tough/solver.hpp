#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "tough/graph.hpp"
#include "tough/rational.hpp"
#include "tough/word_graph.hpp"

namespace tough {

struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Toughness of a graph: 0 when disconnected, infinite for complete graphs,
// otherwise min |S| / comp(G-S) over cutsets, with the optimal cutset
// attached. Ties go to the smallest cutset bitmask (bit v = 2^v).
struct ToughnessValue {
    enum class Kind { Zero, Finite, Infinite };
    Kind kind = Kind::Zero;
    std::optional<Rational> value;     // present iff Finite
    std::optional<VertexSet> tough_set;  // present iff Finite

    bool at_least(const Rational& t) const {
        switch (kind) {
            case Kind::Zero: return t.num == 0;
            case Kind::Infinite: return true;
            case Kind::Finite: return *value >= t;
        }
        return false;
    }

    static ToughnessValue zero() { return {}; }
    static ToughnessValue infinite() {
        ToughnessValue v;
        v.kind = Kind::Infinite;
        return v;
    }
    static ToughnessValue finite(Rational r, VertexSet s) {
        ToughnessValue v;
        v.kind = Kind::Finite;
        v.value = r;
        v.tough_set = std::move(s);
        return v;
    }
};

// A refutation of t-toughness: removing cutset leaves component_count > |cutset|/t
// pieces. ratio = |cutset|/component_count in lowest terms.
struct Witness {
    VertexSet cutset;
    int component_count = 0;
    Rational ratio;
};

struct SolveOptions {
    int max_n = 24;  // exhaustive refusal above this
    int workers = 1;
};

ToughnessValue toughness(const Graph& g, const SolveOptions& opt = {});

// single-word core behind toughness(); no size-cap policy, n <= 63 only.
// Corpus sweeps call this to skip the Graph round trip.
ToughnessValue toughness_small(const WordGraph& g, int workers = 1);

struct DecideResult {
    bool tough = false;                // yes iff tau >= t
    std::optional<Witness> witness;    // present iff no
};

// t > 0 required. Exhaustive, same size cap as toughness().
DecideResult decide_t_tough(const Graph& g, const Rational& t, const SolveOptions& opt = {});

// true iff components(g, w.cutset).count == w.component_count >= 2 and
// component_count * t > |cutset|, all exact
bool verify_witness(const Graph& g, const Rational& t, const Witness& w);

// Seeded local search for a t-toughness refutation. Any returned witness
// passes verify_witness; absence proves nothing. Deterministic per seed.
std::optional<Witness> refute_heuristic(const Graph& g, const Rational& t, int budget,
                                        std::uint64_t seed);

// Deletes edges in lexicographic order while the remainder stays 1/2-tough;
// at the fixpoint no further edge can go, and toughness is exactly 1/2.
// Requires a connected 1/2-tough input with at least 3 vertices.
Graph half_tough_spanning_subgraph(const Graph& g, const SolveOptions& opt = {});

// true iff v is Zero, Infinite, or a/b with 1 <= a,b <= n-1
bool toughness_denominator_bound_check(const ToughnessValue& v, int n);

// Internal threshold helper shared by decide/spanning/harness sweeps:
// a subset S with comp(G-S)*t > |S| (the empty mask means "disconnected"),
// or nullopt when tau >= t. Requires n <= 63 and t > 0.
std::optional<std::uint64_t> tough_threshold_violation(const Graph& g, const Rational& t);

}  // namespace tough
