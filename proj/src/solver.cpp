#include "tough/solver.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "tough/algorithms.hpp"
#include "tough/enumerate.hpp"
#include "tough/word_graph.hpp"

namespace tough {

namespace {

// ratio as an unreduced pair; den 0 encodes "nothing found yet" (infinity)
struct Ratio {
    std::uint32_t num = 1, den = 0;
};

inline bool less(std::uint64_t a_num, std::uint64_t a_den, std::uint64_t b_num, std::uint64_t b_den) {
    return a_num * b_den < b_num * a_den;
}

struct Candidate {
    Ratio r;
    std::uint64_t mask = 0;

    // (ratio, mask) lexicographic; true if o is strictly better
    bool improves_on(const Candidate& o) const {
        if (r.den == 0) return false;
        if (o.r.den == 0) return true;
        if (less(r.num, r.den, o.r.num, o.r.den)) return true;
        if (less(o.r.num, o.r.den, r.num, r.den)) return false;
        return mask < o.mask;
    }
};

// true when S contains a vertex whose neighbors outside S fall inside at most
// one component of G-S; such cutsets are strictly dominated by a subset and
// can never be minimizers
bool dominated(const WordGraph& g, std::uint64_t mask, const std::uint64_t* comp, int nc) {
    std::uint64_t it = mask;
    while (it) {
        int v = std::countr_zero(it);
        it &= it - 1;
        std::uint64_t out = g.rows[v] & ~mask;
        if (!out) return true;
        std::uint64_t low = out & (~out + 1);
        for (int c = 0; c < nc; ++c) {
            if (comp[c] & low) {
                if ((out & ~comp[c]) == 0) return true;
                break;
            }
        }
    }
    return false;
}

struct SweepShared {
    std::atomic<std::uint64_t> best{~std::uint64_t{0}};  // packed num<<32|den, den==0 => none

    void offer(Ratio r) {
        std::uint64_t packed = (std::uint64_t{r.num} << 32) | r.den;
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (true) {
            std::uint32_t cn = static_cast<std::uint32_t>(cur >> 32), cd = static_cast<std::uint32_t>(cur);
            if (cd != 0 && !less(r.num, r.den, cn, cd)) return;
            if (best.compare_exchange_weak(cur, packed, std::memory_order_relaxed)) return;
        }
    }

    Ratio load() const {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        Ratio r;
        r.num = static_cast<std::uint32_t>(cur >> 32);
        r.den = static_cast<std::uint32_t>(cur);
        if (cur == ~std::uint64_t{0}) r.den = 0;
        return r;
    }
};

// one worker's scan over a mask range of fixed popcount
void scan_range(const WordGraph& g, int s, std::uint64_t first_mask, std::uint64_t count,
                SweepShared& shared, Candidate& local) {
    std::uint64_t comp[64];
    std::uint64_t mask = first_mask;
    for (std::uint64_t k = 0; k < count; ++k, mask = next_same_popcount(mask)) {
        // quick reject: vertex with no neighbors outside S
        std::uint64_t it = mask;
        bool skip = false;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            if ((g.rows[v] & ~mask) == 0) {
                skip = true;
                break;
            }
        }
        if (skip) continue;
        int nc = g.components_masks(mask, comp, 64);
        if (nc < 2) continue;
        if (dominated(g, mask, comp, nc)) continue;
        Candidate cand{{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(nc)}, mask};
        if (cand.improves_on(local)) {
            local = cand;
            shared.offer(cand.r);
        }
    }
}

Candidate exhaustive_sweep(const WordGraph& g, int workers) {
    const int n = g.n;
    struct Chunk {
        int s;
        std::uint64_t rank_begin, rank_end;
    };
    std::vector<Chunk> chunks;
    const std::uint64_t step = 1 << 13;
    for (int s = 1; s <= n - 1; ++s) {
        std::uint64_t total = binomial(n, s);
        for (std::uint64_t b = 0; b < total; b += step)
            chunks.push_back({s, b, std::min(total, b + step)});
    }
    SweepShared shared;
    std::atomic<std::size_t> cursor{0};
    auto work = [&](Candidate& local) {
        while (true) {
            std::size_t idx = cursor.fetch_add(1, std::memory_order_relaxed);
            if (idx >= chunks.size()) break;
            const Chunk& c = chunks[idx];
            Ratio b = shared.load();
            // skip sizes that cannot beat or tie the best seen so far
            if (b.den != 0 && less(b.num, b.den, c.s, n - c.s)) continue;
            scan_range(g, c.s, unrank_combination(n, c.s, c.rank_begin), c.rank_end - c.rank_begin,
                       shared, local);
        }
    };
    int nw = std::max(1, workers);
    if (nw == 1 || n < 16) {
        Candidate local;
        work(local);
        return local;
    }
    std::vector<Candidate> locals(nw);
    std::vector<std::thread> threads;
    for (int i = 0; i < nw; ++i) threads.emplace_back([&, i] { work(locals[i]); });
    for (auto& t : threads) t.join();
    Candidate best;
    for (const auto& l : locals)
        if (l.improves_on(best)) best = l;
    return best;
}

void check_cap(const Graph& g, const SolveOptions& opt) {
    int n = g.vertex_count();
    if (n > opt.max_n || n > 63)
        throw SizeCapError("exhaustive toughness refused for n=" + std::to_string(n) + " (cap " +
                           std::to_string(std::min(opt.max_n, 63)) +
                           "); use the heuristic refuter or raise the cap");
}

}  // namespace

ToughnessValue toughness(const Graph& g, const SolveOptions& opt) {
    check_cap(g, opt);
    return toughness_small(WordGraph::from(g), opt.workers);
}

ToughnessValue toughness_small(const WordGraph& g, int workers) {
    if (!g.connected()) return ToughnessValue::zero();
    bool complete = true;
    for (int v = 0; v < g.n && complete; ++v)
        complete = g.rows[v] == (g.all & ~(std::uint64_t{1} << v));
    if (complete) return ToughnessValue::infinite();
    Candidate best = exhaustive_sweep(g, workers);
    // a connected noncomplete graph always has a cutset
    Rational val(best.r.num, best.r.den);
    return ToughnessValue::finite(val, VertexSet::from_word(g.n, best.mask));
}

std::optional<std::uint64_t> tough_threshold_violation(const Graph& g, const Rational& t) {
    if (t.num <= 0) throw std::invalid_argument("threshold requires t > 0");
    const int n = g.vertex_count();
    if (n > 63) throw SizeCapError("threshold sweep needs n <= 63");
    WordGraph wg = WordGraph::from(g);
    if (!wg.connected()) return std::uint64_t{0};
    // a violating S has comp > |S|/t and comp <= n-|S|, so |S|*(num+den) < n*num
    for (int s = 1; s <= n - 2; ++s) {
        if (static_cast<std::int64_t>(s) * (t.num + t.den) >= static_cast<std::int64_t>(n) * t.num)
            break;
        std::uint64_t mask = (std::uint64_t{1} << s) - 1;
        std::uint64_t last = mask << (n - s);
        while (true) {
            int nc = wg.components(mask);
            if (nc >= 2 &&
                static_cast<std::int64_t>(nc) * t.num > static_cast<std::int64_t>(s) * t.den)
                return mask;
            if (mask == last) break;
            mask = next_same_popcount(mask);
        }
    }
    return std::nullopt;
}

namespace {

Witness witness_from_mask(const Graph& g, std::uint64_t mask) {
    Witness w;
    w.cutset = VertexSet::from_word(g.vertex_count(), mask);
    w.component_count = component_count(g, w.cutset);
    w.ratio = Rational(w.cutset.count(), w.component_count);
    return w;
}

}  // namespace

DecideResult decide_t_tough(const Graph& g, const Rational& t, const SolveOptions& opt) {
    if (t.num <= 0) throw std::invalid_argument("decide_t_tough requires t > 0");
    check_cap(g, opt);
    auto viol = tough_threshold_violation(g, t);
    if (!viol) return {true, std::nullopt};
    return {false, witness_from_mask(g, *viol)};
}

bool verify_witness(const Graph& g, const Rational& t, const Witness& w) {
    if (t.num <= 0) throw std::invalid_argument("verify_witness requires t > 0");
    if (w.cutset.universe_size() != g.vertex_count()) return false;
    int nc = component_count(g, w.cutset);
    if (nc != w.component_count || nc < 2) return false;
    return static_cast<std::int64_t>(nc) * t.num > static_cast<std::int64_t>(w.cutset.count()) * t.den;
}

namespace {

struct HeuristicState {
    const Graph& g;
    const Rational& t;
    int evals_left;

    explicit HeuristicState(const Graph& g_, const Rational& t_, int budget)
        : g(g_), t(t_), evals_left(budget) {}

    bool spent() const { return evals_left <= 0; }

    // returns component count of g - S, or -1 when out of budget
    int eval(const VertexSet& s, ComponentLabels* out = nullptr) {
        if (evals_left <= 0) return -1;
        --evals_left;
        ComponentLabels cl = components(g, s);
        int count = cl.count;
        if (out) *out = std::move(cl);
        return count;
    }

    bool beats_t(int size, int nc) const {
        return nc >= 2 && static_cast<std::int64_t>(nc) * t.num > static_cast<std::int64_t>(size) * t.den;
    }

    // drop vertices whose outside neighbors all land in one component; each
    // drop strictly improves the ratio
    void shrink(VertexSet& s) {
        bool changed = true;
        while (changed && !spent()) {
            ComponentLabels cl;
            if (eval(s, &cl) < 0) return;
            if (cl.count < 2) return;
            changed = false;
            for (int v : s.to_indices()) {
                int seen = -2;
                bool multi = false;
                for (int w : g.neighbors(v).to_indices()) {
                    if (s.test(w)) continue;
                    if (seen == -2)
                        seen = cl.label[w];
                    else if (cl.label[w] != seen)
                        multi = true;
                }
                if (!multi) {
                    s.reset(v);
                    changed = true;
                    break;
                }
            }
        }
    }

    std::optional<Witness> consider(VertexSet s) {
        shrink(s);
        ComponentLabels cl;
        int nc = eval(s, &cl);
        if (nc < 0) return std::nullopt;
        if (beats_t(s.count(), nc)) {
            Witness w;
            w.cutset = s;
            w.component_count = nc;
            w.ratio = Rational(s.count(), nc);
            return w;
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<Witness> refute_heuristic(const Graph& g, const Rational& t, int budget,
                                        std::uint64_t seed) {
    if (t.num <= 0) throw std::invalid_argument("refute_heuristic requires t > 0");
    const int n = g.vertex_count();
    HeuristicState st(g, t, std::max(budget, 16));

    // disconnected graphs are refuted by the empty cutset for any t
    {
        VertexSet empty(n);
        int nc = st.eval(empty);
        if (nc >= 2) {
            Witness w;
            w.cutset = empty;
            w.component_count = nc;
            w.ratio = Rational(0, 1);
            return w;
        }
    }
    // deterministic probes: singletons (articulation vertices), then open
    // neighborhoods
    for (int v = 0; v < n && !st.spent(); ++v) {
        if (auto w = st.consider(VertexSet::of(n, {v}))) return w;
    }
    for (int v = 0; v < n && !st.spent(); ++v) {
        VertexSet s = g.neighbors(v);
        if (s.count() >= n - 1) continue;
        if (auto w = st.consider(s)) return w;
    }
    // seeded local walk: grow a cutset greedily from random neighborhood pairs
    std::mt19937_64 rng(seed);
    while (!st.spent()) {
        VertexSet s = g.neighbors(static_cast<int>(rng() % n));
        int extra = static_cast<int>(rng() % 3);
        for (int k = 0; k < extra; ++k) s |= g.neighbors(static_cast<int>(rng() % n));
        for (int moves = 0; moves < n && !st.spent(); ++moves) {
            if (auto w = st.consider(s)) return w;
            int v = static_cast<int>(rng() % n);
            if (s.test(v) && s.count() > 1)
                s.reset(v);
            else if (!s.test(v) && s.count() < n - 2)
                s.set(v);
        }
    }
    return std::nullopt;
}

Graph half_tough_spanning_subgraph(const Graph& g, const SolveOptions& opt) {
    const int n = g.vertex_count();
    if (n < 3)
        throw std::invalid_argument("half-tough spanning subgraph: input must have at least 3 vertices");
    check_cap(g, opt);
    const Rational half(1, 2);
    if (tough_threshold_violation(g, half))
        throw std::invalid_argument("half-tough spanning subgraph: input is not 1/2-tough");
    Graph h = g;
    // One pass suffices: deleting edges never merges components, so an edge
    // once kept (its removal broke 1/2-toughness) stays unremovable later.
    // The result is the same fixpoint a rescan-after-each-deletion loop
    // reaches, where no remaining edge can be deleted.
    for (auto [u, v] : g.edges()) {
        h.remove_edge(u, v);
        if (tough_threshold_violation(h, half)) h.add_edge(u, v);
    }
    return h;
}

bool toughness_denominator_bound_check(const ToughnessValue& v, int n) {
    if (v.kind != ToughnessValue::Kind::Finite) return true;
    return v.value->num >= 1 && v.value->num <= n - 1 && v.value->den >= 1 && v.value->den <= n - 1;
}

}  // namespace tough
