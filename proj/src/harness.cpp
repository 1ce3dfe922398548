#include "tough/harness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "tough/algorithms.hpp"
#include "tough/codec.hpp"
#include "tough/enumerate.hpp"
#include "tough/recognizers.hpp"
#include "tough/reductions.hpp"

namespace tough {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Failure/note sink for parallel sweeps. Every entry carries a sort key so the
// final report is identical no matter how work was split across threads.
struct Collector {
    std::mutex mu;
    std::vector<std::pair<std::uint64_t, CheckFailure>> fails;
    std::atomic<long long> corpus{0};
    static constexpr std::size_t kRawCap = 10000;
    static constexpr std::size_t kReportCap = 200;

    void fail(std::uint64_t key, std::string g6, std::string detail) {
        std::lock_guard<std::mutex> lock(mu);
        if (fails.size() < kRawCap)
            fails.push_back({key, {std::move(g6), std::move(detail)}});
    }

    void into(CheckReport& rep) {
        std::sort(fails.begin(), fails.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t keep = std::min(fails.size(), kReportCap);
        for (std::size_t i = 0; i < keep; ++i) rep.failures.push_back(std::move(fails[i].second));
        if (fails.size() > keep)
            rep.notes.push_back("failure list truncated to " + std::to_string(keep) + " of " +
                                std::to_string(fails.size()));
        rep.corpus_size += corpus.load();
    }
};

// dynamic work distribution; rethrows the first worker exception
void run_units(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::mutex emu;
    std::string error;
    int nw = static_cast<int>(std::min<std::size_t>(workers, count));
    std::vector<std::thread> pool;
    for (int w = 0; w < nw; ++w)
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = cursor.fetch_add(1, std::memory_order_relaxed);
                if (i >= count) break;
                try {
                    fn(i);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(emu);
                    if (error.empty()) error = e.what();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (!error.empty()) throw std::runtime_error(error);
}

// chunked pass over all labeled connected graphs on n vertices
void sweep_connected(int n, int workers,
                     const std::function<void(const WordGraph&, std::uint64_t)>& fn) {
    std::uint64_t space = labeled_graph_space(n);
    const std::uint64_t step = std::uint64_t{1} << 14;
    std::size_t units = static_cast<std::size_t>((space + step - 1) / step);
    run_units(units, workers, [&](std::size_t u) {
        std::uint64_t b = u * step;
        for_each_connected_in_range(n, b, std::min(space, b + step), fn);
    });
}

struct OracleBest {
    bool found = false;
    long long num = 0, den = 0;  // |S| and component count, unreduced
    std::uint64_t mask = 0;
};

// plain ascending-mask minimum; ties resolve to the first (smallest) mask
OracleBest oracle_scan(const WordGraph& g) {
    OracleBest best;
    for (std::uint64_t mask = 1; mask < g.all; ++mask) {
        int nc = g.components(mask);
        if (nc < 2) continue;
        long long s = std::popcount(mask);
        if (!best.found || s * best.den < best.num * nc) {
            best.found = true;
            best.num = s;
            best.den = nc;
            best.mask = mask;
        }
    }
    return best;
}

std::string g6_of(const WordGraph& wg) { return to_graph6(wg.to_graph()); }

std::string tv_str(const ToughnessValue& v) {
    switch (v.kind) {
        case ToughnessValue::Kind::Zero: return "0 (disconnected)";
        case ToughnessValue::Kind::Infinite: return "infinite";
        case ToughnessValue::Kind::Finite: return v.value->str();
    }
    return "?";
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

bool independent_in(const Graph& g, std::uint64_t mask) {
    for (std::uint64_t a = mask; a; a &= a - 1) {
        int u = std::countr_zero(a);
        for (std::uint64_t b = a & (a - 1); b; b &= b - 1)
            if (g.has_edge(u, std::countr_zero(b))) return false;
    }
    return true;
}

// smallest-mask maximum independent set; corpus graphs here are tiny
std::vector<int> max_independent_set(const Graph& g, int alpha) {
    const int n = g.vertex_count();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) != alpha || !independent_in(g, mask)) continue;
        std::vector<int> out;
        for (std::uint64_t a = mask; a; a &= a - 1) out.push_back(std::countr_zero(a));
        return out;
    }
    throw std::logic_error("no independent set of the stated size");
}

bool validate_cycle(const Graph& g, const std::vector<int>& cyc) {
    const int n = g.vertex_count();
    if (static_cast<int>(cyc.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (int v : cyc) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = true;
    }
    for (int i = 0; i < n; ++i)
        if (!g.has_edge(cyc[i], cyc[(i + 1) % n])) return false;
    return true;
}

std::int64_t fmax_atomic(std::atomic<std::int64_t>& a, std::int64_t v) {
    std::int64_t cur = a.load(std::memory_order_relaxed);
    while (cur < v && !a.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
    }
    return cur;
}

// --- 4-regular chain instances that fail 1-toughness -------------------------
//
// 4-regular blocks with two or four degree-3 slots, strung together through
// degree-4 cut vertices. Removing the m-1 cut vertices leaves m components,
// so every chain fails 1-toughness.

struct ChainBlock {
    Graph graph;
    std::array<int, 2> left;   // slots wired to the previous cut vertex
    std::array<int, 2> right;  // slots wired to the next cut vertex
};

ChainBlock block_q_end() {  // K5 minus one edge; slots {0,1}
    Graph g = Graph::complete(5);
    g.remove_edge(0, 1);
    return {g, {0, 1}, {0, 1}};
}

ChainBlock block_q_mid() {  // K5 minus two disjoint edges
    Graph g = Graph::complete(5);
    g.remove_edge(0, 1);
    g.remove_edge(2, 3);
    return {g, {0, 1}, {2, 3}};
}

ChainBlock block_r_end() {  // octahedron minus one edge
    Graph g = octahedron();
    g.remove_edge(0, 2);
    return {g, {0, 2}, {0, 2}};
}

ChainBlock block_r_mid() {  // octahedron minus two disjoint edges
    Graph g = octahedron();
    g.remove_edge(0, 2);
    g.remove_edge(1, 3);
    return {g, {0, 2}, {1, 3}};
}

Graph chain_of(const std::vector<ChainBlock>& blocks) {
    int total = 0;
    for (const auto& b : blocks) total += b.graph.vertex_count();
    total += static_cast<int>(blocks.size()) - 1;  // cut vertices
    Graph g(total);
    std::vector<int> offset(blocks.size());
    int at = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        offset[i] = at;
        for (auto [u, v] : blocks[i].graph.edges()) g.add_edge(at + u, at + v);
        at += blocks[i].graph.vertex_count();
    }
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
        int cut = at++;
        for (int s : blocks[i].right) g.add_edge(cut, offset[i] + s);
        for (int s : blocks[i + 1].left) g.add_edge(cut, offset[i + 1] + s);
    }
    return g;
}

}  // namespace

Graph octahedron() {
    Graph g = Graph::complete(6);
    g.remove_edge(0, 1);
    g.remove_edge(2, 3);
    g.remove_edge(4, 5);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    int off = a.vertex_count();
    for (auto [u, v] : b.edges()) g.add_edge(off + u, off + v);
    return g;
}

std::vector<Graph> non_one_tough_4regular_instances(int max_vertices) {
    ChainBlock Q = block_q_end(), Qm = block_q_mid();
    ChainBlock R = block_r_end(), Rm = block_r_mid();
    std::vector<std::vector<ChainBlock>> patterns = {
        {Q, Q},           // 11 vertices
        {Q, R},           // 12
        {R, R},           // 13
        {Q, Qm, Q},       // 17
        {R, Rm, R},       // 20
        {Q, Qm, Qm, Q},   // 23
    };
    std::vector<Graph> out;
    for (const auto& p : patterns) {
        Graph g = chain_of(p);
        if (g.vertex_count() > max_vertices) continue;
        if (!is_regular(g, 4) || !is_connected(g))
            throw std::logic_error("chain instance failed its own degree/connectivity contract");
        out.push_back(std::move(g));
    }
    return out;
}

Graph bridged_cubic_example() {
    // two subdivided K4 blocks (the subdivision vertex has degree 2) bridged
    Graph g(10);
    auto block = [&](int o, int sub) {
        g.add_edge(o + 0, sub);
        g.add_edge(o + 1, sub);
        g.add_edge(o + 0, o + 2);
        g.add_edge(o + 0, o + 3);
        g.add_edge(o + 1, o + 2);
        g.add_edge(o + 1, o + 3);
        g.add_edge(o + 2, o + 3);
    };
    block(0, 4);
    block(5, 9);
    g.add_edge(4, 9);
    return g;
}

Graph three_branch_cubic_example() {
    // three 5-vertex blocks, each hanging off the center by a single edge;
    // removing the center leaves 3 components, the worst a cubic cut vertex allows
    Graph g(16);
    for (int i = 0; i < 3; ++i) {
        int o = 1 + 5 * i;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) g.add_edge(o + u, o + v);
        g.remove_edge(o + 4, o + 0);
        g.remove_edge(o + 4, o + 1);
        g.remove_edge(o + 2, o + 3);
        g.add_edge(0, o + 4);
    }
    return g;
}

void HarnessConfig::clamp_to(int m) {
    solver_max_n = std::min(solver_max_n, m);
    spanning_max_n = std::min(spanning_max_n, m);
    bg_max_n = std::min(bg_max_n, m);
    gk_max_n = std::min(gk_max_n, m);
    rational_max_n = std::min(rational_max_n, m);
    cubic_generated_max_n = std::min(cubic_generated_max_n, m);
    fourreg_generated_max_n = std::min(fourreg_generated_max_n, m);
    max_instance_vertices = std::min(max_instance_vertices, m);
}

int HarnessConfig::effective_workers() const {
    if (workers > 0) return workers;
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

ToughnessValue oracle_toughness(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 16) throw SizeCapError("reference toughness is capped at 16 vertices");
    WordGraph wg = WordGraph::from(g);
    if (!wg.connected()) return ToughnessValue::zero();
    OracleBest best = oracle_scan(wg);
    if (!best.found) return ToughnessValue::infinite();
    return ToughnessValue::finite(Rational(best.num, best.den), VertexSet::from_word(n, best.mask));
}

CheckReport check_solver_agreement(const HarnessConfig& cfg) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check_id = "solver_oracle_agreement";
    Collector col;
    const int workers = cfg.effective_workers();
    for (int n = 1; n <= cfg.solver_max_n; ++n) {
        sweep_connected(n, workers, [&](const WordGraph& wg, std::uint64_t emask) {
            col.corpus.fetch_add(1, std::memory_order_relaxed);
            std::uint64_t key = (std::uint64_t{static_cast<std::uint64_t>(n)} << 42) | emask;
            Graph g = wg.to_graph();

            std::string enc = to_graph6(g);
            try {
                if (parse_graph6(enc) != g) col.fail(key, enc, "codec round trip changed the graph");
            } catch (const ParseError& e) {
                col.fail(key, enc, std::string("codec round trip rejected own output: ") + e.what());
            }

            ToughnessValue tv = toughness_small(wg, 1);
            if (!toughness_denominator_bound_check(tv, n))
                col.fail(key, enc, "value outside the 1..n-1 numerator/denominator bounds");

            bool bound_applies = tv.kind == ToughnessValue::Kind::Finite && *tv.value <= Rational(1, 1);
            OracleBest best;
            for (std::uint64_t mask = 1; mask < wg.all; ++mask) {
                int nc = wg.components(mask);
                if (bound_applies) {
                    // proper-subset bound: comp count never exceeds |S|/tau
                    long long s = std::popcount(mask);
                    if (static_cast<long long>(nc) * tv.value->num > s * tv.value->den) {
                        col.fail(key, enc, "subset " + std::to_string(mask) + " has " +
                                               std::to_string(nc) + " components, above |S|/tau");
                        bound_applies = false;  // one report per graph
                    }
                }
                if (nc < 2) continue;
                long long s = std::popcount(mask);
                if (!best.found || s * best.den < best.num * nc) {
                    best.found = true;
                    best.num = s;
                    best.den = nc;
                    best.mask = mask;
                }
            }

            if (!best.found) {
                if (tv.kind != ToughnessValue::Kind::Infinite)
                    col.fail(key, enc, "no cutset exists but solver said " + tv_str(tv));
                return;
            }
            if (tv.kind != ToughnessValue::Kind::Finite) {
                col.fail(key, enc, "solver said " + tv_str(tv) + " on a noncomplete graph");
                return;
            }
            Rational oracle_val(best.num, best.den);
            if (*tv.value != oracle_val) {
                col.fail(key, enc, "solver " + tv.value->str() + " vs reference " + oracle_val.str());
                return;
            }
            if (tv.tough_set->as_word() != best.mask)
                col.fail(key, enc, "tough set " + std::to_string(tv.tough_set->as_word()) +
                                       " vs reference " + std::to_string(best.mask));
            int nc_at = wg.components(tv.tough_set->as_word());
            if (nc_at < 2 || Rational(tv.tough_set->count(), nc_at) != *tv.value)
                col.fail(key, enc, "tough set does not reproduce the value");
        });
    }
    col.into(rep);
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

CheckReport check_rational_bounds(const HarnessConfig& cfg) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check_id = "rational_bounds";
    Collector col;
    for (int n = 2; n <= cfg.rational_max_n; ++n) {
        std::set<Rational> values;
        std::mutex vmu;
        sweep_connected(n, cfg.effective_workers(), [&](const WordGraph& wg, std::uint64_t emask) {
            col.corpus.fetch_add(1, std::memory_order_relaxed);
            ToughnessValue tv = toughness_small(wg, 1);
            if (tv.kind != ToughnessValue::Kind::Finite) return;
            std::uint64_t key = (std::uint64_t{static_cast<std::uint64_t>(n)} << 42) | emask;
            if (tv.value->num < 1 || tv.value->num > n - 1 || tv.value->den < 1 ||
                tv.value->den > n - 1)
                col.fail(key, g6_of(wg), "tau = " + tv.value->str() + " outside 1..n-1 bounds");
            std::lock_guard<std::mutex> lock(vmu);
            values.insert(*tv.value);
        });
        const Rational gap(1, static_cast<std::int64_t>(n) * n);
        const Rational* prev = nullptr;
        for (const Rational& v : values) {
            if (prev && !(prev->abs_diff(v) > gap))
                col.fail(std::uint64_t{static_cast<std::uint64_t>(n)} << 42, "",
                         "n=" + std::to_string(n) + ": values " + prev->str() + " and " + v.str() +
                             " are within 1/n^2 of each other");
            prev = &v;
        }
        rep.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(values.size()) +
                            " distinct finite values");
    }
    col.into(rep);
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

namespace {

// shared corpus walk for both doubled-graph checks
void bg_sweep(const HarnessConfig& cfg, Collector& col,
              const std::function<void(const Graph&, Graph&, const ToughnessValue&, std::uint64_t,
                                       const std::string&)>& item) {
    for (int n = 1; n <= cfg.bg_max_n; ++n) {
        sweep_connected(n, cfg.effective_workers(), [&](const WordGraph& wg, std::uint64_t emask) {
            col.corpus.fetch_add(1, std::memory_order_relaxed);
            std::uint64_t key = (std::uint64_t{static_cast<std::uint64_t>(n)} << 42) | emask;
            Graph g = wg.to_graph();
            ToughnessValue tg = toughness_small(wg, 1);
            GadgetResult bg = build_bipartite_double(g);
            item(g, bg.graph, tg, key, to_graph6(g));
        });
    }
}

}  // namespace

CheckReport check_bg_identity(const HarnessConfig& cfg) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check_id = "bg_identity";
    rep.notes.push_back("n=1 skipped: the doubled graph is K2, complete, no finite value");
    Collector col;
    bg_sweep(cfg, col, [&](const Graph& g, Graph& B, const ToughnessValue& tg, std::uint64_t key,
                           const std::string& enc) {
        const int n = g.vertex_count();
        if (cfg.bg_fault_hook) cfg.bg_fault_hook(B);
        if (n == 1) return;
        for (int i = 0; i < 2 * n; ++i) {
            if (B.degree(i) != g.degree(i % n) + 1) {
                col.fail(key, enc, "double's degree at " + std::to_string(i) + " is not deg+1");
                return;
            }
        }
        if (!is_bipartite(B)) {
            col.fail(key, enc, "double is not bipartite");
            return;
        }
        Rational expected =
            tg.kind == ToughnessValue::Kind::Infinite
                ? Rational(1, 1)
                : std::min(Rational(2 * tg.value->num, tg.value->den), Rational(1, 1));
        ToughnessValue tb = toughness(B);
        if (tb.kind != ToughnessValue::Kind::Finite || *tb.value != expected)
            col.fail(key, enc,
                     "tau(double) = " + tv_str(tb) + ", expected min(2 tau, 1) = " + expected.str());
    });
    col.into(rep);
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

CheckReport check_bg_connectivity(const HarnessConfig& cfg) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check_id = "bg_connectivity";
    Collector col;
    bg_sweep(cfg, col, [&](const Graph& g, Graph& B, const ToughnessValue&, std::uint64_t key,
                           const std::string& enc) {
        const int n = g.vertex_count();
        int kg = connectivity(g);
        int kb = connectivity(B);
        if (kb < kg)
            col.fail(key, enc, "kappa dropped from " + std::to_string(kg) + " to " +
                                   std::to_string(kb) + " under doubling");
        auto coloring = is_bipartite(B);
        if (n >= 2) {
            if (!coloring)
                col.fail(key, enc, "double is not bipartite");
            else if (coloring->class_a.count() != n || coloring->class_b.count() != n)
                col.fail(key, enc, "double's color classes are not n/n");
        }
    });
    col.into(rep);
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

CheckReport check_gk_trichotomy(const HarnessConfig& cfg) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check_id = "gk_trichotomy";
    Collector col;

    struct Instance {
        Graph g;
        GkParams p;
    };
    std::vector<Instance> instances;
    for (int n = 1; n <= cfg.gk_max_n; ++n)
        enumerate_connected_graphs(n, [&](const Graph& g) {
            for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 2}})
                for (int k = 1; k <= 3; ++k) instances.push_back({g, GkParams{a, b, k}});
        });

    std::atomic<int> degenerate{0};
    run_units(instances.size(), cfg.effective_workers(), [&](std::size_t i) {
        const Graph& g = instances[i].g;
        const GkParams& p = instances[i].p;
        col.corpus.fetch_add(1, std::memory_order_relaxed);
        std::string enc = to_graph6(g);
        std::string tag = " [a=" + std::to_string(p.a) + " b=" + std::to_string(p.b) +
                          " k=" + std::to_string(p.k) + "]";
        const int n = g.vertex_count();
        int alpha = independence_number(g);

        GadgetResult built = build_gk(g, p);
        long long want_n = static_cast<long long>(n) * (p.a + p.b) +
                           static_cast<long long>(p.b - 1) * p.k + static_cast<long long>(p.a) * p.k;
        if (built.graph.vertex_count() != want_n) {
            col.fail(i, enc, "gadget has wrong vertex count" + tag);
            return;
        }

        GkCutset ref = gk_reference_cutset(g, p, max_independent_set(g, alpha));
        if (ref.cutset.count() != ref.predicted_size)
            col.fail(i, enc, "reference cutset size disagrees with its own prediction" + tag);
        int got_comp = component_count(built.graph, ref.cutset);
        if (got_comp != ref.predicted_components)
            col.fail(i, enc,
                     "removal leaves " + std::to_string(got_comp) + " components, predicted " +
                         std::to_string(ref.predicted_components) + tag);

        if (built.graph.is_complete()) {
            // only K1 with b=1 builds complete; the ratio target is unreachable there
            if (p.k > alpha) return;  // infinite tau is consistent with the > case
            degenerate.fetch_add(1, std::memory_order_relaxed);
            return;
        }
        ToughnessValue tv = toughness(built.graph);
        if (tv.kind != ToughnessValue::Kind::Finite) {
            col.fail(i, enc, "gadget toughness is " + tv_str(tv) + tag);
            return;
        }
        Rational target(p.a, p.b);
        int want = p.k < alpha ? -1 : (p.k == alpha ? 0 : 1);
        int got = *tv.value < target ? -1 : (*tv.value == target ? 0 : 1);
        if (want != got) {
            col.fail(i, enc,
                     "tau = " + tv.value->str() + " vs target " + target.str() + " breaks the k-vs-alpha sign rule" + tag);
            return;
        }
        if (got_comp >= 2) {
            // the reference cutset witnesses an upper bound on tau
            Rational ub(ref.predicted_size, got_comp);
            if (*tv.value > ub)
                col.fail(i, enc, "tau exceeds the reference cutset ratio " + ub.str() + tag);
        }
    });
    if (int d = degenerate.load())
        rep.notes.push_back(std::to_string(d) +
                            " complete-gadget instances skipped (K1 input with b=1, k=alpha: the "
                            "target ratio cannot be attained)");
    col.into(rep);
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

CheckReport check_hr(const HarnessConfig& cfg) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check_id = "hr_blocks";
    Collector col;
    int idx = 0;
    for (int r : cfg.hr_orders) {
        std::uint64_t key = static_cast<std::uint64_t>(idx++);
        int want_n = (r % 2 == 1) ? r + 2 : 2 * r;
        if (want_n > cfg.max_instance_vertices) {
            rep.notes.push_back("r=" + std::to_string(r) + " skipped by the instance size bound");
            continue;
        }
        col.corpus.fetch_add(1);
        GadgetResult hr = build_hr(r);
        const Graph& g = hr.graph;
        std::string enc = to_graph6(g);
        std::string tag = " [r=" + std::to_string(r) + "]";
        if (g.vertex_count() != want_n) {
            col.fail(key, enc, "wrong vertex count" + tag);
            continue;
        }

        std::vector<int> attach;
        if (r % 2 == 1)
            attach = {hr.labels.at("w")};
        else
            attach = {hr.labels.at("w_a"), hr.labels.at("w_b")};
        int short_deg = 0;
        bool deg_ok = true;
        for (int v = 0; v < g.vertex_count(); ++v) {
            int d = g.degree(v);
            if (d == r - 1)
                ++short_deg;
            else if (d != r)
                deg_ok = false;
        }
        for (int a : attach) deg_ok = deg_ok && g.degree(a) == r - 1;
        if (!deg_ok || short_deg != static_cast<int>(attach.size()))
            col.fail(key, enc, "degree profile is not (r-1) at the attachment points and r elsewhere" + tag);

        auto coloring = is_bipartite(g);
        if (r % 2 == 0) {
            if (!coloring || coloring->class_a.count() != r || coloring->class_b.count() != r)
                col.fail(key, enc, "expected balanced bipartition for even r" + tag);
        } else if (coloring) {
            col.fail(key, enc, "odd-r block must contain odd cycles" + tag);
        }

        if (!validate_cycle(g, hr_reference_cycle(r)))
            col.fail(key, enc, "reference cycle is not a Hamiltonian cycle of the block" + tag);
        auto found = find_hamiltonian_cycle(g);
        if (!found || !validate_cycle(g, *found))
            col.fail(key, enc, "search failed to find a Hamiltonian cycle" + tag);

        ToughnessValue tv = toughness(g);
        if (!tv.at_least(Rational(1, 1)))
            col.fail(key, enc, "tau = " + tv_str(tv) + " is below 1" + tag);
    }
    col.into(rep);
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

CheckReport check_gadget_lemmas(const HarnessConfig& cfg) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check_id = "gadget_lemmas";
    rep.mode = CheckReport::Mode::Heuristic;
    rep.seed = cfg.seed;
    Collector col;

    std::vector<Graph> hard = non_one_tough_4regular_instances(cfg.max_instance_vertices);
    if (static_cast<int>(hard.size()) < cfg.lemma_min_instances) {
        if (cfg.max_instance_vertices >= 23) {
            col.fail(0, "",
                     "only " + std::to_string(hard.size()) + " non-1-tough instances, need " +
                         std::to_string(cfg.lemma_min_instances));
        } else {
            rep.notes.push_back("instance size bound leaves " + std::to_string(hard.size()) +
                                " non-1-tough inputs; equality side reduced");
        }
    }

    // 1-tough side: named small graphs plus sampled 4-regular graphs on 7..8
    std::vector<Graph> tough_side;
    if (cfg.max_instance_vertices >= 5) tough_side.push_back(Graph::complete(5));
    if (cfg.max_instance_vertices >= 6) tough_side.push_back(octahedron());
    if (cfg.max_instance_vertices >= 8) {
        for (int n : {7, 8})
            for (int j = 0; j < cfg.samples_per_order; ++j)
                tough_side.push_back(
                    random_connected_regular_graph(n, 4, cfg.seed + 31 * n + j));
    }

    std::uint64_t key = 1;
    const Rational one(1, 1), half(1, 2);
    for (int r : cfg.lemma_orders) {
        if (r != 5 && r != 6) {
            rep.notes.push_back("r=" + std::to_string(r) + " skipped: inputs here are 4-regular");
            continue;
        }
        auto attach = [&](const Graph& g) {
            return r % 2 == 1 ? attach_gadgets_odd(g, r) : attach_gadgets_even(g, r);
        };

        int equality_checked = 0;
        for (const Graph& g : hard) {
            col.corpus.fetch_add(1);
            std::string enc = to_graph6(g);
            std::string tag = " [r=" + std::to_string(r) + "]";
            DecideResult d = decide_t_tough(g, one);
            if (d.tough) {
                col.fail(key++, enc, "chain instance is unexpectedly 1-tough" + tag);
                continue;
            }
            const Witness& w = *d.witness;
            long long s = w.cutset.count();
            Graph gp = attach(g).graph;
            VertexSet sp(gp.vertex_count());
            for (int v : w.cutset.to_indices()) sp.set(v);
            int before = w.component_count;
            int after = component_count(gp, sp);
            if (after != before + s) {
                col.fail(key++, enc,
                         "attachment shifted the component count to " + std::to_string(after) +
                             ", expected " + std::to_string(before) + "+" + std::to_string(s) + tag);
                continue;
            }
            if (after <= 2 * s) {
                col.fail(key++, enc, "lifted cutset no longer beats twice its size" + tag);
                continue;
            }
            Witness lifted{sp, after, Rational(s, after)};
            if (!verify_witness(gp, half, lifted)) {
                col.fail(key++, enc, "lifted witness failed re-verification at 1/2" + tag);
                continue;
            }
            ++equality_checked;
        }
        rep.notes.push_back("r=" + std::to_string(r) + ": component-count equality held on " +
                            std::to_string(equality_checked) + " non-1-tough inputs");

        int refuted_none = 0;
        for (std::size_t i = 0; i < tough_side.size(); ++i) {
            const Graph& g = tough_side[i];
            col.corpus.fetch_add(1);
            ++rep.sample_count;
            std::string enc = to_graph6(g);
            std::string tag = " [r=" + std::to_string(r) + "]";
            DecideResult d = decide_t_tough(g, one);
            if (!d.tough) {
                col.fail(key++, enc, "sampled graph is not 1-tough; sampler or solver broke" + tag);
                continue;
            }
            Graph gp = attach(g).graph;
            auto wit = refute_heuristic(gp, half, cfg.heuristic_budget,
                                        cfg.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
            if (wit) {
                if (verify_witness(gp, half, *wit))
                    col.fail(key++, enc,
                             "verified 1/2 refutation on the attachment of a 1-tough input" + tag);
                else
                    col.fail(key++, enc, "heuristic returned an invalid witness" + tag);
            } else {
                ++refuted_none;
            }
        }
        rep.notes.push_back("r=" + std::to_string(r) + ": heuristic found no 1/2 refutation on " +
                            std::to_string(refuted_none) +
                            " one-tough inputs (heuristic; absence is not a proof)");
    }
    col.into(rep);
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

namespace {

struct CubicStats {
    std::atomic<std::int64_t> max_classify_ns{0};
};

// cut structure straight from the bit rows: cubic cut vertices and the largest
// component count any single vertex deletion produces
void cubic_cut_profile(const WordGraph& wg, bool& has_cut, int& max_comp) {
    has_cut = false;
    max_comp = 1;
    for (int v = 0; v < wg.n; ++v) {
        int nc = wg.components(std::uint64_t{1} << v);
        if (nc >= 2) has_cut = true;
        if (nc > max_comp) max_comp = nc;
    }
}

void check_one_cubic(const Graph& g, const WordGraph& wg, const ToughnessValue& tv,
                     std::uint64_t key, Collector& col, CubicStats& stats) {
    std::string enc;
    auto fail = [&](const std::string& d) {
        if (enc.empty()) enc = to_graph6(g);
        col.fail(key, enc, d);
    };

    auto c0 = Clock::now();
    CubicClass cls = classify_cubic(g);
    fmax_atomic(stats.max_classify_ns,
                std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - c0).count());

    bool has_cut = false;
    int max_comp = 1;
    cubic_cut_profile(wg, has_cut, max_comp);
    if (max_comp > 3) {
        fail("a cubic cut vertex left " + std::to_string(max_comp) + " components");
        return;
    }

    CubicClass::Kind want;
    if (g.is_complete())
        want = CubicClass::CompleteK4;
    else if (!has_cut)
        want = CubicClass::TauAtLeastTwoThirds;
    else
        want = max_comp >= 3 ? CubicClass::TauOneThird : CubicClass::TauOneHalf;
    if (cls.kind != want) {
        fail("classifier kind " + std::to_string(cls.kind) + " vs cut-structure kind " +
             std::to_string(want));
        return;
    }
    if ((cls.kind == CubicClass::TauOneThird || cls.kind == CubicClass::TauOneHalf)) {
        if (!cls.cut_vertex || wg.components(std::uint64_t{1} << *cls.cut_vertex) < 2) {
            fail("missing or bogus certificate cut vertex");
            return;
        }
    }

    // class vs exact value
    const Rational third(1, 3), half(1, 2), two_thirds(2, 3);
    switch (cls.kind) {
        case CubicClass::CompleteK4:
            if (tv.kind != ToughnessValue::Kind::Infinite) fail("K4 class but finite tau");
            break;
        case CubicClass::TauOneThird:
            if (tv.kind != ToughnessValue::Kind::Finite || *tv.value != third)
                fail("1/3 class but tau = " + tv_str(tv));
            break;
        case CubicClass::TauOneHalf:
            if (tv.kind != ToughnessValue::Kind::Finite || *tv.value != half)
                fail("1/2 class but tau = " + tv_str(tv));
            break;
        case CubicClass::TauAtLeastTwoThirds:
            if (tv.kind != ToughnessValue::Kind::Finite || *tv.value < two_thirds)
                fail("cut-free class but tau = " + tv_str(tv));
            break;
    }

    // cut vertex iff tau <= 1/2 iff tau < 2/3
    bool below = tv.kind == ToughnessValue::Kind::Finite && *tv.value <= half;
    bool under23 = tv.kind == ToughnessValue::Kind::Finite && *tv.value < two_thirds;
    if (has_cut != below || below != under23)
        fail("cut-vertex / tau<=1/2 / tau<2/3 equivalence broke");
}

}  // namespace

CheckReport check_cubic_recognizer(const HarnessConfig& cfg) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check_id = "cubic_recognizer";
    Collector col;
    CubicStats stats;
    const int workers = cfg.effective_workers();

    // named instances pinning each class
    struct Named {
        Graph g;
        CubicClass::Kind want;
    };
    std::vector<Named> named;
    if (cfg.max_instance_vertices >= 4) named.push_back({Graph::complete(4), CubicClass::CompleteK4});
    if (cfg.max_instance_vertices >= 10) {
        named.push_back({bridged_cubic_example(), CubicClass::TauOneHalf});
        named.push_back({petersen(), CubicClass::TauAtLeastTwoThirds});
    }
    if (cfg.max_instance_vertices >= 16)
        named.push_back({three_branch_cubic_example(), CubicClass::TauOneThird});
    for (std::size_t i = 0; i < named.size(); ++i) {
        col.corpus.fetch_add(1);
        const Graph& g = named[i].g;
        WordGraph wg = WordGraph::from(g);
        ToughnessValue tv = oracle_toughness(g);
        CubicClass cls = classify_cubic(g);
        if (cls.kind != named[i].want)
            col.fail(i, to_graph6(g), "named instance classified off its intended class");
        check_one_cubic(g, wg, tv, i, col, stats);
        // threshold decisions must line up with the exact value
        for (const Rational& t : {Rational(1, 3), Rational(1, 2), Rational(3, 5)})
            if (decide_cubic_t_tough(g, t) != tv.at_least(t))
                col.fail(i, to_graph6(g), "class-based decision at t=" + t.str() + " is wrong");
    }

    // every labeled connected cubic graph up to the generation bound
    const std::map<int, long long> known_counts = {
        {4, 1}, {6, 70}, {8, 19320}, {10, 11166120}};
    for (int n = 4; n <= cfg.cubic_generated_max_n; n += 2) {
        std::atomic<long long> seen{0};
        long long branches = regular_branch_count(n, 3);
        run_units(static_cast<std::size_t>(branches), workers, [&](std::size_t br) {
            long long local = 0;
            std::uint64_t base = (std::uint64_t{static_cast<std::uint64_t>(n)} << 56) |
                                 (static_cast<std::uint64_t>(br) << 36);
            for_each_connected_regular_in_branch(n, 3, static_cast<long long>(br),
                                                 [&](const WordGraph& wg) {
                                                     std::uint64_t key = base | static_cast<std::uint64_t>(local);
                                                     Graph g = wg.to_graph();
                                                     ToughnessValue tv = toughness_small(wg, 1);
                                                     check_one_cubic(g, wg, tv, key, col, stats);
                                                     if (local % 2048 == 0) {
                                                         ToughnessValue ref = oracle_toughness(g);
                                                         bool same =
                                                             ref.kind == tv.kind &&
                                                             (ref.kind != ToughnessValue::Kind::Finite ||
                                                              *ref.value == *tv.value);
                                                         if (!same)
                                                             col.fail(key, to_graph6(g),
                                                                      "solver and reference disagree");
                                                     }
                                                     ++local;
                                                 });
            seen.fetch_add(local, std::memory_order_relaxed);
        });
        col.corpus.fetch_add(seen.load());
        auto it = known_counts.find(n);
        if (it != known_counts.end() && seen.load() != it->second)
            col.fail(std::uint64_t{static_cast<std::uint64_t>(n)} << 56, "",
                     "generated " + std::to_string(seen.load()) + " labeled cubic graphs on " +
                         std::to_string(n) + " vertices, known count is " +
                         std::to_string(it->second));
    }

    // ingested corpus files, exact reference value per graph
    for (std::size_t f = 0; f < cfg.cubic_corpus_paths.size(); ++f) {
        const std::string& path = cfg.cubic_corpus_paths[f];
        std::ifstream in(path);
        if (!in) {
            col.fail(std::uint64_t{0xFFFF0000} + f, "", "cannot open corpus file " + path);
            continue;
        }
        std::vector<Graph> graphs;
        try {
            graphs = read_graph6_stream(in);
        } catch (const ParseError& e) {
            col.fail(std::uint64_t{0xFFFF0000} + f, "", path + ": " + e.what());
            continue;
        }
        std::atomic<int> skipped_atomic{0};
        run_units(graphs.size(), workers, [&](std::size_t i) {
            const Graph& g = graphs[i];
            std::uint64_t key = (std::uint64_t{0xFFFF0000} + f) << 20 | i;
            if (g.vertex_count() > 14) {
                skipped_atomic.fetch_add(1);
                return;
            }
            col.corpus.fetch_add(1);
            if (!is_regular(g, 3) || !is_connected(g)) {
                col.fail(key, to_graph6(g), "corpus entry is not connected cubic");
                return;
            }
            WordGraph wg = WordGraph::from(g);
            check_one_cubic(g, wg, oracle_toughness(g), key, col, stats);
        });
        if (int skipped = skipped_atomic.load())
            rep.notes.push_back(path + ": " + std::to_string(skipped) + " graphs above n=14 skipped");
    }

    rep.max_item_seconds = static_cast<double>(stats.max_classify_ns.load()) / 1e9;
    col.into(rep);
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

namespace {

// no subset may split a connected 4-regular graph into more than 2|S| pieces,
// and each component must send an even number (at least 2) of edges into S
void check_one_fourreg(const WordGraph& wg, bool full_subsets, std::uint64_t key, Collector& col) {
    const int n = wg.n;
    std::uint64_t comp[64];
    auto scan_size = [&](int s) {
        std::uint64_t mask = (std::uint64_t{1} << s) - 1;
        std::uint64_t last = mask << (n - s);
        while (true) {
            int nc = wg.components_masks(mask, comp, 64);
            if (nc >= 2) {
                if (static_cast<long long>(nc) > 2LL * s) {
                    col.fail(key, g6_of(wg),
                             "subset of size " + std::to_string(s) + " leaves " +
                                 std::to_string(nc) + " components; tau < 1/2");
                    return false;
                }
                for (int c = 0; c < nc; ++c) {
                    int border = 0;
                    for (std::uint64_t it = comp[c]; it; it &= it - 1)
                        border += std::popcount(wg.rows[std::countr_zero(it)] & mask);
                    if (border < 2 || border % 2 != 0) {
                        col.fail(key, g6_of(wg),
                                 "component sends " + std::to_string(border) +
                                     " edges into the cutset; expected an even count >= 2");
                        return false;
                    }
                }
            }
            if (mask == last) break;
            mask = next_same_popcount(mask);
        }
        return true;
    };
    int top = full_subsets ? n - 1 : std::max(1, (n - 1) / 3);
    for (int s = 1; s <= top; ++s)
        if (!scan_size(s)) return;
}

}  // namespace

CheckReport check_fourreg_recognizer(const HarnessConfig& cfg) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check_id = "fourreg_recognizer";
    Collector col;
    const int workers = cfg.effective_workers();

    // connectivity is the whole criterion; exercise both answers
    struct Named {
        Graph g;
        bool want;
    };
    std::vector<Named> named;
    if (cfg.max_instance_vertices >= 6) {
        named.push_back({Graph::complete(5), true});
        named.push_back({octahedron(), true});
    }
    if (cfg.max_instance_vertices >= 12) {
        named.push_back({disjoint_union(Graph::complete(5), Graph::complete(5)), false});
        named.push_back({disjoint_union(octahedron(), octahedron()), false});
        named.push_back({disjoint_union(Graph::complete(5), octahedron()), false});
    }
    for (std::size_t i = 0; i < named.size(); ++i) {
        col.corpus.fetch_add(1);
        const Graph& g = named[i].g;
        bool got = recognize_half_tough_4regular(g);
        if (got != named[i].want)
            col.fail(i, to_graph6(g), "recognizer disagrees with connectivity");
        ToughnessValue tv = oracle_toughness(g);
        bool half_tough = tv.at_least(Rational(1, 2));
        if (half_tough != got)
            col.fail(i, to_graph6(g), "recognizer disagrees with the exact value");
    }

    const std::map<int, long long> known_counts = {
        {5, 1}, {6, 15}, {7, 465}, {8, 19355}, {9, 1024380}};
    for (int n = 5; n <= cfg.fourreg_generated_max_n; ++n) {
        std::atomic<long long> seen{0};
        long long branches = regular_branch_count(n, 4);
        bool full = n <= 8;  // above that only sizes < n/3 can violate 1/2
        run_units(static_cast<std::size_t>(branches), workers, [&](std::size_t br) {
            long long local = 0;
            std::uint64_t base = (std::uint64_t{static_cast<std::uint64_t>(n)} << 56) |
                                 (static_cast<std::uint64_t>(br) << 36);
            for_each_connected_regular_in_branch(n, 4, static_cast<long long>(br),
                                                 [&](const WordGraph& wg) {
                                                     std::uint64_t key = base | static_cast<std::uint64_t>(local);
                                                     check_one_fourreg(wg, full, key, col);
                                                     if (!recognize_half_tough_4regular(wg.to_graph()))
                                                         col.fail(key, g6_of(wg),
                                                                  "recognizer rejected a connected graph");
                                                     ++local;
                                                 });
            seen.fetch_add(local, std::memory_order_relaxed);
        });
        col.corpus.fetch_add(seen.load());
        auto it = known_counts.find(n);
        if (it != known_counts.end() && seen.load() != it->second)
            col.fail(std::uint64_t{static_cast<std::uint64_t>(n)} << 56, "",
                     "generated " + std::to_string(seen.load()) + " labeled 4-regular graphs on " +
                         std::to_string(n) + " vertices, known count is " +
                         std::to_string(it->second));
    }

    for (std::size_t f = 0; f < cfg.fourreg_corpus_paths.size(); ++f) {
        const std::string& path = cfg.fourreg_corpus_paths[f];
        std::ifstream in(path);
        if (!in) {
            col.fail((std::uint64_t{0xFFFF0000} + f) << 20, "", "cannot open corpus file " + path);
            continue;
        }
        std::vector<Graph> graphs;
        try {
            graphs = read_graph6_stream(in);
        } catch (const ParseError& e) {
            col.fail((std::uint64_t{0xFFFF0000} + f) << 20, "", path + ": " + e.what());
            continue;
        }
        run_units(graphs.size(), workers, [&](std::size_t i) {
            const Graph& g = graphs[i];
            std::uint64_t key = (std::uint64_t{0xFFFF0000} + f) << 20 | i;
            col.corpus.fetch_add(1);
            if (!is_regular(g, 4) || g.vertex_count() > 10) {
                col.fail(key, to_graph6(g), "corpus entry is not 4-regular with n <= 10");
                return;
            }
            WordGraph wg = WordGraph::from(g);
            if (recognize_half_tough_4regular(g) != wg.connected())
                col.fail(key, to_graph6(g), "recognizer disagrees with connectivity");
            if (wg.connected()) check_one_fourreg(wg, true, key, col);
        });
    }

    col.into(rep);
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

CheckReport check_spanning_half_tough(const HarnessConfig& cfg) {
    auto t0 = Clock::now();
    CheckReport rep;
    rep.check_id = "spanning_half_tough";
    Collector col;
    std::atomic<long long> eligible{0};
    const Rational half(1, 2);
    for (int n = 3; n <= cfg.spanning_max_n; ++n) {
        sweep_connected(n, cfg.effective_workers(), [&](const WordGraph& wg, std::uint64_t emask) {
            col.corpus.fetch_add(1, std::memory_order_relaxed);
            Graph g = wg.to_graph();
            if (tough_threshold_violation(g, half)) return;  // not 1/2-tough, out of scope
            eligible.fetch_add(1, std::memory_order_relaxed);
            std::uint64_t key = (std::uint64_t{static_cast<std::uint64_t>(n)} << 42) | emask;
            std::string enc = to_graph6(g);

            Graph h = half_tough_spanning_subgraph(g);
            if (h.vertex_count() != n) {
                col.fail(key, enc, "output dropped vertices");
                return;
            }
            for (auto [u, v] : h.edges())
                if (!g.has_edge(u, v)) {
                    col.fail(key, enc, "output contains a non-edge of the input");
                    return;
                }
            ToughnessValue tv = toughness_small(WordGraph::from(h), 1);
            if (tv.kind != ToughnessValue::Kind::Finite || *tv.value != half) {
                col.fail(key, enc, "output has tau = " + tv_str(tv) + ", expected exactly 1/2");
                return;
            }
            // fixpoint: on small orders (and a stride above), no edge is deletable
            if (n <= 5 || emask % 101 == 0) {
                for (auto [u, v] : h.edges()) {
                    h.remove_edge(u, v);
                    bool still = !tough_threshold_violation(h, half);
                    h.add_edge(u, v);
                    if (still) {
                        col.fail(key, enc, "a deletable edge survived the scan");
                        return;
                    }
                }
            }
        });
    }
    rep.notes.push_back(std::to_string(eligible.load()) + " eligible inputs");
    col.into(rep);
    rep.elapsed_seconds = seconds_since(t0);
    return rep;
}

RunAllResult run_all(const HarnessConfig& cfg, std::ostream* progress) {
    auto t0 = Clock::now();
    RunAllResult result;
    using CheckFn = CheckReport (*)(const HarnessConfig&);
    const std::pair<const char*, CheckFn> checks[] = {
        {"solver_oracle_agreement", check_solver_agreement},
        {"rational_bounds", check_rational_bounds},
        {"bg_identity", check_bg_identity},
        {"bg_connectivity", check_bg_connectivity},
        {"gk_trichotomy", check_gk_trichotomy},
        {"hr_blocks", check_hr},
        {"gadget_lemmas", check_gadget_lemmas},
        {"fourreg_recognizer", check_fourreg_recognizer},
        {"spanning_half_tough", check_spanning_half_tough},
        {"cubic_recognizer", check_cubic_recognizer},
    };
    for (const auto& [id, fn] : checks) {
        if (progress) *progress << "[harness] " << id << "..." << std::flush;
        CheckReport rep;
        try {
            rep = fn(cfg);
        } catch (const std::exception& e) {
            rep.check_id = id;
            rep.failures.push_back({"", std::string("check aborted: ") + e.what()});
        }
        if (progress)
            *progress << (rep.passed() ? " pass" : " FAIL") << " (" << rep.corpus_size
                      << " items, " << rep.elapsed_seconds << "s)\n";
        result.reports.push_back(std::move(rep));
    }
    result.elapsed_seconds = seconds_since(t0);
    return result;
}

}  // namespace tough
