#include "tough/algorithms.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <queue>

#include "tough/word_graph.hpp"

namespace tough {

namespace {

// Unit-capacity vertex-split max-flow, capped at `limit` augmentations.
// Nodes: v_in = 2v, v_out = 2v+1. Arc in->out capacity 1; edges get capacity-2
// arcs both ways (2 is effectively infinite for vertex cuts).
struct SplitFlow {
    int n;
    std::vector<std::vector<int>> to, cap_idx;
    std::vector<int> cap;

    explicit SplitFlow(const Graph& g) : n(g.vertex_count()), to(2 * n), cap_idx(2 * n) {
        for (int v = 0; v < n; ++v) arc(2 * v, 2 * v + 1, 1);
        for (auto [u, v] : g.edges()) {
            arc(2 * u + 1, 2 * v, 2);
            arc(2 * v + 1, 2 * u, 2);
        }
    }

    void arc(int a, int b, int c) {
        to[a].push_back(b);
        cap_idx[a].push_back(static_cast<int>(cap.size()));
        cap.push_back(c);
        to[b].push_back(a);
        cap_idx[b].push_back(static_cast<int>(cap.size()));
        cap.push_back(0);
    }

    int max_flow(int s, int t, int limit, std::vector<int>& base_cap) {
        cap = base_cap;
        int flow = 0;
        std::vector<int> prev_node(2 * n), prev_arc(2 * n);
        while (flow < limit) {
            std::fill(prev_node.begin(), prev_node.end(), -1);
            std::deque<int> q{2 * s + 1};
            prev_node[2 * s + 1] = 2 * s + 1;
            bool reached = false;
            while (!q.empty() && !reached) {
                int a = q.front();
                q.pop_front();
                for (std::size_t i = 0; i < to[a].size(); ++i) {
                    int b = to[a][i];
                    if (prev_node[b] != -1 || cap[cap_idx[a][i]] <= 0) continue;
                    prev_node[b] = a;
                    prev_arc[b] = cap_idx[a][i];
                    if (b == 2 * t) {
                        reached = true;
                        break;
                    }
                    q.push_back(b);
                }
            }
            if (!reached) break;
            for (int b = 2 * t; b != 2 * s + 1; b = prev_node[b]) {
                cap[prev_arc[b]] -= 1;
                cap[prev_arc[b] ^ 1] += 1;
            }
            ++flow;
        }
        return flow;
    }
};

}  // namespace

int connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (g.is_complete()) return n - 1;
    SplitFlow f(g);
    std::vector<int> base = f.cap;
    int best = n - 1;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            best = std::min(best, f.max_flow(s, t, best, base));
            if (best == 0) return 0;
        }
    return best;
}

VertexSet cut_vertices(const Graph& g) {
    const int n = g.vertex_count();
    if (!is_connected(g)) throw std::invalid_argument("cut_vertices: graph must be connected");
    VertexSet out(n);
    std::vector<int> pre(n, -1), low(n, 0);
    // iterative dfs with explicit neighbor cursors
    std::vector<std::vector<int>> nbr(n);
    for (int v = 0; v < n; ++v) nbr[v] = g.neighbors(v).to_indices();
    std::vector<int> parent(n, -1), cursor(n, 0), stack;
    int timer = 0;
    pre[0] = low[0] = timer++;
    stack.push_back(0);
    int root_children = 0;
    while (!stack.empty()) {
        int v = stack.back();
        if (cursor[v] < static_cast<int>(nbr[v].size())) {
            int w = nbr[v][cursor[v]++];
            if (pre[w] == -1) {
                parent[w] = v;
                pre[w] = low[w] = timer++;
                stack.push_back(w);
                if (v == 0) ++root_children;
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], pre[w]);
            }
        } else {
            stack.pop_back();
            int p = parent[v];
            if (p != -1) {
                low[p] = std::min(low[p], low[v]);
                if (p != 0 && low[v] >= pre[p]) out.set(p);
            }
        }
    }
    if (root_children >= 2) out.set(0);
    return out;
}

namespace {

// max independent set on word graphs; candidates in P, current size in cur
struct MisSearch {
    const WordGraph& g;
    int best = 0;

    explicit MisSearch(const WordGraph& wg) : g(wg) {}

    void run(std::uint64_t p, int cur) {
        if (cur + std::popcount(p) <= best) return;
        if (!p) {
            best = cur;
            return;
        }
        // pivot on the most constrained candidate
        int pivot = -1, pdeg = -1;
        std::uint64_t it = p;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            int d = std::popcount(g.rows[v] & p);
            if (d > pdeg) {
                pdeg = d;
                pivot = v;
            }
        }
        std::uint64_t bit = std::uint64_t{1} << pivot;
        run(p & ~(g.rows[pivot] | bit), cur + 1);
        run(p & ~bit, cur);
    }
};

int greedy_independent(const WordGraph& g) {
    std::uint64_t p = g.all;
    int size = 0;
    while (p) {
        int pick = -1, deg = g.n + 1;
        std::uint64_t it = p;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            int d = std::popcount(g.rows[v] & p);
            if (d < deg) {
                deg = d;
                pick = v;
            }
        }
        p &= ~(g.rows[pick] | (std::uint64_t{1} << pick));
        ++size;
    }
    return size;
}

// generic fallback for n > 64 (same search over VertexSet)
int independence_large(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexSet> nb(n);
    for (int v = 0; v < n; ++v) nb[v] = g.neighbors(v);
    int best = 0;
    struct Frame {
        std::vector<int> p;
        int cur;
    };
    std::vector<Frame> stack;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    stack.push_back({all, 0});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.cur + static_cast<int>(f.p.size()) <= best) continue;
        if (f.p.empty()) {
            best = std::max(best, f.cur);
            continue;
        }
        int pivot = f.p.front();
        std::vector<int> without, reduced;
        for (int v : f.p)
            if (v != pivot) without.push_back(v);
        for (int v : f.p)
            if (v != pivot && !nb[pivot].test(v)) reduced.push_back(v);
        stack.push_back({std::move(without), f.cur});
        stack.push_back({std::move(reduced), f.cur + 1});
    }
    return best;
}

}  // namespace

int independence_number(const Graph& g) {
    if (g.vertex_count() > 64) return independence_large(g);
    WordGraph wg = WordGraph::from(g);
    MisSearch s(wg);
    s.best = greedy_independent(wg) - 1;  // lower bound, exclusive in the pruning test
    if (s.best < 0) s.best = 0;
    s.run(wg.all, 0);
    return s.best;
}

std::optional<TwoColoring> is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    TwoColoring tc{VertexSet(n), VertexSet(n)};
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v).to_indices()) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) (color[v] == 0 ? tc.class_a : tc.class_b).set(v);
    return tc;
}

bool is_regular(const Graph& g, int r) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != r) return false;
    return true;
}

namespace {

// Backtracking Hamiltonian cycle search for n <= 64 word graphs.
struct HamSearch {
    const WordGraph& g;
    std::vector<int> path;
    std::uint64_t visited = 0;

    explicit HamSearch(const WordGraph& wg) : g(wg) {}

    bool feasible(int tail) const {
        std::uint64_t un = g.all & ~visited;
        if (!un) return true;
        // every unvisited vertex must stay reachable from the tail
        std::uint64_t frontier = g.rows[tail] & un, seen = frontier;
        while (frontier) {
            std::uint64_t nxt = 0;
            std::uint64_t it = frontier;
            while (it) {
                nxt |= g.rows[std::countr_zero(it)];
                it &= it - 1;
            }
            frontier = nxt & un & ~seen;
            seen |= frontier;
        }
        if ((un & ~seen) != 0) return false;
        // every unvisited vertex needs two usable cycle neighbors among the
        // unvisited set plus the two path endpoints
        std::uint64_t avail = un | (std::uint64_t{1} << tail) | 1;  // start is vertex 0
        std::uint64_t it = un;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            if (std::popcount(g.rows[v] & avail) < 2) return false;
        }
        return true;
    }

    bool extend() {
        int tail = path.back();
        if (static_cast<int>(path.size()) == g.n) return g.has_edge(tail, 0);
        if (!feasible(tail)) return false;
        std::uint64_t cand = g.rows[tail] & ~visited;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(v);
            visited |= std::uint64_t{1} << v;
            if (extend()) return true;
            visited &= ~(std::uint64_t{1} << v);
            path.pop_back();
        }
        return false;
    }
};

// fallback for wider graphs: plain recursive backtracking
bool ham_large_rec(const Graph& g, std::vector<std::vector<int>>& nbr, std::vector<char>& used,
                   std::vector<int>& path) {
    if (static_cast<int>(path.size()) == g.vertex_count()) return g.has_edge(path.back(), 0);
    for (int w : nbr[path.back()]) {
        if (used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        if (ham_large_rec(g, nbr, used, path)) return true;
        path.pop_back();
        used[w] = 0;
    }
    return false;
}

bool ham_large(const Graph& g, std::vector<int>& path) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> nbr(n);
    for (int v = 0; v < n; ++v) nbr[v] = g.neighbors(v).to_indices();
    std::vector<char> used(n, 0);
    path = {0};
    used[0] = 1;
    return ham_large_rec(g, nbr, used, path);
}

}  // namespace

std::optional<std::vector<int>> find_hamiltonian_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("hamiltonian cycle needs at least 3 vertices");
    if (!is_connected(g)) return std::nullopt;
    if (n <= 64) {
        WordGraph wg = WordGraph::from(g);
        HamSearch s(wg);
        s.path = {0};
        s.visited = 1;
        if (s.extend()) return s.path;
        return std::nullopt;
    }
    std::vector<int> path;
    if (ham_large(g, path)) return path;
    return std::nullopt;
}

}  // namespace tough
