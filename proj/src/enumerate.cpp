#include "tough/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tough {

std::uint64_t labeled_graph_space(int n) {
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

WordGraph word_graph_from_edge_mask(int n, std::uint64_t mask) {
    WordGraph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((mask >> bit) & 1) g.add_edge(i, j);
    return g;
}

void for_each_connected_in_range(int n, std::uint64_t begin, std::uint64_t end,
                                 const std::function<void(const WordGraph&, std::uint64_t)>& fn) {
    // precomputed (i,j) per bit avoids re-deriving the pair order in the loop
    const int bits = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pos(bits);
    {
        int b = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) pos[b++] = {i, j};
    }
    WordGraph g(n);
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        std::fill(g.rows.begin(), g.rows.end(), 0);
        std::uint64_t m = mask;
        while (m) {
            int b = std::countr_zero(m);
            m &= m - 1;
            g.add_edge(pos[b].first, pos[b].second);
        }
        if (g.connected()) fn(g, mask);
    }
}

void enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7) throw std::invalid_argument("enumerate_connected_graphs: n must be 1..7");
    for_each_connected_in_range(n, 0, labeled_graph_space(n),
                                [&](const WordGraph& wg, std::uint64_t) { fn(wg.to_graph()); });
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::uint64_t unrank_combination(int n, int k, std::uint64_t rank) {
    // colex: the rank-th subset when subsets are ordered by their mask value
    std::uint64_t mask = 0;
    for (int i = k; i >= 1; --i) {
        int c = n - 1;
        while (binomial(c, i) > rank) --c;
        rank -= binomial(c, i);
        mask |= std::uint64_t{1} << c;
        n = c;
    }
    return mask;
}

namespace {

struct RegularEnum {
    int n, r;
    WordGraph g;
    std::vector<int> deg;
    const std::function<void(const WordGraph&)>* fn;

    RegularEnum(int n_, int r_) : n(n_), r(r_), g(n_), deg(n_, 0) {}

    // all ways to pick `need` partners for u among candidates with index > u
    void complete(int u) {
        int need = r - deg[u];
        std::vector<int> cand;
        for (int w = u + 1; w < n; ++w)
            if (deg[w] < r && !g.has_edge(u, w)) cand.push_back(w);
        if (static_cast<int>(cand.size()) < need) return;
        std::vector<int> pick(need);
        choose(u, cand, 0, 0, pick);
    }

    void choose(int u, const std::vector<int>& cand, int from, int taken, std::vector<int>& pick) {
        int need = r - deg[u];
        if (taken == need) {
            apply(u, pick);
            return;
        }
        for (int i = from; i <= static_cast<int>(cand.size()) - (need - taken); ++i) {
            pick[taken] = cand[i];
            choose(u, cand, i + 1, taken + 1, pick);
        }
    }

    void apply(int u, const std::vector<int>& pick) {
        for (int w : pick) {
            g.add_edge(u, w);
            ++deg[w];
        }
        int saved = deg[u];
        deg[u] = r;
        step(u);
        deg[u] = saved;
        for (int w : pick) {
            g.rows[u] &= ~(std::uint64_t{1} << w);
            g.rows[w] &= ~(std::uint64_t{1} << u);
            --deg[w];
        }
    }

    bool closed_component(int u) const {
        // u's component is finished (all degree r) but vertices remain outside
        std::uint64_t frontier = std::uint64_t{1} << u, seen = frontier;
        while (frontier) {
            std::uint64_t nxt = 0, it = frontier;
            while (it) {
                nxt |= g.rows[std::countr_zero(it)];
                it &= it - 1;
            }
            frontier = nxt & ~seen;
            seen |= frontier;
        }
        std::uint64_t it = seen;
        while (it) {
            if (deg[std::countr_zero(it)] < r) return false;
            it &= it - 1;
        }
        return seen != g.all;
    }

    void step(int last_completed) {
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] < r) {
                u = v;
                break;
            }
        if (u == -1) {
            if (!closed_component(0)) (*fn)(g);
            return;
        }
        if (closed_component(last_completed)) return;
        // parity of remaining stubs is invariant, but a cheap capacity check helps
        long long stubs = 0;
        for (int v = u; v < n; ++v) stubs += r - deg[v];
        if (stubs < 2 * (r - deg[u])) return;
        complete(u);
    }
};

}  // namespace

long long regular_branch_count(int n, int r) {
    return static_cast<long long>(binomial(n - 1, r));
}

void for_each_connected_regular_in_branch(int n, int r, long long branch,
                                          const std::function<void(const WordGraph&)>& fn) {
    if (n < 1 || n > 32) throw std::invalid_argument("regular enumeration: n must be 1..32");
    if (r < 0 || r >= n || (n * r) % 2 != 0)
        throw std::invalid_argument("regular enumeration: infeasible degree");
    if (r == 0) {
        if (n == 1 && branch == 0) fn(WordGraph(1));
        return;
    }
    RegularEnum e(n, r);
    e.fn = &fn;
    // vertex 0's neighbors, offset by one since candidates are 1..n-1
    std::uint64_t mask = unrank_combination(n - 1, r, static_cast<std::uint64_t>(branch)) << 1;
    std::vector<int> pick;
    std::uint64_t m = mask;
    while (m) {
        pick.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    e.apply(0, pick);
}

void for_each_connected_regular(int n, int r, const std::function<void(const WordGraph&)>& fn) {
    if (n < 1 || n > 32) throw std::invalid_argument("regular enumeration: n must be 1..32");
    if (r < 0 || r >= n || (n * r) % 2 != 0)
        throw std::invalid_argument("regular enumeration: infeasible degree");
    if (r == 0) {
        if (n == 1) fn(WordGraph(1));
        return;
    }
    for (long long b = 0; b < regular_branch_count(n, r); ++b)
        for_each_connected_regular_in_branch(n, r, b, fn);
}

Graph random_connected_regular_graph(int n, int r, std::uint64_t seed) {
    if (n < 1 || r < 0 || r >= n || (static_cast<long long>(n) * r) % 2 != 0)
        throw std::invalid_argument("random regular graph: infeasible (need r < n and n*r even)");
    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * r);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < r; ++k) stubs[static_cast<std::size_t>(v) * r + k] = v;
    const int budget = 20000;
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        Graph g(n);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || g.has_edge(u, v))
                ok = false;
            else
                g.add_edge(u, v);
        }
        if (ok && is_connected(g)) return g;
    }
    throw std::runtime_error("random regular graph: retry budget exhausted");
}

}  // namespace tough
