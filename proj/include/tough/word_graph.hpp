#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

// One-word-per-row adjacency for n <= 64. This is the hot path for subset
// sweeps; everything stays in registers/L1.
struct WordGraph {
    int n = 0;
    std::uint64_t all = 0;
    std::vector<std::uint64_t> rows;

    WordGraph() = default;

    explicit WordGraph(int n_) : n(n_), rows(n_, 0) {
        if (n_ < 1 || n_ > 64) throw std::invalid_argument("word graph needs 1..64 vertices");
        all = (n_ == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    }

    static WordGraph from(const Graph& g) {
        WordGraph w(g.vertex_count());
        for (int u = 0; u < w.n; ++u) w.rows[u] = g.row(u)[0];
        return w;
    }

    Graph to_graph() const {
        Graph g(n);
        for (int u = 0; u < n; ++u) {
            std::uint64_t r = rows[u];
            while (r) {
                int v = std::countr_zero(r);
                r &= r - 1;
                if (v > u) g.add_edge(u, v);
            }
        }
        return g;
    }

    void add_edge(int u, int v) {
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
    }

    bool has_edge(int u, int v) const { return (rows[u] >> v) & 1; }

    int degree(int u) const { return std::popcount(rows[u]); }

    // number of components of (V \ removed)
    int components(std::uint64_t removed) const {
        std::uint64_t alive = all & ~removed;
        int c = 0;
        while (alive) {
            std::uint64_t frontier = alive & (~alive + 1);
            std::uint64_t seen = frontier;
            while (frontier) {
                std::uint64_t nxt = 0;
                do {
                    nxt |= rows[std::countr_zero(frontier)];
                    frontier &= frontier - 1;
                } while (frontier);
                frontier = nxt & alive & ~seen;
                seen |= frontier;
            }
            alive &= ~seen;
            ++c;
        }
        return c;
    }

    // components plus their masks; returns count, fills comp[0..count)
    int components_masks(std::uint64_t removed, std::uint64_t* comp, int cap) const {
        std::uint64_t alive = all & ~removed;
        int c = 0;
        while (alive) {
            std::uint64_t frontier = alive & (~alive + 1);
            std::uint64_t seen = frontier;
            while (frontier) {
                std::uint64_t nxt = 0;
                do {
                    nxt |= rows[std::countr_zero(frontier)];
                    frontier &= frontier - 1;
                } while (frontier);
                frontier = nxt & alive & ~seen;
                seen |= frontier;
            }
            alive &= ~seen;
            if (c < cap) comp[c] = seen;
            ++c;
        }
        return c;
    }

    bool connected() const { return components(0) == 1; }
};

}  // namespace tough
