#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tough/bitset.hpp"

namespace tough {

// Simple undirected graph, adjacency stored as bit rows. No loops, no
// multi-edges, n >= 1.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(n), wpr_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * wpr_, 0) {
        if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
    }

    int vertex_count() const { return n_; }
    int words_per_row() const { return wpr_; }

    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    }

    void add_edge(int u, int v) {
        check(u);
        check(v);
        if (u == v) throw std::invalid_argument("loops are not allowed");
        adj_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] |= (std::uint64_t{1} << (v & 63));
        adj_[static_cast<std::size_t>(v) * wpr_ + (u >> 6)] |= (std::uint64_t{1} << (u & 63));
    }

    void remove_edge(int u, int v) {
        check(u);
        check(v);
        adj_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
        adj_[static_cast<std::size_t>(v) * wpr_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
    }

    bool has_edge(int u, int v) const {
        check(u);
        check(v);
        return (adj_[static_cast<std::size_t>(u) * wpr_ + (v >> 6)] >> (v & 63)) & 1;
    }

    const std::uint64_t* row(int u) const { return adj_.data() + static_cast<std::size_t>(u) * wpr_; }

    int degree(int u) const {
        check(u);
        int d = 0;
        const std::uint64_t* r = row(u);
        for (int i = 0; i < wpr_; ++i) d += std::popcount(r[i]);
        return d;
    }

    long long edge_count() const {
        long long total = 0;
        for (int u = 0; u < n_; ++u) total += degree(u);
        return total / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u) {
            const std::uint64_t* r = row(u);
            for (int i = 0; i < wpr_; ++i) {
                std::uint64_t w = r[i];
                while (w) {
                    int v = i * 64 + std::countr_zero(w);
                    w &= w - 1;
                    if (v > u) out.emplace_back(u, v);
                }
            }
        }
        return out;
    }

    VertexSet neighbors(int u) const {
        check(u);
        VertexSet s(n_);
        const std::uint64_t* r = row(u);
        for (int i = 0; i < wpr_; ++i) {
            std::uint64_t w = r[i];
            while (w) {
                s.set(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return s;
    }

    bool is_complete() const {
        for (int u = 0; u < n_; ++u)
            if (degree(u) != n_ - 1) return false;
        return true;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    // small builders used all over the tests and the gadget code
    static Graph path(int n) {
        Graph g(n);
        for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }
    static Graph cycle(int n) {
        Graph g = path(n);
        if (n >= 3) g.add_edge(n - 1, 0);
        return g;
    }
    static Graph complete(int n) {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
        return g;
    }
    static Graph complete_bipartite(int a, int b) {
        Graph g(a + b);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
        return g;
    }
    static Graph star(int leaves) { return complete_bipartite(1, leaves); }

  private:
    int n_ = 0;
    int wpr_ = 1;
    std::vector<std::uint64_t> adj_;
};

// Component census of g - removed. label[v] = -1 for removed vertices,
// otherwise a component id in [0, count). Ids are assigned in order of the
// smallest vertex of each component.
struct ComponentLabels {
    int count = 0;
    std::vector<int> label;
};

ComponentLabels components(const Graph& g, const VertexSet& removed);
int component_count(const Graph& g, const VertexSet& removed);
bool is_connected(const Graph& g);

}  // namespace tough
