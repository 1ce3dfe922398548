#include "tough/graph.hpp"

#include <bit>

namespace tough {

ComponentLabels components(const Graph& g, const VertexSet& removed) {
    const int n = g.vertex_count();
    if (removed.universe_size() != n) throw std::invalid_argument("removed set universe mismatch");
    const int wpr = g.words_per_row();

    // alive mask, multi-word
    std::vector<std::uint64_t> alive(wpr, 0);
    for (int i = 0; i < wpr; ++i) alive[i] = ~removed.word(i);
    // clear tail bits past n
    int tail = n & 63;
    if (tail) alive[wpr - 1] &= (std::uint64_t{1} << tail) - 1;

    ComponentLabels out;
    out.label.assign(n, -1);

    std::vector<std::uint64_t> frontier(wpr), seen(wpr), nxt(wpr);
    for (int wi = 0; wi < wpr; ++wi) {
        while (alive[wi]) {
            int root = wi * 64 + std::countr_zero(alive[wi]);
            int id = out.count++;
            for (int i = 0; i < wpr; ++i) frontier[i] = seen[i] = 0;
            frontier[wi] = std::uint64_t{1} << (root & 63);
            seen[wi] = frontier[wi];
            bool more = true;
            while (more) {
                for (int i = 0; i < wpr; ++i) nxt[i] = 0;
                for (int i = 0; i < wpr; ++i) {
                    std::uint64_t w = frontier[i];
                    while (w) {
                        int v = i * 64 + std::countr_zero(w);
                        w &= w - 1;
                        const std::uint64_t* r = g.row(v);
                        for (int j = 0; j < wpr; ++j) nxt[j] |= r[j];
                    }
                }
                more = false;
                for (int i = 0; i < wpr; ++i) {
                    frontier[i] = nxt[i] & alive[i] & ~seen[i];
                    seen[i] |= frontier[i];
                    if (frontier[i]) more = true;
                }
            }
            for (int i = 0; i < wpr; ++i) {
                std::uint64_t w = seen[i];
                while (w) {
                    out.label[i * 64 + std::countr_zero(w)] = id;
                    w &= w - 1;
                }
                alive[i] &= ~seen[i];
            }
        }
    }
    return out;
}

int component_count(const Graph& g, const VertexSet& removed) {
    return components(g, removed).count;
}

bool is_connected(const Graph& g) {
    return component_count(g, VertexSet(g.vertex_count())) == 1;
}

}  // namespace tough
