#pragma once

#include <cstdint>
#include <functional>

#include "tough/graph.hpp"
#include "tough/word_graph.hpp"

namespace tough {

// Labeled connected graphs on n vertices (1 <= n <= 7), each exactly once, in
// increasing edge-mask order. Edge bit order: (0,1),(0,2),(1,2),(0,3),... i.e.
// pairs (i,j), i<j, sorted by (j,i), which is the graph6 column order.
void enumerate_connected_graphs(int n, const std::function<void(const Graph&)>& fn);

// Mask-space access for chunked parallel sweeps over the same corpus.
std::uint64_t labeled_graph_space(int n);  // 2^(n(n-1)/2)
WordGraph word_graph_from_edge_mask(int n, std::uint64_t mask);
void for_each_connected_in_range(int n, std::uint64_t begin, std::uint64_t end,
                                 const std::function<void(const WordGraph&, std::uint64_t)>& fn);

// All labeled connected r-regular graphs on n vertices (n <= 32), emitted
// exactly once via canonical completion order (lowest-index deficient vertex
// picks its remaining neighbors among higher indices). Split into independent
// branches by vertex 0's neighbor set so callers can parallelize.
long long regular_branch_count(int n, int r);  // C(n-1, r)
void for_each_connected_regular_in_branch(int n, int r, long long branch,
                                          const std::function<void(const WordGraph&)>& fn);
void for_each_connected_regular(int n, int r, const std::function<void(const WordGraph&)>& fn);

// Pairing-model sampler with rejection; deterministic for a fixed seed.
// Errors when n*r is odd, r >= n, or the retry budget is exhausted.
Graph random_connected_regular_graph(int n, int r, std::uint64_t seed);

// combinatorics helpers shared by the solver's subset partitioning
std::uint64_t binomial(int n, int k);
// the rank-th k-subset of {0..n-1} in colex order, as a bitmask
std::uint64_t unrank_combination(int n, int k, std::uint64_t rank);
inline std::uint64_t next_same_popcount(std::uint64_t v) {
    std::uint64_t c = v & -v, r = v + c;
    return r | (((v ^ r) >> 2) / c);
}

}  // namespace tough
