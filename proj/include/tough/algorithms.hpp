#pragma once

#include <optional>
#include <vector>

#include "tough/graph.hpp"

namespace tough {

// vertex connectivity: n-1 for complete graphs, else min over non-adjacent
// pairs of the Menger max-flow value (unit vertex capacities)
int connectivity(const Graph& g);

// articulation vertices; input must be connected
VertexSet cut_vertices(const Graph& g);

// maximum independent set size, exact branch and bound
int independence_number(const Graph& g);

struct TwoColoring {
    VertexSet class_a;
    VertexSet class_b;
};

// present iff g is bipartite; per component the smallest vertex goes to class_a
std::optional<TwoColoring> is_bipartite(const Graph& g);

bool is_regular(const Graph& g, int r);

// a Hamiltonian cycle as a vertex sequence starting at 0 (closing edge back to
// the start is implied); absent if none exists; n < 3 is an error
std::optional<std::vector<int>> find_hamiltonian_cycle(const Graph& g);

}  // namespace tough
