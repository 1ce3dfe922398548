#pragma once

#include <map>
#include <string>
#include <vector>

#include "tough/graph.hpp"
#include "tough/rational.hpp"

namespace tough {

// human-readable role name -> vertex index in the built gadget
using LabelMap = std::map<std::string, int>;

struct GadgetResult {
    Graph graph;
    LabelMap labels;
};

// Clique-expansion gadget tuned to a target ratio a/b and slack k.
// Layout: cliques V_i (size a, one per input vertex, joined completely across
// input edges), pendants u[i,j] (b per input vertex, joined to V_i), then
// (b-1)k spare vertices u'[l] joined only to W, then the dominating clique W
// of size a*k+... (a*k) joined to everything. Input must be connected; a,b,k >= 1.
struct GkParams {
    int a = 1, b = 1, k = 1;
};
GadgetResult build_gk(const Graph& g, const GkParams& p);

// The cutset all-cliques-outside-an-independent-set plus W, with the size and
// component count it is supposed to produce.
struct GkCutset {
    VertexSet cutset;
    long long predicted_size = 0;
    long long predicted_components = 0;
};
GkCutset gk_reference_cutset(const Graph& g, const GkParams& p, const std::vector<int>& independent_set);

// Doubled graph: vertices v[i,1] (index i-1) and v[i,2] (index n+i-1); each
// input edge {i,j} becomes the cross pair v[i,1]v[j,2], v[j,1]v[i,2]; every
// pair v[i,1]v[i,2] is an edge. Bipartite by construction, degrees deg+1.
GadgetResult build_bipartite_double(const Graph& g);

// Near-regular block on r+2 (odd r) or 2r (even r) vertices with one
// degree-(r-1) attachment vertex ("w", or "w_a"/"w_b" for even r), Hamiltonian,
// toughness >= 1. r >= 5 required.
GadgetResult build_hr(int r);

// The construction's explicit Hamiltonian cycle for H_r, as gadget indices.
std::vector<int> hr_reference_cycle(int r);

// Attach one H_r block per vertex of an (r-1)-regular connected g via the
// degree-deficient attachment vertex; output is r-regular and connected.
// Layout: originals first (v[i] = i-1), then blocks in input order.
GadgetResult attach_gadgets_odd(const Graph& g, int r);   // r odd >= 5, g (r-1)-regular
GadgetResult attach_gadgets_even(const Graph& g, int r);  // r even >= 6, g (r-2)-regular

}  // namespace tough
