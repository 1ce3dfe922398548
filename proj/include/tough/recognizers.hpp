#pragma once

#include <optional>

#include "tough/graph.hpp"
#include "tough/rational.hpp"

namespace tough {

// Exact toughness class of a connected cubic graph:
//   CompleteK4          tau infinite (the only complete cubic graph)
//   TauOneThird         some cut vertex leaves 3 components
//   TauOneHalf          cut vertices exist but none leaves 3 components
//   TauAtLeastTwoThirds no cut vertex
// A cubic cut vertex can never leave more than 3 components, so the three
// finite classes are exhaustive below 2/3.
struct CubicClass {
    enum Kind { CompleteK4, TauOneThird, TauOneHalf, TauAtLeastTwoThirds };
    Kind kind = TauAtLeastTwoThirds;
    std::optional<int> cut_vertex;  // certificate for the 1/3 and 1/2 classes
};

// g must be connected and 3-regular
CubicClass classify_cubic(const Graph& g);

// t must satisfy 0 < t < 2/3; answers "is g t-tough" from the class alone
bool decide_cubic_t_tough(const Graph& g, const Rational& t);

// g must be 4-regular (disconnected allowed); true iff connected, which for
// 4-regular graphs is equivalent to being 1/2-tough
bool recognize_half_tough_4regular(const Graph& g);

// 3/2-tough cubic recognition is out of scope; always "unimplemented" (nullopt)
std::optional<bool> three_halves_tough_cubic_stub(const Graph& g);

}  // namespace tough
