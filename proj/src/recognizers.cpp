#include "tough/recognizers.hpp"

#include <stdexcept>

#include "tough/algorithms.hpp"

namespace tough {

CubicClass classify_cubic(const Graph& g) {
    if (!is_regular(g, 3)) throw std::invalid_argument("classify_cubic: graph must be 3-regular");
    if (!is_connected(g)) throw std::invalid_argument("classify_cubic: graph must be connected");
    const int n = g.vertex_count();
    if (n == 4) return {CubicClass::CompleteK4, std::nullopt};

    VertexSet cuts = cut_vertices(g);
    if (cuts.empty()) return {CubicClass::TauAtLeastTwoThirds, std::nullopt};
    for (int v : cuts.to_indices()) {
        VertexSet s(n);
        s.set(v);
        if (component_count(g, s) == 3) return {CubicClass::TauOneThird, v};
    }
    return {CubicClass::TauOneHalf, cuts.to_indices().front()};
}

bool decide_cubic_t_tough(const Graph& g, const Rational& t) {
    if (!(Rational(0, 1) < t) || !(t < Rational(2, 3)))
        throw std::invalid_argument("decide_cubic_t_tough: need 0 < t < 2/3");
    switch (classify_cubic(g).kind) {
        case CubicClass::CompleteK4:
        case CubicClass::TauAtLeastTwoThirds:
            return true;
        case CubicClass::TauOneHalf:
            return t <= Rational(1, 2);
        case CubicClass::TauOneThird:
            return t <= Rational(1, 3);
    }
    return false;
}

bool recognize_half_tough_4regular(const Graph& g) {
    if (!is_regular(g, 4))
        throw std::invalid_argument("recognize_half_tough_4regular: graph must be 4-regular");
    return is_connected(g);
}

std::optional<bool> three_halves_tough_cubic_stub(const Graph&) {
    return std::nullopt;  // unimplemented by design
}

}  // namespace tough
