#include "tough/reductions.hpp"

#include <stdexcept>

#include "tough/algorithms.hpp"

namespace tough {

namespace {

std::string key(const std::string& base, int i) { return base + "[" + std::to_string(i) + "]"; }
std::string key(const std::string& base, int i, int j) {
    return base + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
}

void require_connected(const Graph& g, const char* who) {
    if (!is_connected(g)) throw std::invalid_argument(std::string(who) + ": input must be connected");
}

}  // namespace

GadgetResult build_gk(const Graph& g, const GkParams& p) {
    require_connected(g, "build_gk");
    if (p.a < 1 || p.b < 1 || p.k < 1) throw std::invalid_argument("build_gk: a, b, k must be >= 1");
    const int n = g.vertex_count();
    const int a = p.a, b = p.b, k = p.k;
    const int nV = n * a, nU = n * b, nU2 = (b - 1) * k, nW = a * k;
    Graph out(nV + nU + nU2 + nW);
    LabelMap labels;

    auto V = [&](int i, int j) { return (i - 1) * a + (j - 1); };            // i,j 1-based
    auto U = [&](int i, int j) { return nV + (i - 1) * b + (j - 1); };
    auto U2 = [&](int l) { return nV + nU + (l - 1); };
    auto W = [&](int l) { return nV + nU + nU2 + (l - 1); };

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= a; ++j) labels[key("v", i, j)] = V(i, j);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= b; ++j) labels[key("u", i, j)] = U(i, j);
    for (int l = 1; l <= nU2; ++l) labels[key("u'", l)] = U2(l);
    for (int l = 1; l <= nW; ++l) labels[key("w", l)] = W(l);

    // cliques V_i and the complete join across input edges
    for (int i = 1; i <= n; ++i)
        for (int j1 = 1; j1 <= a; ++j1)
            for (int j2 = j1 + 1; j2 <= a; ++j2) out.add_edge(V(i, j1), V(i, j2));
    for (auto [x, y] : g.edges())
        for (int j1 = 1; j1 <= a; ++j1)
            for (int j2 = 1; j2 <= a; ++j2) out.add_edge(V(x + 1, j1), V(y + 1, j2));
    // pendants see their own clique
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= b; ++j)
            for (int j2 = 1; j2 <= a; ++j2) out.add_edge(U(i, j), V(i, j2));
    // W is a clique joined to everything else
    for (int l1 = 1; l1 <= nW; ++l1) {
        for (int l2 = l1 + 1; l2 <= nW; ++l2) out.add_edge(W(l1), W(l2));
        for (int v = 0; v < nV + nU + nU2; ++v) out.add_edge(W(l1), v);
    }
    return {std::move(out), std::move(labels)};
}

GkCutset gk_reference_cutset(const Graph& g, const GkParams& p, const std::vector<int>& indep) {
    require_connected(g, "gk_reference_cutset");
    const int n = g.vertex_count();
    for (int v : indep)
        if (v < 0 || v >= n) throw std::invalid_argument("gk_reference_cutset: vertex out of range");
    for (std::size_t x = 0; x < indep.size(); ++x)
        for (std::size_t y = x + 1; y < indep.size(); ++y)
            if (indep[x] == indep[y] || g.has_edge(indep[x], indep[y]))
                throw std::invalid_argument("gk_reference_cutset: set is not independent");
    const int alpha = independence_number(g);
    if (static_cast<int>(indep.size()) != alpha)
        throw std::invalid_argument("gk_reference_cutset: set is not maximum independent");

    const int a = p.a, b = p.b, k = p.k;
    const int nV = n * a, nU = n * b, nU2 = (b - 1) * k, nW = a * k;
    VertexSet cut(nV + nU + nU2 + nW);
    std::vector<char> in_set(n, 0);
    for (int v : indep) in_set[v] = 1;
    for (int i = 0; i < n; ++i)
        if (!in_set[i])
            for (int j = 0; j < a; ++j) cut.set(i * a + j);
    for (int l = 0; l < nW; ++l) cut.set(nV + nU + nU2 + l);

    GkCutset out;
    out.cutset = std::move(cut);
    out.predicted_size = static_cast<long long>(a) * (n - alpha + k);
    out.predicted_components = static_cast<long long>(b) * (n - alpha + k) + (alpha - k);
    return out;
}

GadgetResult build_bipartite_double(const Graph& g) {
    const int n = g.vertex_count();
    Graph out(2 * n);
    LabelMap labels;
    for (int i = 1; i <= n; ++i) {
        labels[key("v", i, 1)] = i - 1;
        labels[key("v", i, 2)] = n + i - 1;
    }
    for (int i = 0; i < n; ++i) out.add_edge(i, n + i);
    for (auto [x, y] : g.edges()) {
        out.add_edge(x, n + y);
        out.add_edge(y, n + x);
    }
    return {std::move(out), std::move(labels)};
}

GadgetResult build_hr(int r) {
    if (r < 5) throw std::invalid_argument("build_hr: r must be >= 5");
    LabelMap labels;
    if (r % 2 == 1) {
        // complete graph on {w, u_1..u_{r+1}} minus a matching on the u's and
        // two w-pairs; w ends up with degree r-1, every u with degree r
        Graph out = Graph::complete(r + 2);
        labels["w"] = 0;
        for (int i = 1; i <= r + 1; ++i) labels[key("u", i)] = i;
        for (int i = 1; i <= (r - 1) / 2; ++i) out.remove_edge(i, r - i + 2);
        out.remove_edge(0, (r + 1) / 2);
        out.remove_edge(0, (r + 3) / 2);
        return {std::move(out), std::move(labels)};
    }
    // complete bipartite r x r minus the edge between the two attachment
    // vertices w_a, w_b
    Graph out = Graph::complete_bipartite(r, r);
    labels["w_a"] = 0;
    for (int i = 1; i <= r - 1; ++i) labels[key("a", i)] = i;
    labels["w_b"] = r;
    for (int i = 1; i <= r - 1; ++i) labels[key("b", i)] = r + i;
    out.remove_edge(0, r);
    return {std::move(out), std::move(labels)};
}

std::vector<int> hr_reference_cycle(int r) {
    if (r < 5) throw std::invalid_argument("hr_reference_cycle: r must be >= 5");
    std::vector<int> cycle;
    if (r % 2 == 1) {
        cycle.push_back(0);  // w
        for (int i = 1; i <= r + 1; ++i) cycle.push_back(i);
        return cycle;
    }
    // w_a b_1 a_1 w_b a_2 b_2 a_3 b_3 ... a_{r-1} b_{r-1}
    cycle.push_back(0);
    cycle.push_back(r + 1);
    cycle.push_back(1);
    cycle.push_back(r);
    for (int i = 2; i <= r - 1; ++i) {
        cycle.push_back(i);
        cycle.push_back(r + i);
    }
    return cycle;
}

namespace {

GadgetResult attach_blocks(const Graph& g, int r, bool odd) {
    const int block = odd ? r + 2 : 2 * r;
    const int need_deg = odd ? r - 1 : r - 2;
    if (!is_regular(g, need_deg))
        throw std::invalid_argument("attach_gadgets: input must be " + std::to_string(need_deg) +
                                    "-regular");
    require_connected(g, "attach_gadgets");
    const int n = g.vertex_count();
    GadgetResult hr = build_hr(r);
    Graph out(n + n * block);
    LabelMap labels;
    for (int i = 1; i <= n; ++i) labels[key("v", i)] = i - 1;
    for (auto [x, y] : g.edges()) out.add_edge(x, y);
    for (int i = 1; i <= n; ++i) {
        const int base = n + (i - 1) * block;
        for (auto [x, y] : hr.graph.edges()) out.add_edge(base + x, base + y);
        for (const auto& [name, idx] : hr.labels) {
            // per-copy names: "w" -> "w[i]", "u[j]" -> "u[i,j]"
            auto br = name.find('[');
            if (br == std::string::npos)
                labels[key(name, i)] = base + idx;
            else {
                int j = std::stoi(name.substr(br + 1, name.size() - br - 2));
                labels[key(name.substr(0, br), i, j)] = base + idx;
            }
        }
        if (odd) {
            out.add_edge(i - 1, base + hr.labels.at("w"));
        } else {
            out.add_edge(i - 1, base + hr.labels.at("w_a"));
            out.add_edge(i - 1, base + hr.labels.at("w_b"));
        }
    }
    return {std::move(out), std::move(labels)};
}

}  // namespace

GadgetResult attach_gadgets_odd(const Graph& g, int r) {
    if (r < 5 || r % 2 == 0) throw std::invalid_argument("attach_gadgets_odd: r must be odd and >= 5");
    return attach_blocks(g, r, true);
}

GadgetResult attach_gadgets_even(const Graph& g, int r) {
    if (r < 6 || r % 2 == 1)
        throw std::invalid_argument("attach_gadgets_even: r must be even and >= 6");
    return attach_blocks(g, r, false);
}

}  // namespace tough
