#include "tough/codec.hpp"

#include <sstream>

namespace tough {

namespace {

constexpr long long kMaxN = 1 << 20;
const std::string kHeader = ">>graph6<<";

int sextet(const std::string& s, std::size_t i) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of printable range at offset " + std::to_string(i), i);
    return c - 63;
}

}  // namespace

Graph parse_graph6(const std::string& input) {
    std::size_t base = 0;
    if (input.compare(0, kHeader.size(), kHeader) == 0) base = kHeader.size();
    const std::string& s = input;
    std::size_t len = s.size();
    if (base >= len) throw ParseError("graph6: empty record", base);

    std::size_t i = base;
    long long n;
    if (sextet(s, i) < 63) {
        n = sextet(s, i);
        i += 1;
    } else {
        if (i + 1 >= len) throw ParseError("graph6: truncated size prefix at offset " + std::to_string(i), i);
        if (sextet(s, i + 1) < 63) {
            if (i + 3 >= len) throw ParseError("graph6: truncated size prefix at offset " + std::to_string(i), i);
            n = (static_cast<long long>(sextet(s, i + 1)) << 12) |
                (static_cast<long long>(sextet(s, i + 2)) << 6) | sextet(s, i + 3);
            i += 4;
        } else {
            if (i + 7 >= len) throw ParseError("graph6: truncated size prefix at offset " + std::to_string(i), i);
            n = 0;
            for (int k = 2; k < 8; ++k) n = (n << 6) | sextet(s, i + k);
            i += 8;
        }
    }
    if (n < 1) throw ParseError("graph6: graph must have at least one vertex", base);
    if (n > kMaxN) throw ParseError("graph6: size " + std::to_string(n) + " beyond cap", base);

    long long bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (len - i < need)
        throw ParseError("graph6: record too short at offset " + std::to_string(len), len);
    if (len - i > need)
        throw ParseError("graph6: trailing garbage at offset " + std::to_string(i + need), i + need);

    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int v = sextet(s, i + static_cast<std::size_t>(bit / 6));
            if ((v >> (5 - bit % 6)) & 1) g.add_edge(row, col);
        }
    }
    // padding bits must be zero
    for (long long b = bits; b < static_cast<long long>(need) * 6; ++b) {
        int v = sextet(s, i + static_cast<std::size_t>(b / 6));
        if ((v >> (5 - b % 6)) & 1)
            throw ParseError("graph6: nonzero padding at offset " + std::to_string(i + b / 6), i + b / 6);
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    long long n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int k = 5; k >= 0; --k) out.push_back(static_cast<char>(((n >> (6 * k)) & 63) + 63));
    }
    int acc = 0, nb = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb) out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            bool blank = true;
            for (char c : line)
                if (!isspace(static_cast<unsigned char>(c))) blank = false;
            if (!blank) return true;
        }
        return false;
    };
    auto fields = [&](int expect) {
        std::istringstream ls(line);
        std::vector<long long> vals;
        long long x;
        while (ls >> x) vals.push_back(x);
        std::string rest;
        if (!ls.eof()) {
            throw ParseError("edge list: bad token on line " + std::to_string(lineno), lineno);
        }
        if (static_cast<int>(vals.size()) != expect)
            throw ParseError("edge list: expected " + std::to_string(expect) + " fields on line " +
                                 std::to_string(lineno),
                             lineno);
        return vals;
    };

    if (!next_line()) throw ParseError("edge list: missing header line", 0);
    auto hdr = fields(2);
    long long n = hdr[0], m = hdr[1];
    if (n < 1) throw ParseError("edge list: graph must have at least one vertex", lineno);
    if (n > kMaxN) throw ParseError("edge list: size beyond cap", lineno);
    if (m < 0) throw ParseError("edge list: negative edge count", lineno);

    Graph g(static_cast<int>(n));
    for (long long e = 0; e < m; ++e) {
        if (!next_line()) throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                                               std::to_string(e),
                                           lineno);
        auto uv = fields(2);
        long long u = uv[0], v = uv[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("edge list: vertex out of range on line " + std::to_string(lineno), lineno);
        if (u == v) throw ParseError("edge list: loop on line " + std::to_string(lineno), lineno);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));  // duplicates collapse
    }
    if (next_line()) throw ParseError("edge list: trailing garbage on line " + std::to_string(lineno), lineno);
    return g;
}

std::string to_edge_list(const Graph& g) {
    auto es = g.edges();  // already sorted (u < v, lexicographic)
    std::ostringstream out;
    out << g.vertex_count() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

}  // namespace tough
