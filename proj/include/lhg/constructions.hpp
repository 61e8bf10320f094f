#pragma once

#include <utility>
#include <vector>

#include "lhg/gf.hpp"
#include "lhg/hypergraph.hpp"

namespace lhg {

/// A partition of the edges of K_{s,s} into s perfect matchings. Matching
/// entries are (left, right) with both sides numbered 1..s.
struct Factorization {
    int side = 0;
    std::vector<std::vector<std::pair<int, int>>> matchings;

    void check() const {
        std::vector<std::vector<char>> seen(side + 1, std::vector<char>(side + 1, 0));
        for (const auto& m : matchings) {
            std::vector<char> left(side + 1, 0), right(side + 1, 0);
            if (static_cast<int>(m.size()) != side) throw Error(Errc::improper_coloring, "matching size != side");
            for (auto [a, b] : m) {
                if (a < 1 || a > side || b < 1 || b > side) throw Error(Errc::vertex_out_of_range, "factorization entry");
                if (left[a]++ || right[b]++) throw Error(Errc::improper_coloring, "matching covers a vertex twice");
                if (seen[a][b]++) throw Error(Errc::improper_coloring, "edge in two matchings");
            }
        }
        if (static_cast<int>(matchings.size()) != side) throw Error(Errc::improper_coloring, "need side-many matchings");
    }
};

/// A graph together with a proper edge coloring: `matchings` lists edge
/// indices per color class.
struct ColoredGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // (u, v) with u < v
    std::vector<std::vector<int>> matchings;

    void check() const {
        std::vector<char> colored(edges.size(), 0);
        for (const auto& cls : matchings) {
            std::vector<char> hit(n + 1, 0);
            for (int idx : cls) {
                if (idx < 0 || idx >= static_cast<int>(edges.size()))
                    throw Error(Errc::improper_coloring, "bad edge index in color class");
                if (colored[idx]++) throw Error(Errc::improper_coloring, "edge colored twice");
                auto [u, v] = edges[idx];
                if (hit[u]++ || hit[v]++) throw Error(Errc::improper_coloring, "color class is not a matching");
            }
        }
        for (char c : colored)
            if (!c) throw Error(Errc::improper_coloring, "uncolored edge");
    }

    LinearHypergraph to_hypergraph() const {
        EdgeList el;
        for (auto [u, v] : edges) el.push_back({u, v});
        return LinearHypergraph::validate(std::move(el), n, 2);
    }
};

/// Transversal design on k groups of size m: group g occupies vertices
/// (g-1)m+1 .. gm, every pair of vertices from different groups lies in
/// exactly one edge. k = 2 is the complete bipartite graph, k = 3 the cyclic
/// Latin square; k >= 4 needs m a prime power and k <= m+1 and uses the
/// lines y = a x + b over GF(m).
inline LinearHypergraph transversal_design(int m, int k) {
    if (k < 2) throw Error(Errc::bad_uniformity, "a design needs k >= 2");
    if (m < 1) throw Error(Errc::unsupported, "group size must be positive");
    EdgeList edges;
    if (k == 2) {
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) edges.push_back({i, m + j});
    } else if (k == 3) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) edges.push_back({i + 1, m + j + 1, 2 * m + (i + j) % m + 1});
    } else {
        if (!GF::is_prime_power(m))
            throw Error(Errc::unsupported, "k >= 4 needs a prime-power group size; " + std::to_string(m) +
                                               " is not one (this tool cannot build it — existence is a separate question)");
        if (k > m + 1)
            throw Error(Errc::unsupported, "at most m+1 = " + std::to_string(m + 1) + " groups over GF(" +
                                               std::to_string(m) + "), requested " + std::to_string(k));
        GF f(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                Edge e{i + 1, m + j + 1};
                for (int g = 2; g < k; ++g) {
                    int a = g - 1;  // distinct nonzero slopes per extra group
                    e.push_back(g * m + f.add(f.mul(a, i), j) + 1);
                }
                edges.push_back(std::move(e));
            }
    }
    return LinearHypergraph::validate(std::move(edges), k * m, k);
}

namespace detail {

/// Recovers the (unique) group structure of a transversal design: two
/// vertices are in the same group iff no edge covers the pair. Throws if the
/// input is not a transversal design.
inline GroupPartition td_groups(const LinearHypergraph& h) {
    const int n = h.n(), k = h.k();
    if (n == 0 || n % k != 0) throw Error(Errc::not_a_transversal_design, "vertex count not divisible by k");
    const int m = n / k;
    std::vector<int> group(n + 1, -1);
    std::vector<std::vector<Vertex>> groups;
    for (Vertex v = 1; v <= n; ++v) {
        if (group[v] >= 0) continue;
        std::vector<Vertex> g{v};
        group[v] = static_cast<int>(groups.size());
        for (Vertex u = v + 1; u <= n; ++u)
            if (group[u] < 0 && !h.edge_covering(v, u)) {
                group[u] = group[v];
                g.push_back(u);
            }
        if (static_cast<int>(g.size()) != m) throw Error(Errc::not_a_transversal_design, "group sizes differ");
        groups.push_back(std::move(g));
    }
    if (static_cast<int>(groups.size()) != k) throw Error(Errc::not_a_transversal_design, "wrong number of groups");
    // cross pairs covered (exactly once is then forced by linearity)
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (group[u] != group[v] && !h.edge_covering(u, v))
                throw Error(Errc::not_a_transversal_design,
                            "pair " + std::to_string(u) + "," + std::to_string(v) + " not covered");
    return GroupPartition{std::move(groups)};
}

}  // namespace detail

/// Removes one vertex and all edges through it, relabeling the remaining
/// vertices to stay contiguous. Input must be a transversal design.
inline LinearHypergraph truncate(const LinearHypergraph& h, Vertex v) {
    if (v < 1 || v > h.n()) throw Error(Errc::vertex_out_of_range, "truncation vertex " + std::to_string(v));
    detail::td_groups(h);  // validates
    EdgeList edges;
    for (const Edge& e : h.edges()) {
        if (std::binary_search(e.begin(), e.end(), v)) continue;
        Edge shifted;
        for (Vertex u : e) shifted.push_back(u > v ? u - 1 : u);
        edges.push_back(std::move(shifted));
    }
    return LinearHypergraph::validate(std::move(edges), h.n() - 1, h.k());
}

/// The cyclic factorization of K_{s,s}: matching i pairs left j with right
/// j+i (mod s). For odd s the union of any two matchings is a single long
/// cycle, hence free of four-cycles; even s breaks that guarantee and is
/// rejected.
inline Factorization standard_factorization(int s) {
    if (s < 1 || s % 2 == 0)
        throw Error(Errc::even_side, "side must be odd (got " + std::to_string(s) + "); even sides create four-cycles");
    Factorization f;
    f.side = s;
    f.matchings.resize(s);
    for (int i = 0; i < s; ++i)
        for (int j = 1; j <= s; ++j) f.matchings[i].push_back({j, (j - 1 + i) % s + 1});
    return f;
}

/// The XOR factorization of K_{2^t,2^t}: sides indexed by t-bit strings,
/// matching z pairs x with x xor z. The union of any two matchings splits
/// into four-cycles.
inline Factorization binary_factorization(int t) {
    if (t < 1) throw Error(Errc::unsupported, "exponent must be >= 1");
    if (t > 10) throw Error(Errc::too_large, "side 2^" + std::to_string(t) + " is beyond desk scale");
    const int s = 1 << t;
    Factorization f;
    f.side = s;
    f.matchings.resize(s);
    for (int z = 0; z < s; ++z)
        for (int x = 0; x < s; ++x) f.matchings[z].push_back({x + 1, (x ^ z) + 1});
    return f;
}

/// Triple system on 3s points: groups A = left side, B = right side, and one
/// new point per matching; each matching edge is extended by its point. The
/// result is a transversal design with three groups.
inline LinearHypergraph design_from_factorization(const Factorization& f) {
    f.check();
    const int s = f.side;
    EdgeList edges;
    for (int i = 0; i < static_cast<int>(f.matchings.size()); ++i)
        for (auto [a, b] : f.matchings[i]) edges.push_back({a, s + b, 2 * s + i + 1});
    return LinearHypergraph::validate(std::move(edges), 3 * s, 3);
}

/// Extension of a properly edge-colored graph: one new point per color
/// class, each edge becomes a triple with its class point.
inline LinearHypergraph extend_colored_graph(const ColoredGraph& g) {
    g.check();
    const int t = static_cast<int>(g.matchings.size());
    EdgeList edges;
    for (int i = 0; i < t; ++i)
        for (int idx : g.matchings[i]) {
            auto [u, v] = g.edges[idx];
            edges.push_back({u, v, g.n + i + 1});
        }
    return LinearHypergraph::validate(std::move(edges), g.n + t, 3);
}

/// The eight-cycle plus its four long diagonals, partitioned into three
/// perfect matchings: alternate cycle edges twice, diagonals once.
inline ColoredGraph wagner_graph() {
    ColoredGraph g;
    g.n = 8;
    for (int i = 1; i <= 8; ++i) g.edges.push_back({std::min(i, i % 8 + 1), std::max(i, i % 8 + 1)});
    for (int i = 1; i <= 4; ++i) g.edges.push_back({i, i + 4});
    g.matchings = {{0, 2, 4, 6}, {1, 3, 5, 7}, {8, 9, 10, 11}};
    g.check();
    return g;
}

/// Blow-up of the five-cycle: vertices p_i = 2i-1, q_i = 2i, complete
/// bipartite joins between consecutive pairs {p_i,q_i}, {p_{i+1},q_{i+1}}.
/// The four-matching partition was computed once by backtracking over
/// one-factorizations and is pinned here; a regression test reverifies it.
inline ColoredGraph c52_graph() {
    ColoredGraph g;
    g.n = 10;
    auto p = [](int i) { return 2 * ((i - 1) % 5) + 1; };
    auto q = [](int i) { return 2 * ((i - 1) % 5) + 2; };
    auto add = [&](int u, int v) {
        g.edges.push_back({std::min(u, v), std::max(u, v)});
    };
    for (int i = 1; i <= 5; ++i) {
        add(p(i), p(i + 1));
        add(p(i), q(i + 1));
        add(q(i), p(i + 1));
        add(q(i), q(i + 1));
    }
    auto idx = [&](int u, int v) {
        std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        for (int i = 0; i < static_cast<int>(g.edges.size()); ++i)
            if (g.edges[i] == key) return i;
        throw Error(Errc::improper_coloring, "missing edge in c52");
    };
    const int m1[5][2] = {{2, 3}, {4, 6}, {5, 8}, {7, 9}, {1, 10}};
    const int m2[5][2] = {{1, 3}, {4, 5}, {6, 8}, {7, 10}, {2, 9}};
    const int m3[5][2] = {{2, 4}, {3, 6}, {5, 7}, {8, 10}, {1, 9}};
    const int m4[5][2] = {{1, 4}, {3, 5}, {6, 7}, {8, 9}, {2, 10}};
    g.matchings.resize(4);
    for (int i = 0; i < 5; ++i) {
        g.matchings[0].push_back(idx(m1[i][0], m1[i][1]));
        g.matchings[1].push_back(idx(m2[i][0], m2[i][1]));
        g.matchings[2].push_back(idx(m3[i][0], m3[i][1]));
        g.matchings[3].push_back(idx(m4[i][0], m4[i][1]));
    }
    g.check();
    return g;
}

/// The affine plane of order three as a triple system: 9 points laid out as
/// the 3x3 grid over Z_3 (point (x,y) is 3x+y+1), edges are the 12 lines.
inline LinearHypergraph ag23() {
    EdgeList lines;
    auto pt = [](int x, int y) { return 3 * x + y + 1; };
    for (int c = 0; c < 3; ++c) lines.push_back({pt(c, 0), pt(c, 1), pt(c, 2)});
    for (int s = 0; s < 3; ++s)
        for (int c = 0; c < 3; ++c) lines.push_back({pt(0, c), pt(1, (s + c) % 3), pt(2, (2 * s + c) % 3)});
    return LinearHypergraph::validate(std::move(lines), 9, 3);
}

}  // namespace lhg
