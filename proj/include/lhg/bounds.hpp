#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "lhg/configurations.hpp"
#include "lhg/constructions.hpp"
#include "lhg/hypergraph.hpp"

namespace lhg {

using Rational = boost::rational<long long>;

/// The two degree-based edge-count estimates evaluated at a maximum-degree
/// vertex, kept exact: b1 = delta (n - (k-1) delta) counts edges through the
/// complement of the neighborhood, b2 = n delta / k is the degree-sum bound.
struct BoundReport {
    int n = 0;
    int k = 0;
    int delta = 0;
    Vertex at_vertex = 0;
    long long bound_b1 = 0;
    Rational bound_b2{0};
    long long theorem_bound = 0;
    std::string theorem_source;  // "n^2/k^2" (tight form), "m^2+m", or "floor only"
    bool claimed_tight = false;
    std::size_t edge_count = 0;
    bool every_edge_meets_outside_ball = false;
};

struct FanBound {
    long long value = 0;
    std::string source;
    bool claimed_tight = false;
};

/// Best proved ceiling for the edge count of a fan-free linear hypergraph:
/// floor(n^2/k^2) in general, m^2+m when n = k(m+1)-1 (which is the smaller
/// of the two there). For other residues mod k this is a bound, not
/// necessarily the optimum.
inline FanBound fan_upper_bound_report(int n, int k) {
    if (k < 2) throw Error(Errc::bad_uniformity, "k must be at least 2");
    if (n < 0) throw Error(Errc::vertex_out_of_range, "n must be nonnegative");
    FanBound fb;
    if ((n + 1) % k == 0) {
        long long m = (n + 1) / k - 1;
        fb.value = m * m + m;
        fb.source = "m^2+m";
        fb.claimed_tight = true;
    } else {
        fb.value = static_cast<long long>(n) * n / (static_cast<long long>(k) * k);
        fb.source = n % k == 0 ? "n^2/k^2" : "floor only";
        fb.claimed_tight = n % k == 0;
    }
    return fb;
}

inline long long fan_upper_bound(int n, int k) { return fan_upper_bound_report(n, k).value; }

/// Evaluates both estimates at v (which must attain the maximum degree) and
/// checks the premise of b1 — that every edge meets the outside ball of v.
/// The premise is implied by fan-freeness; when it holds, a violation of
/// either bound would signal a bug and throws Falsified.
inline BoundReport proof_bounds(const LinearHypergraph& h, Vertex v) {
    auto [delta, witness] = h.max_degree();
    if (h.degree(v) != delta)
        throw Error(Errc::not_max_degree_vertex, "degree(" + std::to_string(v) + ") = " + std::to_string(h.degree(v)) +
                                                     " but max degree is " + std::to_string(delta) + " (at " +
                                                     std::to_string(witness) + ")");
    BoundReport r;
    r.n = h.n();
    r.k = h.k();
    r.delta = delta;
    r.at_vertex = v;
    r.edge_count = h.edge_count();
    r.bound_b1 = static_cast<long long>(delta) * (h.n() - static_cast<long long>(h.k() - 1) * delta);
    r.bound_b2 = Rational(static_cast<long long>(h.n()) * delta, h.k());
    auto fb = fan_upper_bound_report(h.n(), h.k());
    r.theorem_bound = fb.value;
    r.theorem_source = fb.source;
    r.claimed_tight = fb.claimed_tight;

    std::vector<char> in_ball(static_cast<std::size_t>(h.n()) + 1, 0);
    for (Vertex u : h.outside_ball(v)) in_ball[u] = 1;
    r.every_edge_meets_outside_ball = true;
    for (const Edge& e : h.edges()) {
        bool meets = false;
        for (Vertex u : e)
            if (in_ball[u]) {
                meets = true;
                break;
            }
        if (!meets) {
            r.every_edge_meets_outside_ball = false;
            break;
        }
    }

    if (Rational(static_cast<long long>(r.edge_count)) > r.bound_b2)
        throw Error(Errc::falsified, "degree-sum bound violated");  // impossible for a valid hypergraph
    if (r.every_edge_meets_outside_ball && static_cast<long long>(r.edge_count) > r.bound_b1)
        throw Error(Errc::falsified, "outside-ball bound violated despite its premise");
    return r;
}

/// Replays the extremality argument on a candidate: an m-regular fan-free
/// linear hypergraph on km vertices with m^2 edges must be a transversal
/// design. Each pipeline step throws PipelineFailure when it does not hold,
/// naming the step; on success the recovered group partition is returned.
inline GroupPartition verify_extremal_structure(const LinearHypergraph& h) {
    const int n = h.n(), k = h.k();
    auto fail = [](const std::string& step) -> void { throw Error(Errc::pipeline_failure, step); };

    if (n % k != 0) fail("precondition: n is not a multiple of k");
    const long long m = n / k;
    if (static_cast<long long>(h.edge_count()) != m * m)
        fail("precondition: edge count " + std::to_string(h.edge_count()) + " != m^2 = " + std::to_string(m * m));
    if (contains_fan(h, k)) fail("precondition: hypergraph contains a fan");
    if (n == 0) return GroupPartition{std::vector<std::vector<Vertex>>(k)};

    for (Vertex v = 1; v <= n; ++v)
        if (h.degree(v) != m) fail("regularity: degree(" + std::to_string(v) + ") != m");

    for (Vertex v = 1; v <= n; ++v) {
        auto ball = h.outside_ball(v);
        if (static_cast<long long>(ball.size()) != m) fail("outside ball of " + std::to_string(v) + " has wrong size");
        if (!h.is_strongly_independent(ball)) fail("outside ball of " + std::to_string(v) + " is not strongly independent");
    }

    const Edge& e0 = h.edges().front();
    std::vector<std::vector<Vertex>> groups;
    std::vector<int> owner(n + 1, -1);
    for (Vertex v : e0) {
        auto ball = h.outside_ball(v);
        for (Vertex u : ball) {
            if (owner[u] >= 0) fail("outside balls of an edge are not pairwise disjoint");
            owner[u] = static_cast<int>(groups.size());
        }
        groups.push_back(std::move(ball));
    }
    for (Vertex u = 1; u <= n; ++u)
        if (owner[u] < 0) fail("outside balls of an edge do not cover the vertex set");

    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) {
            bool covered = h.edge_covering(u, v).has_value();
            if (owner[u] == owner[v] && covered) fail("a within-group pair is covered");
            if (owner[u] != owner[v] && !covered)
                fail("cross pair " + std::to_string(u) + "," + std::to_string(v) + " is uncovered");
        }

    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
    return GroupPartition{std::move(groups)};
}

/// Graph on W = V minus the outside ball of x; w1 w2 is an edge iff some
/// triple w1 w2 v lies in H with v in the ball. Edges through the same ball
/// vertex form one matching class. Vertices of the returned graph are W
/// relabeled 1..|W| ascending.
struct LinkGraph {
    ColoredGraph graph;
    std::vector<Vertex> w_vertices;  // new label i+1 -> original vertex
    std::vector<Vertex> b_vertices;  // ball vertices owning the color classes
};

inline LinkGraph link_graph(const LinearHypergraph& h, Vertex x) {
    if (h.k() != 3) throw Error(Errc::bad_uniformity, "link graph is defined for triple systems");
    auto [delta, at] = h.max_degree();
    if (h.degree(x) != delta)
        throw Error(Errc::not_max_degree_vertex,
                    "vertex " + std::to_string(x) + " does not attain the maximum degree " + std::to_string(delta));
    std::vector<char> in_ball(static_cast<std::size_t>(h.n()) + 1, 0);
    auto ball = h.outside_ball(x);
    for (Vertex b : ball) in_ball[b] = 1;

    LinkGraph out;
    std::vector<int> relabel(static_cast<std::size_t>(h.n()) + 1, 0);
    for (Vertex v = 1; v <= h.n(); ++v)
        if (!in_ball[v]) {
            out.w_vertices.push_back(v);
            relabel[v] = static_cast<int>(out.w_vertices.size());
        }
    out.graph.n = static_cast<int>(out.w_vertices.size());

    for (Vertex b : ball) {
        std::vector<int> cls;
        for (int idx : h.edges_at(b)) {
            const Edge& e = h.edges()[idx];
            std::vector<Vertex> w;
            for (Vertex u : e)
                if (!in_ball[u]) w.push_back(u);
            if (w.size() != 2) continue;  // needs exactly one ball vertex
            out.graph.edges.push_back({std::min(relabel[w[0]], relabel[w[1]]), std::max(relabel[w[0]], relabel[w[1]])});
            cls.push_back(static_cast<int>(out.graph.edges.size()) - 1);
        }
        if (!cls.empty()) {
            out.graph.matchings.push_back(std::move(cls));
            out.b_vertices.push_back(b);
        }
    }
    out.graph.check();
    return out;
}

inline bool graph_has_triangle(const ColoredGraph& g) {
    std::vector<std::vector<char>> adj(g.n + 1, std::vector<char>(g.n + 1, 0));
    for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
    for (int a = 1; a <= g.n; ++a)
        for (int b = a + 1; b <= g.n; ++b)
            if (adj[a][b])
                for (int c = b + 1; c <= g.n; ++c)
                    if (adj[a][c] && adj[b][c]) return true;
    return false;
}

inline bool graph_is_bipartite(const ColoredGraph& g) {
    std::vector<std::vector<int>> adj(g.n + 1);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> color(g.n + 1, -1);
    for (int s = 1; s <= g.n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            for (int v : adj[u]) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline int graph_min_degree(const ColoredGraph& g) {
    if (g.n == 0) return 0;
    std::vector<int> deg(g.n + 1, 0);
    for (auto [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
    }
    int md = deg[1];
    for (int v = 2; v <= g.n; ++v) md = std::min(md, deg[v]);
    return md;
}

/// Statement check of the minimum-degree theorem for triangle-free
/// non-bipartite graphs: min degree <= 2n/5. Returns vacuously when the
/// graph is bipartite or has a triangle; `holds == false` would falsify the
/// cited theorem and is never expected.
struct AesResult {
    bool applicable = false;
    bool holds = true;
    int min_degree = 0;
    std::string note;
};

inline AesResult aes_degree_check(const ColoredGraph& g) {
    AesResult r;
    r.min_degree = graph_min_degree(g);
    if (graph_has_triangle(g)) {
        r.note = "graph has a triangle; the statement does not apply";
        return r;
    }
    if (graph_is_bipartite(g)) {
        r.note = "graph is bipartite; the statement does not apply";
        return r;
    }
    r.applicable = true;
    r.holds = 5LL * r.min_degree <= 2LL * g.n;
    r.note = r.holds ? "min degree within 2n/5" : "THEOREM FALSIFIED (implementation bug)";
    return r;
}

}  // namespace lhg
