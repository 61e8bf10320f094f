#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace lhg {

/// Vertices are 1-based integers.
using Vertex = int;
/// An edge is an ascending list of distinct vertices.
using Edge = std::vector<Vertex>;
using EdgeList = std::vector<Edge>;

enum class Errc {
    not_uniform,
    duplicate_edge,
    not_linear,
    vertex_out_of_range,
    too_large,
    bad_uniformity,
    uniformity_mismatch,
    unsupported,
    not_a_transversal_design,
    even_side,
    improper_coloring,
    not_max_degree_vertex,
    pipeline_failure,
    not_f74_free,
    cap_exceeded,
    falsified,
    bad_format,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::not_uniform: return "NotUniform";
        case Errc::duplicate_edge: return "DuplicateEdge";
        case Errc::not_linear: return "NotLinear";
        case Errc::vertex_out_of_range: return "VertexOutOfRange";
        case Errc::too_large: return "TooLarge";
        case Errc::bad_uniformity: return "BadUniformity";
        case Errc::uniformity_mismatch: return "UniformityMismatch";
        case Errc::unsupported: return "Unsupported";
        case Errc::not_a_transversal_design: return "NotATransversalDesign";
        case Errc::even_side: return "EvenSide";
        case Errc::improper_coloring: return "ImproperColoring";
        case Errc::not_max_degree_vertex: return "NotMaxDegreeVertex";
        case Errc::pipeline_failure: return "PipelineFailure";
        case Errc::not_f74_free: return "NotF74Free";
        case Errc::cap_exceeded: return "CapExceeded";
        case Errc::falsified: return "Falsified";
        case Errc::bad_format: return "BadFormat";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

inline std::string edge_to_string(const Edge& e) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i];
    }
    os << '}';
    return os.str();
}

/// Lexicographic order on edges viewed as ascending tuples.
inline bool edge_less(const Edge& a, const Edge& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void sort_edge_list(EdgeList& edges) { std::sort(edges.begin(), edges.end(), edge_less); }

/// An injective vertex map witnessing one hypergraph inside another.
/// vertex_map[i] is the host image of pattern vertex i+1; edge_map[j] is the
/// index of the host edge that pattern edge j lands on.
struct Embedding {
    std::vector<Vertex> vertex_map;
    std::vector<int> edge_map;
};

/// A partition of 1..n into groups, each met at most once by every edge.
struct GroupPartition {
    std::vector<std::vector<Vertex>> groups;
};

/// A k-uniform hypergraph in which any two edges share at most one vertex.
/// Immutable once constructed; construction goes through validate().
class LinearHypergraph {
public:
    /// Gatekeeper: checks uniformity, vertex ranges, duplicate edges and
    /// pairwise intersections. Edges are stored sorted lexicographically.
    static LinearHypergraph validate(EdgeList edges, int n, int k) {
        if (k < 2) throw Error(Errc::bad_uniformity, "uniformity must be at least 2, got " + std::to_string(k));
        if (n < 0) throw Error(Errc::vertex_out_of_range, "vertex count must be nonnegative");
        for (auto& e : edges) {
            if (static_cast<int>(e.size()) != k)
                throw Error(Errc::not_uniform, "edge " + edge_to_string(e) + " has " +
                                                   std::to_string(e.size()) + " vertices, expected " + std::to_string(k));
            std::sort(e.begin(), e.end());
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] < 1 || e[i] > n)
                    throw Error(Errc::vertex_out_of_range,
                                "vertex " + std::to_string(e[i]) + " outside 1.." + std::to_string(n));
                if (i > 0 && e[i] == e[i - 1])
                    throw Error(Errc::not_uniform, "edge " + edge_to_string(e) + " repeats vertex " + std::to_string(e[i]));
            }
        }
        sort_edge_list(edges);
        for (std::size_t i = 1; i < edges.size(); ++i)
            if (edges[i] == edges[i - 1])
                throw Error(Errc::duplicate_edge, "edge " + edge_to_string(edges[i]) + " appears twice");

        LinearHypergraph h;
        h.n_ = n;
        h.k_ = k;
        h.edges_ = std::move(edges);
        h.incidence_.assign(static_cast<std::size_t>(n) + 1, {});
        h.pair_cover_.reserve(h.edges_.size() * k * (k - 1) / 2);
        for (int idx = 0; idx < static_cast<int>(h.edges_.size()); ++idx) {
            const Edge& e = h.edges_[idx];
            for (std::size_t a = 0; a < e.size(); ++a) {
                h.incidence_[e[a]].push_back(idx);
                for (std::size_t b = a + 1; b < e.size(); ++b) {
                    auto [it, fresh] = h.pair_cover_.emplace(pair_key(e[a], e[b]), idx);
                    if (!fresh)
                        throw Error(Errc::not_linear,
                                    "edges " + edge_to_string(h.edges_[it->second]) + " and " + edge_to_string(e) +
                                        " share vertices " + std::to_string(e[a]) + "," + std::to_string(e[b]));
                }
            }
        }
        return h;
    }

    int n() const { return n_; }
    int k() const { return k_; }
    const EdgeList& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Indices of the edges containing v.
    const std::vector<int>& edges_at(Vertex v) const {
        check_vertex(v);
        return incidence_[v];
    }

    int degree(Vertex v) const { return static_cast<int>(edges_at(v).size()); }

    /// Maximum degree and the smallest vertex attaining it. (0, 0) when n = 0.
    std::pair<int, Vertex> max_degree() const {
        if (n_ == 0) return {0, 0};
        int best = -1;
        Vertex arg = 1;
        for (Vertex v = 1; v <= n_; ++v) {
            int d = static_cast<int>(incidence_[v].size());
            if (d > best) {
                best = d;
                arg = v;
            }
        }
        return {best, arg};
    }

    /// Open neighborhood: the union of the edges through v, minus v.
    std::vector<Vertex> neighborhood(Vertex v) const {
        check_vertex(v);
        std::vector<char> mark(static_cast<std::size_t>(n_) + 1, 0);
        for (int idx : incidence_[v])
            for (Vertex u : edges_[idx]) mark[u] = 1;
        mark[v] = 0;
        std::vector<Vertex> out;
        for (Vertex u = 1; u <= n_; ++u)
            if (mark[u]) out.push_back(u);
        return out;
    }

    /// Complement of the open neighborhood; always contains v itself.
    std::vector<Vertex> outside_ball(Vertex v) const {
        check_vertex(v);
        std::vector<char> mark(static_cast<std::size_t>(n_) + 1, 0);
        for (int idx : incidence_[v])
            for (Vertex u : edges_[idx]) mark[u] = 1;
        mark[v] = 0;
        std::vector<Vertex> out;
        for (Vertex u = 1; u <= n_; ++u)
            if (!mark[u]) out.push_back(u);
        return out;
    }

    /// True iff every edge meets S in at most one vertex.
    bool is_strongly_independent(const std::vector<Vertex>& s) const {
        std::vector<char> mark(static_cast<std::size_t>(n_) + 1, 0);
        for (Vertex v : s) {
            check_vertex(v);
            mark[v] = 1;
        }
        for (const Edge& e : edges_) {
            int hits = 0;
            for (Vertex u : e)
                if (mark[u] && ++hits > 1) return false;
        }
        return true;
    }

    /// Index of the edge covering the pair {u, v}, if any.
    std::optional<int> edge_covering(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        auto it = pair_cover_.find(pair_key(u, v));
        if (it == pair_cover_.end()) return std::nullopt;
        return it->second;
    }

private:
    LinearHypergraph() = default;

    void check_vertex(Vertex v) const {
        if (v < 1 || v > n_)
            throw Error(Errc::vertex_out_of_range, "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
    }

    static std::uint64_t pair_key(Vertex a, Vertex b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    }

    int n_ = 0;
    int k_ = 2;
    EdgeList edges_;
    std::vector<std::vector<int>> incidence_;
    std::unordered_map<std::uint64_t, int> pair_cover_;
};

/// Searches for a partition of 1..n into k groups such that every edge has
/// exactly one vertex in each group. Backtracking with a most-constrained
/// vertex heuristic; exponential in the worst case, intended for small n.
/// Group indices are canonicalized (a vertex may only open group i once
/// groups 0..i-1 are in use), so the answer is deterministic.
inline std::optional<GroupPartition> find_k_partition(const LinearHypergraph& h) {
    const int n = h.n();
    const int k = h.k();
    std::vector<int> group(static_cast<std::size_t>(n) + 1, -1);
    // per-edge bitmask of groups already used by assigned vertices
    std::vector<std::uint32_t> edge_used(h.edge_count(), 0);
    int assigned = 0;

    auto candidate_mask = [&](Vertex v) {
        std::uint32_t blocked = 0;
        for (int idx : h.edges_at(v)) blocked |= edge_used[idx];
        return ~blocked & ((1u << k) - 1);
    };

    auto pick_vertex = [&]() -> Vertex {
        Vertex best = 0;
        int best_count = k + 1;
        for (Vertex v = 1; v <= n; ++v) {
            if (group[v] >= 0) continue;
            int c = std::popcount(candidate_mask(v));
            if (c < best_count) {
                best_count = c;
                best = v;
                if (c == 0) break;
            }
        }
        return best;
    };

    std::vector<std::vector<Vertex>> groups(k);
    int groups_in_use = 0;

    auto solve = [&](auto&& self) -> bool {
        if (assigned == n) return true;
        Vertex v = pick_vertex();
        std::uint32_t mask = candidate_mask(v);
        int limit = std::min(groups_in_use, k - 1);
        for (int g = 0; g <= limit; ++g) {
            if (!(mask & (1u << g))) continue;
            group[v] = g;
            ++assigned;
            bool opened = (g == groups_in_use);
            if (opened) ++groups_in_use;
            for (int idx : h.edges_at(v)) edge_used[idx] |= 1u << g;
            if (self(self)) return true;
            for (int idx : h.edges_at(v)) edge_used[idx] &= ~(1u << g);
            if (opened) --groups_in_use;
            --assigned;
            group[v] = -1;
        }
        return false;
    };

    if (!solve(solve)) return std::nullopt;
    for (Vertex v = 1; v <= n; ++v) groups[group[v]].push_back(v);
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        if (a.empty() || b.empty()) return !a.empty();
        return a[0] < b[0];
    });
    return GroupPartition{std::move(groups)};
}

}  // namespace lhg
