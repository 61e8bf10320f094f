#pragma once

#include <array>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lhg/canonical.hpp"
#include "lhg/hypergraph.hpp"

namespace lhg {

enum class ConfigName { triangle, fan, pasch, c14, w };

/// Structural annotation of a fan: which edges pass through the center and
/// where the crossing edge meets each of them.
struct FanInfo {
    Vertex center = 0;
    std::vector<int> f_edges;            // indices into Configuration::edges
    int g_edge = -1;                     // the crossing edge
    std::vector<Vertex> g_vertex_in_f;   // i-th entry: the vertex of g on f_edges[i]
};

/// A named small forbidden pattern. W is the only non-linear entry (two
/// triples sharing two vertices), so `edges` is kept as a raw list rather
/// than a LinearHypergraph.
struct Configuration {
    ConfigName name;
    int k = 3;
    int n = 0;
    EdgeList edges;
    bool linear = true;
    std::string label;
    std::optional<FanInfo> fan;
};

/// Canonical instances. The fixed labelings:
///   triangle  {123, 345, 156}                       on 6 vertices
///   pasch     {123, 345, 156, 246}                  on 6 vertices
///   c14       {123, 345, 156, 267}                  on 7 vertices
///   w         {123, 124}                            on 4 vertices
///   fan(3)    {123, 345, 156, 367}: center 3, crossing edge 156
///   fan(k)    center 1, spokes {1} + (k-1 fresh), crossing edge takes the
///             least fresh vertex of each spoke
inline Configuration configuration(ConfigName name, int k = 3) {
    auto mk = [](ConfigName nm, int kk, int nn, EdgeList e, std::string lbl) {
        Configuration c;
        c.name = nm;
        c.k = kk;
        c.n = nn;
        c.edges = std::move(e);
        sort_edge_list(c.edges);
        c.label = std::move(lbl);
        return c;
    };
    switch (name) {
        case ConfigName::triangle:
            if (k != 3) throw Error(Errc::bad_uniformity, "triangle is 3-uniform");
            return mk(name, 3, 6, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}}, "triangle");
        case ConfigName::pasch:
            if (k != 3) throw Error(Errc::bad_uniformity, "pasch is 3-uniform");
            return mk(name, 3, 6, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}, {2, 4, 6}}, "pasch");
        case ConfigName::c14:
            if (k != 3) throw Error(Errc::bad_uniformity, "c14 is 3-uniform");
            return mk(name, 3, 7, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}, {2, 6, 7}}, "c14");
        case ConfigName::w: {
            if (k != 3) throw Error(Errc::bad_uniformity, "w is 3-uniform");
            Configuration c = mk(name, 3, 4, {{1, 2, 3}, {1, 2, 4}}, "w");
            c.linear = false;
            return c;
        }
        case ConfigName::fan: {
            if (k < 2) throw Error(Errc::bad_uniformity, "fan requires uniformity >= 2");
            Configuration c;
            c.name = name;
            c.k = k;
            c.label = "fan" + std::to_string(k);
            Vertex center;
            if (k == 3) {
                c.n = 7;
                c.edges = {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}, {3, 6, 7}};
                center = 3;
            } else {
                c.n = k * (k - 1) + 1;
                center = 1;
                Edge crossing;
                for (int i = 0; i < k; ++i) {
                    Edge spoke{1};
                    for (int j = 0; j < k - 1; ++j) spoke.push_back(1 + i * (k - 1) + j + 1);
                    crossing.push_back(spoke[1]);
                    c.edges.push_back(std::move(spoke));
                }
                c.edges.push_back(std::move(crossing));
            }
            sort_edge_list(c.edges);
            FanInfo fixed;
            fixed.center = center;
            for (std::size_t i = 0; i < c.edges.size(); ++i) {
                const Edge& e = c.edges[i];
                bool has_center = std::find(e.begin(), e.end(), center) != e.end();
                if (has_center)
                    fixed.f_edges.push_back(static_cast<int>(i));
                else
                    fixed.g_edge = static_cast<int>(i);
            }
            const Edge& g = c.edges[fixed.g_edge];
            for (int fe : fixed.f_edges) {
                for (Vertex v : c.edges[fe])
                    if (std::find(g.begin(), g.end(), v) != g.end()) {
                        fixed.g_vertex_in_f.push_back(v);
                        break;
                    }
            }
            c.fan = fixed;
            return c;
        }
    }
    throw Error(Errc::unsupported, "unknown configuration");
}

inline const std::vector<std::string>& configuration_labels() {
    static const std::vector<std::string> labels = {"triangle", "fan<k> (e.g. fan3)", "pasch", "c14", "w"};
    return labels;
}

/// Parses "triangle" / "fan3" / "pasch" / "c14" / "w".
inline Configuration configuration_from_label(std::string_view label) {
    std::string s(label);
    for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (s == "triangle") return configuration(ConfigName::triangle);
    if (s == "pasch") return configuration(ConfigName::pasch);
    if (s == "c14") return configuration(ConfigName::c14);
    if (s == "w") return configuration(ConfigName::w);
    if (s.rfind("fan", 0) == 0 && s.size() > 3) {
        int k = 0;
        for (std::size_t i = 3; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) k = -1;
            if (k < 0) break;
            k = k * 10 + (s[i] - '0');
        }
        if (k >= 2) return configuration(ConfigName::fan, k);
    }
    std::string accepted;
    for (const auto& l : configuration_labels()) accepted += (accepted.empty() ? "" : ", ") + l;
    throw Error(Errc::unsupported, "unknown configuration \"" + std::string(label) + "\"; accepted: " + accepted);
}

namespace detail {

/// Pattern-in-host search over raw edge lists. Hosts need not be linear;
/// incidence is built on the fly unless the caller maintains one.
class EmbeddingSearch {
public:
    EmbeddingSearch(int host_n, const EdgeList& host_edges, const std::vector<std::vector<int>>& host_incidence,
                    const Configuration& pattern)
        : hn_(host_n), hedges_(host_edges), hinc_(host_incidence), pat_(pattern) {}

    std::optional<Embedding> find(int anchor_host_edge = -1) {
        const auto& pe = pat_.edges;
        if (pe.empty()) return Embedding{std::vector<Vertex>(pat_.n, 0), {}};
        vmap_.assign(static_cast<std::size_t>(pat_.n) + 1, 0);
        used_host_.assign(static_cast<std::size_t>(hn_) + 1, 0);
        emap_.assign(pe.size(), -1);

        if (anchor_host_edge < 0) {
            order_ = connectivity_order(-1);
            if (embed(0, -1)) return result();
            return std::nullopt;
        }
        // A copy through a specific host edge: try each pattern edge as the
        // one landing on it.
        for (int anchor = 0; anchor < static_cast<int>(pe.size()); ++anchor) {
            order_ = connectivity_order(anchor);
            if (embed(0, anchor_host_edge)) return result();
        }
        return std::nullopt;
    }

private:
    Embedding result() const {
        Embedding em;
        em.vertex_map.assign(vmap_.begin() + 1, vmap_.end());
        em.edge_map = emap_ptr_;
        return em;
    }

    // Greedy ordering: repeatedly take the pattern edge sharing the most
    // vertices with those already placed (fail-fast).
    std::vector<int> connectivity_order(int first) const {
        const auto& pe = pat_.edges;
        std::vector<int> order;
        std::vector<char> placed(pe.size(), 0), seen(static_cast<std::size_t>(pat_.n) + 1, 0);
        auto push = [&](int idx) {
            order.push_back(idx);
            placed[idx] = 1;
            for (Vertex v : pe[idx]) seen[v] = 1;
        };
        if (first >= 0) push(first);
        while (order.size() < pe.size()) {
            int best = -1, best_shared = -1;
            for (int i = 0; i < static_cast<int>(pe.size()); ++i) {
                if (placed[i]) continue;
                int shared = 0;
                for (Vertex v : pe[i]) shared += seen[v];
                if (shared > best_shared) {
                    best_shared = shared;
                    best = i;
                }
            }
            push(best);
        }
        return order;
    }

    bool embed(std::size_t pos, int forced_host_edge) {
        if (pos == order_.size()) {
            emap_ptr_.assign(pat_.edges.size(), -1);
            for (std::size_t i = 0; i < order_.size(); ++i) emap_ptr_[order_[i]] = emap_[i];
            return true;
        }
        const Edge& pe = pat_.edges[order_[pos]];
        if (pos == 0 && forced_host_edge >= 0) return try_host_edge(pos, pe, forced_host_edge);

        // candidate host edges must contain the images of all already-mapped
        // pattern vertices of pe
        std::vector<Vertex> mapped_images;
        for (Vertex v : pe)
            if (vmap_[v]) mapped_images.push_back(vmap_[v]);
        if (mapped_images.empty()) {
            for (int he = 0; he < static_cast<int>(hedges_.size()); ++he)
                if (try_host_edge(pos, pe, he)) return true;
            return false;
        }
        for (int he : hinc_[mapped_images[0]]) {
            bool ok = true;
            for (std::size_t i = 1; i < mapped_images.size() && ok; ++i)
                ok = std::binary_search(hedges_[he].begin(), hedges_[he].end(), mapped_images[i]);
            if (ok && try_host_edge(pos, pe, he)) return true;
        }
        return false;
    }

    bool try_host_edge(std::size_t pos, const Edge& pe, int he) {
        const Edge& host = hedges_[he];
        if (host.size() != pe.size()) return false;
        std::vector<Vertex> free_pat;
        for (Vertex v : pe) {
            if (vmap_[v]) {
                if (!std::binary_search(host.begin(), host.end(), vmap_[v])) return false;
            } else {
                free_pat.push_back(v);
            }
        }
        std::vector<Vertex> free_host;
        for (Vertex u : host) {
            bool image = false;
            for (Vertex v : pe)
                if (vmap_[v] == u) {
                    image = true;
                    break;
                }
            if (!image) free_host.push_back(u);
        }
        if (free_host.size() != free_pat.size()) return false;
        emap_[pos] = he;
        // free_host is ascending; iterate assignments in lexicographic order
        std::vector<int> perm(free_host.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        do {
            bool ok = true;
            for (std::size_t i = 0; i < free_pat.size() && ok; ++i)
                ok = !used_host_[free_host[perm[i]]];
            if (ok) {
                for (std::size_t i = 0; i < free_pat.size(); ++i) {
                    vmap_[free_pat[i]] = free_host[perm[i]];
                    used_host_[free_host[perm[i]]] = 1;
                }
                if (embed(pos + 1, -1)) return true;
                for (std::size_t i = 0; i < free_pat.size(); ++i) {
                    used_host_[free_host[perm[i]]] = 0;
                    vmap_[free_pat[i]] = 0;
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        emap_[pos] = -1;
        return false;
    }

    int hn_;
    const EdgeList& hedges_;
    const std::vector<std::vector<int>>& hinc_;
    const Configuration& pat_;
    std::vector<int> order_;
    std::vector<Vertex> vmap_;
    std::vector<char> used_host_;
    std::vector<int> emap_;      // by position in order_
    std::vector<int> emap_ptr_;  // by pattern edge index
};

inline std::vector<std::vector<int>> build_incidence(int n, const EdgeList& edges) {
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        for (Vertex v : edges[i]) inc[v].push_back(i);
    return inc;
}

}  // namespace detail

/// Subhypergraph test on a raw host (linearity not required). Returns the
/// first embedding in a deterministic search order, or nullopt.
inline std::optional<Embedding> find_embedding(int host_n, int host_k, const EdgeList& host_edges,
                                               const Configuration& c) {
    if (host_k != c.k)
        throw Error(Errc::uniformity_mismatch,
                    "host is " + std::to_string(host_k) + "-uniform, pattern " + c.label + " is " + std::to_string(c.k));
    auto inc = detail::build_incidence(host_n, host_edges);
    detail::EmbeddingSearch search(host_n, host_edges, inc, c);
    return search.find();
}

inline std::optional<Embedding> find_embedding(const LinearHypergraph& h, const Configuration& c) {
    return find_embedding(h.n(), h.k(), h.edges(), c);
}

/// True embedding validity check, used by tests and the search module.
inline bool embedding_is_valid(int host_n, const EdgeList& host_edges, const Configuration& c, const Embedding& em) {
    if (static_cast<int>(em.vertex_map.size()) != c.n) return false;
    std::vector<char> used(static_cast<std::size_t>(host_n) + 1, 0);
    for (Vertex img : em.vertex_map) {
        if (img < 1 || img > host_n || used[img]) return false;
        used[img] = 1;
    }
    if (em.edge_map.size() != c.edges.size()) return false;
    for (std::size_t i = 0; i < c.edges.size(); ++i) {
        int he = em.edge_map[i];
        if (he < 0 || he >= static_cast<int>(host_edges.size())) return false;
        Edge image;
        for (Vertex v : c.edges[i]) image.push_back(em.vertex_map[v - 1]);
        std::sort(image.begin(), image.end());
        if (image != host_edges[he]) return false;
    }
    return true;
}

/// Specialized fan detector: for every vertex v of degree >= k and every
/// candidate crossing edge g avoiding v, decide by bipartite matching whether
/// the vertices of g can be matched to k distinct edges through v. Agrees
/// with find_embedding(H, fan(k)) on the Boolean level.
inline std::optional<Embedding> contains_fan(const LinearHypergraph& h, int k) {
    if (h.k() != k)
        throw Error(Errc::uniformity_mismatch, "hypergraph is " + std::to_string(h.k()) + "-uniform, fan needs k = " + std::to_string(k));
    const Configuration fan = configuration(ConfigName::fan, k);
    const FanInfo& info = *fan.fan;

    for (Vertex v = 1; v <= h.n(); ++v) {
        const auto& at_v = h.edges_at(v);
        if (static_cast<int>(at_v.size()) < k) continue;
        for (int ge = 0; ge < static_cast<int>(h.edge_count()); ++ge) {
            const Edge& g = h.edges()[ge];
            if (std::binary_search(g.begin(), g.end(), v)) continue;
            // bipartite matching: vertex x of g  ->  edge through v containing x
            std::vector<std::vector<int>> adj(g.size());
            for (std::size_t i = 0; i < g.size(); ++i)
                for (int he : at_v)
                    if (he != ge && std::binary_search(h.edges()[he].begin(), h.edges()[he].end(), g[i]))
                        adj[i].push_back(he);
            std::vector<int> match_of_x(g.size(), -1);
            std::unordered_map<int, int> owner;  // host edge -> matched g-slot
            auto kuhn = [&](auto&& self, std::size_t x, std::vector<int>& visited) -> bool {
                for (int he : adj[x]) {
                    if (std::find(visited.begin(), visited.end(), he) != visited.end()) continue;
                    visited.push_back(he);
                    auto it = owner.find(he);
                    if (it == owner.end() || self(self, static_cast<std::size_t>(it->second), visited)) {
                        match_of_x[x] = he;
                        owner[he] = static_cast<int>(x);
                        return true;
                    }
                }
                return false;
            };
            bool perfect = true;
            for (std::size_t x = 0; x < g.size() && perfect; ++x) {
                std::vector<int> visited;
                perfect = kuhn(kuhn, x, visited);
            }
            if (!perfect) continue;

            // assemble the embedding along the canonical fan labeling
            Embedding em;
            em.vertex_map.assign(fan.n, 0);
            em.edge_map.assign(fan.edges.size(), -1);
            std::vector<char> used(static_cast<std::size_t>(h.n()) + 1, 0);
            auto set_image = [&](Vertex pat, Vertex host) {
                em.vertex_map[pat - 1] = host;
                used[host] = 1;
            };
            set_image(info.center, v);
            em.edge_map[info.g_edge] = ge;
            const Edge& pat_g = fan.edges[info.g_edge];
            for (std::size_t i = 0; i < pat_g.size(); ++i) set_image(pat_g[i], g[i]);
            for (std::size_t i = 0; i < info.f_edges.size(); ++i) {
                Vertex cross_pat = info.g_vertex_in_f[i];
                // which host g-vertex is the image of cross_pat?
                std::size_t slot = 0;
                for (std::size_t j = 0; j < pat_g.size(); ++j)
                    if (pat_g[j] == cross_pat) slot = j;
                int host_edge = match_of_x[slot];
                em.edge_map[info.f_edges[i]] = host_edge;
                // remaining pattern vertices of this spoke get the remaining
                // host vertices in ascending order
                std::vector<Vertex> free_host;
                for (Vertex u : h.edges()[host_edge])
                    if (u != v && u != g[slot]) free_host.push_back(u);
                std::size_t next = 0;
                for (Vertex pv : fan.edges[info.f_edges[i]])
                    if (em.vertex_map[pv - 1] == 0) set_image(pv, free_host[next++]);
            }
            return em;
        }
    }
    return std::nullopt;
}

/// Four distinct edges spanning at most seven points, by direct enumeration
/// with union-size pruning. Returns indices of a violating quadruple.
/// 3-uniform input; linearity is not required.
inline std::optional<std::array<int, 4>> f74_violation(int n, const EdgeList& edges) {
    if (n > 64) throw Error(Errc::too_large, "f74 check supports at most 64 vertices");
    const int m = static_cast<int>(edges.size());
    std::vector<std::uint64_t> masks(m);
    for (int i = 0; i < m; ++i) {
        std::uint64_t mask = 0;
        for (Vertex v : edges[i]) mask |= std::uint64_t{1} << (v - 1);
        masks[i] = mask;
    }
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            std::uint64_t ab = masks[a] | masks[b];
            if (std::popcount(ab) > 7) continue;
            for (int c = b + 1; c < m; ++c) {
                std::uint64_t abc = ab | masks[c];
                if (std::popcount(abc) > 7) continue;
                for (int d = c + 1; d < m; ++d)
                    if (std::popcount(abc | masks[d]) <= 7) return std::array<int, 4>{a, b, c, d};
            }
        }
    return std::nullopt;
}

inline bool is_f74_free(int n, const EdgeList& edges) { return !f74_violation(n, edges).has_value(); }
inline bool is_f74_free(const LinearHypergraph& h) {
    if (h.k() != 3) throw Error(Errc::bad_uniformity, "f74 concerns triple systems");
    return is_f74_free(h.n(), h.edges());
}

/// One isomorphism class of a four-triple system on at most seven points,
/// with the forbidden patterns it contains.
struct F74Class {
    EdgeList edges;   // canonical labeling, support 1..points
    int points = 0;
    bool linear = true;
    std::set<ConfigName> contains;
};

/// Orderly enumeration of all systems of exactly four distinct triples
/// spanning at most seven points, one canonical representative per
/// isomorphism class, each tagged with the members of
/// {fan3, pasch, c14, w} it contains.
inline std::vector<F74Class> classify_f74_members() {
    // all triples on 1..7 as masks, ascending = colex order
    std::vector<std::uint32_t> all;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) all.push_back((1u << a) | (1u << b) | (1u << c));
    std::sort(all.begin(), all.end());

    const std::array<Configuration, 4> patterns = {configuration(ConfigName::fan, 3), configuration(ConfigName::pasch),
                                                   configuration(ConfigName::c14), configuration(ConfigName::w)};
    const std::array<ConfigName, 4> names = {ConfigName::fan, ConfigName::pasch, ConfigName::c14, ConfigName::w};

    std::vector<F74Class> out;
    std::vector<std::uint32_t> state;

    auto emit = [&]() {
        F74Class cls;
        cls.edges = detail::masks_to_edges(state);
        std::uint32_t sup = 0;
        for (auto m : state) sup |= m;
        cls.points = std::popcount(sup);
        bool linear = true;
        for (std::size_t i = 0; i < state.size() && linear; ++i)
            for (std::size_t j = i + 1; j < state.size() && linear; ++j)
                if (std::popcount(state[i] & state[j]) > 1) linear = false;
        cls.linear = linear;
        for (std::size_t p = 0; p < patterns.size(); ++p)
            if (find_embedding(cls.points, 3, cls.edges, patterns[p])) cls.contains.insert(names[p]);
        out.push_back(std::move(cls));
    };

    auto extend = [&](auto&& self, std::size_t start) -> void {
        if (state.size() == 4) {
            emit();
            return;
        }
        for (std::size_t i = start; i < all.size(); ++i) {
            state.push_back(all[i]);
            if (detail::is_canonical_state(state)) self(self, i + 1);
            state.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

}  // namespace lhg
