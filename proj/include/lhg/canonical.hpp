#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "lhg/hypergraph.hpp"

namespace lhg {

namespace detail {

inline std::uint32_t edge_to_mask(const Edge& e) {
    std::uint32_t m = 0;
    for (Vertex v : e) m |= 1u << (v - 1);
    return m;
}

inline std::vector<std::uint32_t> edges_to_masks(const EdgeList& edges) {
    std::vector<std::uint32_t> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.push_back(edge_to_mask(e));
    std::sort(out.begin(), out.end());
    return out;
}

inline EdgeList masks_to_edges(const std::vector<std::uint32_t>& masks) {
    EdgeList out;
    out.reserve(masks.size());
    for (std::uint32_t m : masks) {
        Edge e;
        while (m) {
            int b = std::countr_zero(m);
            e.push_back(b + 1);
            m &= m - 1;
        }
        out.push_back(std::move(e));
    }
    sort_edge_list(out);
    return out;
}

/// Branch-and-bound relabeling minimizer. Works on edge bitmasks over the
/// support vertices 1..nv (bits 0..nv-1). The representative it minimizes is
/// the ascending array of edge masks; numeric mask order coincides with colex
/// order on edges, which is what makes prefix pruning sound here: once labels
/// 1..m are placed, the edges completed so far occupy a fixed prefix of the
/// final array.
class Canonizer {
public:
    Canonizer(int nv, std::vector<std::uint32_t> masks) : nv_(nv), input_(std::move(masks)) {
        std::sort(input_.begin(), input_.end());
        vedges_.assign(nv_, {});
        esize_.assign(input_.size(), 0);
        for (int e = 0; e < static_cast<int>(input_.size()); ++e) {
            std::uint32_t m = input_[e];
            esize_[e] = std::popcount(m);
            while (m) {
                int b = std::countr_zero(m);
                vedges_[b].push_back(e);
                m &= m - 1;
            }
        }
    }

    /// True iff some relabeling yields a strictly smaller mask array than the
    /// identity labeling. Exits as soon as one is found.
    bool has_smaller() {
        best_ = input_;
        decision_ = true;
        smaller_ = false;
        init_state();
        dfs(0, 0);
        return smaller_;
    }

    /// The minimal mask array over all relabelings of 1..nv.
    std::vector<std::uint32_t> minimize() {
        best_ = input_;
        decision_ = false;
        smaller_ = false;
        init_state();
        dfs(0, 0);
        return best_;
    }

private:
    void init_state() {
        used_.assign(nv_, 0);
        done_.assign(input_.size(), 0);
        newmask_.assign(input_.size(), 0);
        completed_.clear();
        completed_.reserve(input_.size());
    }

    // Batch of masks completed by giving label bit `m` to original vertex v.
    void batch_for(int v, int m, std::vector<std::uint32_t>& batch) const {
        batch.clear();
        for (int e : vedges_[v])
            if (done_[e] == esize_[e] - 1) batch.push_back(newmask_[e] | (1u << m));
        std::sort(batch.begin(), batch.end());
    }

    // Positional comparison treating a missing tail as +infinity: any mask
    // completed later carries a higher top bit, so a candidate whose batch is
    // a strict prefix of another's is dominated by it.
    static int batch_cmp(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        if (a.size() == b.size()) return 0;
        return a.size() > b.size() ? -1 : 1;
    }

    // cmp: 0 = prefix equals best so far, -1 = already strictly below best.
    void dfs(int m, int cmp) {
        if (smaller_) return;
        if (m == nv_) {
            if (decision_) return;  // cmp == 0 here means an automorphism
            if (std::lexicographical_compare(completed_.begin(), completed_.end(), best_.begin(), best_.end()))
                best_ = completed_;
            return;
        }

        // Evaluate every unused vertex; only those achieving the minimal batch
        // can lead to the minimum (any larger batch is dominated outright).
        std::vector<int> cands;
        std::vector<std::uint32_t> min_batch, batch;
        bool have = false;
        for (int v = 0; v < nv_; ++v) {
            if (used_[v]) continue;
            batch_for(v, m, batch);
            if (!have) {
                min_batch = batch;
                cands.assign(1, v);
                have = true;
                continue;
            }
            int c = batch_cmp(batch, min_batch);
            if (c < 0) {
                min_batch = batch;
                cands.assign(1, v);
            } else if (c == 0) {
                cands.push_back(v);
            }
        }

        int next_cmp = cmp;
        if (cmp == 0 && !min_batch.empty()) {
            std::size_t base = completed_.size();
            for (std::size_t i = 0; i < min_batch.size(); ++i) {
                std::uint32_t ref = best_[base + i];
                if (min_batch[i] != ref) {
                    next_cmp = min_batch[i] < ref ? -1 : 1;
                    break;
                }
            }
            if (next_cmp > 0) return;  // prefix already beaten by best
            if (next_cmp < 0 && decision_) {
                smaller_ = true;  // any completion of this prefix is smaller
                return;
            }
        }

        for (int v : cands) {
            used_[v] = 1;
            for (int e : vedges_[v]) {
                newmask_[e] |= 1u << m;
                ++done_[e];
            }
            std::size_t old_size = completed_.size();
            completed_.insert(completed_.end(), min_batch.begin(), min_batch.end());
            dfs(m + 1, next_cmp);
            completed_.resize(old_size);
            for (int e : vedges_[v]) {
                newmask_[e] &= ~(1u << m);
                --done_[e];
            }
            used_[v] = 0;
            if (smaller_) return;
        }
    }

    int nv_;
    std::vector<std::uint32_t> input_;
    std::vector<std::vector<int>> vedges_;
    std::vector<int> esize_;
    std::vector<char> used_, done_;
    std::vector<std::uint32_t> newmask_, completed_, best_;
    bool decision_ = false;
    bool smaller_ = false;
};

/// Support-reduced view: used vertices of `edges` mapped onto 1..s in
/// ascending order. Isolated vertices never influence the canonical form.
struct Support {
    int size = 0;
    std::vector<std::uint32_t> masks;  // over bits 0..size-1, sorted
};

inline Support support_masks(const EdgeList& edges, int n, int hard_cap = 32) {
    std::vector<int> remap(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& e : edges)
        for (Vertex v : e) remap[v] = 1;
    int s = 0;
    for (int v = 1; v <= n; ++v)
        if (remap[v]) remap[v] = ++s;
    if (s > hard_cap) throw Error(Errc::too_large, "support exceeds " + std::to_string(hard_cap) + " vertices");
    Support out;
    out.size = s;
    out.masks.reserve(edges.size());
    for (const Edge& e : edges) {
        std::uint32_t m = 0;
        for (Vertex v : e) m |= 1u << (remap[v] - 1);
        out.masks.push_back(m);
    }
    std::sort(out.masks.begin(), out.masks.end());
    return out;
}

}  // namespace detail

/// Relabeling-invariant representative of a (not necessarily linear) system:
/// two systems with equal vertex count are isomorphic iff their canonical
/// forms coincide. Isolated vertices do not appear in the output, so callers
/// comparing systems must compare n alongside.
inline EdgeList canonical_form(int n, const EdgeList& edges, int vertex_limit = 16) {
    if (n > vertex_limit)
        throw Error(Errc::too_large, std::to_string(n) + " vertices, canonical labeling capped at " +
                                         std::to_string(vertex_limit));
    auto sup = detail::support_masks(edges, n);
    if (sup.masks.empty()) return {};
    detail::Canonizer cz(sup.size, sup.masks);
    return detail::masks_to_edges(cz.minimize());
}

inline EdgeList canonical_form(const LinearHypergraph& h, int vertex_limit = 16) {
    return canonical_form(h.n(), h.edges(), vertex_limit);
}

inline bool are_isomorphic_systems(int n1, const EdgeList& e1, int n2, const EdgeList& e2, int vertex_limit = 16) {
    if (n1 != n2 || e1.size() != e2.size()) return false;
    return canonical_form(n1, e1, vertex_limit) == canonical_form(n2, e2, vertex_limit);
}

inline bool are_isomorphic(const LinearHypergraph& a, const LinearHypergraph& b, int vertex_limit = 16) {
    if (a.k() != b.k()) return false;
    return are_isomorphic_systems(a.n(), a.edges(), b.n(), b.edges(), vertex_limit);
}

namespace detail {

/// Decision procedure used by orderly enumeration: a labeled edge set is
/// canonical iff its support is a prefix 1..s of the vertex range and no
/// relabeling of the support yields a smaller mask array.
inline bool is_canonical_state(const std::vector<std::uint32_t>& masks) {
    if (masks.empty()) return true;
    std::uint32_t all = 0;
    for (std::uint32_t m : masks) all |= m;
    int s = 32 - std::countl_zero(all);
    if (all != (s >= 32 ? ~0u : (1u << s) - 1)) return false;  // support has a gap
    std::vector<std::uint32_t> sorted = masks;
    std::sort(sorted.begin(), sorted.end());
    Canonizer cz(s, std::move(sorted));
    return !cz.has_smaller();
}

}  // namespace detail

}  // namespace lhg
