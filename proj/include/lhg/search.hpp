#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "lhg/bounds.hpp"
#include "lhg/canonical.hpp"
#include "lhg/configurations.hpp"
#include "lhg/hypergraph.hpp"

namespace lhg {

struct SearchOptions {
    int cap_k2 = 14;
    int cap_k3 = 12;
    int cap_other = 11;
    bool ignore_caps = false;
    int workers = 0;         // 0 = hardware concurrency
    int frontier_depth = 3;  // parallel subtree distribution depth
    std::size_t max_witnesses = 10000;
    /// Receives every canonical state visited; forces a sequential run.
    std::function<void(int n, int k, const EdgeList&)> state_sink;
};

struct SearchReport {
    int n = 0;
    int k = 0;
    std::vector<std::string> forbidden;
    int max_edges = 0;
    std::vector<EdgeList> witnesses;  // canonical representatives of all extremal systems
    bool witnesses_truncated = false;
    std::uint64_t nodes_explored = 0;
    double wall_seconds = 0.0;
};

namespace detail {

/// Depth-first edge addition in colex order over all candidate k-sets.
/// States are edge sets; a state is expanded only if it is the canonical
/// labeled representative of its isomorphism class, which visits every class
/// exactly once (prefixes of canonical sets are canonical for this edge
/// order, so nothing is lost). Linearity is maintained through a pair-usage
/// table, forbidden patterns are checked only through the new edge, and two
/// upper bounds prune subtrees that cannot tie the best value: the uncovered
/// pair count, and (when a fan is forbidden) the degree-based estimates
/// maximized over the remaining degree range.
class MaxFreeSearch {
public:
    MaxFreeSearch(int n, int k, std::vector<Configuration> forbidden, const SearchOptions& opts)
        : n_(n), k_(k), forbidden_(std::move(forbidden)), opts_(opts) {
        if (n_ > 31) throw Error(Errc::too_large, "search supports at most 31 vertices");
        pairs_per_edge_ = k_ * (k_ - 1) / 2;
        if (k_ <= n_) {
            // k-subsets in increasing mask order (Gosper's hack)
            std::uint32_t mask = (1u << k_) - 1;
            const std::uint32_t limit = 1u << n_;
            while (mask < limit) {
                cand_masks_.push_back(mask);
                cand_edges_.push_back(masks_to_edges({mask})[0]);
                std::uint32_t c = mask & -mask, r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
        for (const auto& c : forbidden_)
            if (c.k != k_)
                throw Error(Errc::uniformity_mismatch, "forbidden pattern " + c.label + " has wrong uniformity");
        fan_forbidden_ = false;
        for (const auto& c : forbidden_) fan_forbidden_ = fan_forbidden_ || c.name == ConfigName::fan;
        if (fan_forbidden_) build_degree_caps();
    }

    SearchReport run() {
        auto start = std::chrono::steady_clock::now();
        State root = make_state();
        record(root);
        if (opts_.state_sink) opts_.state_sink(n_, k_, {});

        int workers = opts_.workers > 0 ? opts_.workers : static_cast<int>(std::thread::hardware_concurrency());
        if (workers < 1 || opts_.state_sink) workers = 1;

        if (workers == 1) {
            expand(root, -1, 0, false);
        } else {
            std::vector<std::vector<int>> frontier;
            frontier_out_ = &frontier;
            expand(root, -1, 0, true);
            frontier_out_ = nullptr;
            std::atomic<std::size_t> next{0};
            auto worker = [&]() {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= frontier.size()) break;
                    State st = make_state();
                    for (int idx : frontier[i]) push(st, idx);
                    expand(st, frontier[i].back(), opts_.frontier_depth, false);
                }
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }

        SearchReport rep;
        rep.n = n_;
        rep.k = k_;
        for (const auto& c : forbidden_) rep.forbidden.push_back(c.label);
        rep.max_edges = best_.load();
        std::sort(witnesses_.begin(), witnesses_.end());
        witnesses_.erase(std::unique(witnesses_.begin(), witnesses_.end()), witnesses_.end());
        for (const auto& masks : witnesses_) rep.witnesses.push_back(masks_to_edges(masks));
        rep.witnesses_truncated = truncated_;
        rep.nodes_explored = nodes_.load();
        rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (fan_forbidden_ && rep.max_edges > fan_upper_bound(n_, k_))
            throw Error(Errc::falsified, "search exceeded the fan upper bound");  // implementation bug
        return rep;
    }

private:
    struct State {
        std::vector<int> chosen;
        std::vector<std::uint32_t> masks;
        EdgeList edges;
        std::vector<std::vector<int>> incidence;
        std::vector<int> degree;
        std::vector<char> pair_used;
        int uncovered_pairs = 0;
        int support_top = 0;  // support is always 1..support_top
        int max_degree = 0;
    };

    State make_state() const {
        State st;
        st.incidence.assign(static_cast<std::size_t>(n_) + 1, {});
        st.degree.assign(static_cast<std::size_t>(n_) + 1, 0);
        st.pair_used.assign(static_cast<std::size_t>(n_) * n_, 0);
        st.uncovered_pairs = n_ * (n_ - 1) / 2;
        return st;
    }

    void build_degree_caps() {
        int delta_max = k_ > 1 ? (n_ - 1) / (k_ - 1) : n_;
        degree_cap_.assign(delta_max + 2, 0);
        for (int lo = delta_max; lo >= 0; --lo) {
            long long b1 = static_cast<long long>(lo) * (n_ - static_cast<long long>(k_ - 1) * lo);
            long long b2 = static_cast<long long>(n_) * lo / k_;
            degree_cap_[lo] = std::max(degree_cap_[lo + 1], std::min(b1, b2));
        }
    }

    int pair_id(Vertex u, Vertex v) const { return (u - 1) * n_ + (v - 1); }

    void push(State& st, int idx) {
        const Edge& e = cand_edges_[idx];
        int pos = static_cast<int>(st.edges.size());
        st.chosen.push_back(idx);
        st.masks.push_back(cand_masks_[idx]);
        st.edges.push_back(e);
        for (std::size_t a = 0; a < e.size(); ++a) {
            st.incidence[e[a]].push_back(pos);
            st.max_degree = std::max(st.max_degree, ++st.degree[e[a]]);
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                st.pair_used[pair_id(e[a], e[b])] = 1;
                --st.uncovered_pairs;
            }
        }
        st.support_top = std::max(st.support_top, e.back());
    }

    void pop(State& st) {
        int idx = st.chosen.back();
        const Edge& e = cand_edges_[idx];
        st.chosen.pop_back();
        st.masks.pop_back();
        st.edges.pop_back();
        st.max_degree = 0;
        for (std::size_t a = 0; a < e.size(); ++a) {
            st.incidence[e[a]].pop_back();
            --st.degree[e[a]];
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                st.pair_used[pair_id(e[a], e[b])] = 0;
                ++st.uncovered_pairs;
            }
        }
        st.support_top = 0;
        for (Vertex v = n_; v >= 1; --v)
            if (st.degree[v]) {
                st.support_top = v;
                break;
            }
        for (Vertex v = 1; v <= n_; ++v) st.max_degree = std::max(st.max_degree, st.degree[v]);
    }

    void record(State& st) {
        nodes_.fetch_add(1, std::memory_order_relaxed);
        int count = static_cast<int>(st.chosen.size());
        if (count < best_.load(std::memory_order_relaxed)) return;
        std::lock_guard<std::mutex> lock(mutex_);
        if (count > best_.load()) {
            best_.store(count);
            witnesses_.clear();
            truncated_ = false;
        }
        if (count == best_.load()) {
            if (witnesses_.size() < opts_.max_witnesses) {
                auto sorted = st.masks;
                std::sort(sorted.begin(), sorted.end());
                witnesses_.push_back(std::move(sorted));
            } else {
                truncated_ = true;
            }
        }
    }

    bool creates_forbidden(State& st) {
        int anchor = static_cast<int>(st.edges.size()) - 1;
        for (const auto& c : forbidden_) {
            EmbeddingSearch search(n_, st.edges, st.incidence, c);
            if (search.find(anchor)) return true;
        }
        return false;
    }

    void expand(State& st, int last, int depth, bool to_frontier) {
        if (to_frontier && depth == opts_.frontier_depth) {
            frontier_out_->push_back(st.chosen);
            return;
        }
        const int count = static_cast<int>(st.chosen.size());
        for (int idx = last + 1; idx < static_cast<int>(cand_masks_.size()); ++idx) {
            std::uint32_t mask = cand_masks_[idx];
            // support must stay a prefix 1..s, else the state cannot be canonical
            std::uint32_t above = mask >> st.support_top;
            if (above & (above + 1)) continue;
            const Edge& e = cand_edges_[idx];
            bool linear = true;
            for (std::size_t a = 0; a < e.size() && linear; ++a)
                for (std::size_t b = a + 1; b < e.size() && linear; ++b)
                    linear = !st.pair_used[pair_id(e[a], e[b])];
            if (!linear) continue;

            long long ub = count + 1 + static_cast<long long>(st.uncovered_pairs - pairs_per_edge_) / pairs_per_edge_;
            if (fan_forbidden_) {
                int dmin = st.max_degree;  // degrees only grow below this node
                ub = std::min(ub, degree_cap_[std::min(dmin, static_cast<int>(degree_cap_.size()) - 1)]);
            }
            if (ub < best_.load(std::memory_order_relaxed)) continue;

            push(st, idx);
            if (creates_forbidden(st) || !is_canonical_state(st.masks)) {
                pop(st);
                continue;
            }
            record(st);
            if (opts_.state_sink) opts_.state_sink(n_, k_, st.edges);
            expand(st, idx, depth + 1, to_frontier);
            pop(st);
        }
    }

    int n_, k_;
    std::vector<Configuration> forbidden_;
    SearchOptions opts_;
    int pairs_per_edge_;
    bool fan_forbidden_ = false;
    std::vector<std::uint32_t> cand_masks_;
    EdgeList cand_edges_;
    std::vector<long long> degree_cap_;

    std::atomic<int> best_{0};
    std::atomic<std::uint64_t> nodes_{0};
    std::mutex mutex_;
    std::vector<std::vector<std::uint32_t>> witnesses_;
    bool truncated_ = false;
    std::vector<std::vector<int>>* frontier_out_ = nullptr;
};

}  // namespace detail

/// Exact maximum edge count of a linear k-uniform hypergraph on n vertices
/// avoiding every pattern in `forbidden` (empty set = pure linear packing),
/// with all extremal systems up to isomorphism. Deterministic across runs
/// and worker counts.
inline SearchReport max_free(int n, int k, const std::vector<Configuration>& forbidden, SearchOptions opts = {}) {
    if (k < 2) throw Error(Errc::bad_uniformity, "k must be at least 2");
    if (n < 0) throw Error(Errc::vertex_out_of_range, "n must be nonnegative");
    int cap = k == 2 ? opts.cap_k2 : (k == 3 ? opts.cap_k3 : opts.cap_other);
    if (!opts.ignore_caps && n > cap)
        throw Error(Errc::cap_exceeded, "n = " + std::to_string(n) + " exceeds the configured cap " +
                                            std::to_string(cap) + " for k = " + std::to_string(k) +
                                            " (raise the cap explicitly to proceed)");
    detail::MaxFreeSearch search(n, k, forbidden, opts);
    return search.run();
}

/// Number of isomorphism classes of extremal systems.
inline std::size_t count_extremal(int n, int k, const std::vector<Configuration>& forbidden, SearchOptions opts = {}) {
    auto rep = max_free(n, k, forbidden, opts);
    if (rep.witnesses_truncated) throw Error(Errc::cap_exceeded, "witness cap too small for an exact count");
    return rep.witnesses.size();
}

}  // namespace lhg
