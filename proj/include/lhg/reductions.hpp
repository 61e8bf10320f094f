#pragma once

#include <array>
#include <optional>

#include "lhg/bounds.hpp"
#include "lhg/configurations.hpp"
#include "lhg/hypergraph.hpp"

namespace lhg {

enum class ReductionMode { linearize, tripartite };

struct ReductionReport {
    ReductionMode mode = ReductionMode::linearize;
    int n = 0;
    std::size_t input_edges = 0;
    std::size_t removed_edges = 0;
    std::size_t w_copies_removed = 0;   // vertex-disjoint pairs removed whole
    std::size_t fallback_removals = 0;  // single-edge removals after the packing phase
    EdgeList output;
    Rational threshold{0};       // linearize: n/2 removal budget; tripartite: 2/9 retention rate
    std::size_t guarantee = 0;   // tripartite: ceil(2|E|/9)
    bool within_threshold = true;
    std::optional<std::array<std::vector<Vertex>, 3>> partition;
};

namespace detail {

inline void check_triples(int n, const EdgeList& edges) {
    EdgeList sorted = edges;
    for (auto& e : sorted) {
        if (e.size() != 3) throw Error(Errc::not_uniform, "expected a triple, got " + edge_to_string(e));
        std::sort(e.begin(), e.end());
        if (e[0] == e[1] || e[1] == e[2]) throw Error(Errc::not_uniform, "repeated vertex in " + edge_to_string(e));
        if (e[0] < 1 || e[2] > n) throw Error(Errc::vertex_out_of_range, edge_to_string(e));
    }
    sort_edge_list(sorted);
    for (std::size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) throw Error(Errc::duplicate_edge, edge_to_string(sorted[i]));
}

}  // namespace detail

/// Makes a triple system linear by removing a greedily-maximal family of
/// pairwise vertex-disjoint W copies (both triples of each copy), then — in
/// case some overlapping W survives, which cannot happen for genuinely
/// F(7,4)-free inputs — single triples until linear. The input must be
/// F(7,4)-free; the removal count is guaranteed to stay within n/2 whenever
/// the fallback loop stays silent, and the report exposes both numbers.
inline ReductionReport linearize(int n, const EdgeList& triples) {
    detail::check_triples(n, triples);
    if (auto bad = f74_violation(n, triples)) {
        auto [a, b, c, d] = *bad;
        throw Error(Errc::not_f74_free, "four triples on at most seven points: " + edge_to_string(triples[a]) + " " +
                                            edge_to_string(triples[b]) + " " + edge_to_string(triples[c]) + " " +
                                            edge_to_string(triples[d]));
    }
    EdgeList edges = triples;
    sort_edge_list(edges);

    ReductionReport rep;
    rep.mode = ReductionMode::linearize;
    rep.n = n;
    rep.input_edges = edges.size();
    rep.threshold = Rational(n, 2);

    auto share_two = [](const Edge& a, const Edge& b) {
        int shared = 0;
        for (Vertex v : a)
            if (std::binary_search(b.begin(), b.end(), v)) ++shared;
        return shared >= 2;
    };

    std::vector<char> removed(edges.size(), 0);
    std::vector<char> span(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (removed[i]) continue;
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (removed[j] || !share_two(edges[i], edges[j])) continue;
            bool disjoint = true;
            for (Vertex v : edges[i]) disjoint = disjoint && !span[v];
            for (Vertex v : edges[j]) disjoint = disjoint && !span[v];
            if (!disjoint) continue;
            for (Vertex v : edges[i]) span[v] = 1;
            for (Vertex v : edges[j]) span[v] = 1;
            removed[i] = removed[j] = 1;
            ++rep.w_copies_removed;
            break;
        }
    }

    EdgeList remaining;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!removed[i]) remaining.push_back(edges[i]);

    // fallback: drop the lex-greater triple of the least offending pair
    for (bool clean = false; !clean;) {
        clean = true;
        for (std::size_t i = 0; i < remaining.size() && clean; ++i)
            for (std::size_t j = i + 1; j < remaining.size() && clean; ++j)
                if (share_two(remaining[i], remaining[j])) {
                    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(j));
                    ++rep.fallback_removals;
                    clean = false;
                }
    }

    rep.removed_edges = 2 * rep.w_copies_removed + rep.fallback_removals;
    rep.within_threshold = Rational(static_cast<long long>(rep.removed_edges)) <= rep.threshold;
    rep.output = remaining;
    LinearHypergraph::validate(remaining, n, 3);  // the advertised property
    return rep;
}

/// Derandomized three-partition: vertices are assigned in index order to the
/// part maximizing the conditional expected number of transversal triples
/// (a uniformly random assignment makes each triple transversal with
/// probability 6/27 = 2/9, so the output keeps at least ceil(2|E|/9) edges).
/// When the caller vouches that the input has neither the Pasch nor the C14
/// pattern, the output is additionally checked to be free of fan3, Pasch and
/// C14 — a three-partite system cannot host a fan.
inline ReductionReport tripartite_subsystem(int n, const EdgeList& triples, bool input_pasch_c14_free = false) {
    detail::check_triples(n, triples);
    EdgeList edges = triples;
    for (auto& e : edges) std::sort(e.begin(), e.end());
    sort_edge_list(edges);

    ReductionReport rep;
    rep.mode = ReductionMode::tripartite;
    rep.n = n;
    rep.input_edges = edges.size();
    rep.threshold = Rational(2, 9);
    rep.guarantee = static_cast<std::size_t>((2 * edges.size() + 8) / 9);

    std::vector<int> part(static_cast<std::size_t>(n) + 1, -1);
    std::vector<std::vector<int>> at(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        for (Vertex v : edges[i]) at[v].push_back(i);

    // survival weight of a triple, scaled by 9: unassigned vertices u and a
    // clash-free partial assignment give 2 (u=3 or 2), 3 (u=1), 9 (u=0)
    auto weight = [&](const Edge& e, Vertex pivot, int pivot_part) -> long long {
        int parts[3], assigned = 0;
        for (Vertex v : e) {
            int p = (v == pivot) ? pivot_part : part[v];
            if (p >= 0) parts[assigned++] = p;
        }
        for (int a = 0; a < assigned; ++a)
            for (int b = a + 1; b < assigned; ++b)
                if (parts[a] == parts[b]) return 0;
        switch (assigned) {
            case 0:
            case 1: return 2;
            case 2: return 3;
            default: return 9;
        }
    };

    for (Vertex v = 1; v <= n; ++v) {
        int best_part = 0;
        long long best_gain = -1;
        for (int p = 0; p < 3; ++p) {
            long long gain = 0;
            for (int idx : at[v]) gain += weight(edges[idx], v, p);
            if (gain > best_gain) {
                best_gain = gain;
                best_part = p;
            }
        }
        part[v] = best_part;
    }

    rep.partition.emplace();
    for (Vertex v = 1; v <= n; ++v) (*rep.partition)[part[v]].push_back(v);
    for (const Edge& e : edges) {
        bool transversal = (part[e[0]] != part[e[1]]) && (part[e[0]] != part[e[2]]) && (part[e[1]] != part[e[2]]);
        if (transversal) rep.output.push_back(e);
    }
    rep.removed_edges = rep.input_edges - rep.output.size();
    rep.within_threshold = rep.output.size() >= rep.guarantee;
    if (!rep.within_threshold)
        throw Error(Errc::falsified, "conditional expectations fell below the 2/9 guarantee");  // impossible

    if (input_pasch_c14_free) {
        for (auto name : {ConfigName::fan, ConfigName::pasch, ConfigName::c14}) {
            auto c = name == ConfigName::fan ? configuration(ConfigName::fan, 3) : configuration(name);
            if (find_embedding(n, 3, rep.output, c))
                throw Error(Errc::pipeline_failure,
                            "declared pasch/c14-free input, yet the subsystem contains " + c.label);
        }
    }
    return rep;
}

}  // namespace lhg
