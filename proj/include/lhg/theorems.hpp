#pragma once

#include <set>
#include <sstream>
#include <string>

#include "lhg/bounds.hpp"
#include "lhg/canonical.hpp"
#include "lhg/constructions.hpp"
#include "lhg/search.hpp"

namespace lhg {

struct TheoremCheck {
    std::string id;
    bool pass = false;
    std::string details;
    SearchReport report;
};

/// Exhaustive confirmation of the fan-free optimum n^2/k^2 for k | n: the
/// search must attain the value exactly and every extremal witness must
/// survive the transversal-design structure pipeline.
inline TheoremCheck verify_thm1(int n, int k, SearchOptions opts = {}) {
    TheoremCheck out;
    out.id = "thm1(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
    if (n % k != 0) throw Error(Errc::unsupported, "the equality case needs k | n");
    const long long expected = static_cast<long long>(n / k) * (n / k);
    out.report = max_free(n, k, {configuration(ConfigName::fan, k)}, opts);
    std::ostringstream det;
    det << "max_edges=" << out.report.max_edges << " expected=" << expected;
    out.pass = out.report.max_edges == expected;
    int designs = 0;
    for (const auto& w : out.report.witnesses) {
        auto h = LinearHypergraph::validate(w, n, k);
        try {
            verify_extremal_structure(h);
            ++designs;
        } catch (const Error& e) {
            out.pass = false;
            det << "; witness failed structure check: " << e.what();
        }
    }
    det << "; witnesses=" << out.report.witnesses.size() << " verified_as_designs=" << designs;
    out.details = det.str();
    return out;
}

/// The n = k(m+1)-1 optimum m^2+m, together with the matching lower bound
/// from a truncated design.
inline TheoremCheck verify_thm2(int n, int k, SearchOptions opts = {}) {
    TheoremCheck out;
    out.id = "thm2(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
    if ((n + 1) % k != 0) throw Error(Errc::unsupported, "needs n = k(m+1)-1");
    const long long m = (n + 1) / k - 1;
    const long long expected = m * m + m;
    out.report = max_free(n, k, {configuration(ConfigName::fan, k)}, opts);
    std::ostringstream det;
    det << "max_edges=" << out.report.max_edges << " expected=" << expected;
    out.pass = out.report.max_edges == expected;
    if (m >= 1) {
        try {
            auto td = transversal_design(static_cast<int>(m) + 1, k);
            auto trunc = truncate(td, td.n());
            det << "; truncated design attains " << trunc.edge_count();
            if (static_cast<long long>(trunc.edge_count()) != expected) out.pass = false;
            if (contains_fan(trunc, k)) {
                out.pass = false;
                det << "; truncated design unexpectedly contains a fan";
            }
        } catch (const Error& e) {
            if (e.code() != Errc::unsupported) throw;
            det << "; no constructible design of order " << (m + 1) << " with " << k << " groups";
        }
    }
    out.details = det.str();
    return out;
}

/// Classification of the extremal triple systems at n = 3m+2: each witness
/// must be a truncated design or, for m = 3 and 4, the extension of the
/// Wagner graph or of the five-cycle blow-up. Truncated designs are matched
/// by canonical form against all truncations of the constructible designs
/// (both order-4 squares are covered: the cyclic one and the XOR one);
/// extension-type witnesses are recognized by their link graph.
inline TheoremCheck verify_thm3(int m, SearchOptions opts = {}) {
    TheoremCheck out;
    out.id = "thm3(m=" + std::to_string(m) + ")";
    if (m < 1) throw Error(Errc::unsupported, "m must be positive");
    const int n = 3 * m + 2;
    const long long expected = static_cast<long long>(m) * m + m;

    std::set<EdgeList> truncations;
    auto add_truncations = [&](const LinearHypergraph& td) {
        for (Vertex v = 1; v <= td.n(); ++v) truncations.insert(canonical_form(truncate(td, v)));
    };
    add_truncations(transversal_design(m + 1, 3));
    if (m == 3) add_truncations(design_from_factorization(binary_factorization(2)));

    std::set<EdgeList> extensions;
    if (m == 3) extensions.insert(canonical_form(extend_colored_graph(wagner_graph())));
    if (m == 4) extensions.insert(canonical_form(extend_colored_graph(c52_graph())));

    out.report = max_free(n, 3, {configuration(ConfigName::fan, 3)}, opts);
    std::ostringstream det;
    det << "max_edges=" << out.report.max_edges << " expected=" << expected;
    out.pass = out.report.max_edges == expected;

    int truncated_count = 0, extension_count = 0;
    for (const auto& w : out.report.witnesses) {
        auto h = LinearHypergraph::validate(w, n, 3);
        auto canon = canonical_form(h);
        if (truncations.count(canon)) {
            ++truncated_count;
            continue;
        }
        bool matched = false;
        if (extensions.count(canon)) {
            matched = true;
        } else if (m == 3 || m == 4) {
            // a different matching partition of the same graph still extends
            // to an extremal system; recognize it through the link graph
            auto [delta, x] = h.max_degree();
            auto link = link_graph(h, x);
            auto target = (m == 3 ? wagner_graph() : c52_graph()).to_hypergraph();
            matched = !graph_is_bipartite(link.graph) && are_isomorphic(link.graph.to_hypergraph(), target);
        }
        if (matched) {
            ++extension_count;
        } else {
            out.pass = false;
            det << "; unclassified witness " << edge_to_string(w.front()) << "...";
        }
    }
    det << "; witnesses=" << out.report.witnesses.size() << " truncated=" << truncated_count
        << " extensions=" << extension_count;
    out.details = det.str();
    return out;
}

/// Executable form of the final classification step: every four-triple
/// system on at most seven points contains a fan, a Pasch, a C14 or a W.
inline TheoremCheck verify_f74_classification() {
    TheoremCheck out;
    out.id = "f74-classify";
    auto classes = classify_f74_members();
    std::size_t untagged = 0, linear = 0;
    for (const auto& cls : classes) {
        if (cls.contains.empty()) ++untagged;
        if (cls.linear) ++linear;
    }
    out.pass = untagged == 0;
    std::ostringstream det;
    det << "classes=" << classes.size() << " linear=" << linear << " untagged=" << untagged;
    out.details = det.str();
    return out;
}

}  // namespace lhg
