// Acceptance suite: one test case per criterion, one PASS/FAIL line each.

#include <catch2/catch_amalgamated.hpp>

#include <iostream>

#include "lhg/canonical.hpp"
#include "lhg/reductions.hpp"
#include "lhg/theorems.hpp"
#include "oracles.hpp"

using namespace lhg;

namespace {

void report(const std::string& id, bool pass, const std::string& detail) {
    std::cout << "ACCEPTANCE " << id << ": " << (pass ? "PASS" : "FAIL") << " — " << detail << "\n";
    CHECK(pass);
}

std::vector<Configuration> fan_only(int k) { return {configuration(ConfigName::fan, k)}; }

}  // namespace

TEST_CASE("criterion 1: fan-free optimum n^2/k^2 with design witnesses") {
    bool pass = true;
    std::string detail;
    for (auto [n, k] : {std::pair{4, 2}, {6, 2}, {8, 2}, {3, 3}, {6, 3}, {9, 3}}) {
        auto chk = verify_thm1(n, k);
        pass = pass && chk.pass;
        detail += "(" + std::to_string(n) + "," + std::to_string(k) + ")=" + std::to_string(chk.report.max_edges) + " ";
    }
    report("criterion-1", pass, detail);
}

TEST_CASE("criterion 1 at (8,4): stated equality against the computed optimum") {
    // As stated the equality max = n^2/k^2 = 4 is asserted here; the search
    // shows the true optimum is 2. A design on eight points with four groups
    // would need two orthogonal Latin squares of order two, which do not
    // exist, and indeed no third 4-edge fits on eight points at all: two
    // edges meeting in a vertex span seven points and leave at most three
    // unused slots outside either edge; disjoint edges leave at most two.
    auto rep = max_free(8, 4, fan_only(4));
    bool stated = rep.max_edges == 8 * 8 / (4 * 4);
    report("criterion-1(8,4)", stated,
           "stated value 4, computed optimum " + std::to_string(rep.max_edges) +
               " (no transversal design exists on eight points with four groups)");
}

TEST_CASE("criterion 2: optimum m^2+m at n = k(m+1)-1, attained by truncation") {
    auto c53 = verify_thm2(5, 3);
    auto c83 = verify_thm2(8, 3);
    report("criterion-2", c53.pass && c83.pass,
           "(5,3)=" + std::to_string(c53.report.max_edges) + " (8,3)=" + std::to_string(c83.report.max_edges) +
               "; truncations attain both");
}

TEST_CASE("criterion 3: every extremal witness at n = 5 and n = 8 is a truncated design") {
    bool pass = true;
    std::string detail;
    for (int m : {1, 2}) {
        int n = 3 * m + 2;
        auto rep = max_free(n, 3, fan_only(3));
        std::set<EdgeList> truncations;
        auto td = transversal_design(m + 1, 3);
        for (Vertex v = 1; v <= td.n(); ++v) truncations.insert(canonical_form(truncate(td, v)));
        for (const auto& w : rep.witnesses)
            if (!truncations.count(canonical_form(LinearHypergraph::validate(w, n, 3)))) pass = false;
        detail += "n=" + std::to_string(n) + ": " + std::to_string(rep.witnesses.size()) + " witness(es) matched; ";

        auto chk = verify_thm3(m);
        pass = pass && chk.pass;
    }
    report("criterion-3", pass, detail + "classification clean");
}

TEST_CASE("criterion 3, extended tier: n = 11 carries exactly two extra classes") {
    auto chk = verify_thm3(3);
    bool two_extras = chk.details.find("truncated=2") != std::string::npos &&
                      chk.details.find("extensions=2") != std::string::npos;
    report("criterion-3-extended", chk.pass && two_extras, chk.details);
}

TEST_CASE("criterion 4: cyclic-factorization designs avoid fan3 and pasch") {
    bool pass = true;
    for (int s : {3, 5, 7, 9, 11, 13, 15}) {
        auto f = standard_factorization(s);
        f.check();
        for (std::size_t i = 0; i < f.matchings.size() && pass; ++i)
            for (std::size_t j = i + 1; j < f.matchings.size() && pass; ++j)
                for (int len : oracle::union_cycle_lengths(f.matchings[i], f.matchings[j], s))
                    if (len == 4) pass = false;
        auto h = design_from_factorization(f);
        if (contains_fan(h, 3)) pass = false;
        if (find_embedding(h, configuration(ConfigName::pasch))) pass = false;
    }
    report("criterion-4", pass, "s in {3,...,15}: no fan3, no pasch, all matching unions four-cycle-free");
}

TEST_CASE("criterion 5: xor-factorization designs avoid fan3 and c14") {
    bool pass = true;
    for (int t : {1, 2, 3}) {
        auto f = binary_factorization(t);
        f.check();
        int s = 1 << t;
        for (std::size_t i = 0; i < f.matchings.size() && pass; ++i)
            for (std::size_t j = i + 1; j < f.matchings.size() && pass; ++j)
                for (int len : oracle::union_cycle_lengths(f.matchings[i], f.matchings[j], s))
                    if (len != 4) pass = false;
        auto h = design_from_factorization(f);
        if (contains_fan(h, 3)) pass = false;
        if (find_embedding(h, configuration(ConfigName::c14))) pass = false;
    }
    report("criterion-5", pass, "t in {1,2,3}: no fan3, no c14, all matching unions split into four-cycles");
}

TEST_CASE("criterion 6: the two extension witnesses and their link graphs") {
    auto wagner_ext = extend_colored_graph(wagner_graph());
    auto c52_ext = extend_colored_graph(c52_graph());
    bool pass = wagner_ext.n() == 11 && wagner_ext.edge_count() == 12;
    pass = pass && c52_ext.n() == 14 && c52_ext.edge_count() == 20;
    pass = pass && !contains_fan(wagner_ext, 3) && !contains_fan(c52_ext, 3);
    for (Vertex x : {9, 10, 11}) {
        auto link = link_graph(wagner_ext, x);
        pass = pass && are_isomorphic(link.graph.to_hypergraph(), wagner_graph().to_hypergraph());
    }
    for (Vertex x : {11, 12, 13, 14}) {
        auto link = link_graph(c52_ext, x);
        pass = pass && are_isomorphic(link.graph.to_hypergraph(), c52_graph().to_hypergraph(), 20);
    }
    report("criterion-6", pass, "11/12 and 14/20 points/triples, linear, fan-free, link graphs reproduce the graphs");
}

TEST_CASE("criterion 7: four triples on seven points always carry a forbidden pattern") {
    auto classes = classify_f74_members();
    bool pass = classes.size() == 38;  // regression value pinned on the first complete run
    std::size_t linear = 0;
    for (const auto& cls : classes) {
        if (cls.contains.empty()) pass = false;
        if (cls.linear) ++linear;
    }
    pass = pass && linear == 3;
    report("criterion-7", pass,
           std::to_string(classes.size()) + " classes (pinned 38), " + std::to_string(linear) +
               " linear (pinned 3: fan3, pasch, c14), every class tagged");
}

TEST_CASE("criterion 8: reduction guarantees on generated corpora") {
    std::mt19937 rng(2027);
    bool pass = true;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 6 + static_cast<int>(rng() % 7);  // up to 12
        auto edges = oracle::random_f74_free_system(n, rng);
        auto rep = linearize(n, edges);
        LinearHypergraph::validate(rep.output, n, 3);
        if (2 * rep.removed_edges > static_cast<std::size_t>(n)) pass = false;
    }
    for (int trial = 0; trial < 200; ++trial) {
        int n = 6 + static_cast<int>(rng() % 10);  // up to 15
        auto edges = oracle::random_triple_system(n, rng, 0.2);
        if (edges.empty()) continue;
        auto rep = tripartite_subsystem(n, edges);
        if (rep.output.size() < rep.guarantee) pass = false;
        std::vector<int> part(n + 1, -1);
        for (int p = 0; p < 3; ++p)
            for (Vertex v : (*rep.partition)[p]) part[v] = p;
        for (const Edge& e : rep.output)
            if (part[e[0]] == part[e[1]] || part[e[0]] == part[e[2]] || part[e[1]] == part[e[2]]) pass = false;
    }
    report("criterion-8", pass, "200 linearizations within n/2, 200 three-partitions above ceil(2|E|/9), all transversal");
}

TEST_CASE("criterion 9: the nine-point plane fixture") {
    auto h = ag23();
    bool pass = h.edge_count() == 12 && !find_embedding(h, configuration(ConfigName::pasch));
    bool has_c14 = find_embedding(h, configuration(ConfigName::c14)).has_value();
    report("criterion-9", pass,
           std::string("12 = n(n-1)/6 triples, pasch-free; c14 present: ") + (has_c14 ? "yes" : "no") +
               " (recorded as data)");
}

TEST_CASE("criterion 10: property suites") {
    bool pass = true;

    // proof-bound inequality on every fan-free system the searches visit
    std::uint64_t states_checked = 0;
    for (auto [n, k] : {std::pair{4, 2}, {6, 2}, {8, 2}, {3, 3}, {6, 3}, {9, 3}, {8, 4}, {5, 3}, {8, 3}}) {
        SearchOptions opts;
        opts.state_sink = [&](int sn, int sk, const EdgeList& edges) {
            if (edges.empty()) return;
            auto h = LinearHypergraph::validate(edges, sn, sk);
            auto r = proof_bounds(h, h.max_degree().second);
            long long count = static_cast<long long>(r.edge_count);
            if (!(count <= r.bound_b1 && Rational(count) <= r.bound_b2 && r.every_edge_meets_outside_ball))
                pass = false;
            ++states_checked;
        };
        max_free(n, k, fan_only(k), opts);
    }

    // canonical form is a relabeling invariant
    std::mt19937 rng(501);
    std::vector<std::pair<int, EdgeList>> systems = {
        {9, transversal_design(3, 3).edges()},
        {11, extend_colored_graph(wagner_graph()).edges()},
        {14, extend_colored_graph(c52_graph()).edges()},
        {9, ag23().edges()},
        {7, configuration(ConfigName::fan, 3).edges},
        {6, configuration(ConfigName::pasch).edges},
    };
    while (systems.size() < 20) {
        int n = 6 + static_cast<int>(rng() % 8);
        systems.push_back({n, oracle::random_linear_system(n, 3, rng, 10)});
    }
    for (const auto& [n, edges] : systems) {
        auto canon = canonical_form(n, edges);
        for (int rep = 0; rep < 100; ++rep)
            if (canonical_form(n, oracle::relabel(edges, n, rng)) != canon) pass = false;
    }

    // the specialized fan detector agrees with the generic embedder
    auto fan3 = configuration(ConfigName::fan, 3);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 5 + static_cast<int>(rng() % 6);  // up to 10
        auto edges = oracle::random_linear_system(n, 3, rng);
        auto h = LinearHypergraph::validate(edges, n, 3);
        if (contains_fan(h, 3).has_value() != find_embedding(h, fan3).has_value()) pass = false;
    }

    report("criterion-10", pass,
           "bounds verified on " + std::to_string(states_checked) +
               " searched systems; 20x100 relabelings invariant; 500 fan-detector agreements");
}
