#include <catch2/catch_amalgamated.hpp>

#include "lhg/canonical.hpp"
#include "lhg/configurations.hpp"
#include "lhg/constructions.hpp"
#include "oracles.hpp"

using namespace lhg;

TEST_CASE("explicit relabelings are isomorphic") {
    auto a = LinearHypergraph::validate({{1, 2, 3}, {1, 4, 5}}, 5, 3);
    auto b = LinearHypergraph::validate({{2, 1, 3}, {2, 4, 5}}, 5, 3);  // swap 1 <-> 2
    CHECK(are_isomorphic(a, b));
    CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("fan3 and pasch are not isomorphic") {
    auto fan = configuration(ConfigName::fan, 3);
    auto pasch = configuration(ConfigName::pasch);
    CHECK(canonical_form(7, fan.edges) != canonical_form(7, pasch.edges));
}

TEST_CASE("wagner extension vs truncated design: same parameters, different systems") {
    auto ext = extend_colored_graph(wagner_graph());
    auto td = transversal_design(4, 3);
    auto trunc = truncate(td, 12);
    REQUIRE(ext.n() == trunc.n());
    REQUIRE(ext.edge_count() == trunc.edge_count());
    CHECK_FALSE(are_isomorphic(ext, trunc));
}

TEST_CASE("canonical form is invariant under random relabelings") {
    std::mt19937 rng(2024);
    std::vector<std::pair<int, EdgeList>> systems;
    systems.push_back({7, configuration(ConfigName::fan, 3).edges});
    systems.push_back({6, configuration(ConfigName::pasch).edges});
    systems.push_back({7, configuration(ConfigName::c14).edges});
    systems.push_back({4, configuration(ConfigName::w).edges});
    systems.push_back({9, transversal_design(3, 3).edges()});
    systems.push_back({11, extend_colored_graph(wagner_graph()).edges()});
    while (systems.size() < 20) {
        int n = 5 + static_cast<int>(rng() % 8);
        systems.push_back({n, oracle::random_linear_system(n, 3, rng, 8)});
    }
    for (const auto& [n, edges] : systems) {
        auto canon = canonical_form(n, edges);
        for (int rep = 0; rep < 100; ++rep) {
            auto shuffled = oracle::relabel(edges, n, rng);
            CHECK(canonical_form(n, shuffled) == canon);
        }
    }
}

TEST_CASE("isomorphism behaves as an equivalence relation") {
    std::mt19937 rng(99);
    std::vector<std::pair<int, EdgeList>> pool;
    for (int i = 0; i < 8; ++i) {
        int n = 6 + static_cast<int>(rng() % 4);
        pool.push_back({n, oracle::random_linear_system(n, 3, rng, 5)});
    }
    for (const auto& [n, e] : pool) {
        auto h = LinearHypergraph::validate(e, n, 3);
        CHECK(are_isomorphic(h, h));  // reflexive
    }
    for (const auto& [n1, e1] : pool)
        for (const auto& [n2, e2] : pool) {
            auto h1 = LinearHypergraph::validate(e1, n1, 3);
            auto h2 = LinearHypergraph::validate(e2, n2, 3);
            CHECK(are_isomorphic(h1, h2) == are_isomorphic(h2, h1));  // symmetric
        }
}

TEST_CASE("vertex limit is enforced") {
    EdgeList edges;
    for (int i = 1; i <= 17; i += 3) edges.push_back({i, i + 1, i + 2});
    CHECK_THROWS_AS(canonical_form(18, edges), Error);
    CHECK_NOTHROW(canonical_form(18, edges, 18));  // configurable
}

TEST_CASE("isolated vertices do not affect the canonical edge list, only n comparisons") {
    EdgeList e = {{1, 2, 3}};
    CHECK(canonical_form(3, e) == canonical_form(5, e));
    CHECK_FALSE(are_isomorphic_systems(3, e, 5, e));
}

TEST_CASE("canonical state decision agrees with explicit minimization") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        auto edges = oracle::random_linear_system(n, 3, rng, 5);
        if (edges.empty()) continue;
        auto sup = detail::support_masks(edges, n);
        bool decision = detail::is_canonical_state(sup.masks);
        detail::Canonizer cz(sup.size, sup.masks);
        auto mini = cz.minimize();
        auto sorted = sup.masks;
        std::sort(sorted.begin(), sorted.end());
        CHECK(decision == (mini == sorted));
    }
}
