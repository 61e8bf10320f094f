#include <catch2/catch_amalgamated.hpp>

#include "lhg/constructions.hpp"
#include "lhg/hypergraph.hpp"
#include "oracles.hpp"

using namespace lhg;

namespace {
Errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return Errc::bad_format;
}
}  // namespace

TEST_CASE("validate accepts linear systems and sorts edges") {
    auto h = LinearHypergraph::validate({{1, 4, 5}, {1, 2, 3}}, 5, 3);
    REQUIRE(h.edge_count() == 2);
    CHECK(h.edges()[0] == Edge{1, 2, 3});
    CHECK(h.edges()[1] == Edge{1, 4, 5});

    // K4 as a 2-uniform hypergraph: graphs are always linear
    auto k4 = LinearHypergraph::validate({{1, 2}, {3, 4}, {1, 3}, {2, 4}, {1, 4}, {2, 3}}, 4, 2);
    CHECK(k4.edge_count() == 6);
}

TEST_CASE("validate rejects bad input with the specific error") {
    CHECK(code_of([] { LinearHypergraph::validate({{1, 2, 3}, {1, 2, 4}}, 4, 3); }) == Errc::not_linear);
    CHECK(code_of([] { LinearHypergraph::validate({{1, 2}}, 4, 3); }) == Errc::not_uniform);
    CHECK(code_of([] { LinearHypergraph::validate({{1, 2, 2}}, 4, 3); }) == Errc::not_uniform);
    CHECK(code_of([] { LinearHypergraph::validate({{1, 2, 3}, {3, 2, 1}}, 4, 3); }) == Errc::duplicate_edge);
    CHECK(code_of([] { LinearHypergraph::validate({{1, 2, 5}}, 4, 3); }) == Errc::vertex_out_of_range);
    CHECK(code_of([] { LinearHypergraph::validate({}, 3, 1); }) == Errc::bad_uniformity);

    // the offending pair is named
    try {
        LinearHypergraph::validate({{1, 2, 3}, {1, 2, 4}}, 4, 3);
    } catch (const Error& e) {
        std::string msg = e.what();
        CHECK(msg.find("{1,2,3}") != std::string::npos);
        CHECK(msg.find("{1,2,4}") != std::string::npos);
    }
}

TEST_CASE("degree and max_degree") {
    auto h = LinearHypergraph::validate({{1, 2, 3}, {1, 4, 5}}, 5, 3);
    CHECK(h.degree(1) == 2);
    CHECK(h.degree(4) == 1);
    CHECK(h.max_degree() == std::pair<int, Vertex>{2, 1});
    CHECK_THROWS_AS(h.degree(6), Error);

    auto empty = LinearHypergraph::validate({}, 4, 3);
    CHECK(empty.max_degree().first == 0);

    auto td = transversal_design(3, 3);
    for (Vertex v = 1; v <= td.n(); ++v) CHECK(td.degree(v) == 3);
}

TEST_CASE("neighborhood and outside ball") {
    auto h = LinearHypergraph::validate({{1, 2, 3}, {1, 4, 5}}, 5, 3);
    CHECK(h.neighborhood(1) == std::vector<Vertex>{2, 3, 4, 5});
    CHECK(h.outside_ball(1) == std::vector<Vertex>{1});

    auto td = transversal_design(3, 3);
    for (Vertex v = 1; v <= 9; ++v) {
        CHECK(td.neighborhood(v).size() == 6);  // (k-1) * delta
        CHECK(td.outside_ball(v).size() == 3);  // n - (k-1) * delta
    }

    auto iso = LinearHypergraph::validate({{1, 2, 3}}, 5, 3);
    CHECK(iso.neighborhood(5).empty());
    CHECK(iso.outside_ball(5) == std::vector<Vertex>{1, 2, 3, 4, 5});
}

TEST_CASE("strong independence") {
    auto td = transversal_design(3, 3);
    CHECK(td.is_strongly_independent({1, 2, 3}));  // a group
    CHECK_FALSE(td.is_strongly_independent({1, 4}));

    auto h = LinearHypergraph::validate({{1, 2, 3}}, 3, 3);
    CHECK_FALSE(h.is_strongly_independent({1, 2}));
    CHECK(h.is_strongly_independent({2}));
}

TEST_CASE("find_k_partition") {
    auto td = transversal_design(3, 3);
    auto part = find_k_partition(td);
    REQUIRE(part);
    REQUIRE(part->groups.size() == 3);
    CHECK(part->groups[0] == std::vector<Vertex>{1, 2, 3});
    CHECK(part->groups[1] == std::vector<Vertex>{4, 5, 6});
    CHECK(part->groups[2] == std::vector<Vertex>{7, 8, 9});

    // the seven-point fan is not three-partite
    auto fan_edges = EdgeList{{1, 2, 3}, {3, 4, 5}, {1, 5, 6}, {3, 6, 7}};
    CHECK_FALSE(find_k_partition(LinearHypergraph::validate(fan_edges, 7, 3)));

    auto single = find_k_partition(LinearHypergraph::validate({{1, 2, 3}}, 3, 3));
    REQUIRE(single);
    CHECK(single->groups == std::vector<std::vector<Vertex>>{{1}, {2}, {3}});
}

TEST_CASE("partition output groups pass strong independence and meet every edge once") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 6 + static_cast<int>(rng() % 5);
        auto edges = oracle::random_linear_system(n, 3, rng, 6);
        auto h = LinearHypergraph::validate(edges, n, 3);
        auto part = find_k_partition(h);
        if (!part) continue;
        std::vector<int> owner(n + 1, -1);
        for (std::size_t g = 0; g < part->groups.size(); ++g) {
            CHECK(h.is_strongly_independent(part->groups[g]));
            for (Vertex v : part->groups[g]) {
                CHECK(owner[v] == -1);
                owner[v] = static_cast<int>(g);
            }
        }
        for (Vertex v = 1; v <= n; ++v) CHECK(owner[v] >= 0);
        for (const Edge& e : h.edges()) {
            std::set<int> hit;
            for (Vertex v : e) hit.insert(owner[v]);
            CHECK(hit.size() == e.size());
        }
    }
}

TEST_CASE("structural invariants on random linear systems") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 5 + static_cast<int>(rng() % 8);
        int k = 2 + static_cast<int>(rng() % 3);
        auto edges = oracle::random_linear_system(n, k, rng);
        auto h = LinearHypergraph::validate(edges, n, k);

        long long degree_sum = 0;
        for (Vertex v = 1; v <= n; ++v) {
            degree_sum += h.degree(v);
            // linearity forces the edge neighborhoods around v to be disjoint
            CHECK(static_cast<int>(h.neighborhood(v).size()) == (k - 1) * h.degree(v));
            auto nv = h.neighborhood(v);
            auto bv = h.outside_ball(v);
            CHECK(nv.size() + bv.size() == static_cast<std::size_t>(n));
            CHECK(std::binary_search(bv.begin(), bv.end(), v));
        }
        CHECK(degree_sum == static_cast<long long>(k) * h.edge_count());
    }
}

TEST_CASE("edge_covering reflects the pair index") {
    auto h = LinearHypergraph::validate({{1, 2, 3}, {1, 4, 5}}, 5, 3);
    REQUIRE(h.edge_covering(2, 3));
    CHECK(h.edges()[*h.edge_covering(2, 3)] == Edge{1, 2, 3});
    CHECK_FALSE(h.edge_covering(2, 4));
    CHECK(h.edge_covering(5, 4) == h.edge_covering(4, 5));
}
