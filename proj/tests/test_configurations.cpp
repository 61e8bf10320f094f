#include <catch2/catch_amalgamated.hpp>

#include "lhg/configurations.hpp"
#include "lhg/constructions.hpp"
#include "oracles.hpp"

using namespace lhg;

TEST_CASE("catalog instances match their fixed labelings") {
    auto tri = configuration(ConfigName::triangle);
    CHECK(tri.edges == EdgeList{{1, 2, 3}, {1, 5, 6}, {3, 4, 5}});
    CHECK(tri.n == 6);

    auto pasch = configuration(ConfigName::pasch);
    CHECK(pasch.edges == EdgeList{{1, 2, 3}, {1, 5, 6}, {2, 4, 6}, {3, 4, 5}});
    CHECK(pasch.n == 6);

    auto c14 = configuration(ConfigName::c14);
    CHECK(c14.edges == EdgeList{{1, 2, 3}, {1, 5, 6}, {2, 6, 7}, {3, 4, 5}});
    CHECK(c14.n == 7);

    auto w = configuration(ConfigName::w);
    CHECK(w.edges == EdgeList{{1, 2, 3}, {1, 2, 4}});
    CHECK_FALSE(w.linear);

    auto fan2 = configuration(ConfigName::fan, 2);
    CHECK(fan2.edges == EdgeList{{1, 2}, {1, 3}, {2, 3}});  // the graph triangle

    auto fan3 = configuration(ConfigName::fan, 3);
    CHECK(fan3.n == 7);
    CHECK(fan3.edges.size() == 4);
    REQUIRE(fan3.fan);
    CHECK(fan3.fan->center == 3);

    auto fan4 = configuration(ConfigName::fan, 4);
    CHECK(fan4.n == 13);  // k(k-1)+1
    CHECK(fan4.edges.size() == 5);
    CHECK_NOTHROW(LinearHypergraph::validate(fan4.edges, fan4.n, 4));

    CHECK_THROWS_AS(configuration(ConfigName::pasch, 4), Error);
    CHECK_THROWS_AS(configuration(ConfigName::triangle, 2), Error);
}

TEST_CASE("labels parse") {
    CHECK(configuration_from_label("pasch").name == ConfigName::pasch);
    CHECK(configuration_from_label("fan5").k == 5);
    CHECK(configuration_from_label("C14").name == ConfigName::c14);
    CHECK_THROWS_AS(configuration_from_label("fano"), Error);
    CHECK_THROWS_AS(configuration_from_label("fan1"), Error);
}

TEST_CASE("find_embedding examples") {
    auto pasch = configuration(ConfigName::pasch);
    auto tri = configuration(ConfigName::triangle);
    auto fan3 = configuration(ConfigName::fan, 3);

    // the pasch host contains the triangle (drop one edge)
    auto em = find_embedding(pasch.n, 3, pasch.edges, tri);
    REQUIRE(em);
    CHECK(embedding_is_valid(pasch.n, pasch.edges, tri, *em));

    // a fan needs seven points, pasch has six
    CHECK_FALSE(find_embedding(pasch.n, 3, pasch.edges, fan3));

    // a transversal design never contains a fan
    auto td = transversal_design(3, 3);
    CHECK_FALSE(find_embedding(td, fan3));

    CHECK_THROWS_AS(find_embedding(4, 2, EdgeList{{1, 2}}, fan3), Error);  // uniformity mismatch
}

TEST_CASE("find_embedding agrees with brute-force containment") {
    std::mt19937 rng(11);
    std::vector<Configuration> patterns = {configuration(ConfigName::triangle), configuration(ConfigName::pasch),
                                           configuration(ConfigName::c14), configuration(ConfigName::fan, 3),
                                           configuration(ConfigName::w)};
    for (int trial = 0; trial < 60; ++trial) {
        int n = 6 + static_cast<int>(rng() % 4);
        auto host = trial % 3 == 0 ? oracle::random_triple_system(n, rng, 0.12) : oracle::random_linear_system(n, 3, rng);
        for (const auto& pat : patterns) {
            auto em = find_embedding(n, 3, host, pat);
            bool brute = oracle::contains_pattern(n, host, pat.n, pat.edges);
            INFO("pattern " << pat.label << " trial " << trial);
            CHECK(em.has_value() == brute);
            if (em) CHECK(embedding_is_valid(n, host, pat, *em));
        }
    }
}

TEST_CASE("monotonicity: a sub-edge-set embedding persists in the superset") {
    std::mt19937 rng(13);
    auto tri = configuration(ConfigName::triangle);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 7 + static_cast<int>(rng() % 3);
        auto host = oracle::random_linear_system(n, 3, rng);
        if (host.size() < 2) continue;
        EdgeList sub(host.begin(), host.end() - 1);
        if (find_embedding(n, 3, sub, tri)) CHECK(find_embedding(n, 3, host, tri));
    }
}

TEST_CASE("contains_fan examples") {
    auto h = LinearHypergraph::validate({{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}}, 7, 3);
    auto em = contains_fan(h, 3);
    REQUIRE(em);
    auto fan3 = configuration(ConfigName::fan, 3);
    CHECK(embedding_is_valid(h.n(), h.edges(), fan3, *em));
    // center 1, crossing edge {2,4,6}
    CHECK(em->vertex_map[fan3.fan->center - 1] == 1);
    CHECK(h.edges()[em->edge_map[fan3.fan->g_edge]] == Edge{2, 4, 6});

    auto no_crossing = LinearHypergraph::validate({{1, 2, 3}, {1, 4, 5}, {1, 6, 7}}, 7, 3);
    CHECK_FALSE(contains_fan(no_crossing, 3));

    auto trunc = truncate(transversal_design(4, 3), 12);
    CHECK_FALSE(contains_fan(trunc, 3));
}

TEST_CASE("contains_fan agrees with the generic embedder") {
    std::mt19937 rng(17);
    auto fan3 = configuration(ConfigName::fan, 3);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 5 + static_cast<int>(rng() % 6);
        auto edges = oracle::random_linear_system(n, 3, rng);
        auto h = LinearHypergraph::validate(edges, n, 3);
        auto fast = contains_fan(h, 3);
        auto generic = find_embedding(h, fan3);
        CHECK(fast.has_value() == generic.has_value());
        if (fast) CHECK(embedding_is_valid(n, edges, fan3, *fast));
    }
}

TEST_CASE("contains_fan for k = 2 finds triangles") {
    auto c5 = LinearHypergraph::validate({{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}, 5, 2);
    CHECK_FALSE(contains_fan(c5, 2));
    auto k3 = LinearHypergraph::validate({{1, 2}, {2, 3}, {1, 3}}, 3, 2);
    auto em = contains_fan(k3, 2);
    REQUIRE(em);
    CHECK(embedding_is_valid(3, k3.edges(), configuration(ConfigName::fan, 2), *em));
}

TEST_CASE("f74 detection") {
    // the seven-point plane: any four of its lines stay within seven points
    EdgeList fano = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    CHECK_FALSE(is_f74_free(7, fano));

    CHECK(is_f74_free(6, {{1, 2, 3}, {4, 5, 6}}));  // fewer than four edges

    auto pasch = configuration(ConfigName::pasch);
    auto viol = f74_violation(pasch.n, pasch.edges);
    REQUIRE(viol);
    CHECK(*viol == std::array<int, 4>{0, 1, 2, 3});  // the violating quadruple is all of it
}

TEST_CASE("linear triple system is f74-free iff it avoids fan3, pasch and c14") {
    std::mt19937 rng(23);
    std::vector<Configuration> pats = {configuration(ConfigName::fan, 3), configuration(ConfigName::pasch),
                                       configuration(ConfigName::c14)};
    for (int trial = 0; trial < 80; ++trial) {
        int n = 7 + static_cast<int>(rng() % 6);
        auto edges = oracle::random_linear_system(n, 3, rng);
        bool free = is_f74_free(n, edges);
        bool any = false;
        for (const auto& p : pats) any = any || find_embedding(n, 3, edges, p).has_value();
        CHECK(free == !any);
    }
}

TEST_CASE("f74 classification: every class carries a forbidden pattern") {
    auto classes = classify_f74_members();
    CHECK(classes.size() == 38);  // regression-pinned from the first complete run

    std::size_t linear = 0;
    for (const auto& cls : classes) {
        CHECK_FALSE(cls.contains.empty());
        CHECK(cls.points <= 7);
        CHECK(cls.edges.size() == 4);
        if (cls.linear) {
            ++linear;
            CHECK_FALSE(cls.contains.count(ConfigName::w));
        } else {
            CHECK(cls.contains.count(ConfigName::w));
        }
    }
    // exactly the three linear patterns on at most seven points
    CHECK(linear == 3);

    // self-containment: pasch appears as a class tagged with pasch
    bool pasch_found = false;
    auto pasch_canon = canonical_form(6, configuration(ConfigName::pasch).edges);
    for (const auto& cls : classes)
        if (cls.linear && canonical_form(cls.points, cls.edges) == pasch_canon) {
            pasch_found = true;
            CHECK(cls.contains == std::set<ConfigName>{ConfigName::pasch});
        }
    CHECK(pasch_found);
}

TEST_CASE("f74 classification is complete and duplicate-free (orbit counting)") {
    // Sum over classes of the number of labeled copies on seven points must
    // equal the number of labeled four-subsets of triples, C(35,4) = 52360.
    auto classes = classify_f74_members();
    long long labeled_total = 0;
    long long fact7 = 5040;
    for (const auto& cls : classes) {
        EdgeList padded = cls.edges;  // embed on 7 labeled points, isolated allowed
        long long aut = oracle::automorphism_count(7, padded);
        REQUIRE(fact7 % aut == 0);
        labeled_total += fact7 / aut;
    }
    CHECK(labeled_total == 52360);
}
