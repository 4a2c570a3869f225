#include <catch2/catch.hpp>

#include <random>
#include <set>

#include "midcube/families.hpp"
#include "midcube/metric.hpp"
#include "test_util.hpp"

using namespace midcube;

TEST_CASE("graph construction invariants") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 4}}), std::invalid_argument);

    // duplicate edges collapse; adjacency is sorted and symmetric
    const Graph g(4, {{2, 1}, {1, 2}, {0, 3}, {3, 1}});
    CHECK(g.size() == 3);
    CHECK(g.neighbors(1) == std::vector<int>{2, 3});
    CHECK(g.adjacent(3, 0));
    CHECK_FALSE(g.adjacent(0, 1));

    CHECK_THROWS_AS(Graph(2, {}, VertexLabels{2, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {}, VertexLabels{2, {1}}), std::invalid_argument);
}

TEST_CASE("all pairs distances") {
    const DistanceTable k3 = all_pairs_distances(complete(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(k3.at(i, j) == (i == j ? 0 : 1));

    SECTION("unreachable pairs carry the sentinel") {
        const Graph two(4, {{0, 1}, {2, 3}});
        const DistanceTable t = all_pairs_distances(two);
        CHECK(t.at(0, 2) == kUnreachable);
        CHECK_FALSE(t.reachable(1, 3));
        CHECK(t.at(0, 1) == 1);
    }

    SECTION("complementary labels of the middle cube graph sit at full distance") {
        const Graph mq3 = middle_cube(3);
        const auto& masks = mq3.labels()->masks;
        const std::uint64_t full = (1u << 5) - 1;
        const DistanceTable t = all_pairs_distances(mq3);
        for (std::size_t v = 0; v < mq3.order(); ++v)
            for (std::size_t w = 0; w < mq3.order(); ++w)
                if (masks[w] == (full ^ masks[v])) CHECK(t.at(v, w) == 5);
    }
}

TEST_CASE("distance table symmetry and triangle inequality on the families") {
    for (const Graph& g : {middle_cube(2), middle_cube(3), middle_cube(4), odd_graph(3),
                           odd_graph(4), hypercube(4), cycle(7)}) {
        const DistanceTable t = all_pairs_distances(g);
        const std::size_t n = g.order();
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(t.at(i, i) == 0);
            for (std::size_t j = 0; j < n; ++j) CHECK(t.at(i, j) == t.at(j, i));
        }
        std::mt19937 rng(5);
        for (int s = 0; s < 2000; ++s) {
            const std::size_t i = rng() % n, j = rng() % n, k = rng() % n;
            CHECK(t.at(i, j) <= t.at(i, k) + t.at(k, j));
        }
    }
}

TEST_CASE("parity distances") {
    SECTION("pentagon") {
        const Graph c5 = cycle(5);
        const ParityRow row = parity_distances(c5, 0);
        CHECK(row.even[1] == 4);
        CHECK(row.odd[1] == 1);
        CHECK(row.even[0] == 0);
        CHECK(row.odd[0] == 5);  // shortest odd closed walk is the full cycle
    }
    SECTION("bipartite path has no same-side odd walks") {
        const Graph p4 = path(4);
        const ParityRow row = parity_distances(p4, 0);
        CHECK(row.odd[2] == kUnreachable);
        CHECK(row.even[2] == 2);
        CHECK(row.even[1] == kUnreachable);
        CHECK(row.odd[1] == 1);
    }
    SECTION("min of the parities is the distance on non-bipartite graphs") {
        std::mt19937 rng(314159);
        for (int t = 0; t < 30; ++t) {
            const Graph g = testutil::random_connected_nonbipartite(rng, 4, 10);
            const DistanceTable dist = all_pairs_distances(g);
            for (std::size_t i = 0; i < g.order(); ++i) {
                const ParityRow row = parity_distances(g, static_cast<int>(i));
                for (std::size_t j = 0; j < g.order(); ++j) {
                    if (i == j) continue;
                    CHECK(std::min(row.even[j], row.odd[j]) >= 0);
                    CHECK(std::min(row.even[j] == kUnreachable ? INT_MAX : row.even[j],
                                   row.odd[j] == kUnreachable ? INT_MAX : row.odd[j]) ==
                          dist.at(i, j));
                }
            }
        }
    }
}

TEST_CASE("diameter and eccentricity") {
    CHECK(diameter(petersen()) == 2);
    CHECK(diameter(middle_cube(3)) == 5);
    CHECK(diameter(complete(5)) == 1);
    CHECK(eccentricity(path(4), 0) == 3);
    CHECK(eccentricity(path(4), 1) == 2);
    CHECK_THROWS_AS(diameter(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("distance-l graphs") {
    SECTION("l = 1 is the graph itself") {
        for (const Graph& g : {petersen(), middle_cube(2), hypercube(3)})
            CHECK(distance_l_graph(g, 1).edges() == g.edges());
    }
    SECTION("full-distance graph of the middle cube pairs complements") {
        const Graph mq3 = middle_cube(3);
        const Graph g5 = distance_l_graph(mq3, 5);
        CHECK(g5.size() == 10);  // perfect matching
        const std::uint64_t full = (1u << 5) - 1;
        const auto& masks = mq3.labels()->masks;
        for (auto [u, v] : g5.edges()) CHECK(masks[u] == (full ^ masks[v]));
        for (std::size_t v = 0; v < g5.order(); ++v) CHECK(g5.degree(static_cast<int>(v)) == 1);
    }
    SECTION("hexagon antipodes") {
        const Graph g3 = distance_l_graph(cycle(6), 3);
        CHECK(g3.edges() == std::vector<std::pair<int, int>>{{0, 3}, {1, 4}, {2, 5}});
    }
    SECTION("out of range") {
        CHECK_THROWS_AS(distance_l_graph(cycle(6), 4), std::invalid_argument);
        CHECK_THROWS_AS(distance_l_graph(cycle(6), -1), std::invalid_argument);
        CHECK(distance_l_graph(cycle(6), 0).size() == 0);
    }
}

TEST_CASE("antipodality") {
    SECTION("middle cube graphs are 2-antipodal") {
        for (int k : {2, 3}) {
            const auto cert = antipodal_certificate(middle_cube(k));
            CHECK(cert.is_antipodal);
            REQUIRE(cert.uniform_size);
            CHECK(*cert.uniform_size == 2);
        }
    }
    SECTION("hexagon") {
        const auto cert = antipodal_certificate(cycle(6));
        CHECK(cert.is_antipodal);
        CHECK(cert.uniform_size == 2);
        CHECK(cert.cliques.size() == 3);
    }
    SECTION("the Petersen graph is not antipodal") {
        const auto cert = antipodal_certificate(petersen());
        CHECK_FALSE(cert.is_antipodal);
    }
    SECTION("complete graphs fold to a point") {
        const auto cert = antipodal_certificate(complete(4));
        CHECK(cert.is_antipodal);
        CHECK(cert.uniform_size == 4);
        CHECK(fold(complete(4), cert).order() == 1);
    }
}

TEST_CASE("folding") {
    SECTION("hexagon folds to a triangle") {
        const Graph folded = fold(cycle(6), antipodal_certificate(cycle(6)));
        CHECK(folded.order() == 3);
        CHECK(folded.size() == 3);
    }
    SECTION("an edge folds to a point") {
        const Graph folded = fold(complete(2), antipodal_certificate(complete(2)));
        CHECK(folded.order() == 1);
        CHECK(folded.size() == 0);
    }
    SECTION("folding the middle cube recovers the odd graph") {
        for (int k : {2, 3}) {
            const Graph mq = middle_cube(k);
            const auto cert = antipodal_certificate(mq);
            REQUIRE(cert.is_antipodal);
            const Graph folded = fold(mq, cert);
            const Graph ok = odd_graph(k);
            REQUIRE(folded.order() == ok.order());

            // Explicit relabeling: a clique maps to its lower-layer mask.
            std::vector<std::vector<int>> cliques = cert.cliques;
            std::sort(cliques.begin(), cliques.end(),
                      [](const auto& a, const auto& b) { return a.front() < b.front(); });
            const auto& mq_masks = mq.labels()->masks;
            const auto& ok_masks = ok.labels()->masks;
            std::vector<int> to_odd(folded.order());
            for (std::size_t c = 0; c < cliques.size(); ++c) {
                const std::uint64_t mask = mq_masks[cliques[c].front()];
                const auto it = std::find(ok_masks.begin(), ok_masks.end(), mask);
                REQUIRE(it != ok_masks.end());
                to_odd[c] = static_cast<int>(it - ok_masks.begin());
            }
            std::set<std::pair<int, int>> mapped;
            for (auto [u, v] : folded.edges()) {
                int a = to_odd[u], b = to_odd[v];
                if (a > b) std::swap(a, b);
                mapped.emplace(a, b);
            }
            const auto ok_edges = ok.edges();
            CHECK(mapped == std::set<std::pair<int, int>>(ok_edges.begin(), ok_edges.end()));
        }
    }
    SECTION("non-antipodal certificate rejected") {
        CHECK_THROWS_AS(fold(petersen(), antipodal_certificate(petersen())),
                        std::invalid_argument);
    }
}

TEST_CASE("bipartitions") {
    CHECK_FALSE(bipartition(cycle(5)));
    CHECK(bipartition(path(4)).value() == std::vector<int>{0, 1, 0, 1});

    const Graph mq3 = middle_cube(3);
    const auto sides = bipartition(mq3);
    REQUIRE(sides);
    // Sides are exactly the Hamming-weight classes.
    const auto& masks = mq3.labels()->masks;
    const int side_of_weight2 = (*sides)[0];
    for (std::size_t v = 0; v < mq3.order(); ++v) {
        const int w = __builtin_popcountll(masks[v]);
        CHECK((*sides)[v] == (w == 2 ? side_of_weight2 : 1 - side_of_weight2));
    }
}

TEST_CASE("induced balls") {
    CHECK(induced_ball(cycle(5), 2, 0).order() == 1);

    SECTION("pentagon radius-1 ball is a 3-path") {
        const Graph ball = induced_ball(cycle(5), 0, 1);
        CHECK(ball.order() == 3);
        CHECK(ball.size() == 2);
        CHECK(is_bipartite(ball));
    }
    SECTION("Petersen radius-1 ball is a claw") {
        const Graph ball = induced_ball(petersen(), 0, 1);
        CHECK(ball.order() == 4);
        CHECK(ball.size() == 3);
        CHECK(is_bipartite(ball));
        int center_degree = 0;
        for (std::size_t v = 0; v < 4; ++v)
            center_degree = std::max(center_degree, ball.degree(static_cast<int>(v)));
        CHECK(center_degree == 3);
    }
}

TEST_CASE("edge list round trip") {
    const Graph g = petersen();
    const Graph back = Graph::from_edge_list(g.to_edge_list());
    CHECK(back.edges() == g.edges());
    CHECK(back.order() == g.order());
    CHECK_THROWS_AS(Graph::from_edge_list(std::string("3")), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edge_list(std::string("3 2\n0 1")), std::invalid_argument);
}

TEST_CASE("label strings put coordinate 1 first") {
    const Graph q3 = hypercube(3);
    CHECK(q3.label_string(0) == "000");
    CHECK(q3.label_string(1) == "100");  // mask 1 = coordinate 1 = first character
    CHECK(q3.label_string(4) == "001");
    CHECK(q3.label_string(5) == "101");
}

TEST_CASE("dot export") {
    const std::string dot = cycle(3).to_dot("triangle");
    CHECK(dot == "graph \"triangle\" {\n  0 -- 1;\n  0 -- 2;\n  1 -- 2;\n}\n");
}
