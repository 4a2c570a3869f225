#include <catch2/catch.hpp>

#include "midcube/drg.hpp"
#include "midcube/families.hpp"

using namespace midcube;

namespace {

Polynomial poly(std::initializer_list<Rational> coeffs_low_first) {
    return Polynomial::from_coefficients(coeffs_low_first);
}

// Test-local oracle: the intersection array of the middle cube graph,
// {k, k-1, k-1, ..., 1, 1; 1, 1, 2, 2, ..., k-1, k-1, k}, cross-checked
// against the counting certificate for the orders we can afford.
IntersectionArray mqk_array_oracle(int k) {
    IntersectionArray arr;
    arr.diameter = 2 * k - 1;
    arr.b.push_back(k);
    for (int j = 1; j < arr.diameter; ++j) arr.b.push_back(k - (j + 1) / 2);
    for (int j = 1; j < arr.diameter; ++j) arr.c.push_back((j + 1) / 2);
    arr.c.push_back(k);
    return arr;
}

}  // namespace

TEST_CASE("distance-regularity certificates") {
    SECTION("the middle cube graph") {
        const DrgCertificate cert = check_distance_regular(middle_cube(3));
        REQUIRE(cert.is_drg);
        CHECK(cert.array->diameter == 5);
        CHECK(cert.array->b == std::vector<int>{3, 2, 2, 1, 1});
        CHECK(cert.array->c == std::vector<int>{1, 1, 2, 2, 3});
        CHECK(cert.array->a() == std::vector<int>{0, 0, 0, 0, 0, 0});  // bipartite
        CHECK(cert.array->brace_notation() == "{3,2,2,1,1; 1,1,2,2,3}");
    }
    SECTION("odd graphs match their closed-form arrays") {
        for (int k : {3, 4}) {
            const DrgCertificate cert = check_distance_regular(odd_graph(k));
            REQUIRE(cert.is_drg);
            CHECK(*cert.array == odd_intersection_array(k));
        }
    }
    SECTION("paths are not distance-regular") {
        const DrgCertificate cert = check_distance_regular(path(4));
        CHECK_FALSE(cert.is_drg);
        REQUIRE(cert.witness);
    }
    SECTION("middle cubes are distance-regular through k = 4") {
        for (int k : {2, 3, 4}) {
            const DrgCertificate cert = check_distance_regular(middle_cube(k));
            REQUIRE(cert.is_drg);
            CHECK(*cert.array == mqk_array_oracle(k));
        }
    }
    SECTION("disconnected input rejected") {
        CHECK_THROWS_AS(check_distance_regular(Graph(4, {{0, 1}, {2, 3}})),
                        std::invalid_argument);
    }
}

TEST_CASE("odd graph intersection arrays") {
    const IntersectionArray k2 = odd_intersection_array(2);
    CHECK(k2.diameter == 1);
    CHECK(k2.b == std::vector<int>{2});
    CHECK(k2.c == std::vector<int>{1});

    const IntersectionArray k3 = odd_intersection_array(3);
    CHECK(k3.b == std::vector<int>{3, 2});
    CHECK(k3.c == std::vector<int>{1, 1});

    const IntersectionArray k4 = odd_intersection_array(4);
    CHECK(k4.b == std::vector<int>{4, 3, 3});
    CHECK(k4.c == std::vector<int>{1, 1, 2});
}

TEST_CASE("distance polynomials from the recurrence") {
    SECTION("middle cube polynomials, verbatim") {
        const auto p = distance_polynomials(mqk_array_oracle(3));
        REQUIRE(p.size() == 6);
        CHECK(p[0] == poly({Rational(1)}));
        CHECK(p[1] == poly({Rational(0), Rational(1)}));
        CHECK(p[2] == poly({Rational(-3), Rational(0), Rational(1)}));
        CHECK(p[3] == poly({Rational(0), make_rational(-5, 2), Rational(0), make_rational(1, 2)}));
        CHECK(p[4] == poly({Rational(3), Rational(0), make_rational(-9, 4), Rational(0),
                            make_rational(1, 4)}));
        CHECK(p[5] == poly({Rational(0), make_rational(22, 12), Rational(0),
                            make_rational(-11, 12), Rational(0), make_rational(1, 12)}));
    }
    SECTION("triangle") {
        const auto p = distance_polynomials(odd_intersection_array(2));
        REQUIRE(p.size() == 2);
        CHECK(p[0] == poly({Rational(1)}));
        CHECK(p[1] == poly({Rational(0), Rational(1)}));
    }
    SECTION("degrees grow one at a time") {
        const auto p = distance_polynomials(odd_intersection_array(5));
        for (std::size_t i = 0; i < p.size(); ++i)
            CHECK(p[i].degree() == static_cast<int>(i));
    }
    SECTION("zero c entry rejected") {
        IntersectionArray bad;
        bad.diameter = 2;
        bad.b = {2, 1};
        bad.c = {0, 2};
        CHECK_THROWS_AS(distance_polynomials(bad), std::invalid_argument);
    }
}

TEST_CASE("Hoffman polynomial identity") {
    SECTION("middle cube graph") {
        const Graph mq3 = middle_cube(3);
        const auto polys = distance_polynomials(mqk_array_oracle(3));
        const HoffmanCheck h = hoffman_check(mq3, polys);
        CHECK(h.matrix_identity);
        CHECK(h.scalar_identity);
        CHECK(h.value_at_degree == 20);
        const Polynomial product =
            make_rational(1, 12) *
            Polynomial::from_integer_roots({{Integer(1), 1}, {Integer(2), 1}, {Integer(-3), 1},
                                            {Integer(-2), 1}, {Integer(-1), 1}});
        CHECK(h.hoffman == product);
    }
    SECTION("triangle") {
        const auto polys = distance_polynomials(odd_intersection_array(2));
        const HoffmanCheck h = hoffman_check(complete(3), polys);
        CHECK(h.hoffman == poly({Rational(1), Rational(1)}));
        CHECK(h.matrix_identity);
    }
    SECTION("hexagon scalar value") {
        const DrgCertificate cert = check_distance_regular(cycle(6));
        REQUIRE(cert.is_drg);
        const auto polys = distance_polynomials(*cert.array);
        const HoffmanCheck h = hoffman_check(cycle(6), polys);
        CHECK(h.value_at_degree == 6);
        CHECK(h.matrix_identity);
    }
    SECTION("odd graphs") {
        for (int k : {3, 4}) {
            const Graph g = odd_graph(k);
            const auto polys = distance_polynomials(odd_intersection_array(k));
            const HoffmanCheck h = hoffman_check(g, polys);
            CHECK(h.matrix_identity);
            CHECK(h.scalar_identity);
        }
    }
}

TEST_CASE("distance matrix identities") {
    for (int k : {2, 3}) {
        const Graph mq = middle_cube(k);
        CHECK(distance_matrix_identity(mq, distance_polynomials(mqk_array_oracle(k))));
    }
    CHECK(distance_matrix_identity(odd_graph(3),
                                   distance_polynomials(odd_intersection_array(3))));
}

TEST_CASE("multiplicities from the highest distance polynomial") {
    SECTION("middle cube graph") {
        const auto p = distance_polynomials(mqk_array_oracle(3));
        const std::vector<Rational> evs{Rational(3),  Rational(2),  Rational(1),
                                        Rational(-1), Rational(-2), Rational(-3)};
        const auto m = multiplicities_from_highest(evs, p[5]);
        CHECK(m == std::vector<Integer>{1, 4, 5, 5, 4, 1});
    }
    SECTION("triangle") {
        const auto m = multiplicities_from_highest({Rational(2), Rational(-1)},
                                                   Polynomial::x());
        CHECK(m == std::vector<Integer>{1, 2});
    }
    SECTION("hexagon") {
        const DrgCertificate cert = check_distance_regular(cycle(6));
        const auto p = distance_polynomials(*cert.array);
        const auto m = multiplicities_from_highest(
            {Rational(2), Rational(1), Rational(-1), Rational(-2)}, p[3]);
        CHECK(m == std::vector<Integer>{1, 2, 2, 1});
    }
    SECTION("agrees with the closed-form multiplicities") {
        for (int k = 2; k <= 6; ++k) {
            const auto p = distance_polynomials(mqk_array_oracle(k));
            const Spectrum sp = mqk_spectrum(k);
            std::vector<Rational> evs;
            for (const auto& [v, mult] : sp.pairs) evs.push_back(v);
            const auto m = multiplicities_from_highest(evs, p[2 * k - 1]);
            REQUIRE(m.size() == sp.pairs.size());
            for (std::size_t i = 0; i < m.size(); ++i) CHECK(m[i] == sp.pairs[i].second);
        }
    }
    SECTION("inconsistent input rejected") {
        CHECK_THROWS_AS(
            multiplicities_from_highest({Rational(3), Rational(1), Rational(-1)},
                                        Polynomial::x()),
            std::invalid_argument);
        CHECK_THROWS_AS(
            multiplicities_from_highest({Rational(1), Rational(1)}, Polynomial::x()),
            std::invalid_argument);
    }
}
