#include <catch2/catch.hpp>

#include "midcube/families.hpp"
#include "midcube/hamilton.hpp"

using namespace midcube;

TEST_CASE("hamilton cycles in small graphs") {
    SECTION("the 6-cycle is its own answer") {
        const HamiltonResult r = find_hamilton_cycle(middle_cube(2));
        REQUIRE(r.status == HamiltonStatus::found);
        CHECK(r.cycle.size() == 6);
        CHECK(validate_hamilton_cycle(middle_cube(2), r.cycle));
    }
    SECTION("middle cube k=3") {
        const HamiltonResult r = find_hamilton_cycle(middle_cube(3));
        REQUIRE(r.status == HamiltonStatus::found);
        CHECK(validate_hamilton_cycle(middle_cube(3), r.cycle));
        CHECK(r.nodes_expanded < 100'000'000);
    }
    SECTION("complete graphs") {
        const HamiltonResult r = find_hamilton_cycle(complete(5));
        REQUIRE(r.status == HamiltonStatus::found);
        CHECK(validate_hamilton_cycle(complete(5), r.cycle));
    }
    SECTION("Petersen is hypohamiltonian: no cycle, proven") {
        const HamiltonResult r = find_hamilton_cycle(petersen());
        CHECK(r.status == HamiltonStatus::proven_none);
    }
}

TEST_CASE("trees have no cycles") {
    const HamiltonResult r = find_hamilton_cycle(path(4));
    CHECK(r.status == HamiltonStatus::proven_none);
    CHECK(r.cycle.empty());
}

TEST_CASE("disconnected graphs have no cycles") {
    const HamiltonResult r = find_hamilton_cycle(Graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}));
    CHECK(r.status == HamiltonStatus::proven_none);
}

TEST_CASE("budget exhaustion is a status") {
    const HamiltonResult r = find_hamilton_cycle(middle_cube(4), 10);
    CHECK(r.status == HamiltonStatus::not_found_within_budget);
    CHECK(r.nodes_expanded == 10);
}

TEST_CASE("determinism") {
    const HamiltonResult a = find_hamilton_cycle(middle_cube(3));
    const HamiltonResult b = find_hamilton_cycle(middle_cube(3));
    CHECK(a.cycle == b.cycle);
    CHECK(a.nodes_expanded == b.nodes_expanded);
}

TEST_CASE("cycle validation is strict") {
    const Graph c6 = cycle(6);
    CHECK(validate_hamilton_cycle(c6, {0, 1, 2, 3, 4, 5}));
    CHECK_FALSE(validate_hamilton_cycle(c6, {0, 1, 2, 3, 4}));       // too short
    CHECK_FALSE(validate_hamilton_cycle(c6, {0, 1, 2, 3, 4, 4}));    // repeat
    CHECK_FALSE(validate_hamilton_cycle(c6, {0, 1, 2, 3, 5, 4}));    // non-edge
    CHECK_FALSE(validate_hamilton_cycle(c6, {0, 2, 1, 3, 4, 5}));    // non-edge
}
