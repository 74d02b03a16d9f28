#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fano2/surfaces.hpp"
#include "oracles.hpp"

using namespace fano2;
using namespace fano2::surfaces;

TEST_CASE("ruled surface pairing", "[surfaces]") {
    CHECK(intersect(RuledSurface(0, 2), {1, 0}, {1, 0}) == -2);
    CHECK(intersect(RuledSurface(0, 1), {1, 2}, {1, 2}) == 3);
    CHECK(intersect(RuledSurface(1, 3), {1, 5}, {1, 0}) == 2);  // cone resolution pairing
    CHECK_THROWS_AS(RuledSurface(0, -1), InputError);
    CHECK_THROWS_AS(RuledSurface(-1, 0), InputError);
}

TEST_CASE("canonical class", "[surfaces]") {
    CHECK(canonical_class(RuledSurface(0, 1)) == RuledClass{-2, -3});
    CHECK(canonical_class(RuledSurface(0, 2)) == RuledClass{-2, -4});
    CHECK(canonical_class(RuledSurface(1, 3)) == RuledClass{-2, -3});
}

TEST_CASE("canonical class invariants over the grid", "[surfaces][property]") {
    for (Int g = 0; g <= 2; ++g)
        for (Int e = -g; e <= 5; ++e) {
            const RuledSurface S(g, e);
            const RuledClass K = canonical_class(S);
            CHECK(intersect(S, K, {0, 1}) == -2);
            CHECK(intersect(S, K, K) == 8 * (1 - g));
            CHECK(arithmetic_genus(S, {1, 0}) == make_rat(g));
            CHECK(arithmetic_genus(S, {0, 1}) == 0);
        }
}

TEST_CASE("arithmetic genus values", "[surfaces]") {
    CHECK(arithmetic_genus(RuledSurface(0, 1), {1, 2}) == 0);
    CHECK(arithmetic_genus(RuledSurface(0, 0), {1, 0}) == 0);
    // on the cone resolution the genus is 1 + (2b - 3a)(a - 1)/2
    const RuledSurface cone(1, 3);
    for (Int a = 1; a <= 6; ++a)
        for (Int b = 0; b <= 8; ++b)
            CHECK(arithmetic_genus(cone, {a, b}) == make_rat((2 * b - 3 * a) * (a - 1), 2) + 1);
}

TEST_CASE("genus parity and oracle agreement", "[surfaces][property]") {
    std::mt19937 rng(20240812);
    std::uniform_int_distribution<Int> ab(-20, 20);
    std::uniform_int_distribution<Int> gd(0, 2);
    int cases = 0;
    while (cases < 1200) {
        const Int g = gd(rng);
        std::uniform_int_distribution<Int> ed(-g, 5);
        const Int e = ed(rng);
        const RuledSurface S(g, e);
        const RuledClass c{ab(rng), ab(rng)};
        const Int pair = oracles::twice_genus_minus_two_bruteforce(g, e, c.a, c.b);
        CHECK(pair % 2 == 0);  // c.(c+K) is even, so the genus is an integer
        CHECK(arithmetic_genus(S, c) == make_rat(pair, 2) + 1);
        CHECK(rat_is_integer(arithmetic_genus(S, c)));
        ++cases;
    }
}

TEST_CASE("genus equation solutions on the cone resolution", "[surfaces]") {
    const RuledSurface cone(1, 3);
    const auto sols = genus_equation_solutions(cone, 2, 10, 10);
    REQUIRE(sols.size() == 2);
    CHECK(sols[0] == std::pair<Int, Int>{2, 4});
    CHECK(sols[1] == std::pair<Int, Int>{3, 5});

    // every a = 1 class has genus 1
    const auto genus1 = genus_equation_solutions(cone, 1, 1, 12);
    CHECK(genus1.size() == 13);  // (1, b) for 0 <= b <= 12

    // rational classes on F1 include the degree-2 and degree-3 menu rows
    const auto f1 = genus_equation_solutions(RuledSurface(0, 1), 0, 3, 3);
    CHECK(std::count(f1.begin(), f1.end(), std::pair<Int, Int>{1, 1}) == 1);
    CHECK(std::count(f1.begin(), f1.end(), std::pair<Int, Int>{1, 2}) == 1);
}

TEST_CASE("genus-2 solution set is stable under box growth", "[surfaces][property]") {
    const RuledSurface cone(1, 3);
    const auto base = genus_equation_solutions(cone, 2, 4, 6);
    REQUIRE(base.size() == 2);
    for (Int amax = 4; amax <= 50; amax += 7)
        for (Int bmax = 6; bmax <= 50; bmax += 9)
            CHECK(genus_equation_solutions(cone, 2, amax, bmax) == base);
    CHECK(genus_equation_solutions(cone, 2, 50, 50) == base);
}

TEST_CASE("Euler-number rule table", "[surfaces]") {
    CHECK(min_euler(MinEulerKey::P3Cubic) == 1);
    CHECK(min_euler(MinEulerKey::V4Hyperplane) == 3);
    CHECK(min_euler(MinEulerKey::Q3O1Section) == 3);
    CHECK(min_euler(MinEulerKey::P3Hyperplane) == 3);
    CHECK(min_euler(MinEulerKey::VdHyperplaneLow) == 1);
    CHECK(min_euler(MinEulerKey::V5Hyperplane) == 3);
    CHECK(min_euler(MinEulerKey::Q3O2Section) == 3);
    CHECK(!std::string(min_euler_rule(MinEulerKey::Q3O2Section).note).empty());
}

TEST_CASE("cone embedding obstruction", "[surfaces]") {
    CHECK(cone_embedding_obstruction(4));
    CHECK(!cone_embedding_obstruction(3));
    CHECK(cone_embedding_obstruction(5));
    CHECK_THROWS_AS(cone_embedding_obstruction(2), InputError);
}

TEST_CASE("del Pezzo Euler floors", "[surfaces]") {
    DelPezzoInfo cone_over_elliptic{3, true, false, true, std::nullopt, std::nullopt};
    CHECK(euler_lower_bound(cone_over_elliptic) == 1);
    CHECK(euler_exact(cone_over_elliptic) == 1);

    DelPezzoInfo normal_rational{4, true, true, false, 2, std::nullopt};
    CHECK(euler_lower_bound(normal_rational) == 4);
    CHECK(euler_exact(normal_rational) == 4);

    DelPezzoInfo non_normal{4, false, true, false, std::nullopt, 'D'};
    CHECK(euler_lower_bound(non_normal) == 3);  // not a cone

    DelPezzoInfo bad{4, false, true, false, std::nullopt, 'X'};
    CHECK_THROWS_AS(euler_lower_bound(bad), ValidationError);
}

TEST_CASE("class-(C) conductor reduction", "[surfaces]") {
    const auto d4 = class_c_conductor_check(4);
    REQUIRE(d4.degree_one_classes.size() == 2);
    CHECK(std::count(d4.degree_one_classes.begin(), d4.degree_one_classes.end(), RuledClass{1, 0}) == 1);
    CHECK(std::count(d4.degree_one_classes.begin(), d4.degree_one_classes.end(), RuledClass{0, 1}) == 1);
    CHECK(d4.forces_ruling);

    CHECK(class_c_conductor_check(3).degree_one_classes.size() == 2);
    CHECK(intersect(RuledSurface(0, 3), {0, 1}, {1, 4}) == 1);  // the ruling has degree one at d = 5
}

TEST_CASE("conductor reduction finds two classes for every degree", "[surfaces][property]") {
    for (Int d = 3; d <= 10; ++d) {
        const auto r = class_c_conductor_check(d);
        CHECK(r.degree_one_classes.size() == 2);
        CHECK(r.forces_ruling);
    }
}

TEST_CASE("invariant solver for the elliptic-base boundary", "[surfaces]") {
    const auto rep = no18_invariant_solver();
    REQUIRE(rep.survivors.size() == 1);
    CHECK(rep.survivors[0] == 2);
    for (const auto& c : rep.cases) {
        if (c.e == 0) {
            CHECK(!c.survives);
            CHECK(c.witness == -1);  // the nef section pairs to -1 against the conductor
        }
        if (c.e % 2 != 0) {
            CHECK(!c.survives);
            CHECK(c.reason.find("integral") != std::string::npos);
        }
        if (c.e == 4) CHECK(!c.survives);
    }
}

TEST_CASE("cone branch of the elliptic-quintic exclusion", "[surfaces]") {
    const RuledSurface cone(1, 3);
    CHECK(intersect(cone, {1, 5}, {1, 3}) == 5);   // degree pairing picks out b
    CHECK(intersect(cone, {2, 7}, {1, 3}) == 7);   // independent of a
    CHECK(section_pairing(cone, {1, 5}) == 2);     // forced class meets the section twice

    const auto cert = elliptic_quintic_cone_exclusion();
    CHECK(cert.verdict == cert::Verdict::Excluded);
    REQUIRE(cert.contradiction.has_value());
    const auto& last = cert.steps[cert.contradiction->second];
    CHECK(last.lhs == 2);
    CHECK(last.rhs == 1);
    cert::validate(cert, [](const std::string&) { return true; });
}
