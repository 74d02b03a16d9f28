#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fano2/poly.hpp"

using namespace fano2;
using namespace fano2::polyverify;

namespace {

// Random sparse polynomial in up to 4 variables, degree <= 5 per term.
Poly random_poly(std::mt19937& rng, int max_terms = 6) {
    static const std::vector<std::string> vars = {"x", "y", "z", "t"};
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> exp(0, 2);
    Poly p;
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Poly term = Poly::constant(coef(rng));
        int total = 0;
        for (const auto& v : vars) {
            const int e = exp(rng);
            if (total + e > 5) break;
            total += e;
            term = term * Poly::variable(v, e);
        }
        p += term;
    }
    return p;
}

Substitution random_substitution(std::mt19937& rng) {
    Substitution s;
    for (const char* v : {"x", "y", "z", "t"}) s.set(v, random_poly(rng, 3));
    return s;
}

} // namespace

TEST_CASE("parser and canonical printing", "[poly]") {
    CHECK(parse_poly("x^2*z + y^3 + x*y*t") == parse_poly("y^3 + x*y*t + x^2*z"));
    CHECK(parse_poly("(x + y)^2") == parse_poly("x^2 + 2*x*y + y^2"));
    CHECK(parse_poly("-x + x").is_zero());
    CHECK(parse_poly("3 - 2 - 1").is_zero());
    CHECK(parse_poly("x - (y - z)") == parse_poly("x - y + z"));
    CHECK(parse_poly("2*x*y").str() == "2*x*y");
    CHECK(parse_poly("x - 1").str() == "x - 1");
    CHECK(Poly().str() == "0");
    CHECK_THROWS_AS(parse_poly("x +"), FormatError);
    CHECK_THROWS_AS(parse_poly("(x"), FormatError);
    CHECK_THROWS_AS(parse_poly("x ^ y"), FormatError);
}

TEST_CASE("canonical form never stores zero coefficients", "[poly][property]") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const Poly p = random_poly(rng), q = random_poly(rng);
        for (const auto& [m, c] : (p + q).terms()) CHECK(c != 0);
        for (const auto& [m, c] : (p * q).terms()) CHECK(c != 0);
        CHECK((p - p).is_zero());
        CHECK((p * q) == (q * p));
    }
}

TEST_CASE("substitution examples", "[poly]") {
    const Poly p = parse_poly("x^2*z + y^3 + x*y*t");
    const Substitution id = Substitution::identity_on({"x", "y", "z", "t"});
    CHECK(substitute(p, id) == p);

    Substitution beta = Substitution::identity_on({"x1", "x2", "x3"});
    beta.set("x1", parse_poly("x1 - x2*x3*(x2 + x3)"));
    CHECK(substitute(parse_poly("x1 + x2*x3*(x2 + x3)"), beta) == Poly::variable("x1"));

    Substitution alpha;
    for (const char* v : {"x1", "x2", "x3"}) alpha.set(v, -Poly::variable(v));
    const Poly q = parse_poly("x1*x2 - x3^3 + 2*x1");
    CHECK(substitute(substitute(q, alpha), alpha) == q);

    Substitution partial;
    partial.set("x", Poly::variable("y"));
    CHECK_THROWS_AS(substitute(parse_poly("x + z"), partial), SubstError);
}

TEST_CASE("substitution is a ring homomorphism", "[poly][property]") {
    std::mt19937 rng(20240813);
    for (int trial = 0; trial < 550; ++trial) {
        const Poly p = random_poly(rng), q = random_poly(rng);
        const Substitution s = random_substitution(rng);
        CHECK(substitute(p * q, s) == substitute(p, s) * substitute(q, s));
        CHECK(substitute(p + q, s) == substitute(p, s) + substitute(q, s));
    }
}

TEST_CASE("jacobian examples", "[poly]") {
    const Poly s2 = parse_poly("y*x1 + x2*x3*(x2 + x3)");
    CHECK(s2.derivative("y") == Poly::variable("x1"));
    CHECK(Poly::constant(7).derivative("x").is_zero());

    const Poly cubic = parse_poly("x^2*z + y^3 + x*y*t");
    CHECK(cubic.derivative("z") == parse_poly("x^2"));
    CHECK(cubic.derivative("w").is_zero());  // absent variable

    // all partials vanish at the vertex
    const auto partials = jacobian(s2, {"x1", "x2", "x3", "y"});
    REQUIRE(partials.size() == 4);
    const std::map<std::string, Rat> vertex = {{"x1", Rat(0)}, {"x2", Rat(0)}, {"x3", Rat(0)}, {"y", Rat(0)}};
    for (const auto& d : partials) CHECK(d.evaluate(vertex) == 0);
    // but not at a general point
    const std::map<std::string, Rat> general = {{"x1", Rat(1)}, {"x2", Rat(2)}, {"x3", Rat(3)}, {"y", Rat(5)}};
    CHECK(partials[0].evaluate(general) == 5);  // d/dx1 = y
}

TEST_CASE("derivation satisfies the Leibniz rule", "[poly][property]") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 550; ++trial) {
        const Poly p = random_poly(rng), q = random_poly(rng);
        for (const char* v : {"x", "y"}) {
            const Poly lhs = (p * q).derivative(v);
            const Poly rhs = p * q.derivative(v) + q * p.derivative(v);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("exact division detects multiples", "[poly]") {
    const Poly h = parse_poly("x^2 + y - 1");
    const Poly q = parse_poly("3*x*y - y^2 + 2");
    CHECK(divide_exact(h * q, h).has_value());
    CHECK(*divide_exact(h * q, h) == q);
    CHECK(!divide_exact(h * q + Poly::constant(1), h).has_value());
    CHECK(!divide_exact(parse_poly("x"), parse_poly("y")).has_value());
    CHECK_THROWS_AS(divide_exact(h, Poly()), InputError);
}
