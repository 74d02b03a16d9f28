#include <catch2/catch_amalgamated.hpp>

#include "fano2/goldens.hpp"

using namespace fano2;
using namespace fano2::goldens;

TEST_CASE("shear identity on the weighted-cone chart", "[goldens]") {
    const auto rep = verify_beta();
    CHECK(rep.shear_straightens);
    CHECK(rep.involution_squares);
    CHECK(rep.commutes);
    CHECK(rep.passed);
}

TEST_CASE("the shear composed with itself undoes nothing surprising", "[goldens]") {
    // beta is an automorphism: applying it to x1 twice subtracts the cubic twice
    const auto beta = beta_shear();
    const Poly twice = substitute(substitute(Poly::variable("x1"), beta), beta);
    CHECK(twice == parse_poly("x1 - 2*x2*x3*(x2 + x3)"));
}

TEST_CASE("embedded chain text parses to five links", "[goldens]") {
    const auto chain = default_chain();
    CHECK(chain.start.variables == std::vector<std::string>{"x0", "x2", "x3", "x4", "w"});
    CHECK(chain.links.size() == 5);
    CHECK(chain.links[1].label == "regroup");
}

TEST_CASE("chain passes end to end", "[goldens]") {
    const auto rep = verify_modification_chain(default_chain());
    CHECK(rep.all_passed);
    CHECK(rep.free_variables == 3);
    CHECK(chain_passes(rep));
}
