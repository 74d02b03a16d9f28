#pragma once

// Golden polynomial identities behind the two explicit constructions: the
// shifted-cubic automorphism on the weighted-cone chart, and the
// affine-modification chain that straightens the quadric line-blow-up
// complement down to a free ring in three variables.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <fano2/embedded_data.hpp>

#include "fano2/poly.hpp"
#include "fano2/presentation.hpp"

namespace fano2::goldens {

using polyverify::Chain;
using polyverify::ChainReport;
using polyverify::parse_chain;
using polyverify::parse_poly;
using polyverify::Poly;
using polyverify::substitute;
using polyverify::Substitution;

// The shear that straightens the boundary cubic on the chart A3/(x -> -x):
// beta(x1) = x1 - x2*x3*(x2 + x3), fixing x2 and x3.
inline Substitution beta_shear() {
    Substitution s = Substitution::identity_on({"x1", "x2", "x3"});
    s.set("x1", parse_poly("x1 - x2*x3*(x2 + x3)"));
    return s;
}

// The sign involution a -> -a on all three coordinates.
inline Substitution sign_involution() {
    Substitution s;
    for (const char* v : {"x1", "x2", "x3"}) s.set(v, -Poly::variable(v));
    return s;
}

struct BetaReport {
    bool shear_straightens = false;   // beta(x1 + x2*x3*(x2+x3)) = x1
    bool involution_squares = false;  // alpha o alpha = id on the boundary cubic
    bool commutes = false;            // alpha o beta = beta o alpha on x1
    bool passed = false;
};

inline BetaReport verify_beta() {
    BetaReport r;
    const Substitution beta = beta_shear();
    const Substitution alpha = sign_involution();
    const Poly boundary = parse_poly("x1 + x2*x3*(x2 + x3)");
    r.shear_straightens = substitute(boundary, beta) == Poly::variable("x1");
    r.involution_squares = substitute(substitute(boundary, alpha), alpha) == boundary;
    r.commutes = true;
    for (const char* v : {"x1", "x2", "x3"}) {
        const Poly gen = Poly::variable(v);
        if (substitute(substitute(gen, beta), alpha) != substitute(substitute(gen, alpha), beta)) r.commutes = false;
    }
    r.passed = r.shear_straightens && r.involution_squares && r.commutes;
    return r;
}

inline Chain default_chain() { return parse_chain(embedded::chain_text()); }

inline Chain load_chain_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open chain file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_chain(ss.str());
}

// The full chain check: every link passes and the final ring is free of
// rank 3.
inline ChainReport verify_modification_chain(const Chain& chain) { return polyverify::verify_iso_chain(chain); }

inline bool chain_passes(const ChainReport& rep) { return rep.all_passed && rep.free_variables == 3; }

} // namespace fano2::goldens
