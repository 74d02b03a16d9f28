#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fano2/defaults.hpp"
#include "fano2/screen.hpp"
#include "oracles.hpp"

using namespace fano2;
using namespace fano2::screen;
using lattice::AmbientName;

namespace {

const catalog::Catalog& cat() {
    static const catalog::Catalog c = load_catalog();
    return c;
}

const facts::FactTable& table() {
    static const facts::FactTable f = load_facts();
    return f;
}

std::pair<Rat, Rat> closing_pair(const cert::Certificate& c) {
    REQUIRE(c.contradiction.has_value());
    const auto& a = c.steps[c.contradiction->first];
    return {a.lhs, a.rhs};
}

// Perturb every external-provenance field of the catalog without leaving
// the validity domain, so the screen must reproduce identical verdicts.
catalog::Catalog randomized_externals(std::mt19937& rng) {
    catalog::Catalog c = cat();
    std::uniform_int_distribution<int> second_len(1, 3);
    std::uniform_int_distribution<long long> vd_pa(0, 5), vd_deg(1, 9);
    std::uniform_int_distribution<long long> hg_pa(2, 8), hg_deg(1, 12);
    std::uniform_int_distribution<long long> disc(1, 8);
    for (auto& e : c.entries) {
        if (e.lengths_prov == catalog::Provenance::External && !e.primitive)
            e.lengths = {1, second_len(rng)};
        for (auto& d : e.contractions) {
            if (d.prov != catalog::Provenance::External) continue;
            d.note = "perturbed external descriptor";
            if (d.kind == lattice::ContractionKind::BlowupCurve) {
                const auto W = lattice::ambient(*d.ambient);
                if (W.fano_index == 2 && W.name != AmbientName::V5) {
                    d.curve = lattice::CurveData{vd_pa(rng), vd_deg(rng)};
                } else {
                    d.curve = lattice::CurveData{hg_pa(rng), hg_deg(rng)};
                }
                e.b3 = W.b3_ambient + 2 * d.curve->p_a;
            }
            if (d.kind == lattice::ContractionKind::ConicBundle && d.disc_degree) d.disc_degree = disc(rng);
        }
    }
    catalog::validate(c);
    return c;
}

} // namespace

TEST_CASE("imprimitive windows", "[screen]") {
    const auto p3_cubic = make_setup(AmbientName::P3, {1, 3});
    const auto w1 = imprimitive_window(p3_cubic);
    CHECK(w1.lower == 2);
    CHECK(w1.upper == 4);
    CHECK(w1.feasible);

    const auto v4 = make_setup(AmbientName::V4, {0, 2});
    const auto w2 = imprimitive_window(v4);
    CHECK(w2.lower == 6);
    CHECK(w2.upper == 5);
    CHECK(!w2.feasible);

    const auto v1 = make_setup(AmbientName::V1, {0, 1});
    const auto w3 = imprimitive_window(v1);
    CHECK(w3.lower == 40);
    CHECK(w3.upper == 2);
    CHECK(!w3.feasible);
}

TEST_CASE("setup degrees follow the ambient", "[screen]") {
    CHECK(make_setup(AmbientName::P3, {0, 1}).s1sq_s2 == 3);
    CHECK(make_setup(AmbientName::Q3, {0, 1}).s1sq_s2 == 4);
    CHECK(make_setup(AmbientName::V5, {0, 1}).s1sq_s2 == 5);
    CHECK(make_setup(AmbientName::V4, {0, 1}).s1sq_s2 == 4);
    CHECK(make_setup(AmbientName::P3, {0, 1}).deg_s1 == 9);
    CHECK(make_setup(AmbientName::Q3, {0, 1}).deg_s2 == 4);
}

TEST_CASE("window floor is monotone in genus and ambient Betti number", "[screen][property]") {
    const std::vector<AmbientName> ws = {AmbientName::P3, AmbientName::Q3, AmbientName::V1, AmbientName::V2,
                                         AmbientName::V3, AmbientName::V4, AmbientName::V5};
    for (const auto w : ws)
        for (long long pa = 0; pa <= 3; ++pa) {
            const auto lo = imprimitive_window(make_setup(w, {pa, 1})).lower;
            const auto hi = imprimitive_window(make_setup(w, {pa + 1, 1})).lower;
            CHECK(lo < hi);
        }
    // same genus, B3(W) increasing across the del Pezzo ambients
    for (long long pa = 0; pa <= 3; ++pa) {
        long long prev = imprimitive_window(make_setup(AmbientName::V4, {pa, 1})).lower;
        for (const auto w : {AmbientName::V3, AmbientName::V2, AmbientName::V1}) {
            const long long cur = imprimitive_window(make_setup(w, {pa, 1})).lower;
            CHECK(cur > prev);
            prev = cur;
        }
    }
}

TEST_CASE("genus bounds per ambient", "[screen]") {
    CHECK(genus_bound(make_setup(AmbientName::P3, {0, 3})) == 1);
    CHECK(genus_bound(make_setup(AmbientName::Q3, {0, 3})) == 1);
    CHECK(genus_bound(make_setup(AmbientName::V5, {0, 3})) == 1);
    CHECK(genus_bound(make_setup(AmbientName::V4, {0, 1})) == -1);  // no genus is feasible at all
}

TEST_CASE("N-term equality cases by raw enumeration", "[screen][property]") {
    const auto cases = oracles::nterm_equality_cases_bruteforce(10);
    REQUIRE(cases.size() == 2);
    CHECK(cases.count({1, 0, 0}) == 1);
    CHECK(cases.count({1, 1, 1}) == 1);
}

TEST_CASE("refined exclusions fire exactly on the three survivors", "[screen]") {
    CHECK(refined_exclusions(make_setup(AmbientName::P3, {1, 5})).has_value());
    CHECK(refined_exclusions(make_setup(AmbientName::Q3, {1, 5})).has_value());
    CHECK(refined_exclusions(make_setup(AmbientName::Q3, {1, 4})).has_value());
    CHECK(refined_exclusions(make_setup(AmbientName::V5, {1, 5}, true)).has_value());
    CHECK(!refined_exclusions(make_setup(AmbientName::P3, {1, 4})).has_value());
    CHECK(!refined_exclusions(make_setup(AmbientName::P3, {0, 3})).has_value());
    CHECK(!refined_exclusions(make_setup(AmbientName::V5, {0, 2})).has_value());

    const auto p3q = refined_exclusions(make_setup(AmbientName::P3, {1, 5}));
    CHECK(p3q->verdict == cert::Verdict::Excluded);
    cert::validate(*p3q, [&](const std::string& id) { return table().contains(id); });
    // the cone branch carries the forced class and the vertex pairing
    bool has_degree_step = false, has_vertex_step = false;
    for (const auto& s : p3q->steps) {
        if (s.desc.find("forces b = 5") != std::string::npos) has_degree_step = true;
        if (s.desc.find("(C0 + 5f).C0 = 2") != std::string::npos) has_vertex_step = true;
    }
    CHECK(has_degree_step);
    CHECK(has_vertex_step);

    const auto v5 = refined_exclusions(make_setup(AmbientName::V5, {1, 5}, true));
    bool cartier_final = false;
    for (const auto& s : v5->steps)
        if (s.desc.find("smooth Cartier divisor C contains a singular point") != std::string::npos)
            cartier_final = true;
    CHECK(cartier_final);
}

TEST_CASE("primitive certificates end in the stated inequalities", "[screen]") {
    const auto c2 = primitive_certificate(cat().entry(2), cat());
    CHECK(closing_pair(c2) == std::pair<Rat, Rat>{Rat(4), Rat(37)});

    const auto c6 = primitive_certificate(cat().entry(6), cat());
    CHECK(closing_pair(c6) == std::pair<Rat, Rat>{Rat(8), Rat(15)});

    const auto c8 = primitive_certificate(cat().entry(8), cat());
    CHECK(closing_pair(c8) == std::pair<Rat, Rat>{Rat(4), Rat(16)});
    bool eu1 = false, eu2 = false;
    for (const auto& s : c8.steps) {
        if (s.desc.find("plane quartic") != std::string::npos && s.rhs == 1) eu1 = true;
        if (s.desc.find("2 Sigma + 4f") != std::string::npos && s.rhs == 2) eu2 = true;
    }
    CHECK(eu1);
    CHECK(eu2);

    const auto c18 = primitive_certificate(cat().entry(18), cat());
    CHECK(closing_pair(c18) == std::pair<Rat, Rat>{Rat(1), Rat(2)});
    bool solver_step = false;
    for (const auto& s : c18.steps)
        if (s.desc.find("unique survivor") != std::string::npos && s.rhs == 1) solver_step = true;
    CHECK(solver_step);

    for (int n : {32, 35}) {
        const auto c = primitive_certificate(cat().entry(n), cat());
        CHECK(c.verdict == cert::Verdict::Excluded);
        CHECK(closing_pair(c) == std::pair<Rat, Rat>{Rat(0), Rat(1)});
    }

    CHECK_THROWS_AS(primitive_certificate(cat().entry(25), cat()), InputError);
}

TEST_CASE("screen_entry routes the pipeline", "[screen]") {
    const auto c25 = screen_entry(cat().entry(25), cat());
    CHECK(c25.verdict == cert::Verdict::Admissible);
    REQUIRE(c25.constructions.size() == 1);
    CHECK(c25.constructions[0].type == "A1");

    const auto c35 = screen_entry(cat().entry(35), cat());
    CHECK(c35.verdict == cert::Verdict::Excluded);

    const auto c17 = screen_entry(cat().entry(17), cat());
    CHECK(c17.verdict == cert::Verdict::Excluded);
    CHECK(c17.constructions.empty());
    // both realizations appear
    bool r1 = false, r2 = false;
    for (const auto& s : c17.steps) {
        if (s.desc.rfind("realization 1", 0) == 0) r1 = true;
        if (s.desc.rfind("realization 2", 0) == 0) r2 = true;
    }
    CHECK(r1);
    CHECK(r2);
}

TEST_CASE("full classification", "[screen]") {
    const auto rep = classify_all(cat(), table());
    const std::vector<int> expected = {20, 21, 22, 24, 25, 26, 27, 28, 29, 30, 31, 33, 34, 36};
    CHECK(rep.admissible == expected);
    CHECK(rep.certificates.size() == 36);
    CHECK(rep.certificates.size() - rep.admissible.size() == 22);
    CHECK(rep.double_construction_entries == std::vector<int>{22, 26});

    // determinism: two runs serialize identically
    const auto again = classify_all(cat(), table());
    CHECK(report_json(rep).dump() == report_json(again).dump());

    // every emitted step revalidates
    for (const auto& c : rep.certificates)
        cert::validate(c, [&](const std::string& id) { return table().contains(id); });

    // soundness of the closing pairs
    for (const auto& c : rep.certificates) {
        if (c.verdict != cert::Verdict::Excluded) continue;
        const auto [u, l] = closing_pair(c);
        CHECK(u < l);
        const auto& hyp = c.steps[c.contradiction->second];
        CHECK(hyp.hypothesis);
        CHECK(hyp.lhs == l);
        CHECK(hyp.rhs == u);
    }
}

TEST_CASE("certificate validation catches tampering", "[screen]") {
    auto c = primitive_certificate(cat().entry(2), cat());
    auto broken = c;
    broken.steps[3].lhs = Rat(100);  // falsify a numeric step
    CHECK_THROWS_AS(cert::validate(broken, [](const std::string&) { return true; }),
                    ValidationError);

    auto missing = c;
    missing.contradiction.reset();
    CHECK_THROWS_AS(cert::validate(missing, [](const std::string&) { return true; }),
                    ValidationError);

    CHECK_THROWS_AS(cert::validate(c, [](const std::string&) { return false; }), FactError);
}

TEST_CASE("provenance firewall: external data never moves a verdict", "[screen][firewall]") {
    const auto baseline = classify_all(cat(), table());
    const auto pinned_json = [&](const Report& r, int n) {
        for (const auto& c : r.certificates)
            if (c.entry == n) return cert::to_json(c).dump();
        return std::string();
    };
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 12; ++trial) {
        const auto mutated = randomized_externals(rng);
        const auto rep = classify_all(mutated, table());
        CHECK(rep.admissible == baseline.admissible);
        CHECK(rep.double_construction_entries == baseline.double_construction_entries);
        for (size_t i = 0; i < rep.certificates.size(); ++i)
            CHECK(rep.certificates[i].verdict == baseline.certificates[i].verdict);
        // fully pinned certificates do not move at all
        for (int n : {2, 6, 8, 14, 17, 18, 23, 32, 35})
            CHECK(pinned_json(rep, n) == pinned_json(baseline, n));
    }
}
