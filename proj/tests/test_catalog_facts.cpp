#include <catch2/catch_amalgamated.hpp>

#include "fano2/defaults.hpp"

using namespace fano2;
using namespace fano2::catalog;

TEST_CASE("default catalog loads and validates", "[catalog]") {
    const auto cat = load_catalog();
    CHECK(cat.entries.size() == 36);
    CHECK(candidates_for_screening(cat).size() == 36);
    for (size_t i = 0; i < cat.entries.size(); ++i) CHECK(cat.entries[i].number == static_cast<int>(i) + 1);
}

TEST_CASE("selected entries carry the expected descriptors", "[catalog]") {
    const auto cat = load_catalog();

    const auto& e25 = cat.entry(25);
    REQUIRE(e25.contractions.size() == 1);
    CHECK(e25.contractions[0].kind == ContractionKind::BlowupCurve);
    CHECK(*e25.contractions[0].ambient == AmbientName::P3);
    CHECK(e25.contractions[0].curve->p_a == 1);
    CHECK(e25.contractions[0].curve->degree == 4);
    CHECK(e25.b3 == 2);

    const auto& e35 = cat.entry(35);
    CHECK(e35.primitive);
    CHECK((e35.lengths.first == 2 && e35.lengths.second == 2));
    CHECK(e35.contractions[0].kind == ContractionKind::BlowupPoint);
    CHECK(*e35.contractions[0].ambient == AmbientName::P3);

    const auto& e24 = cat.entry(24);
    CHECK(e24.primitive);
    CHECK(std::min(e24.lengths.first, e24.lengths.second) == 1);

    const auto& e14 = cat.entry(14);
    CHECK(e14.contractions[0].complete_intersection);
    CHECK(e14.contractions[0].curve->degree == 5);

    const auto& e17 = cat.entry(17);
    CHECK(e17.contractions.size() == 2);  // two curve blow-down structures

    const auto& e34 = cat.entry(34);
    CHECK(e34.is_p1xp2);
}

TEST_CASE("construction records", "[catalog]") {
    const auto cat = load_catalog();

    const auto r36 = constructions_for(cat, 36);
    REQUIRE(r36.size() == 1);
    CHECK(r36[0].type_tag == TypeTag::B3);
    CHECK(r36[0].checklist == std::vector<std::string>{"0", "1", "2", "3"});

    const auto r31 = constructions_for(cat, 31);
    REQUIRE(r31.size() == 2);
    CHECK(std::any_of(r31.begin(), r31.end(), [](const ConstructionRecord& r) {
        return r.counterexample_variant &&
               std::find(r.checklist.begin(), r.checklist.end(), "II") == r.checklist.end();
    }));

    CHECK(constructions_for(cat, 1).empty());
    for (int n : {22, 26}) CHECK(constructions_for(cat, n).size() == 2);
    CHECK(constructions_for(cat, 22)[0].type_tag == TypeTag::A2);
    CHECK(constructions_for(cat, 22)[1].type_tag == TypeTag::A4);
}

TEST_CASE("catalog validation rejects corrupted tables", "[catalog]") {
    CHECK_THROWS_AS(catalog::parse_catalog("entry number=x\n"), FormatError);
    CHECK_THROWS_AS(catalog::load_catalog_text("catalog-schema 1\n"), ValidationError);

    // drop one entry
    const std::string text = embedded::catalog_text();
    const auto pos = text.find("entry number=36");
    CHECK_THROWS_AS(catalog::load_catalog_text(text.substr(0, pos)), ValidationError);

    // break the b3 relation of a blow-up entry
    std::string broken = text;
    const std::string needle = "b3 value=44 prov=external";
    broken.replace(broken.find(needle), needle.size(), "b3 value=45 prov=external");
    CHECK_THROWS_AS(catalog::load_catalog_text(broken), ValidationError);

    // move an admissible curve off the menu
    std::string offmenu = text;
    const std::string line = "contraction kind=blowup-curve ambient=P3 pa=0 degree=1 prov=pinned note=\"line\"";
    offmenu.replace(offmenu.find(line), line.size(),
                    "contraction kind=blowup-curve ambient=P3 pa=0 degree=9 prov=pinned note=\"line\"");
    CHECK_THROWS_AS(catalog::load_catalog_text(offmenu), ValidationError);

    CHECK_THROWS_AS(catalog::load_catalog_file("/nonexistent/catalog.txt"), FormatError);
}

TEST_CASE("fact table lookups", "[facts]") {
    const auto table = load_facts();
    CHECK(table.size() >= 15);
    CHECK(table.contains("qi02-quintic-eu3"));
    const auto& f = table.get("hw81-cubic-cone-resolution");
    CHECK(!f.statement.empty());
    CHECK(!f.source.empty());
    CHECK_THROWS_AS(table.get("no-such-fact"), FactError);

    CHECK_THROWS_AS(facts::parse_facts("fact dup\n  statement \"s\"\n  source \"s\"\nfact dup\n  statement \"s\"\n  source \"s\"\n"),
                    FormatError);
    CHECK_THROWS_AS(facts::parse_facts("fact one\n  statement \"s\"\n"), FormatError);
    CHECK_THROWS_AS(facts::load_facts_file("/nonexistent/facts.txt"), FormatError);
}
