#pragma once

// The candidate table: 36 deformation classes with extremal data, blow-up
// descriptors, curve menus and construction records, parsed from a flat
// text format and validated against the engine's structural invariants.
// Every field carries a provenance mark; `pinned` fields feed pinned
// assertions, `external` fields come from the standard literature table and
// no screen verdict may depend on them.

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fano2/errors.hpp"
#include "fano2/lattice.hpp"

namespace fano2::catalog {

using lattice::AmbientName;
using lattice::ContractionKind;
using lattice::CurveData;
using lattice::Int;

enum class Provenance { Pinned, External };

inline const char* provenance_str(Provenance p) { return p == Provenance::Pinned ? "pinned" : "external"; }

struct ContractionDescriptor {
    ContractionKind kind = ContractionKind::BlowupCurve;
    std::optional<AmbientName> ambient;
    std::optional<CurveData> curve;
    bool complete_intersection = false;          // V5 hyperplane-pair curve
    std::optional<Int> disc_degree;              // conic bundles
    std::optional<std::pair<Int, Int>> branch;   // double covers
    std::string base;                            // double covers: base 3-fold
    Provenance prov = Provenance::External;
    std::string note;
};

enum class TypeTag { A1, A2, A3, A4, B1, B2, B3 };

inline const char* type_tag_str(TypeTag t) {
    switch (t) {
        case TypeTag::A1: return "A1";
        case TypeTag::A2: return "A2";
        case TypeTag::A3: return "A3";
        case TypeTag::A4: return "A4";
        case TypeTag::B1: return "B1";
        case TypeTag::B2: return "B2";
        case TypeTag::B3: return "B3";
    }
    return "?";
}

inline std::optional<TypeTag> type_tag_from_str(const std::string& s) {
    if (s == "A1") return TypeTag::A1;
    if (s == "A2") return TypeTag::A2;
    if (s == "A3") return TypeTag::A3;
    if (s == "A4") return TypeTag::A4;
    if (s == "B1") return TypeTag::B1;
    if (s == "B2") return TypeTag::B2;
    if (s == "B3") return TypeTag::B3;
    return std::nullopt;
}

struct ConstructionRecord {
    int mm_number = 0;
    TypeTag type_tag = TypeTag::A1;
    std::vector<std::string> checklist;
    std::string source;
    bool counterexample_variant = false;  // an extra route recorded to show a condition is not necessary
};

struct MMEntry {
    int number = 0;
    Int b3 = 0;
    std::pair<Int, Int> lengths{1, 1};
    bool primitive = false;
    bool is_p1xp2 = false;
    std::vector<ContractionDescriptor> contractions;
    Provenance b3_prov = Provenance::External;
    Provenance lengths_prov = Provenance::External;
    std::string b3_note;
};

struct CurveMenu {
    AmbientName ambient;
    std::string kind;  // "rational", "elliptic", "ci"
    Int dmin = 0, dmax = 0;
};

struct Catalog {
    std::vector<MMEntry> entries;                 // sorted by number
    std::vector<ConstructionRecord> records;
    std::vector<CurveMenu> menus;

    const MMEntry& entry(int number) const {
        for (const MMEntry& e : entries)
            if (e.number == number) return e;
        throw KeyError("no catalog entry " + std::to_string(number));
    }
};

// --- parsing ---------------------------------------------------------------

namespace detail {

inline std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Split a line into whitespace-separated tokens, keeping "..." groups whole.
inline std::vector<std::string> tokenize(const std::string& line, size_t lineno) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') { quoted = !quoted; cur += ch; continue; }
        if (!quoted && (ch == ' ' || ch == '\t')) {
            if (!cur.empty()) out.push_back(cur), cur.clear();
        } else {
            cur += ch;
        }
    }
    if (quoted) throw FormatError("catalog line " + std::to_string(lineno) + ": unbalanced quote");
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct KeyValues {
    std::map<std::string, std::string> kv;
    size_t lineno;

    bool has(const std::string& k) const { return kv.count(k) != 0; }
    std::string get(const std::string& k) const {
        auto it = kv.find(k);
        if (it == kv.end())
            throw FormatError("catalog line " + std::to_string(lineno) + ": missing key '" + k + "'");
        return it->second;
    }
    std::string get_or(const std::string& k, const std::string& dflt) const {
        auto it = kv.find(k);
        return it == kv.end() ? dflt : it->second;
    }
    Int get_int(const std::string& k) const {
        try {
            return std::stoll(get(k));
        } catch (const std::exception&) {
            throw FormatError("catalog line " + std::to_string(lineno) + ": key '" + k + "' is not an integer");
        }
    }
};

inline KeyValues parse_kv(const std::vector<std::string>& tokens, size_t from, size_t lineno) {
    KeyValues r;
    r.lineno = lineno;
    for (size_t i = from; i < tokens.size(); ++i) {
        const std::string& t = tokens[i];
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw FormatError("catalog line " + std::to_string(lineno) + ": expected key=value, got '" + t + "'");
        std::string v = t.substr(eq + 1);
        if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
        r.kv[t.substr(0, eq)] = v;
    }
    return r;
}

inline Provenance parse_prov(const std::string& s, size_t lineno) {
    if (s == "pinned") return Provenance::Pinned;
    if (s == "external") return Provenance::External;
    throw FormatError("catalog line " + std::to_string(lineno) + ": unknown provenance '" + s + "'");
}

inline ContractionKind parse_kind(const std::string& s, size_t lineno) {
    if (s == "blowup-curve") return ContractionKind::BlowupCurve;
    if (s == "blowup-point") return ContractionKind::BlowupPoint;
    if (s == "conic-bundle") return ContractionKind::ConicBundle;
    if (s == "del-pezzo-fibration") return ContractionKind::DelPezzoFibration;
    if (s == "proj-bundle") return ContractionKind::ProjBundle;
    if (s == "double-cover-factor") return ContractionKind::DoubleCoverFactor;
    throw FormatError("catalog line " + std::to_string(lineno) + ": unknown contraction kind '" + s + "'");
}

} // namespace detail

inline Catalog parse_catalog(const std::string& text) {
    using namespace detail;
    Catalog cat;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    MMEntry* cur = nullptr;
    bool schema_seen = false;

    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        const auto tokens = tokenize(s, lineno);
        const std::string& head = tokens[0];

        if (head == "catalog-schema") {
            if (tokens.size() != 2 || tokens[1] != "1")
                throw FormatError("catalog line " + std::to_string(lineno) + ": unsupported schema");
            schema_seen = true;
        } else if (head == "menu") {
            auto kv = parse_kv(tokens, 1, lineno);
            CurveMenu m;
            auto amb = lattice::ambient_from_str(kv.get("ambient"));
            if (!amb) throw FormatError("catalog line " + std::to_string(lineno) + ": bad ambient");
            m.ambient = *amb;
            m.kind = kv.get("kind");
            m.dmin = kv.get_int("dmin");
            m.dmax = kv.get_int("dmax");
            cat.menus.push_back(m);
        } else if (head == "entry") {
            auto kv = parse_kv(tokens, 1, lineno);
            MMEntry e;
            e.number = static_cast<int>(kv.get_int("number"));
            cat.entries.push_back(e);
            cur = &cat.entries.back();
        } else if (head == "construction") {
            auto kv = parse_kv(tokens, 1, lineno);
            ConstructionRecord r;
            r.mm_number = static_cast<int>(kv.get_int("entry"));
            auto tag = type_tag_from_str(kv.get("type"));
            if (!tag) throw FormatError("catalog line " + std::to_string(lineno) + ": bad construction type");
            r.type_tag = *tag;
            std::istringstream cl(kv.get("checklist"));
            std::string item;
            while (std::getline(cl, item, ',')) r.checklist.push_back(item);
            r.source = kv.get_or("source", "");
            r.counterexample_variant = kv.get_or("variant", "") == "counterexample";
            cat.records.push_back(std::move(r));
        } else if (head == "b3" || head == "lengths" || head == "primitive" || head == "p1xp2" ||
                   head == "contraction") {
            if (!cur) throw FormatError("catalog line " + std::to_string(lineno) + ": field outside entry");
            auto kv = parse_kv(tokens, 1, lineno);
            if (head == "b3") {
                cur->b3 = kv.get_int("value");
                cur->b3_prov = parse_prov(kv.get("prov"), lineno);
                cur->b3_note = kv.get_or("note", "");
            } else if (head == "lengths") {
                cur->lengths = {kv.get_int("mu1"), kv.get_int("mu2")};
                cur->lengths_prov = parse_prov(kv.get("prov"), lineno);
            } else if (head == "primitive") {
                cur->primitive = kv.get("value") == "yes";
            } else if (head == "p1xp2") {
                cur->is_p1xp2 = kv.get("value") == "yes";
            } else {  // contraction
                ContractionDescriptor d;
                d.kind = parse_kind(kv.get("kind"), lineno);
                if (kv.has("ambient")) {
                    auto amb = lattice::ambient_from_str(kv.get("ambient"));
                    if (!amb) throw FormatError("catalog line " + std::to_string(lineno) + ": bad ambient");
                    d.ambient = *amb;
                }
                if (kv.has("pa") || kv.has("degree")) d.curve = CurveData{kv.get_int("pa"), kv.get_int("degree")};
                d.complete_intersection = kv.get_or("ci", "no") == "yes";
                if (kv.has("disc")) d.disc_degree = kv.get_int("disc");
                if (kv.has("branch")) {
                    const std::string b = kv.get("branch");
                    auto comma = b.find(',');
                    if (comma == std::string::npos)
                        throw FormatError("catalog line " + std::to_string(lineno) + ": branch must be a,b");
                    d.branch = {std::stoll(b.substr(0, comma)), std::stoll(b.substr(comma + 1))};
                }
                d.base = kv.get_or("base", "");
                d.prov = parse_prov(kv.get("prov"), lineno);
                d.note = kv.get_or("note", "");
                cur->contractions.push_back(std::move(d));
            }
        } else {
            throw FormatError("catalog line " + std::to_string(lineno) + ": unrecognized record '" + head + "'");
        }
    }
    if (!schema_seen) throw FormatError("catalog text has no catalog-schema line");
    std::sort(cat.entries.begin(), cat.entries.end(),
              [](const MMEntry& a, const MMEntry& b) { return a.number < b.number; });
    return cat;
}

// --- queries ----------------------------------------------------------------

inline std::vector<const MMEntry*> candidates_for_screening(const Catalog& cat) {
    std::vector<const MMEntry*> out;
    out.reserve(cat.entries.size());
    for (const MMEntry& e : cat.entries) out.push_back(&e);
    return out;
}

inline std::vector<ConstructionRecord> constructions_for(const Catalog& cat, int number) {
    std::vector<ConstructionRecord> out;
    for (const ConstructionRecord& r : cat.records)
        if (r.mm_number == number) out.push_back(r);
    return out;
}

// The admissible blow-up menu: the (ambient, curve) pairs that carry
// constructions. Everything else on the candidate menus is screened out.
inline std::optional<TypeTag> admissible_blowup_type(AmbientName w, const CurveData& c, bool ci) {
    if (ci) return std::nullopt;  // the hyperplane-pair curve on V5 is screened out
    switch (w) {
        case AmbientName::P3:
            if (c.p_a == 1 && c.degree >= 3 && c.degree <= 4) return TypeTag::A1;
            if (c.p_a == 0 && c.degree >= 1 && c.degree <= 4) return TypeTag::A2;
            return std::nullopt;
        case AmbientName::Q3:
            if (c.p_a == 0 && c.degree >= 1 && c.degree <= 4) return TypeTag::A3;
            return std::nullopt;
        case AmbientName::V5:
            if (c.p_a == 0 && c.degree >= 1 && c.degree <= 3) return TypeTag::A4;
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

// Entry sets per construction type.
inline const std::map<TypeTag, std::set<int>>& expected_type_map() {
    static const std::map<TypeTag, std::set<int>> m = {
        {TypeTag::A1, {25, 28}},          {TypeTag::A2, {22, 27, 30, 33}},
        {TypeTag::A3, {21, 26, 29, 31}},  {TypeTag::A4, {20, 22, 26}},
        {TypeTag::B1, {24}},              {TypeTag::B2, {34}},
        {TypeTag::B3, {36}},
    };
    return m;
}

inline const std::set<int>& admissible_numbers() {
    static const std::set<int> s = {20, 21, 22, 24, 25, 26, 27, 28, 29, 30, 31, 33, 34, 36};
    return s;
}

// --- validation --------------------------------------------------------------

inline void validate(const Catalog& cat) {
    auto fail = [](int entry, const std::string& what) {
        throw ValidationError("catalog entry " + std::to_string(entry) + ": " + what);
    };

    if (cat.entries.size() != 36) throw ValidationError("catalog must list exactly 36 entries");
    for (size_t i = 0; i < cat.entries.size(); ++i)
        if (cat.entries[i].number != static_cast<int>(i) + 1)
            throw ValidationError("catalog numbers must be exactly 1..36");

    for (const MMEntry& e : cat.entries) {
        if (e.lengths.first < 1 || e.lengths.first > 3 || e.lengths.second < 1 || e.lengths.second > 3)
            fail(e.number, "extremal lengths must lie in {1,2,3}");
        if (e.b3 < 0) fail(e.number, "negative b3");
        if (e.contractions.empty()) fail(e.number, "no contraction descriptors");
        bool has_blowup_curve = false;
        for (const ContractionDescriptor& d : e.contractions) {
            const bool blowup = d.kind == ContractionKind::BlowupCurve;
            has_blowup_curve = has_blowup_curve || blowup;
            if (blowup) {
                if (!d.ambient || !d.curve) fail(e.number, "blow-up descriptor needs ambient and curve");
                const auto W = lattice::ambient(*d.ambient);
                if (e.b3 != W.b3_ambient + 2 * d.curve->p_a)
                    fail(e.number, "b3 does not equal ambient b3 + 2 p_a");
                if (d.curve->degree < 1) fail(e.number, "curve degree must be >= 1");
                // candidate menus constrain low-genus curves on the screened ambients
                if (d.curve->p_a <= 1 &&
                    (*d.ambient == AmbientName::P3 || *d.ambient == AmbientName::Q3 ||
                     *d.ambient == AmbientName::V5)) {
                    const std::string kind = d.complete_intersection ? "ci" : (d.curve->p_a == 0 ? "rational" : "elliptic");
                    bool listed = false;
                    for (const CurveMenu& m : cat.menus)
                        if (m.ambient == *d.ambient && m.kind == kind && d.curve->degree >= m.dmin &&
                            d.curve->degree <= m.dmax)
                            listed = true;
                    if (!listed) fail(e.number, "curve is not on the candidate menu of its ambient");
                }
            } else {
                if (d.curve || d.complete_intersection) fail(e.number, "curve data on a non-blow-up descriptor");
            }
            if (d.disc_degree && d.kind != ContractionKind::ConicBundle)
                fail(e.number, "discriminant degree on a non-conic-bundle descriptor");
        }
        if (e.primitive && has_blowup_curve) fail(e.number, "primitive entry with a curve blow-up descriptor");
        if (!e.primitive && !has_blowup_curve) fail(e.number, "imprimitive entry without a curve blow-up descriptor");
        if (!e.primitive && e.lengths.first != 1 && e.lengths.second != 1)
            fail(e.number, "imprimitive entry must have a length-1 ray (the blow-up side)");
        if (e.is_p1xp2 && e.number != 34) fail(e.number, "only entry 34 is P1 x P2");

        // menu membership of blow-up realizations must match the record table
        const auto records = constructions_for(cat, e.number);
        for (const ContractionDescriptor& d : e.contractions) {
            if (d.kind != ContractionKind::BlowupCurve) continue;
            const auto type = admissible_blowup_type(*d.ambient, *d.curve, d.complete_intersection);
            const bool has_matching_record =
                std::any_of(records.begin(), records.end(), [&](const ConstructionRecord& r) {
                    return type && r.type_tag == *type && !r.counterexample_variant;
                });
            if (type && !has_matching_record)
                fail(e.number, "blow-up realization is on the admissible menu but has no construction record");
            if (!type && !records.empty() && !e.primitive && e.contractions.size() == 1)
                fail(e.number, "entry carries construction records but its realization is screened out");
        }
    }

    // record table against the expected type map
    if (cat.entries[33].is_p1xp2 == false) throw ValidationError("entry 34 must carry the P1 x P2 flag");
    std::map<TypeTag, std::set<int>> found;
    for (const ConstructionRecord& r : cat.records) {
        if (r.mm_number < 1 || r.mm_number > 36) throw ValidationError("construction record for unknown entry");
        if (r.checklist.empty()) throw ValidationError("construction record with empty checklist");
        if (!r.counterexample_variant) found[r.type_tag].insert(r.mm_number);
    }
    if (found != expected_type_map())
        throw ValidationError("construction records do not realize the expected type/entry table");
    for (int n : admissible_numbers())
        if (constructions_for(cat, n).empty())
            throw ValidationError("admissible entry " + std::to_string(n) + " has no construction record");
    for (int n : {22, 26}) {
        size_t k = constructions_for(cat, n).size();
        if (k != 2)
            throw ValidationError("entry " + std::to_string(n) + " must carry exactly two construction records");
    }
}

// --- loading -----------------------------------------------------------------

inline Catalog load_catalog_text(const std::string& text) {
    Catalog cat = parse_catalog(text);
    validate(cat);
    return cat;
}

inline Catalog load_catalog_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open catalog file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_catalog_text(ss.str());
}

} // namespace fano2::catalog
