#pragma once

// Replayable chains of exact (in)equalities. Every step stores two exact
// rationals and a relation. All steps must hold numerically except the one
// closing reductio step: an excluded certificate ends with a true step
// (a < b) followed by the mirrored hypothesis (b <= a) forced by the
// existence of a triplet, and the pair is flagged in `contradiction`.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "fano2/errors.hpp"
#include "fano2/rational.hpp"

namespace fano2::cert {

enum class Rel { Eq, Le, Lt, Ge, Gt };

inline const char* rel_str(Rel r) {
    switch (r) {
        case Rel::Eq: return "=";
        case Rel::Le: return "<=";
        case Rel::Lt: return "<";
        case Rel::Ge: return ">=";
        case Rel::Gt: return ">";
    }
    return "?";
}

inline bool rel_holds(const Rat& lhs, Rel r, const Rat& rhs) {
    switch (r) {
        case Rel::Eq: return lhs == rhs;
        case Rel::Le: return lhs <= rhs;
        case Rel::Lt: return lhs < rhs;
        case Rel::Ge: return lhs >= rhs;
        case Rel::Gt: return lhs > rhs;
    }
    return false;
}

// A reference attached to a step: either a named rule of the engine's rule
// base (cite + the relation it encodes) or the id of an external fact.
struct Ref {
    std::string cite;     // rule id, empty for fact references
    std::string note;     // the cited relation, in ASCII math
    std::string fact_id;  // external fact id, empty for rule references
};

inline Ref rule_ref(std::string cite, std::string note) { return {std::move(cite), std::move(note), {}}; }
inline Ref fact_ref(std::string fact_id) { return {{}, {}, std::move(fact_id)}; }

struct CertStep {
    std::string desc;
    Rat lhs;
    Rel rel = Rel::Eq;
    Rat rhs;
    std::vector<Ref> refs;
    // True only for the closing reductio step of an excluded certificate.
    bool hypothesis = false;
};

enum class Verdict { Admissible, Excluded };

inline const char* verdict_str(Verdict v) { return v == Verdict::Admissible ? "admissible" : "excluded"; }

// Construction record attached to an admissible verdict.
struct ConstructionTag {
    std::string type;  // A1..A4, B1..B3
    std::vector<std::string> checklist;
    std::string source;
    bool variant = false;  // extra route kept to show a condition is not necessary
};

struct Certificate {
    int entry = 0;
    Verdict verdict = Verdict::Admissible;
    std::vector<CertStep> steps;
    // Indices of the (true bound, reductio hypothesis) pair whose
    // conjunction is infeasible.
    std::optional<std::pair<int, int>> contradiction;
    std::vector<ConstructionTag> constructions;
};

// Builder helpers ----------------------------------------------------------

inline CertStep step(std::string desc, Rat lhs, Rel rel, Rat rhs, std::vector<Ref> refs = {}) {
    CertStep s;
    s.desc = std::move(desc);
    s.lhs = std::move(lhs);
    s.rel = rel;
    s.rhs = std::move(rhs);
    s.refs = std::move(refs);
    if (!rel_holds(s.lhs, s.rel, s.rhs))
        throw ValidationError("certificate step does not hold: " + s.desc + " (" + rat_str(s.lhs) + " " +
                              rel_str(s.rel) + " " + rat_str(s.rhs) + ")");
    return s;
}

// Close an excluded certificate: `upper < lower` holds, and the mirrored
// hypothesis `lower <= upper` is what a triplet would force.
inline void close_contradiction(Certificate& c, Rat upper, Rat lower, std::string quantity,
                                std::vector<Ref> refs = {}) {
    c.steps.push_back(step("the two bounds on " + quantity + " are incompatible", upper, Rel::Lt, lower, refs));
    CertStep hyp;
    hyp.desc = "a triplet with trivial log canonical class would force " + quantity + " to satisfy both bounds";
    hyp.lhs = std::move(lower);
    hyp.rel = Rel::Le;
    hyp.rhs = std::move(upper);
    hyp.hypothesis = true;
    c.steps.push_back(std::move(hyp));
    const int n = static_cast<int>(c.steps.size());
    c.contradiction = std::make_pair(n - 2, n - 1);
    c.verdict = Verdict::Excluded;
}

// The common closing shape for case analyses: no case survives, but a
// triplet would need one.
inline void close_no_surviving_case(Certificate& c, std::vector<Ref> refs = {}) {
    close_contradiction(c, make_rat(0), make_rat(1), "the number of surviving cases", std::move(refs));
}

// Validation ---------------------------------------------------------------
//
// 1. every non-hypothesis step holds under exact rational re-evaluation;
// 2. excluded certificates carry exactly one hypothesis step, which is the
//    second member of `contradiction`, mirrored against a true strict step
//    so that the conjunction (a < b) and (b <= a) is infeasible;
// 3. no step references more than one external fact, and all referenced
//    fact ids resolve in `known_fact` when a resolver is supplied.
template <typename FactLookup>
inline void validate(const Certificate& c, FactLookup&& known_fact) {
    int hyp_count = 0;
    for (size_t i = 0; i < c.steps.size(); ++i) {
        const CertStep& s = c.steps[i];
        int fact_refs = 0;
        for (const Ref& r : s.refs) {
            if (!r.fact_id.empty()) {
                ++fact_refs;
                if (!known_fact(r.fact_id))
                    throw FactError("certificate for entry " + std::to_string(c.entry) +
                                    " references unknown fact '" + r.fact_id + "'");
            }
        }
        if (fact_refs > 1)
            throw ValidationError("step references more than one external fact: " + s.desc);
        if (s.hypothesis) {
            ++hyp_count;
            continue;
        }
        if (!rel_holds(s.lhs, s.rel, s.rhs))
            throw ValidationError("certificate for entry " + std::to_string(c.entry) + " has a false step #" +
                                  std::to_string(i) + ": " + s.desc);
    }
    if (c.verdict == Verdict::Excluded) {
        if (!c.contradiction) throw ValidationError("excluded certificate without contradiction pair");
        if (hyp_count != 1) throw ValidationError("excluded certificate must carry exactly one hypothesis step");
        auto [i, j] = *c.contradiction;
        if (i < 0 || j < 0 || i >= static_cast<int>(c.steps.size()) || j >= static_cast<int>(c.steps.size()) || i >= j)
            throw ValidationError("contradiction indices out of range");
        const CertStep& a = c.steps[i];
        const CertStep& b = c.steps[j];
        if (a.hypothesis || !b.hypothesis)
            throw ValidationError("contradiction pair must be (true bound, hypothesis)");
        // Mirrored operands and a relation pair that no pair of values can
        // satisfy jointly: a < b together with b <= a.
        const bool mirrored = (a.lhs == b.rhs && a.rhs == b.lhs);
        const bool forms_infeasible =
            (a.rel == Rel::Lt && (b.rel == Rel::Le || b.rel == Rel::Lt)) ||
            (a.rel == Rel::Le && b.rel == Rel::Lt);
        if (!mirrored || !forms_infeasible)
            throw ValidationError("contradiction pair of entry " + std::to_string(c.entry) +
                                  " is not genuinely contradictory");
    } else {
        if (hyp_count != 0) throw ValidationError("admissible certificate must not carry hypothesis steps");
    }
}

// JSON ----------------------------------------------------------------------
// Stable field order; rationals rendered in canonical "n" / "n/d" form.

inline nlohmann::ordered_json ref_json(const Ref& r) {
    nlohmann::ordered_json j;
    if (!r.fact_id.empty()) {
        j["fact"] = r.fact_id;
    } else {
        j["cite"] = r.cite;
        j["quote"] = r.note;
    }
    return j;
}

inline nlohmann::ordered_json to_json(const Certificate& c) {
    nlohmann::ordered_json j;
    j["entry"] = c.entry;
    j["verdict"] = verdict_str(c.verdict);
    nlohmann::ordered_json steps = nlohmann::ordered_json::array();
    for (const CertStep& s : c.steps) {
        nlohmann::ordered_json js;
        js["desc"] = s.desc;
        js["lhs"] = rat_str(s.lhs);
        js["rel"] = rel_str(s.rel);
        js["rhs"] = rat_str(s.rhs);
        nlohmann::ordered_json refs = nlohmann::ordered_json::array();
        for (const Ref& r : s.refs) refs.push_back(ref_json(r));
        js["refs"] = refs;
        if (s.hypothesis) js["hyp"] = true;
        steps.push_back(js);
    }
    j["steps"] = steps;
    if (c.contradiction) j["contradiction"] = {c.contradiction->first, c.contradiction->second};
    nlohmann::ordered_json cons = nlohmann::ordered_json::array();
    for (const ConstructionTag& t : c.constructions) {
        nlohmann::ordered_json jt;
        jt["type"] = t.type;
        jt["checklist"] = t.checklist;
        jt["source"] = t.source;
        if (t.variant) jt["variant"] = true;
        cons.push_back(jt);
    }
    j["constructions"] = cons;
    return j;
}

} // namespace fano2::cert
