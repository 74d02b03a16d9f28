#pragma once

// Finitely presented coordinate rings in triangular-solvable shape, affine
// modifications, and the isomorphism-chain verifier. Ideal membership is
// decided only for presentations where every relation either solves one
// variable linearly (v - expr, constant coefficient) or is the single
// carried hypersurface relation; after back-substitution the carried ideal
// is principal and membership is exact divisibility. Anything else is
// rejected loudly.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fano2/errors.hpp"
#include "fano2/poly.hpp"

namespace fano2::polyverify {

struct Presentation {
    std::vector<std::string> variables;
    std::vector<Poly> relations;

    bool has_variable(const std::string& v) const {
        return std::find(variables.begin(), variables.end(), v) != variables.end();
    }
};

// A relation solves v when it reads c*v + rest with c a nonzero rational
// constant and v absent from rest; then v = -rest/c.
inline std::optional<std::pair<std::string, Poly>> solves_variable(const Presentation& p, const Poly& r) {
    for (const std::string& v : p.variables) {
        if (r.degree_in(v) != 1) continue;
        const Poly coeff = r.coefficient_of(v, 1);
        if (!coeff.variables().empty()) continue;  // non-constant coefficient
        const Rat c = coeff.constant_term();
        if (c == 0) continue;
        const Poly rest = r - Poly(c) * Poly::variable(v);
        if (rest.variables().count(v)) continue;
        Poly expr;
        for (auto& [m, a] : rest.terms()) {
            Poly t(-a / c);
            for (auto& [var, e] : m) t = t * Poly::variable(var, e);
            expr += t;
        }
        return std::make_pair(v, expr);
    }
    return std::nullopt;
}

// Triangular data extracted from a presentation: solved pairs plus at most
// one carried relation.
struct TriangularForm {
    std::vector<std::pair<std::string, Poly>> solved;
    std::optional<Poly> carried;
};

inline TriangularForm triangularize(const Presentation& p) {
    TriangularForm t;
    std::set<std::string> used;
    for (const Poly& r : p.relations) {
        if (r.is_zero()) continue;
        auto sv = solves_variable(p, r);
        if (sv && !used.count(sv->first)) {
            used.insert(sv->first);
            t.solved.push_back(*sv);
        } else if (!t.carried) {
            t.carried = r;
        } else {
            throw ShapeError("presentation is not triangular-solvable: more than one unsolved relation");
        }
    }
    // The solved expressions must not reference each other in a cycle, or
    // back-substitution never stabilizes. Peel pairs whose expressions are
    // free of still-pending solved variables; a stuck pair is demoted to the
    // carried slot when that is free, else the shape is rejected.
    for (;;) {
        std::set<std::string> pending;
        for (auto& [v, e] : t.solved) pending.insert(v);
        bool progress = true;
        while (progress && !pending.empty()) {
            progress = false;
            for (auto& [v, e] : t.solved) {
                if (!pending.count(v)) continue;
                bool blocked = false;
                for (const std::string& u : e.variables())
                    if (pending.count(u) && u != v) { blocked = true; break; }
                if (!blocked) {
                    pending.erase(v);
                    progress = true;
                }
            }
        }
        if (pending.empty()) return t;
        if (t.carried)
            throw ShapeError("presentation is not triangular-solvable: solved variables form a cycle");
        const std::string demote = *pending.begin();
        for (auto it = t.solved.begin(); it != t.solved.end(); ++it)
            if (it->first == demote) {
                t.carried = Poly::variable(demote) - it->second;
                t.solved.erase(it);
                break;
            }
    }
}

// Back-substitute all solved variables. The solved expressions may mention
// other solved variables, so iterate to a fixpoint; a presentation whose
// solved pairs cycle never stabilizes and is rejected.
inline Poly back_substitute(const TriangularForm& t, Poly p) {
    const size_t limit = t.solved.size() + 1;
    for (size_t pass = 0; pass <= limit; ++pass) {
        bool touched = false;
        for (auto& [v, e] : t.solved)
            if (p.variables().count(v)) { touched = true; break; }
        if (!touched) return p;
        Substitution s;
        for (const std::string& v : p.variables()) s.set(v, Poly::variable(v));
        for (auto& [v, e] : t.solved) s.set(v, e);
        p = substitute(p, s);
    }
    throw ShapeError("back-substitution does not terminate: solved variables form a cycle");
}

// Membership of p in the ideal of the presentation, through its triangular
// form: back-substitute, then test exact divisibility by the carried
// relation (a principal ideal in the free variables).
inline bool reduces_to_zero(const TriangularForm& t, const Poly& p) {
    Poly r = back_substitute(t, p);
    if (r.is_zero()) return true;
    if (!t.carried) return false;
    Poly h = back_substitute(t, *t.carried);
    if (h.is_zero()) return false;
    if (h.variables().empty()) return true;  // unit ideal
    return divide_exact(r, h).has_value();
}

// ---------------------------------------------------------------------------
// Affine modification: adjoin new_var with the relation f*new_var - g.
// The result presents R[w]/(f w - g); this can differ from the modification
// ring R[I/f] by f-torsion, which is recorded as a caveat rather than
// verified.

struct ModificationResult {
    Presentation presentation;
    std::vector<std::string> notes;
};

inline ModificationResult affine_modification(const Presentation& pres, const Poly& f, const Poly& g,
                                              const std::string& new_var) {
    if (pres.has_variable(new_var)) throw NameError("affine_modification: variable '" + new_var + "' already in use");
    for (const Poly* q : {&f, &g})
        for (const std::string& v : q->variables())
            if (!pres.has_variable(v))
                throw InputError("affine_modification: '" + v + "' is not a variable of the presentation");
    ModificationResult out;
    out.presentation = pres;
    out.presentation.variables.push_back(new_var);
    out.presentation.relations.push_back(f * Poly::variable(new_var) - g);
    out.notes.push_back("presents R[" + new_var + "]/(f*" + new_var +
                        " - g); may differ from R[I/f] by f-torsion, not verified here");
    if (f.variables().empty() && !f.is_zero())
        out.notes.push_back("f is a unit: the relation is redundant and the ring is R itself");
    if (g.is_zero())
        out.notes.push_back("g = 0: relation f*" + new_var + " = 0 is not domain-safe");
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism chains. Each link carries the next presentation and the ring
// map into it, given by variable substitution; a link passes when the image
// of every source relation lies in the target ideal.

struct ChainLink {
    Presentation presentation;
    Substitution into;  // generators of the previous ring -> polynomials here
    std::string label;
};

struct Chain {
    Presentation start;
    std::vector<ChainLink> links;
};

struct LinkReport {
    std::string label;
    bool passed = false;
    std::vector<std::string> failures;  // offending relation images
};

struct ChainReport {
    std::vector<LinkReport> links;
    bool all_passed = false;
    long free_variables = 0;  // variables minus solved relations in the final ring
};

inline ChainReport verify_iso_chain(const Chain& chain) {
    ChainReport rep;
    const Presentation* src = &chain.start;
    for (const ChainLink& link : chain.links) {
        LinkReport lr;
        lr.label = link.label;
        const TriangularForm t = triangularize(link.presentation);  // ShapeError if not triangular
        // totality of the substitution on the source generators
        Substitution s = link.into;
        for (const std::string& v : src->variables)
            if (!s.defines(v)) throw SubstError("chain link '" + link.label + "' does not map variable '" + v + "'");
        lr.passed = true;
        for (const Poly& r : src->relations) {
            const Poly image = substitute(r, s);
            if (!reduces_to_zero(t, image)) {
                lr.passed = false;
                lr.failures.push_back(r.str() + " -> " + image.str());
            }
        }
        rep.links.push_back(std::move(lr));
        src = &link.presentation;
    }
    rep.all_passed = std::all_of(rep.links.begin(), rep.links.end(), [](const LinkReport& l) { return l.passed; });
    const TriangularForm last = triangularize(*src);
    rep.free_variables = static_cast<long>(src->variables.size()) - static_cast<long>(last.solved.size());
    return rep;
}

// ---------------------------------------------------------------------------
// Chain file format:
//
//   chain <name>
//   variables v1 v2 ...
//   presentation
//     <polynomial>          # one relation per line
//   step <label>
//     map v -> <polynomial> # omitted variables map to themselves
//     (or: identity)
//   presentation
//     ...
//
// Every 'step' must be followed by the presentation it maps into.

inline Chain parse_chain(const std::string& text) {
    Chain chain;
    std::vector<std::string> vars;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;

    enum class Mode { Preamble, Presentation, Step };
    Mode mode = Mode::Preamble;
    Presentation* current = nullptr;
    Substitution pending_sub;
    std::string pending_label;
    bool have_start = false, pending_step = false;

    auto strip = [](const std::string& s) {
        size_t a = s.find_first_not_of(" \t\r");
        if (a == std::string::npos) return std::string();
        size_t b = s.find_last_not_of(" \t\r");
        return s.substr(a, b - a + 1);
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string s = strip(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.rfind("chain ", 0) == 0) continue;
        if (s.rfind("variables", 0) == 0) {
            std::istringstream vs(s.substr(9));
            std::string v;
            while (vs >> v) vars.push_back(v);
            if (vars.empty()) throw FormatError("chain line " + std::to_string(lineno) + ": no variables");
            continue;
        }
        if (s == "presentation") {
            if (!have_start) {
                chain.start.variables = vars;
                current = &chain.start;
                have_start = true;
            } else {
                if (!pending_step)
                    throw FormatError("chain line " + std::to_string(lineno) + ": presentation without a step");
                ChainLink link;
                link.presentation.variables = vars;
                link.into = pending_sub;
                link.label = pending_label;
                chain.links.push_back(std::move(link));
                current = &chain.links.back().presentation;
                pending_step = false;
            }
            mode = Mode::Presentation;
            continue;
        }
        if (s.rfind("step", 0) == 0) {
            if (!have_start) throw FormatError("chain line " + std::to_string(lineno) + ": step before presentation");
            pending_label = strip(s.size() > 4 ? s.substr(4) : "");
            if (pending_label.empty()) pending_label = "link " + std::to_string(chain.links.size() + 1);
            pending_sub = Substitution::identity_on(vars);
            pending_step = true;
            mode = Mode::Step;
            continue;
        }
        if (mode == Mode::Step) {
            if (s == "identity") continue;
            auto arrow = s.find("->");
            if (s.rfind("map ", 0) != 0 || arrow == std::string::npos)
                throw FormatError("chain line " + std::to_string(lineno) + ": expected 'map v -> poly'");
            const std::string v = strip(s.substr(4, arrow - 4));
            pending_sub.set(v, parse_poly(s.substr(arrow + 2)));
            continue;
        }
        if (mode == Mode::Presentation) {
            if (!current) throw FormatError("chain line " + std::to_string(lineno) + ": relation outside presentation");
            current->relations.push_back(parse_poly(s));
            continue;
        }
        throw FormatError("chain line " + std::to_string(lineno) + ": unexpected '" + s + "'");
    }
    if (!have_start) throw FormatError("chain file has no presentation");
    if (pending_step) throw FormatError("chain file ends with a dangling step");
    return chain;
}

} // namespace fano2::polyverify
