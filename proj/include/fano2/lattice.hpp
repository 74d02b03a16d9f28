#pragma once

// Exact arithmetic on rank-2 Picard lattices of Fano 3-folds with B2 = 2:
// cubic intersection forms, anticanonical classes, boundary decompositions,
// blow-up lattices and the Euler ledger. All values immutable, all
// operations pure.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fano2/errors.hpp"
#include "fano2/rational.hpp"

namespace fano2::lattice {

using Int = long long;

// Basis tags. Classes with different tags never combine silently.
inline constexpr const char* kExtremalBasis = "extremal H1,H2";
inline constexpr const char* kBlowupBasis = "blowup H,E";

struct DivisorClass {
    Int c1 = 0;
    Int c2 = 0;
    std::string basis_tag = kExtremalBasis;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

inline DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
    if (a.basis_tag != b.basis_tag)
        throw BasisError("cannot add classes in bases '" + a.basis_tag + "' and '" + b.basis_tag + "'");
    return {a.c1 + b.c1, a.c2 + b.c2, a.basis_tag};
}

inline DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
    if (a.basis_tag != b.basis_tag)
        throw BasisError("cannot subtract classes in bases '" + a.basis_tag + "' and '" + b.basis_tag + "'");
    return {a.c1 - b.c1, a.c2 - b.c2, a.basis_tag};
}

inline DivisorClass operator*(Int n, const DivisorClass& a) { return {n * a.c1, n * a.c2, a.basis_tag}; }

// Symmetric cubic form on a rank-2 lattice, stored as one value per
// multidegree: t300 = (B1^3), t210 = (B1^2.B2), t120 = (B1.B2^2), t030 = (B2^3).
struct TripleForm {
    Int t300 = 0, t210 = 0, t120 = 0, t030 = 0;
    std::string basis_tag = kExtremalBasis;
};

// Trilinear expansion of the stored form. Symmetric in (a, b, c) by
// construction, since only one value per multidegree is stored.
inline Int triple_product(const TripleForm& f, const DivisorClass& a, const DivisorClass& b,
                          const DivisorClass& c) {
    for (const DivisorClass* x : {&a, &b, &c})
        if (x->basis_tag != f.basis_tag)
            throw BasisError("triple_product: class basis '" + x->basis_tag + "' does not match form basis '" +
                             f.basis_tag + "'");
    return a.c1 * b.c1 * c.c1 * f.t300 +
           (a.c1 * b.c1 * c.c2 + a.c1 * b.c2 * c.c1 + a.c2 * b.c1 * c.c1) * f.t210 +
           (a.c1 * b.c2 * c.c2 + a.c2 * b.c1 * c.c2 + a.c2 * b.c2 * c.c1) * f.t120 +
           a.c2 * b.c2 * c.c2 * f.t030;
}

// -K_V in the extremal basis: the H1 coefficient is mu2, the H2 coefficient
// is mu1 (each basis class pairs to 1 against the curves contracted on the
// other side, so the weights cross over).
inline DivisorClass anticanonical_class(Int mu1, Int mu2) {
    if (mu1 < 1 || mu2 < 1) throw InputError("anticanonical_class: lengths must be >= 1");
    return {mu2, mu1, kExtremalBasis};
}

// A candidate decomposition -K = D1 + D2 written as D_i = m_i1 H1 + m_i2 H2,
// where column k sums to mu_k.
struct BoundaryMatrix {
    std::array<std::array<Int, 2>, 2> m{};

    Int det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    bool row_nonzero(int i) const { return m[i][0] != 0 || m[i][1] != 0; }
    friend bool operator==(const BoundaryMatrix&, const BoundaryMatrix&) = default;
};

// All matrices with m_ij >= 0, both rows nonzero, det = +-1 and column sums
// (mu1, mu2). The box 0 <= m_ij <= mu_j is exhaustive: column sums plus
// nonnegativity bound every entry.
inline std::vector<BoundaryMatrix> solve_boundary_decomposition(Int mu1, Int mu2) {
    if (mu1 < 1 || mu2 < 1) throw InputError("solve_boundary_decomposition: lengths must be >= 1");
    std::vector<BoundaryMatrix> out;
    for (Int m11 = 0; m11 <= mu1; ++m11)
        for (Int m12 = 0; m12 <= mu2; ++m12) {
            BoundaryMatrix bm;
            bm.m = {{{m11, m12}, {mu1 - m11, mu2 - m12}}};
            if (!bm.row_nonzero(0) || !bm.row_nonzero(1)) continue;
            if (bm.det() != 1 && bm.det() != -1) continue;
            out.push_back(bm);
        }
    return out;
}

enum class Prop34 { Pass, ForcedHkEqualsDl, Exclude };

struct Prop34Result {
    Prop34 verdict;
    // When the verdict is ForcedHkEqualsDl: the index k (1 or 2) with
    // mu_k = 1, whose basis class must itself be a boundary class.
    int forced_k = 0;
};

// Length filter: a length-one ray forces its basis class to be a boundary
// divisor; two rays of length >= 2 are impossible except on P1 x P2.
inline Prop34Result check_prop_3_4(Int mu1, Int mu2, bool is_p1xp2) {
    if (mu1 == 1 || mu2 == 1) return {Prop34::ForcedHkEqualsDl, mu1 == 1 ? 1 : 2};
    return {is_p1xp2 ? Prop34::Pass : Prop34::Exclude, 0};
}

enum class AmbientName { P3, Q3, V1, V2, V3, V4, V5 };

struct AmbientData {
    AmbientName name;
    Int fano_index = 0;   // r, with -K = r H
    Int h_cubed = 0;      // (ample generator)^3
    Int b3_ambient = 0;   // third Betti number
};

inline const char* ambient_str(AmbientName n) {
    switch (n) {
        case AmbientName::P3: return "P3";
        case AmbientName::Q3: return "Q3";
        case AmbientName::V1: return "V1";
        case AmbientName::V2: return "V2";
        case AmbientName::V3: return "V3";
        case AmbientName::V4: return "V4";
        case AmbientName::V5: return "V5";
    }
    return "?";
}

inline std::optional<AmbientName> ambient_from_str(const std::string& s) {
    if (s == "P3") return AmbientName::P3;
    if (s == "Q3") return AmbientName::Q3;
    if (s == "V1") return AmbientName::V1;
    if (s == "V2") return AmbientName::V2;
    if (s == "V3") return AmbientName::V3;
    if (s == "V4") return AmbientName::V4;
    if (s == "V5") return AmbientName::V5;
    return std::nullopt;
}

// Consistency table (name, r, H^3, B3): P3 -> (4,1), Q3 -> (3,2),
// V_d -> (2,d); B3(V_d) = 42, 20, 10, 4, 0 for d = 1..5.
inline AmbientData ambient(AmbientName n) {
    switch (n) {
        case AmbientName::P3: return {n, 4, 1, 0};
        case AmbientName::Q3: return {n, 3, 2, 0};
        case AmbientName::V1: return {n, 2, 1, 42};
        case AmbientName::V2: return {n, 2, 2, 20};
        case AmbientName::V3: return {n, 2, 3, 10};
        case AmbientName::V4: return {n, 2, 4, 4};
        case AmbientName::V5: return {n, 2, 5, 0};
    }
    throw KeyError("ambient: unknown name");
}

struct CurveData {
    Int p_a = 0;     // arithmetic genus
    Int degree = 0;  // against the ample generator of the ambient
};

enum class ContractionKind { BlowupCurve, BlowupPoint, ConicBundle, DelPezzoFibration, ProjBundle, DoubleCoverFactor };

struct ContractionData {
    Int length = 1;  // in {1, 2, 3}
    ContractionKind kind = ContractionKind::BlowupCurve;
};

// Numerical data of a rank-2 Fano lattice: the cubic form, the anticanonical
// class in the same basis, the two extremal lengths and B3.
struct FanoLattice {
    TripleForm triple;
    DivisorClass anticanonical;
    Int mu1 = 1, mu2 = 1;
    Int b3 = 0;
};

inline Int fano_degree(const FanoLattice& L) {
    return triple_product(L.triple, L.anticanonical, L.anticanonical, L.anticanonical);
}

// Lattice of Bl_C W in the basis (H = pullback of the ample generator,
// E = exceptional divisor): H^3 = H^3_W, H^2.E = 0, H.E^2 = -deg C and
// E^3 = -deg N_{C/W} = -(r deg C + 2 p_a - 2). The blow-up ray always has
// length one; the other length is catalog data and is passed in.
inline FanoLattice blowup_lattice(const AmbientData& W, const CurveData& C, Int other_length = 1) {
    if (C.degree < 1) throw InputError("blowup_lattice: curve degree must be >= 1");
    FanoLattice L;
    L.triple = {W.h_cubed, 0, -C.degree, -(W.fano_index * C.degree + 2 * C.p_a - 2), kBlowupBasis};
    L.anticanonical = {W.fano_index, -1, kBlowupBasis};  // r H - E
    L.mu1 = 1;
    L.mu2 = other_length;
    L.b3 = W.b3_ambient + 2 * C.p_a;
    if (fano_degree(L) <= 0) throw ValidationError("blowup_lattice: anticanonical degree is not positive");
    return L;
}

// eu(D1 cap D2) = eu(D1) + eu(D2) + B3(V) - 5 for a boundary pair with
// trivial log canonical class.
inline Int euler_ledger(Int eu_d1, Int eu_d2, Int b3) { return eu_d1 + eu_d2 + b3 - 5; }

// A divisor class a H + b E with exact rational coefficients, for the one
// half-integer case; kept out of the integer DivisorClass on purpose.
struct HalfIntegerClass {
    Rat a, b;
};

// Solve (H^2.D) = target_h2, (E^2.D) = target_e2 for D = a H + b E over the
// rationals, using the Gram data of the stored cubic form.
inline HalfIntegerClass half_integer_class_solve(const TripleForm& f, Int target_h2, Int target_e2) {
    // [ t300 t210 ] [a]   [target_h2]
    // [ t120 t030 ] [b] = [target_e2]
    const Int det = f.t300 * f.t030 - f.t210 * f.t120;
    if (det == 0) throw SolveError("half_integer_class_solve: singular Gram system");
    HalfIntegerClass r;
    r.a = make_rat(f.t030 * target_h2 - f.t210 * target_e2, det);
    r.b = make_rat(f.t300 * target_e2 - f.t120 * target_h2, det);
    return r;
}

// Named integral change of basis between two tagged bases,
// new1 = a11 old1 + a12 old2, new2 = a21 old1 + a22 old2 expressed on
// coefficients contravariantly; used to record identities such as
// "pullback of O_{P2}(1) = H - E" on a ruled blow-up.
struct BasisMap {
    std::string name;
    std::string from, to;
    // Coefficient transform: a class c1 B1 + c2 B2 in `from` maps to
    // (m11 c1 + m12 c2) B1' + (m21 c1 + m22 c2) B2' in `to`.
    Int m11 = 1, m12 = 0, m21 = 0, m22 = 1;

    DivisorClass apply(const DivisorClass& c) const {
        if (c.basis_tag != from)
            throw BasisError("basis map '" + name + "' expects basis '" + from + "', got '" + c.basis_tag + "'");
        return {m11 * c.c1 + m12 * c.c2, m21 * c.c1 + m22 * c.c2, to};
    }
};

// On Bl_l Q3 the second contraction is a P1-bundle over P2 and its relative
// hyperplane class is H - E; (H, E) coordinates become (F = H - E, E) via
// H = F + E.
inline BasisMap quadric_line_blowup_basis_map() {
    BasisMap bm;
    bm.name = "blowup(H,E) -> bundle(F,E) on Bl_l Q3";
    bm.from = kBlowupBasis;
    bm.to = "bundle F,E";
    // c1 H + c2 E = c1 (F + E) + c2 E = c1 F + (c1 + c2) E.
    bm.m11 = 1; bm.m12 = 0; bm.m21 = 1; bm.m22 = 1;
    return bm;
}

} // namespace fano2::lattice
