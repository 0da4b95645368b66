#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellhodge/clusters.hpp"

namespace ellhodge {

// Minimal short-form data of an elliptic surface over P^1:
// -Y^2 Z + X^3 + A X Z^2 + B Z^3 with A in H^0(L^4), B in H^0(L^6), deg L = n.
struct WeierstrassSurface {
    Poly A;
    Poly B;
    int n = 1;
};

enum class KodairaClass { In, II, III, IV, InStar, IVstar, IIIstar, IIstar };

struct KodairaType {
    KodairaClass cls = KodairaClass::In;
    int m = 0;  // only for In / InStar

    bool operator==(const KodairaType& o) const { return cls == o.cls && m == o.m; }
    bool is_smooth() const { return cls == KodairaClass::In && m == 0; }
    bool is_multiplicative() const { return cls == KodairaClass::In && m >= 1; }
    bool is_additive() const { return cls != KodairaClass::In; }
};

inline std::string to_string(const KodairaType& t) {
    switch (t.cls) {
        case KodairaClass::In: return "I" + std::to_string(t.m);
        case KodairaClass::II: return "II";
        case KodairaClass::III: return "III";
        case KodairaClass::IV: return "IV";
        case KodairaClass::InStar: return "Istar" + std::to_string(t.m);
        case KodairaClass::IVstar: return "IVstar";
        case KodairaClass::IIIstar: return "IIIstar";
        case KodairaClass::IIstar: return "IIstar";
    }
    return "?";
}

// Reduction type from the valuation triple of (A, B, 4A^3+27B^2) at a place;
// char-0 short form, so these are the valuations of (c4, c6, disc). Rejects
// triples outside the minimal table.
inline KodairaType kodaira_type(int vA, int vB, int vD) {
    const auto t = [](KodairaClass c, int m = 0) { return KodairaType{c, m}; };
    if (vD == 0) return t(KodairaClass::In, 0);
    if (vA == 0) return t(KodairaClass::In, vD);
    if (vB == 1 && vD == 2 && vA >= 1) return t(KodairaClass::II);
    if (vA == 1 && vB >= 2 && vD == 3) return t(KodairaClass::III);
    if (vB == 2 && vA >= 2 && vD == 4) return t(KodairaClass::IV);
    if (vD == 6 && vA >= 2 && vB >= 3) return t(KodairaClass::InStar, 0);
    if (vA == 2 && vB == 3 && vD >= 7) return t(KodairaClass::InStar, vD - 6);
    if (vB == 4 && vA >= 3 && vD == 8) return t(KodairaClass::IVstar);
    if (vA == 3 && vB >= 5 && vD == 9) return t(KodairaClass::IIIstar);
    if (vB == 5 && vA >= 4 && vD == 10) return t(KodairaClass::IIstar);
    throw hypothesis_error("valuation triple (" + std::to_string(vA) + "," + std::to_string(vB) +
                           "," + std::to_string(vD) + ") is not minimal");
}

// Local exponent of the conductor (tame, char 0).
inline int conductor_exponent(const KodairaType& t) {
    if (t.is_smooth()) return 0;
    return t.is_multiplicative() ? 1 : 2;
}

// Number of fiber components not meeting the zero section = local Milnor
// number of the corresponding rational double point on the Weierstrass model.
inline int milnor_number(const KodairaType& t) {
    switch (t.cls) {
        case KodairaClass::In: return t.m == 0 ? 0 : t.m - 1;
        case KodairaClass::II: return 0;
        case KodairaClass::III: return 1;
        case KodairaClass::IV: return 2;
        case KodairaClass::InStar: return t.m + 4;
        case KodairaClass::IVstar: return 6;
        case KodairaClass::IIIstar: return 7;
        case KodairaClass::IIstar: return 8;
    }
    return 0;
}

inline int euler_number(const KodairaType& t) {
    switch (t.cls) {
        case KodairaClass::In: return t.m;
        case KodairaClass::II: return 2;
        case KodairaClass::III: return 3;
        case KodairaClass::IV: return 4;
        case KodairaClass::InStar: return t.m + 6;
        case KodairaClass::IVstar: return 8;
        case KodairaClass::IIIstar: return 9;
        case KodairaClass::IIstar: return 10;
    }
    return 0;
}

struct FiberData {
    ValuationCluster cluster;
    KodairaType type;
    int conductor = 0;
    int milnor = 0;
    int euler = 0;
};

struct MinimalityViolation {
    Place place;
    int vA, vB;
};

struct MinimalityCheck {
    bool ok = true;
    std::vector<MinimalityViolation> violations;
    // set when the infinity deficit alone causes the failure and n-1 would fit
    std::optional<int> suggested_n;
};

// Minimal <=> at every cluster (including infinity) vA <= 3 or vB <= 5.
inline MinimalityCheck check_minimal(const WeierstrassSurface& s) {
    MinimalityCheck out;
    for (const auto& c : uniform_clusters(s.A, s.B, s.n)) {
        if (c.vA <= 3 || c.vB <= 5) continue;
        out.ok = false;
        out.violations.push_back({c.place, c.vA, c.vB});
        if (is_infinite(c.place) && s.n >= 2 &&
            (s.A.is_zero() || s.A.degree() <= 4 * (s.n - 1)) &&
            (s.B.is_zero() || s.B.degree() <= 6 * (s.n - 1)))
            out.suggested_n = s.n - 1;
    }
    return out;
}

// j = A^3 / disc is constant iff A^3 and disc are proportional (or A = 0).
inline bool is_isotrivial(const WeierstrassSurface& s) {
    if (s.A.is_zero()) return true;
    const Poly A3 = s.A * s.A * s.A;
    const Poly D = Poly::constant(Rat(4)) * A3 + Poly::constant(Rat(27)) * s.B * s.B;
    if (D.is_zero()) return true;
    return A3 * D.leading() == D * A3.leading();
}

struct SurfaceReport {
    int n = 1;
    std::vector<FiberData> fibers;
    int d_E = 0;  // deg of the discriminant divisor = 12n
    int c_E = 0;  // deg of the conductor divisor
    int mu = 0;   // total Milnor number = d_E - c_E
    bool isotrivial = false;
};

inline SurfaceReport surface_report(const WeierstrassSurface& s) {
    const auto mc = check_minimal(s);
    if (!mc.ok) {
        std::string msg = "non-minimal Weierstrass model at";
        for (const auto& v : mc.violations) msg += " " + format_place(v.place);
        if (mc.suggested_n) msg += " (model fits deg L = " + std::to_string(*mc.suggested_n) + ")";
        throw hypothesis_error(msg);
    }
    SurfaceReport rep;
    rep.n = s.n;
    rep.isotrivial = is_isotrivial(s);
    int euler_total = 0;
    for (const auto& c : uniform_clusters(s.A, s.B, s.n)) {
        FiberData f;
        f.cluster = c;
        f.type = kodaira_type(c.vA, c.vB, c.vD);
        f.conductor = conductor_exponent(f.type);
        f.milnor = milnor_number(f.type);
        f.euler = euler_number(f.type);
        rep.d_E += c.deg * c.vD;
        rep.c_E += c.deg * f.conductor;
        rep.mu += c.deg * f.milnor;
        euler_total += c.deg * f.euler;
        rep.fibers.push_back(std::move(f));
    }
    require(rep.d_E == 12 * s.n, "deg of discriminant divisor != 12n");
    require(rep.mu == rep.d_E - rep.c_E, "Milnor total != d_E - c_E");
    require(euler_total == 12 * s.n, "Euler numbers do not sum to 12n");
    return rep;
}

}  // namespace ellhodge
