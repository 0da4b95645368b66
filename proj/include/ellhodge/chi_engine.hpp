#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "ellhodge/cover.hpp"

namespace ellhodge {

// E = O(a_1) ⊕ ... ⊕ O(a_r) on the base line; the hypersurface X sits in the
// bundle P = P(E) as a member of |O_P(d) ⊗ pi*O(ell)|, pulled back along a
// Galois cover of the base. dim P = r, dim X = r−1.
struct BundleSpec {
    std::vector<std::int64_t> summand_degrees;
    std::int64_t ell = 0;
    std::int64_t d = 1;
    // caller vouches that H^i(P) -> H^i(X) is an isomorphism below the middle
    // degree and injective there (automatic for the Weierstrass family)
    bool assumptions_asserted = false;

    int rank() const { return static_cast<int>(summand_degrees.size()); }
    int dim_hypersurface() const { return rank() - 1; }
    std::int64_t degree_sum() const {
        std::int64_t s = 0;
        for (auto a : summand_degrees) s += a;
        return s;
    }
    void validate() const {
        if (rank() < 3) throw config_error("bundle rank must be at least 3");
        if (d < 1) throw config_error("fiber degree must be positive");
    }

    static BundleSpec weierstrass(std::int64_t n) {
        if (n < 1) throw config_error("weierstrass bundle needs n >= 1");
        return {{0, -2 * n, -3 * n}, 6 * n, 3, true};
    }
};

// O_P(t) ⊗ pi*(degree-degC line bundle, optionally twisted by the upstairs
// canonical bundle), with a virtual multiplicity
struct SheafTerm {
    std::int64_t degC = 0;
    bool kflag = false;
    std::int64_t t = 0;
    std::int64_t mult = 1;
};

// cG·[C[G]] + cO·χ_G(O) — every pushforward lands in this lattice
struct SymbolicChi {
    std::int64_t cG = 0;
    std::int64_t cO = 0;

    SymbolicChi operator+(const SymbolicChi& o) const { return {cG + o.cG, cO + o.cO}; }
    SymbolicChi operator-(const SymbolicChi& o) const { return {cG - o.cG, cO - o.cO}; }
    SymbolicChi operator*(std::int64_t k) const { return {cG * k, cO * k}; }
    SymbolicChi& operator+=(const SymbolicChi& o) { cG += o.cG; cO += o.cO; return *this; }
    bool operator==(const SymbolicChi& o) const = default;
};

// a·[C[G]] + b·χ_G(O) + c·[C] + δ·[H⁰(T)], with δ entering reports as a
// subtraction (the singular-model slot is smaller by the Tjurina module)
struct SymbolicClass {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    std::int64_t delta = 0;

    SymbolicClass operator+(const SymbolicClass& o) const {
        return {a + o.a, b + o.b, c + o.c, delta + o.delta};
    }
    SymbolicClass operator-(const SymbolicClass& o) const {
        return {a - o.a, b - o.b, c - o.c, delta - o.delta};
    }
    SymbolicClass operator*(std::int64_t k) const { return {a * k, b * k, c * k, delta * k}; }
    bool operator==(const SymbolicClass& o) const = default;

    static SymbolicClass from_chi(const SymbolicChi& x) { return {x.cG, x.cO, 0, 0}; }
};

namespace detail {

inline std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t out = 1;
    for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

}  // namespace detail

// χ_G of the pushforward to the upstairs curve of a single sheaf term.
// t >= 0: R⁰ = Sym^t(E) ⊗ twist, summand degrees degC + Σ α_j a_j.
// -r < t < 0: everything vanishes.
// t <= -r: only R^{r-1} survives; relative duality turns it into
//   (Sym^{t'}E ⊗ det E)^∨ ⊗ twist with t' = -t-r and a (-1)^{r-1} shift.
//   The base twist (including any canonical factor) rides along undualized.
// Each line-bundle summand of downstairs degree m contributes
//   m·[C[G]] + χ_G(O)         without the canonical twist,
//   m·[C[G]] − χ_G(O)         with it (curve-level Serre duality),
// which is what confines the answer to the (cG, cO) lattice.
inline SymbolicChi pushforward_chi(const SheafTerm& term, const BundleSpec& bundle) {
    bundle.validate();
    const int r = bundle.rank();
    const std::int64_t S = bundle.degree_sum();
    const std::int64_t ksign = term.kflag ? -1 : 1;
    if (term.t > -r && term.t < 0) return {0, 0};
    if (term.t >= 0) {
        const std::int64_t cnt = detail::binom(term.t + r - 1, r - 1);
        const std::int64_t isum = detail::binom(term.t + r - 1, r);
        return {term.mult * (cnt * term.degC + isum * S), term.mult * ksign * cnt};
    }
    const std::int64_t tp = -term.t - r;
    const std::int64_t cnt = detail::binom(tp + r - 1, r - 1);
    const std::int64_t isum = detail::binom(tp + r - 1, r);
    const std::int64_t dual_sign = (r % 2 == 1) ? 1 : -1;
    return {dual_sign * term.mult * (cnt * (term.degC - S) - isum * S),
            dual_sign * term.mult * ksign * cnt};
}

// degrees of the rank-binom(r,t) summands of Λ^t E: all t-subset sums
inline std::vector<std::int64_t> wedge_degrees(const BundleSpec& bundle, int t) {
    bundle.validate();
    const int r = bundle.rank();
    if (t < 0 || t > r) throw config_error("wedge power out of range");
    // per summand, either extend a subset or not; track subset size via layers
    std::vector<std::vector<std::int64_t>> by_size(static_cast<size_t>(t) + 1);
    by_size[0] = {0};
    for (int j = 0; j < r; ++j)
        for (int s = std::min(j + 1, t); s >= 1; --s)
            for (auto v : by_size[s - 1])
                by_size[s].push_back(v + bundle.summand_degrees[j]);
    return by_size[t];
}

// χ_G(Ω^t_{P/C'} ⊗ O_P(twist.t) ⊗ pi*(twist)), via the wedge resolution
//   Λ^t(pi*E(-1)) = Ω^t_{P/C'} + Ω^{t-1}_{P/C'}   in K-theory
inline SymbolicChi chi_omega_vertical(int t, const SheafTerm& twist, const BundleSpec& bundle) {
    bundle.validate();
    if (t < 0 || t > bundle.rank() - 1)
        throw config_error("vertical form degree out of range");
    if (t == 0) return pushforward_chi(twist, bundle);
    SymbolicChi wedge{0, 0};
    for (auto s : wedge_degrees(bundle, t))
        wedge += pushforward_chi({twist.degC + s, twist.kflag, twist.t - t, twist.mult}, bundle);
    return wedge - chi_omega_vertical(t - 1, twist, bundle);
}

// χ_G(Ω^t_P(kX)); splits off the base cotangent line, except at the top where
// Ω^r_P = O_P(-r) ⊗ pi*(det E ⊗ K)
inline SymbolicChi chi_omega_total(int t, std::int64_t k, const BundleSpec& bundle) {
    bundle.validate();
    const int r = bundle.rank();
    if (t < 0 || t > r) return {0, 0};
    if (t == r)
        return pushforward_chi({bundle.degree_sum() + k * bundle.ell, true, k * bundle.d - r},
                               bundle);
    SymbolicChi out = chi_omega_vertical(t, {k * bundle.ell, false, k * bundle.d}, bundle);
    if (t >= 1)
        out += chi_omega_vertical(t - 1, {k * bundle.ell, true, k * bundle.d}, bundle);
    return out;
}

// [H^{p,q}(P)] — two algebraic classes per middle (p,p), one at the ends, a
// curve-type class when |p-q| = 1 (stored with the identification
// [H^{0,1}] = [H^{1,0}] = [C] − χ_G(O)), zero otherwise
inline SymbolicClass hodge_of_bundle(int p, int q, const BundleSpec& bundle) {
    bundle.validate();
    const int r = bundle.rank();
    if (p < 0 || q < 0 || p > r || q > r) throw config_error("bundle Hodge index out of range");
    if (p == q) return (p == 0 || p == r) ? SymbolicClass{0, 0, 1, 0} : SymbolicClass{0, 0, 2, 0};
    if (p - q == 1 || q - p == 1) return {0, -1, 1, 0};
    return {0, 0, 0, 0};
}

// [H^{p,n-p}(X)], n = dim X. Restriction/conormal sequences unroll to
//   [H^{p,n-p}(X)] = (-1)^{n-p+1}(S1 + S2) + base(p)
// with S1, S2 the alternating twisted-form sums below; base is the matching
// ambient class ([H^{p,n-p}(P)] for p >= 1, (-1)^n·χ_G(O) for p = 0). The
// singular flag marks the surface (1,1) slot whose honest class is smaller by
// the Tjurina module of the singular model.
inline SymbolicClass hodge_middle(int p, const BundleSpec& bundle, bool singular = false) {
    bundle.validate();
    if (!bundle.assumptions_asserted)
        throw config_error("hypersurface cohomology assumptions not asserted");
    const int n = bundle.dim_hypersurface();
    if (p < 0 || p > n) throw config_error("middle Hodge index out of range");
    if (singular && bundle.rank() != 3)
        throw config_error("singular-model correction is defined only for surfaces");

    SymbolicChi s{0, 0};
    for (int k = 1; k <= n - p + 1; ++k) {
        const std::int64_t sg = (k % 2 == 0) ? 1 : -1;
        s += chi_omega_total(p + k, k, bundle) * sg;
    }
    for (int k = 1; k <= n - p; ++k) {
        const std::int64_t sg = (k % 2 == 0) ? 1 : -1;
        s += chi_omega_total(p + 1 + k, k, bundle) * sg;
    }
    const std::int64_t outer = ((n - p + 1) % 2 == 0) ? 1 : -1;
    SymbolicClass out = SymbolicClass::from_chi(s) * outer;
    if (p == 0)
        out.b += (n % 2 == 0) ? 1 : -1;
    else
        out = out + hodge_of_bundle(p, n - p, bundle);
    if (singular && p == 1 && n - p == 1) out.delta = 1;
    return out;
}

// all of H^{p,q}(X): ambient classes off the middle (restriction below, Gysin
// above), the genuine middle row from hodge_middle
inline std::vector<std::vector<SymbolicClass>> full_diamond(const BundleSpec& bundle,
                                                            bool singular = false) {
    bundle.validate();
    if (!bundle.assumptions_asserted)
        throw config_error("hypersurface cohomology assumptions not asserted");
    const int n = bundle.dim_hypersurface();
    std::vector<std::vector<SymbolicClass>> m(static_cast<size_t>(n) + 1,
                                              std::vector<SymbolicClass>(static_cast<size_t>(n) + 1));
    for (int p = 0; p <= n; ++p)
        for (int q = 0; q <= n; ++q) {
            if (p + q < n)
                m[p][q] = hodge_of_bundle(p, q, bundle);
            else if (p + q == n)
                m[p][q] = hodge_middle(p, bundle, singular);
            else
                m[p][q] = hodge_of_bundle(p + 1, q + 1, bundle);
        }
    return m;
}

// How a symbolic class is read off as a virtual module. Slots on the Hodge
// diagonal are forced self-conjugate: the χ_G(O) symbol conflates a class with
// its conjugate, and only the symmetrized reading keeps (p,p) slots self-dual
// when the cover has non-real characters.
enum class SlotMode { direct, self_conjugate };

inline VirtualModule evaluate_class(const SymbolicClass& cls, const GaloisCover& cover,
                                    const std::optional<VirtualModule>& tjurina,
                                    SlotMode mode = SlotMode::direct) {
    const TablePtr& t = cover.table_ptr();
    VirtualModule out = VirtualModule::regular_class(t) * cls.a +
                        cover.chi_structure_sheaf() * cls.b +
                        VirtualModule::trivial_class(t) * cls.c;
    if (cls.delta != 0) {
        if (!tjurina)
            throw hypothesis_error(
                "singular-model class needs the Tjurina module, which is unavailable here");
        out = out - *tjurina * cls.delta;
    }
    if (mode == SlotMode::self_conjugate) out = (out + out.dual()).halve();
    return out;
}

// Evaluated diamond: diagonal slots symmetrized, below-diagonal read directly,
// above-diagonal as conjugates of their mirrors (the cup-product pairing into
// the top class is G-invariant)
inline std::vector<std::vector<VirtualModule>> evaluate_diamond(
    const std::vector<std::vector<SymbolicClass>>& diamond, const GaloisCover& cover,
    const std::optional<VirtualModule>& tjurina) {
    const size_t n = diamond.size();
    std::vector<std::vector<VirtualModule>> out(
        n, std::vector<VirtualModule>(n, VirtualModule::zero(cover.table_ptr())));
    for (size_t p = 0; p < n; ++p)
        for (size_t q = 0; q <= p; ++q) {
            if (p == q) {
                out[p][p] = evaluate_class(diamond[p][p], cover, tjurina,
                                           SlotMode::self_conjugate);
            } else {
                require(diamond[p][q] == diamond[q][p],
                        "diamond symbols must be mirror-symmetric");
                out[p][q] = evaluate_class(diamond[p][q], cover, tjurina, SlotMode::direct);
                out[q][p] = out[p][q].dual();
            }
        }
    return out;
}

}  // namespace ellhodge
