#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellhodge/cover.hpp"
#include "ellhodge/weierstrass.hpp"

namespace ellhodge {

// Quality of the branch locus relative to the singular fibers: smooth_branch
// feeds the Mordell-Weil bound, semistable_branch still pulls fibers back,
// additive fibers at branch points break the pullback hypotheses entirely.
enum class BranchHypothesis { smooth_branch, semistable_branch, violated };

inline std::string to_string(BranchHypothesis h) {
    switch (h) {
        case BranchHypothesis::smooth_branch: return "smooth_branch";
        case BranchHypothesis::semistable_branch: return "semistable_branch";
        case BranchHypothesis::violated: return "violated";
    }
    return "?";
}

struct UpstairsFiber {
    Place place;  // downstairs locus under this set of points
    int count = 0;  // number of points upstairs
    int e = 1;
    KodairaType type_down;
    KodairaType type;
    int vA = 0, vB = 0, vD = 0;  // upstairs valuations
};

struct BaseChangeReport {
    BranchHypothesis hypothesis = BranchHypothesis::violated;
    std::vector<UpstairsFiber> fibers_up;
    int d_up = 0;
    int c_up = 0;
    int mu_up = 0;
    std::optional<VirtualModule> tjurina;  // empty unless smooth_branch
};

namespace detail {

// Branch locus of the cover split against the discriminant clusters of the
// surface: per finite cluster a list of (monic factor, e) plus the unbranched
// remainder, the ramification index over infinity, and branched loci at
// places of good reduction.
struct BranchSplit {
    std::vector<std::vector<std::pair<Poly, int>>> parts;  // per fiber index
    std::vector<Poly> rest;                                // per fiber index
    int inf_e = 1;
    std::vector<std::pair<Poly, int>> good_reduction;
};

inline BranchSplit split_branch_locus(const SurfaceReport& surf, const GaloisCover& cov) {
    BranchSplit split;
    split.parts.resize(surf.fibers.size());
    split.rest.reserve(surf.fibers.size());
    for (const auto& f : surf.fibers)
        split.rest.push_back(is_infinite(f.cluster.place) ? Poly{}
                                                          : std::get<Poly>(f.cluster.place));

    for (const auto& b : cov.branches()) {
        if (std::holds_alternative<std::string>(b.location))
            throw config_error("branch point '" + std::get<std::string>(b.location) +
                               "' has no coordinates to match against the surface");
        if (std::holds_alternative<InfinitePlace>(b.location)) {
            split.inf_e = b.e;
            continue;
        }
        Poly locus = std::holds_alternative<Rat>(b.location)
                         ? Poly::linear_root(std::get<Rat>(b.location))
                         : std::get<Poly>(b.location).monic();
        for (size_t i = 0; i < surf.fibers.size() && locus.degree() > 0; ++i) {
            if (split.rest[i].is_zero()) continue;
            const Poly g = gcd(split.rest[i], locus);
            if (g.degree() == 0) continue;
            split.parts[i].push_back({g, b.e});
            split.rest[i] = split.rest[i] / g;
            locus = locus / g;
        }
        if (locus.degree() > 0) split.good_reduction.push_back({locus, b.e});
    }
    return split;
}

inline int scale_valuation(int v, int e) {
    return v == kValInfinity ? kValInfinity : v * e;
}

}  // namespace detail

inline BranchHypothesis classify_hypothesis(const SurfaceReport& surf, const GaloisCover& cov) {
    const auto split = detail::split_branch_locus(surf, cov);
    bool semistable = false;
    for (size_t i = 0; i < surf.fibers.size(); ++i) {
        const auto& f = surf.fibers[i];
        const bool branched =
            is_infinite(f.cluster.place) ? split.inf_e > 1 : !split.parts[i].empty();
        if (!branched || f.type.is_smooth()) continue;
        if (f.type.is_additive()) return BranchHypothesis::violated;
        semistable = true;
    }
    return semistable ? BranchHypothesis::semistable_branch : BranchHypothesis::smooth_branch;
}

inline std::vector<UpstairsFiber> pullback_fibers(const SurfaceReport& surf,
                                                  const GaloisCover& cov) {
    if (classify_hypothesis(surf, cov) == BranchHypothesis::violated)
        throw hypothesis_error("additive fiber over a branch point of the cover");
    const auto split = detail::split_branch_locus(surf, cov);
    const int order = cov.group_order();
    std::vector<UpstairsFiber> out;

    const auto push = [&](const Place& place, int deg, int e, const ValuationCluster& c,
                          const KodairaType& down) {
        UpstairsFiber u;
        u.place = place;
        u.e = e;
        u.count = deg * (order / e);
        u.type_down = down;
        u.vA = detail::scale_valuation(c.vA, e);
        u.vB = detail::scale_valuation(c.vB, e);
        u.vD = detail::scale_valuation(c.vD, e);
        u.type = kodaira_type(u.vA, u.vB, u.vD);
        // ramified pullback must act as I_k -> I_{ek}; unramified preserves
        const KodairaType expected =
            e == 1 ? down : KodairaType{KodairaClass::In, e * (down.is_smooth() ? 0 : down.m)};
        require(u.type == expected, "pullback fiber type mismatch at " + format_place(place));
        out.push_back(std::move(u));
    };

    for (size_t i = 0; i < surf.fibers.size(); ++i) {
        const auto& f = surf.fibers[i];
        if (is_infinite(f.cluster.place)) {
            push(f.cluster.place, 1, split.inf_e, f.cluster, f.type);
            continue;
        }
        for (const auto& [part, e] : split.parts[i]) push(part, part.degree(), e, f.cluster, f.type);
        if (split.rest[i].degree() > 0) push(split.rest[i], split.rest[i].degree(), 1, f.cluster, f.type);
    }
    for (const auto& [locus, e] : split.good_reduction) {
        ValuationCluster c{locus, locus.degree(), 0, 0, 0};
        push(locus, locus.degree(), e, c, KodairaType{KodairaClass::In, 0});
    }
    return out;
}

inline std::optional<VirtualModule> tjurina_class(const SurfaceReport& surf,
                                                  const GaloisCover& cov) {
    // the singular points of the pulled-back model form free orbits exactly
    // when the branch locus avoids all singular fibers
    if (classify_hypothesis(surf, cov) != BranchHypothesis::smooth_branch) return std::nullopt;
    return VirtualModule::regular_class(cov.table_ptr()) * surf.mu;
}

inline BaseChangeReport base_change_report(const SurfaceReport& surf, const GaloisCover& cov) {
    BaseChangeReport rep;
    rep.hypothesis = classify_hypothesis(surf, cov);
    if (rep.hypothesis == BranchHypothesis::violated)
        throw hypothesis_error("additive fiber over a branch point of the cover");
    rep.fibers_up = pullback_fibers(surf, cov);
    const int order = cov.group_order();
    int euler_up = 0;
    for (const auto& u : rep.fibers_up) {
        rep.d_up += u.count * u.vD;
        rep.c_up += u.count * conductor_exponent(u.type);
        rep.mu_up += u.count * milnor_number(u.type);
        euler_up += u.count * euler_number(u.type);
    }
    require(rep.d_up == 12 * surf.n * order, "upstairs discriminant degree != 12n|G|");
    require(euler_up == 12 * surf.n * order, "upstairs Euler total != 12n|G|");
    require(rep.mu_up == rep.d_up - rep.c_up, "upstairs Milnor total != d - c");
    rep.tjurina = tjurina_class(surf, cov);
    if (rep.tjurina) {
        require(rep.mu_up == order * surf.mu, "smooth branch locus but mu_up != |G| mu");
        require(rep.tjurina->dimension() == rep.mu_up, "Tjurina dimension != mu_up");
    }
    return rep;
}

}  // namespace ellhodge
