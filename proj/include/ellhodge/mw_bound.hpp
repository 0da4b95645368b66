#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ellhodge/basechange.hpp"
#include "ellhodge/chi_engine.hpp"

namespace ellhodge {

// Néron–Severi classes that never see the Mordell–Weil group: the zero
// section, a general fiber, and one class per fiber component off the zero
// section (counted by the Tjurina module)
inline VirtualModule trivial_lattice_class(const VirtualModule& tjurina) {
    return VirtualModule::trivial_class(tjurina.table()) * 2 + tjurina;
}

namespace detail {

inline void check_mw_hypotheses(const SurfaceReport& surf, const GaloisCover& cover) {
    if (surf.isotrivial)
        throw hypothesis_error("rank bound needs a non-isotrivial surface (constant j-invariant)");
    if (classify_hypothesis(surf, cover) != BranchHypothesis::smooth_branch)
        throw hypothesis_error(
            "rank bound needs smooth fibers over every branch point of the cover");
}

}  // namespace detail

// The module whose trivial-character-isotypic quotient receives the pulled
// back Mordell–Weil group tensored with C: (10n−μ)[C[G]] + [H⁰(K)] + its
// conjugate − 2[C]. Cross-checked against H^{1,1} minus the trivial lattice.
inline VirtualModule covering_module(const SurfaceReport& surf, const GaloisCover& cover) {
    detail::check_mw_hypotheses(surf, cover);
    const TablePtr& t = cover.table_ptr();
    const VirtualModule h0k = cover.h0_canonical();
    const VirtualModule m = VirtualModule::regular_class(t) * (10 * surf.n - surf.mu) + h0k +
                            h0k.dual() - VirtualModule::trivial_class(t) * 2;

    const auto tj = tjurina_class(surf, cover);
    require(tj.has_value(), "smooth-branch surface must have a Tjurina class");
    const VirtualModule h11 = evaluate_class(
        hodge_middle(1, BundleSpec::weierstrass(surf.n), false), cover, tj,
        SlotMode::self_conjugate);
    require(m == h11 - trivial_lattice_class(*tj),
            "covering module disagrees with the Hodge-theoretic path");
    require(m.non_negative(), "covering module has a negative multiplicity");
    return m;
}

// ε·(c_E − d_E/6 + 2g−2+s): the conductor-degree closed form of the bound
inline std::int64_t pal_bound(const SurfaceReport& surf, const GaloisCover& cover,
                              std::int64_t epsilon) {
    detail::check_mw_hypotheses(surf, cover);
    if (epsilon < 1) throw config_error("epsilon must be a positive integer");
    require(surf.d_E % 6 == 0, "discriminant degree not divisible by 6");
    const std::int64_t e = 2 - 2 * cover.base_genus() - cover.branch_point_count();
    return epsilon * (surf.c_E - surf.d_E / 6 - e);
}

struct IsotypicEntry {
    int chi_index = 0;
    int chi_dim = 1;
    std::int64_t multiplicity = 0;
};

// nonzero isotypic multiplicities of a module, in table order
inline std::vector<IsotypicEntry> per_isotypic(const VirtualModule& m) {
    std::vector<IsotypicEntry> out;
    for (size_t i = 0; i < m.mult().size(); ++i)
        if (m[i] != 0)
            out.push_back({static_cast<int>(i), m.table()->dim(static_cast<int>(i)), m[i]});
    return out;
}

struct MWReport {
    VirtualModule M;
    std::int64_t rank_bound_dim = 0;
    std::int64_t pal_bound = 0;
    std::int64_t epsilon = 1;
    std::int64_t variant_form_value = 0;
    std::string discrepancy_note;
    std::vector<IsotypicEntry> isotypic;
};

inline MWReport mw_report(const SurfaceReport& surf, const GaloisCover& cover,
                          std::int64_t epsilon = 0) {
    if (epsilon == 0) epsilon = cover.group_order();
    MWReport rep{covering_module(surf, cover)};
    rep.rank_bound_dim = rep.M.dimension();
    rep.pal_bound = pal_bound(surf, cover, epsilon);
    rep.epsilon = epsilon;
    const std::int64_t e = 2 - 2 * cover.base_genus() - cover.branch_point_count();
    rep.variant_form_value = epsilon * (surf.c_E + surf.d_E / 6 - e);
    rep.discrepancy_note =
        "bound uses epsilon*(c_E - d_E/6 - e), e = 2-2g-s, which matches "
        "epsilon*(10n - mu); the sign-variant closed form epsilon*(c_E + d_E/6 - e) = " +
        std::to_string(rep.variant_form_value) + " is reported for comparison only";
    rep.isotypic = per_isotypic(rep.M);
    if (epsilon >= cover.group_order())
        require(rep.pal_bound >= rep.rank_bound_dim,
                "closed-form bound fell below the module dimension");
    return rep;
}

}  // namespace ellhodge
