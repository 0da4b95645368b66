#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ellhodge/character.hpp"
#include "ellhodge/clusters.hpp"
#include "ellhodge/virtual_module.hpp"

namespace ellhodge {

// A branch point of a Galois cover of P^1 (or of an abstract base curve).
// Poly means the Galois orbit of the roots of a squarefree polynomial;
// string is an abstract label with no coordinates attached.
using BranchLocation = std::variant<Rat, InfinitePlace, Poly, std::string>;

inline std::string format_branch_location(const BranchLocation& loc) {
    if (std::holds_alternative<Rat>(loc)) return format_rational(std::get<Rat>(loc));
    if (std::holds_alternative<InfinitePlace>(loc)) return "inf";
    if (std::holds_alternative<Poly>(loc)) return "roots of " + format_poly(std::get<Poly>(loc));
    return std::get<std::string>(loc);
}

// multiplicity = number of base points sharing this inertia behavior (a Poly
// location covers deg many points). inertia_gen generates the (cyclic)
// stabilizer of one point above the location; our convention is that it acts
// on the tangent space at its fixed points with derivative exp(2*pi*i/e).
struct BranchEntry {
    int multiplicity = 1;
    BranchLocation location;
    int e = 1;
    int inertia_gen = 0;
};

struct SuperellipticData {
    int m = 2;
    Poly f;  // monic squarefree
};

// Galois cover of a base curve, given by its group and inertia data only.
class GaloisCover {
  public:
    // y^m = f(t) over P^1 with the Z/m-action y -> zeta_m * y.
    static GaloisCover superelliptic(int m, const Poly& f_in) {
        if (m < 2) throw config_error("superelliptic exponent m must be at least 2");
        if (f_in.degree() < 1) throw config_error("superelliptic f must be non-constant");
        const Poly f = f_in.monic();
        if (gcd(f, f.derivative()).degree() != 0)
            throw config_error("superelliptic f must be squarefree");

        GaloisCover cov;
        cov.table_ = std::make_shared<const CharacterTable>(CharacterTable::cyclic(m));
        cov.base_genus_ = 0;
        cov.superelliptic_ = SuperellipticData{m, f};
        const int N = f.degree();
        cov.branches_.push_back({N, f, m, 1});
        const int c = std::gcd(m, N);
        const int e_inf = m / c;
        if (e_inf > 1) {
            // the stabilizer above infinity is <g^c>; pick the power whose
            // derivative at its fixed points is the primitive root of unity
            const int k = ((-(N / c)) % e_inf + e_inf) % e_inf;
            cov.branches_.push_back({1, InfinitePlace{}, e_inf, (c * k) % m});
        }
        cov.validate();
        return cov;
    }

    static GaloisCover abstract_cover(TablePtr table, int base_genus,
                                      std::vector<BranchEntry> branches) {
        if (base_genus < 0) throw config_error("base genus must be non-negative");
        GaloisCover cov;
        cov.table_ = std::move(table);
        cov.base_genus_ = base_genus;
        const auto& G = cov.table_->group();
        for (auto& b : branches) {
            if (b.inertia_gen <= 0 || b.inertia_gen >= G.order())
                throw config_error("inertia generator must be a non-identity group element");
            if (b.multiplicity < 1) throw config_error("branch multiplicity must be positive");
            b.e = G.element_order(b.inertia_gen);
        }
        for (size_t i = 0; i < branches.size(); ++i)
            for (size_t j = i + 1; j < branches.size(); ++j)
                if (locations_overlap(branches[i].location, branches[j].location))
                    throw config_error("branch points must be pairwise distinct");
        cov.branches_ = std::move(branches);
        cov.validate();
        return cov;
    }

    static GaloisCover trivial_cover(int base_genus = 0) {
        return abstract_cover(std::make_shared<const CharacterTable>(CharacterTable::trivial()),
                              base_genus, {});
    }

    const TablePtr& table_ptr() const { return table_; }
    const CharacterTable& table() const { return *table_; }
    const FiniteGroup& group() const { return table_->group(); }
    int group_order() const { return group().order(); }
    int base_genus() const { return base_genus_; }
    const std::vector<BranchEntry>& branches() const { return branches_; }
    const std::optional<SuperellipticData>& superelliptic_data() const { return superelliptic_; }
    bool ramified() const { return !branches_.empty(); }

    // s: number of branch points on the base, counted without multiplicity of
    // ramification but with the degree of each location
    int branch_point_count() const {
        int s = 0;
        for (const auto& b : branches_) s += b.multiplicity;
        return s;
    }

    int genus_upstairs() const {
        const int order = group_order();
        long long rhs = static_cast<long long>(order) * (2 * base_genus_ - 2);
        for (const auto& b : branches_) {
            require(order % b.e == 0, "ramification index does not divide the group order");
            rhs += static_cast<long long>(b.multiplicity) * (order / b.e) * (b.e - 1);
        }
        const long long twog = rhs + 2;
        if (twog % 2 != 0 || twog < 0)
            fail_data("ramification data gives no integral non-negative genus");
        return static_cast<int>(twog / 2);
    }

    // H^0 of the structure sheaf of the reduced preimage of the branch locus:
    // one induced-trivial block per branch point
    VirtualModule h0_branch_fibers() const {
        auto out = VirtualModule::zero(table_);
        for (const auto& b : branches_)
            out = out + induced_trivial(table_, b.inertia_gen) * b.multiplicity;
        return out;
    }

    // [H^0(K)] upstairs, from the holomorphic fixed-point formula:
    // tr(gamma) = 1 - sum over fixed points 1/(1 - lambda^{-1}), lambda the
    // tangent eigenvalue of gamma there; tr(id) = genus.
    VirtualModule h0_canonical() const {
        const auto& G = group();
        const int g_up = genus_upstairs();
        std::vector<Cx> trace(G.num_classes());
        for (int cls = 0; cls < G.num_classes(); ++cls) {
            const int gamma = G.class_rep(cls);
            if (gamma == G.identity()) {
                trace[cls] = Cx(g_up, 0);
                continue;
            }
            Cx fixed(0, 0);
            for (const auto& b : branches_) {
                std::vector<int> power_index(G.order(), -1);
                for (int a = 1; a < b.e; ++a) power_index[G.power(b.inertia_gen, a)] = a;
                Cx entry(0, 0);
                for (int x = 0; x < G.order(); ++x) {
                    const int a = power_index[G.conjugate(gamma, x)];
                    if (a >= 0) entry += Cx(1, 0) / (Cx(1, 0) - root_of_unity(-a, b.e));
                }
                fixed += entry * (static_cast<double>(b.multiplicity) / b.e);
            }
            trace[cls] = Cx(1, 0) - fixed;
        }

        VirtualModule h0k = VirtualModule::zero(table_);
        try {
            h0k = decompose_class_function(table_, trace, "h0_canonical trace");
            require(h0k.dimension() == g_up, "h0_canonical dimension != genus");
            require(h0k.non_negative(), "h0_canonical has a negative multiplicity");
            // degeneration of [eqn: 0 -> K -> pullback K(R) -> O|_R -> 0]:
            // h0K + dual(h0K) + branch fibers = 2[C] + (2g-2+s)[C[G]]
            const auto lhs = h0k + h0k.dual() + h0_branch_fibers();
            const auto rhs = VirtualModule::trivial_class(table_) * 2 +
                             VirtualModule::regular_class(table_) *
                                 (2 * base_genus_ - 2 + branch_point_count());
            require(lhs == rhs, "canonical-module identity failed");
        } catch (const internal_error& err) {
            fail_data(std::string("branch data is not realizable: ") + err.what());
        }
        return h0k;
    }

    // chi_G(O) reported with H^1(O) identified with [H^0(K)] (not its dual);
    // the two readings agree whenever all characters are real
    VirtualModule chi_structure_sheaf() const {
        return VirtualModule::trivial_class(table_) - h0_canonical();
    }

  private:
    GaloisCover() = default;

    void validate() const { (void)genus_upstairs(); }

    // abstract input errors are config errors; superelliptic data is derived
    // internally, so inconsistencies there are bugs
    [[noreturn]] void fail_data(const std::string& msg) const {
        if (superelliptic_) throw internal_error(msg);
        throw config_error(msg);
    }

    static bool locations_overlap(const BranchLocation& a, const BranchLocation& b) {
        if (a.index() != b.index()) {
            const Rat* pt = std::get_if<Rat>(&a) ? std::get_if<Rat>(&a) : std::get_if<Rat>(&b);
            const Poly* pol = std::get_if<Poly>(&a) ? std::get_if<Poly>(&a) : std::get_if<Poly>(&b);
            return pt && pol && pol->eval(*pt) == 0;
        }
        if (std::holds_alternative<Rat>(a)) return std::get<Rat>(a) == std::get<Rat>(b);
        if (std::holds_alternative<InfinitePlace>(a)) return true;
        if (std::holds_alternative<Poly>(a))
            return gcd(std::get<Poly>(a), std::get<Poly>(b)).degree() > 0;
        return std::get<std::string>(a) == std::get<std::string>(b);
    }

    TablePtr table_;
    int base_genus_ = 0;
    std::vector<BranchEntry> branches_;
    std::optional<SuperellipticData> superelliptic_;
};

struct CoverReport {
    int genus_up = 0;
    int s = 0;
    VirtualModule h0_OZ;
    VirtualModule h0_K;
    VirtualModule chi_O;
};

inline CoverReport cover_report(const GaloisCover& cov) {
    CoverReport rep{cov.genus_upstairs(), cov.branch_point_count(), cov.h0_branch_fibers(),
                    cov.h0_canonical(), cov.chi_structure_sheaf()};
    require(rep.chi_O.dimension() == 1 - rep.genus_up, "chi(O) dimension != 1 - genus");
    return rep;
}

}  // namespace ellhodge
