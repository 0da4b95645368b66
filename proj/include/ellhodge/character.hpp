#pragma once

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>
#include <utility>
#include <vector>

#include "ellhodge/group.hpp"

namespace ellhodge {

using Cx = std::complex<double>;

inline constexpr double kOrthoTol = 1e-9;  // row orthogonality
inline constexpr double kRoundTol = 1e-6;  // multiplicity rounding residual

inline Cx root_of_unity(int num, int den) {
    const double a = 2.0 * std::numbers::pi * num / den;
    return {std::cos(a), std::sin(a)};
}

// Irreducible character table over a validated group. Row 0 is always the
// trivial character; rows are checked for orthonormality and sum(dim^2)=|G|.
class CharacterTable {
  public:
    // values[i][c] = chi_i on conjugacy class c (classes as enumerated by g).
    CharacterTable(FiniteGroup g, std::vector<std::vector<Cx>> values)
        : group_(std::move(g)), chi_(std::move(values)) {
        canonicalize_and_check();
    }

    static CharacterTable cyclic(int m) {
        FiniteGroup g = FiniteGroup::cyclic(m);
        // classes are singletons {k}; class indices follow first-seen order 0..m-1
        std::vector<std::vector<Cx>> chi(m, std::vector<Cx>(m));
        for (int j = 0; j < m; ++j)
            for (int c = 0; c < m; ++c) chi[j][c] = root_of_unity(j * g.class_rep(c), m);
        return CharacterTable(std::move(g), std::move(chi));
    }

    static CharacterTable dihedral(int m) {
        FiniteGroup g = FiniteGroup::dihedral(m);
        const int nc = g.num_classes();
        std::vector<std::vector<Cx>> chi;
        auto at = [&](auto f) {
            std::vector<Cx> row(nc);
            for (int c = 0; c < nc; ++c) row[c] = f(g.class_rep(c));
            return row;
        };
        auto rot_part = [m](int x) { return x < m ? x : x - m; };
        auto is_rot = [m](int x) { return x < m; };
        chi.push_back(at([](int) { return Cx(1); }));
        chi.push_back(at([&](int x) { return Cx(is_rot(x) ? 1 : -1); }));
        if (m % 2 == 0) {
            chi.push_back(at([&](int x) { return Cx(rot_part(x) % 2 ? -1 : 1); }));
            chi.push_back(at([&](int x) {
                double s = rot_part(x) % 2 ? -1 : 1;
                return Cx(is_rot(x) ? s : -s);
            }));
        }
        for (int h = 1; 2 * h + 1 <= m; ++h)
            if (2 * h != m)
                chi.push_back(at([&](int x) {
                    if (!is_rot(x)) return Cx(0);
                    return Cx(2 * std::cos(2.0 * std::numbers::pi * h * rot_part(x) / m));
                }));
        return CharacterTable(std::move(g), std::move(chi));
    }

    static CharacterTable trivial() { return cyclic(1); }

    const FiniteGroup& group() const { return group_; }
    int num_irreducibles() const { return static_cast<int>(chi_.size()); }
    int dim(int i) const { return dims_[i]; }
    Cx value(int i, int cls) const { return chi_[i][cls]; }
    Cx value_at_element(int i, int g) const { return chi_[i][group_.class_of(g)]; }
    // index of the conjugate character: chi_{dual(i)} = conj(chi_i)
    int dual_index(int i) const { return dual_[i]; }

  private:
    void canonicalize_and_check() {
        const int nc = group_.num_classes();
        const int ni = num_irreducibles();
        if (ni != nc)
            throw config_error("character table must have one row per conjugacy class");
        for (const auto& row : chi_)
            if (static_cast<int>(row.size()) != nc)
                throw config_error("character table row width mismatch");

        // move the trivial character to row 0
        int triv = -1;
        for (int i = 0; i < ni && triv < 0; ++i) {
            bool all1 = true;
            for (const auto& v : chi_[i]) all1 = all1 && std::abs(v - Cx(1)) < kOrthoTol;
            if (all1) triv = i;
        }
        if (triv < 0) throw config_error("character table lacks the trivial character");
        std::swap(chi_[0], chi_[triv]);

        const int n = group_.order();
        for (int i = 0; i < ni; ++i)
            for (int j = 0; j < ni; ++j) {
                Cx s(0);
                for (int c = 0; c < nc; ++c)
                    s += Cx(group_.class_size(c)) * chi_[i][c] * std::conj(chi_[j][c]);
                s /= static_cast<double>(n);
                const Cx want(i == j ? 1.0 : 0.0);
                if (std::abs(s - want) > kOrthoTol)
                    throw config_error("character table rows are not orthonormal");
            }

        dims_.resize(ni);
        int sumsq = 0;
        const int e_cls = group_.class_of(group_.identity());
        for (int i = 0; i < ni; ++i) {
            const double d = chi_[i][e_cls].real();
            dims_[i] = static_cast<int>(std::lround(d));
            if (std::abs(d - dims_[i]) > kOrthoTol || dims_[i] < 1 ||
                std::abs(chi_[i][e_cls].imag()) > kOrthoTol)
                throw config_error("character dimension is not a positive integer");
            sumsq += dims_[i] * dims_[i];
        }
        if (sumsq != n) throw config_error("sum of squared dimensions != |G|");

        dual_.assign(ni, -1);
        for (int i = 0; i < ni; ++i) {
            for (int j = 0; j < ni; ++j) {
                double maxdiff = 0;
                for (int c = 0; c < nc; ++c)
                    maxdiff = std::max(maxdiff, std::abs(std::conj(chi_[i][c]) - chi_[j][c]));
                if (maxdiff < kOrthoTol) { dual_[i] = j; break; }
            }
            if (dual_[i] < 0) throw config_error("conjugate character missing from table");
        }
    }

    FiniteGroup group_;
    std::vector<std::vector<Cx>> chi_;
    std::vector<int> dims_;
    std::vector<int> dual_;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

}  // namespace ellhodge
