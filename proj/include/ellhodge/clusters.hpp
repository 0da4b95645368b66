#pragma once

#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ellhodge/poly.hpp"

namespace ellhodge {

// Valuation sentinel for the zero section (v of the zero polynomial).
inline constexpr int kValInfinity = std::numeric_limits<int>::max();

struct InfinitePlace {
    bool operator==(const InfinitePlace&) const { return true; }
};

// A place of P^1: either the point at infinity or a monic squarefree
// polynomial whose roots form one Galois-stable packet of finite points.
using Place = std::variant<Poly, InfinitePlace>;

inline bool is_infinite(const Place& p) { return std::holds_alternative<InfinitePlace>(p); }
inline int place_degree(const Place& p) {
    return is_infinite(p) ? 1 : std::get<Poly>(p).degree();
}
inline std::string format_place(const Place& p) {
    return is_infinite(p) ? "inf" : format_poly(std::get<Poly>(p));
}

// Points sharing the valuations of A, B and of the discriminant D = 4A^3+27B^2.
struct ValuationCluster {
    Place place;
    int deg = 1;  // number of geometric points
    int vA = 0;   // kValInfinity when A = 0
    int vB = 0;   // kValInfinity when B = 0
    int vD = 0;
};

namespace detail {

// Splits each cluster by the root multiplicities of p (exactly, via Yun);
// untouched parts keep multiplicity 0. `assign` stores the multiplicity.
template <typename Assign>
void refine_by(std::vector<ValuationCluster>& clusters, const Poly& p, Assign assign) {
    if (p.is_zero()) {
        for (auto& c : clusters) assign(c, kValInfinity);
        return;
    }
    const auto parts = squarefree_decomposition(p);
    std::vector<ValuationCluster> out;
    out.reserve(clusters.size());
    for (const auto& c : clusters) {
        Poly rest = std::get<Poly>(c.place);
        for (const auto& [f, mult] : parts) {
            Poly g = gcd(rest, f);
            if (g.degree() <= 0) continue;
            ValuationCluster sub = c;
            sub.place = g;
            sub.deg = g.degree();
            assign(sub, mult);
            out.push_back(sub);
            rest = rest / g;
        }
        if (rest.degree() > 0) {
            ValuationCluster sub = c;
            sub.place = rest;
            sub.deg = rest.degree();
            assign(sub, 0);
            out.push_back(sub);
        }
    }
    clusters = std::move(out);
}

}  // namespace detail

// Pairwise-coprime monic factors of D = 4A^3 + 27B^2 with uniform
// (vA, vB, vD), plus the infinity cluster. deg bounds: A in H^0(L^4),
// B in H^0(L^6) for deg L = n. Finite clusters cover exactly the roots of D.
inline std::vector<ValuationCluster> uniform_clusters(const Poly& A, const Poly& B, int n) {
    require(n >= 1, "deg L must be positive");
    if (!A.is_zero() && A.degree() > 4 * n) throw config_error("deg A exceeds 4n");
    if (!B.is_zero() && B.degree() > 6 * n) throw config_error("deg B exceeds 6n");
    const Poly D = Poly::constant(Rat(4)) * A * A * A + Poly::constant(Rat(27)) * B * B;
    if (D.is_zero()) throw hypothesis_error("discriminant 4A^3+27B^2 vanishes identically");

    std::vector<ValuationCluster> clusters;
    for (const auto& [f, mult] : squarefree_decomposition(D)) {
        ValuationCluster c;
        c.place = f;
        c.deg = f.degree();
        c.vD = mult;
        clusters.push_back(c);
    }
    detail::refine_by(clusters, A, [](ValuationCluster& c, int v) { c.vA = v; });
    detail::refine_by(clusters, B, [](ValuationCluster& c, int v) { c.vB = v; });

    ValuationCluster inf;
    inf.place = InfinitePlace{};
    inf.deg = 1;
    inf.vA = A.is_zero() ? kValInfinity : 4 * n - A.degree();
    inf.vB = B.is_zero() ? kValInfinity : 6 * n - B.degree();
    inf.vD = 12 * n - D.degree();
    clusters.push_back(inf);

    int total = 0;
    for (const auto& c : clusters) total += c.deg * c.vD;
    require(total == 12 * n, "cluster discriminant degrees do not sum to 12n");
    return clusters;
}

// Finite rational point membership: the unique cluster vanishing at c, if any.
inline std::optional<size_t> cluster_at_point(const std::vector<ValuationCluster>& clusters,
                                              const Rat& c) {
    for (size_t i = 0; i < clusters.size(); ++i) {
        if (is_infinite(clusters[i].place)) continue;
        if (std::get<Poly>(clusters[i].place).eval(c) == 0) return i;
    }
    return std::nullopt;
}

}  // namespace ellhodge
