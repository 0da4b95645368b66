#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ellhodge/errors.hpp"
#include "ellhodge/rational.hpp"

namespace ellhodge {

// Dense univariate polynomial over Q, coefficients low degree first.
// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rat& a) { return Poly{std::vector<Rat>{a}}; }
    static Poly x() { return Poly{Rat(0), Rat(1)}; }
    // (x - a)
    static Poly linear_root(const Rat& a) { return Poly{-a, Rat(1)}; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& operator[](size_t i) const { return c_[i]; }
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const {
        require(!is_zero(), "leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    Poly operator+(const Poly& o) const {
        std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<Rat> r = c_;
        for (auto& a : r) a = -a;
        return Poly(std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Poly(std::move(r));
    }
    Poly operator*(const Rat& a) const {
        std::vector<Rat> r = c_;
        for (auto& x : r) x *= a;
        return Poly(std::move(r));
    }

    Rat eval(const Rat& x) const {
        Rat v(0);
        for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
        return v;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<Rat> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(i);
        return Poly(std::move(r));
    }

    Poly monic() const {
        require(!is_zero(), "monic() of zero polynomial");
        return *this * (Rat(1) / leading());
    }

    Poly pow(int e) const {
        require(e >= 0, "negative polynomial power");
        Poly r = constant(Rat(1));
        for (int i = 0; i < e; ++i) r = r * *this;
        return r;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Quotient and remainder: a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    require(!b.is_zero(), "division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> quot(a.degree() - b.degree() + 1, Rat(0));
    const Rat lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rat q = rem[k + b.degree()] / lead;
        quot[k] = q;
        if (q == 0) continue;
        for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= q * b[i];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

inline Poly operator/(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    require(r.is_zero(), "inexact polynomial division");
    return q;
}

// Monic gcd; gcd(0,0) = 0. Coefficients are renormalized each step so this is
// plain field-arithmetic Euclid, fine at the degrees that arise here.
inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        auto [q, r] = divrem(a, b);
        (void)q;
        a = std::move(b);
        b = r.is_zero() ? Poly() : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

// Yun's squarefree decomposition: p = lc * prod f_i^i with the f_i monic,
// squarefree, pairwise coprime. Returns pairs (f_i, i) with deg f_i > 0.
inline std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
    require(!p.is_zero(), "squarefree decomposition of zero polynomial");
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() == 0) return out;
    Poly a = p.monic();
    Poly g = gcd(a, a.derivative());
    Poly w = a / g;  // product of distinct roots
    Poly y = a.derivative() / g;
    int i = 1;
    while (w.degree() > 0) {
        Poly z = y - w.derivative();
        Poly f = gcd(w, z);
        if (f.degree() > 0) out.emplace_back(f, i);
        w = w / f;
        y = z / f;
        ++i;
    }
    return out;
}

// Multiplicity of root c in p; 0 when p(c) != 0. p must be nonzero.
inline int valuation_at_point(const Poly& p, const Rat& c) {
    require(!p.is_zero(), "valuation in zero polynomial");
    int v = 0;
    Poly q = p;
    const Poly lin = Poly::linear_root(c);
    while (q.eval(c) == 0) {
        q = q / lin;
        ++v;
    }
    return v;
}

// Valuation at infinity relative to a degree bound: bound - deg p.
inline int valuation_at_infinity(const Poly& p, int bound) {
    require(!p.is_zero(), "valuation in zero polynomial");
    require(p.degree() <= bound, "degree exceeds bound");
    return bound - p.degree();
}

inline std::string format_poly(const Poly& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = p.degree(); i >= 0; --i) {
        if (p[i] == 0) continue;
        Rat c = p[i];
        if (s.empty()) {
            if (c < 0) { s += "-"; c = -c; }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (i == 0 || c != 1) s += format_rational(c);
        if (i > 0) {
            if (c != 1) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace ellhodge
