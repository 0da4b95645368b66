#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ellhodge/character.hpp"

namespace ellhodge {

// An element of the representation Grothendieck group K(C[G]): one integer
// multiplicity per irreducible character of the table it was built against.
class VirtualModule {
  public:
    VirtualModule(TablePtr table, std::vector<std::int64_t> mult)
        : table_(std::move(table)), m_(std::move(mult)) {
        require(static_cast<int>(m_.size()) == table_->num_irreducibles(),
                "multiplicity vector length mismatch");
    }

    static VirtualModule zero(TablePtr t) {
        std::vector<std::int64_t> m(t->num_irreducibles(), 0);
        return VirtualModule(std::move(t), std::move(m));
    }
    static VirtualModule trivial_class(TablePtr t) {
        auto v = zero(t);
        v.m_[0] = 1;
        return v;
    }
    // [C[G]]: each irreducible with multiplicity dim
    static VirtualModule regular_class(TablePtr t) {
        auto v = zero(t);
        for (int i = 0; i < t->num_irreducibles(); ++i) v.m_[i] = t->dim(i);
        return v;
    }

    const TablePtr& table() const { return table_; }
    const std::vector<std::int64_t>& mult() const { return m_; }
    std::int64_t operator[](size_t i) const { return m_[i]; }

    std::int64_t dimension() const {
        std::int64_t d = 0;
        for (size_t i = 0; i < m_.size(); ++i) d += m_[i] * table_->dim(static_cast<int>(i));
        return d;
    }

    bool operator==(const VirtualModule& o) const { return m_ == o.m_; }

    VirtualModule operator+(const VirtualModule& o) const {
        auto r = *this;
        for (size_t i = 0; i < m_.size(); ++i) r.m_[i] += o.m_[i];
        return r;
    }
    VirtualModule operator-(const VirtualModule& o) const {
        auto r = *this;
        for (size_t i = 0; i < m_.size(); ++i) r.m_[i] -= o.m_[i];
        return r;
    }
    VirtualModule operator*(std::int64_t k) const {
        auto r = *this;
        for (auto& x : r.m_) x *= k;
        return r;
    }

    // complex-conjugate character class
    VirtualModule dual() const {
        auto r = zero(table_);
        for (size_t i = 0; i < m_.size(); ++i)
            r.m_[table_->dual_index(static_cast<int>(i))] += m_[i];
        return r;
    }

    bool is_self_dual() const { return *this == dual(); }

    bool non_negative() const {
        for (auto x : m_)
            if (x < 0) return false;
        return true;
    }

    // Exact halving; an odd multiplicity signals inconsistent input upstream.
    VirtualModule halve() const {
        auto r = *this;
        for (auto& x : r.m_) {
            if (x % 2 != 0) throw internal_error("halve() hit an odd multiplicity");
            x /= 2;
        }
        return r;
    }

    Cx character_at(int g) const {
        Cx s(0);
        for (size_t i = 0; i < m_.size(); ++i)
            s += static_cast<double>(m_[i]) * table_->value_at_element(static_cast<int>(i), g);
        return s;
    }

  private:
    TablePtr table_;
    std::vector<std::int64_t> m_;
};

inline std::int64_t inner_product(const VirtualModule& a, const VirtualModule& b) {
    require(a.table() == b.table(), "inner product across tables");
    std::int64_t s = 0;
    for (size_t i = 0; i < a.mult().size(); ++i) s += a[i] * b[i];
    return s;
}

// Decomposes a class function (values per conjugacy class) into irreducible
// multiplicities; rejects residuals beyond the rounding tolerance.
inline VirtualModule decompose_class_function(const TablePtr& t, const std::vector<Cx>& values,
                                              const std::string& what) {
    const auto& g = t->group();
    require(static_cast<int>(values.size()) == g.num_classes(), "class function length");
    std::vector<std::int64_t> m(t->num_irreducibles());
    for (int i = 0; i < t->num_irreducibles(); ++i) {
        Cx s(0);
        for (int c = 0; c < g.num_classes(); ++c)
            s += Cx(g.class_size(c)) * values[c] * std::conj(t->value(i, c));
        s /= static_cast<double>(g.order());
        const auto rounded = std::llround(s.real());
        if (std::abs(s.real() - rounded) > kRoundTol || std::abs(s.imag()) > kRoundTol)
            throw internal_error(what + ": non-integral multiplicity");
        m[i] = rounded;
    }
    return VirtualModule(t, std::move(m));
}

// Frobenius reciprocity for Ind_{<gen>}^G 1: mult_i = (1/e) sum_j chi_i(gen^j).
inline VirtualModule induced_trivial(const TablePtr& t, int gen) {
    const auto& g = t->group();
    const int e = g.element_order(gen);
    std::vector<std::int64_t> m(t->num_irreducibles());
    for (int i = 0; i < t->num_irreducibles(); ++i) {
        Cx s(0);
        int x = g.identity();
        for (int j = 0; j < e; ++j) {
            s += t->value_at_element(i, x);
            x = g.mul(x, gen);
        }
        s /= static_cast<double>(e);
        const auto rounded = std::llround(s.real());
        if (std::abs(s.real() - rounded) > kRoundTol || std::abs(s.imag()) > kRoundTol)
            throw internal_error("induced_trivial: non-integral multiplicity");
        m[i] = rounded;
    }
    VirtualModule v(t, std::move(m));
    require(v.dimension() * e == g.order(), "induced_trivial dimension != |G|/e");
    return v;
}

}  // namespace ellhodge
