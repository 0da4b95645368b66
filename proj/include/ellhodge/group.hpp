#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "ellhodge/errors.hpp"

namespace ellhodge {

// A finite group presented by its Cayley table. Elements are 0..order-1;
// the table is validated on construction (identity, inverses, associativity),
// so downstream code can trust it blindly.
class FiniteGroup {
  public:
    // table[a][b] = a*b. Identity may sit at any index.
    explicit FiniteGroup(std::vector<std::vector<int>> table) : mul_(std::move(table)) {
        validate();
        conjugacy();
    }

    static FiniteGroup cyclic(int m) {
        if (m < 1) throw config_error("cyclic group order must be >= 1");
        std::vector<std::vector<int>> t(m, std::vector<int>(m));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) t[a][b] = (a + b) % m;
        return FiniteGroup(std::move(t));
    }

    // Order 2m: elements 0..m-1 are rotations r^a, m..2m-1 are reflections
    // r^a s (as maps of Z/m vertices: v -> v+a and v -> a-v).
    static FiniteGroup dihedral(int m) {
        if (m < 1) throw config_error("dihedral parameter must be >= 1");
        const int nn = 2 * m;
        auto rot = [m](int a) { return ((a % m) + m) % m; };
        std::vector<std::vector<int>> t(nn, std::vector<int>(nn));
        for (int x = 0; x < nn; ++x)
            for (int y = 0; y < nn; ++y) {
                const bool xr = x < m, yr = y < m;
                const int a = xr ? x : x - m, b = yr ? y : y - m;
                if (xr && yr) t[x][y] = rot(a + b);
                else if (xr && !yr) t[x][y] = m + rot(a + b);
                else if (!xr && yr) t[x][y] = m + rot(a - b);
                else t[x][y] = rot(a - b);
            }
        return FiniteGroup(std::move(t));
    }

    int order() const { return static_cast<int>(mul_.size()); }
    int mul(int a, int b) const { return mul_[a][b]; }
    int identity() const { return e_; }
    int inverse(int a) const { return inv_[a]; }

    int power(int a, int k) const {
        int r = e_;
        if (k < 0) { a = inv_[a]; k = -k; }
        for (int i = 0; i < k; ++i) r = mul_[r][a];
        return r;
    }

    int element_order(int a) const {
        int r = a, k = 1;
        while (r != e_) { r = mul_[r][a]; ++k; }
        return k;
    }

    int conjugate(int g, int x) const {  // x g x^-1
        return mul_[mul_[x][g]][inv_[x]];
    }

    int num_classes() const { return static_cast<int>(class_reps_.size()); }
    int class_of(int a) const { return class_index_[a]; }
    int class_rep(int c) const { return class_reps_[c]; }
    int class_size(int c) const { return class_sizes_[c]; }
    const std::vector<int>& class_members(int c) const { return class_members_[c]; }

    bool is_abelian() const {
        return num_classes() == order();
    }

  private:
    void validate() {
        const int nn = order();
        if (nn == 0) throw config_error("empty group table");
        for (const auto& row : mul_) {
            if (static_cast<int>(row.size()) != nn) throw config_error("ragged group table");
            for (int v : row)
                if (v < 0 || v >= nn) throw config_error("group table entry out of range");
        }
        e_ = -1;
        for (int a = 0; a < nn; ++a) {
            bool ident = true;
            for (int b = 0; b < nn; ++b)
                if (mul_[a][b] != b || mul_[b][a] != b) { ident = false; break; }
            if (ident) { e_ = a; break; }
        }
        if (e_ < 0) throw config_error("group table has no identity");
        inv_.assign(nn, -1);
        for (int a = 0; a < nn; ++a) {
            for (int b = 0; b < nn; ++b)
                if (mul_[a][b] == e_ && mul_[b][a] == e_) { inv_[a] = b; break; }
            if (inv_[a] < 0) throw config_error("group table element lacks an inverse");
        }
        for (int a = 0; a < nn; ++a)
            for (int b = 0; b < nn; ++b)
                for (int c = 0; c < nn; ++c)
                    if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
                        throw config_error("group table is not associative");
    }

    void conjugacy() {
        const int nn = order();
        class_index_.assign(nn, -1);
        for (int g = 0; g < nn; ++g) {
            if (class_index_[g] >= 0) continue;
            const int id = static_cast<int>(class_reps_.size());
            class_reps_.push_back(g);
            std::vector<int> members;
            for (int x = 0; x < nn; ++x) {
                int h = conjugate(g, x);
                if (class_index_[h] < 0) {
                    class_index_[h] = id;
                    members.push_back(h);
                }
            }
            std::sort(members.begin(), members.end());
            class_sizes_.push_back(static_cast<int>(members.size()));
            class_members_.push_back(std::move(members));
        }
    }

    std::vector<std::vector<int>> mul_;
    int e_ = 0;
    std::vector<int> inv_;
    std::vector<int> class_index_, class_reps_, class_sizes_;
    std::vector<std::vector<int>> class_members_;
};

}  // namespace ellhodge
