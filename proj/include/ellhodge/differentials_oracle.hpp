#pragma once

#include <numeric>

#include "ellhodge/cover.hpp"

namespace ellhodge {

// Independent basis enumeration of H^0(K) for y^m = f(t): candidate forms
// t^i y^{-j} dt with 1 <= j <= m-1, 0 <= i <= deg f, kept when their divisor
// is effective. The action y -> zeta_m y scales the form by zeta_m^{-j}, so
// each kept form lands in the character of index -j mod m.
inline VirtualModule superelliptic_differentials_oracle(const GaloisCover& cover) {
    const auto& data = cover.superelliptic_data();
    if (!data) throw config_error("differentials oracle needs a superelliptic cover");
    const int m = data->m;
    const Poly& f = data->f;
    const int N = f.degree();
    const int c = std::gcd(m, N);
    const bool zero_is_root = f.eval(Rat(0)) == 0;

    std::vector<std::int64_t> mult(cover.table().num_irreducibles(), 0);
    int count = 0;
    for (int j = 1; j < m; ++j) {
        for (int i = 0; i <= N; ++i) {
            // at a root r of f: v(y) = 1, v(t - r) = m, v(dt) = m - 1
            const int v_zero_root = i * m + (m - 1) - j;
            const int v_other_root = (m - 1) - j;
            // at each of the c points over infinity: v(t) = -m/c, v(y) = -N/c
            const int v_inf = -(m / c) * (i + 1) + j * (N / c) - 1;
            if (v_other_root < 0 || (zero_is_root && v_zero_root < 0) || v_inf < 0) continue;
            ++mult[(m - j) % m];
            ++count;
        }
    }
    require(count == cover.genus_upstairs(), "oracle basis count != genus");
    return VirtualModule(cover.table_ptr(), std::move(mult));
}

inline VirtualModule superelliptic_differentials_oracle(int m, const Poly& f) {
    return superelliptic_differentials_oracle(GaloisCover::superelliptic(m, f));
}

}  // namespace ellhodge
