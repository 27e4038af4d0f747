#include "spclass/linalg.hpp"

namespace spc {

std::tuple<int, int, int> symmetric_inertia(Mat<Rat> m) {
    const std::size_t n = m.size();
    int pos = 0, neg = 0, zero = 0;
    std::size_t k = 0;
    auto swap_rc = [&](std::size_t i, std::size_t j) {
        std::swap(m[i], m[j]);
        for (std::size_t t = 0; t < n; ++t) std::swap(m[t][i], m[t][j]);
    };
    while (k < n) {
        std::size_t piv = k;
        while (piv < n && m[piv][piv].is_zero()) ++piv;
        if (piv < n) {
            if (piv != k) swap_rc(piv, k);
            Rat p = m[k][k];
            p.sign() > 0 ? ++pos : ++neg;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (m[i][k].is_zero()) continue;
                Rat f = m[i][k] / p;
                for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
                for (std::size_t j = k; j < n; ++j) m[j][i] = m[i][j];
            }
            ++k;
            continue;
        }
        // All remaining diagonal entries vanish.
        bool found = false;
        for (std::size_t i = k; i < n && !found; ++i)
            for (std::size_t j = i + 1; j < n && !found; ++j)
                if (!m[i][j].is_zero()) {
                    // Hyperbolic pair contributes one of each sign.  Fold
                    // row/col j into i to expose a nonzero diagonal.
                    swap_rc(i, k);
                    swap_rc(j, k + 1);
                    for (std::size_t t = 0; t < n; ++t) m[t][k] += m[t][k + 1];
                    for (std::size_t t = 0; t < n; ++t) m[k][t] += m[k + 1][t];
                    found = true;
                }
        if (!found) {
            zero += static_cast<int>(n - k);
            break;
        }
    }
    return {pos, neg, zero};
}

}  // namespace spc
