#pragma once

#include "spclass/numbers.hpp"

#include <optional>
#include <tuple>
#include <vector>

namespace spc {

template <class T>
using Vec = std::vector<T>;
template <class T>
using Mat = std::vector<std::vector<T>>;

template <class T>
int sgn(const T& x) {
    if constexpr (std::is_same_v<T, Rat> || std::is_same_v<T, Int>)
        return x.sign();
    else
        return x.sign();
}

template <class T>
int matrix_rank(Mat<T> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            T f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

// Solves A x = b; nullopt if inconsistent.  When the system is
// underdetermined, free variables are set to zero and *underdetermined is set.
template <class T>
std::optional<Vec<T>> solve_linear(Mat<T> a, Vec<T> b, bool* underdetermined = nullptr) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<int> where(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        T inv = T(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        b[r] = b[r] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            T f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        where[c] = static_cast<int>(r);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (sgn(b[i]) != 0) return std::nullopt;
    if (underdetermined) *underdetermined = r < cols;
    Vec<T> x(cols, T(0));
    for (std::size_t c = 0; c < cols; ++c)
        if (where[c] >= 0) x[c] = b[where[c]];
    return x;
}

// Basis of the affine solution set of A x = b as (particular, nullspace basis);
// nullopt if inconsistent.
template <class T>
std::optional<std::pair<Vec<T>, Mat<T>>> solve_affine(Mat<T> a, Vec<T> b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<int> where(cols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        std::swap(b[piv], b[r]);
        T inv = T(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        b[r] = b[r] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            T f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        where[c] = static_cast<int>(r);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (sgn(b[i]) != 0) return std::nullopt;
    Vec<T> x(cols, T(0));
    for (std::size_t c = 0; c < cols; ++c)
        if (where[c] >= 0) x[c] = b[where[c]];
    Mat<T> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (where[c] >= 0) continue;
        Vec<T> v(cols, T(0));
        v[c] = T(1);
        for (std::size_t c2 = 0; c2 < cols; ++c2)
            if (where[c2] >= 0) v[c2] = -a[where[c2]][c];
        basis.push_back(std::move(v));
    }
    return std::make_pair(std::move(x), std::move(basis));
}

// Inertia (positive, negative, zero eigenvalue counts) of a symmetric rational
// matrix, via congruence reduction with symmetric pivoting.
std::tuple<int, int, int> symmetric_inertia(Mat<Rat> m);

}  // namespace spc
