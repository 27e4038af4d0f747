#pragma once

#include "spclass/jform.hpp"
#include "spclass/linalg.hpp"
#include "spclass/numbers.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace spc {

// ---------------------------------------------------------------------------
// Exact simplex (Bland's rule), equality form: max c.x, A x = b, x >= 0.
// Sizes here are tiny (tens of rows), so the dense tableau is fine.
// ---------------------------------------------------------------------------

template <class T>
struct LpResult {
    enum Status { INFEASIBLE, OPTIMAL, UNBOUNDED } status;
    T value{Rat(0)};
    Vec<T> x;
};

namespace detail {

template <class T>
void lp_pivot(Mat<T>& tab, std::vector<int>& basis, std::size_t row, std::size_t col) {
    const std::size_t w = tab[0].size();
    T inv = T(Rat(1)) / tab[row][col];
    for (std::size_t j = 0; j < w; ++j) tab[row][j] = tab[row][j] * inv;
    for (std::size_t i = 0; i < tab.size(); ++i) {
        if (i == row || sgn(tab[i][col]) == 0) continue;
        T f = tab[i][col];
        for (std::size_t j = 0; j < w; ++j) tab[i][j] -= f * tab[row][j];
    }
    basis[row] = static_cast<int>(col);
}

// Runs simplex iterations on a tableau whose last row is the objective in
// reduced-cost form and whose column `rhs` holds the right-hand side.  Only
// columns below `ncols` may enter the basis.
template <class T>
bool lp_iterate(Mat<T>& tab, std::vector<int>& basis, std::size_t ncols, std::size_t rhs) {
    const std::size_t m = tab.size() - 1;
    for (;;) {
        std::size_t col = ncols;
        for (std::size_t j = 0; j < ncols; ++j)
            if (sgn(tab[m][j]) < 0) {
                col = j;
                break;  // Bland: smallest index
            }
        if (col == ncols) return true;  // optimal
        std::size_t row = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (sgn(tab[i][col]) <= 0) continue;
            if (row == m) {
                row = i;
                continue;
            }
            T lhs = tab[i][rhs] * tab[row][col];
            T rhsv = tab[row][rhs] * tab[i][col];
            int c = sgn(T(lhs - rhsv));
            if (c < 0 || (c == 0 && basis[i] < basis[row])) row = i;
        }
        if (row == m) return false;  // unbounded
        lp_pivot(tab, basis, row, col);
    }
}

}  // namespace detail

template <class T>
LpResult<T> lp_maximize(Mat<T> a, Vec<T> b, Vec<T> c) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a[0].size() : c.size();
    for (std::size_t i = 0; i < m; ++i)
        if (sgn(b[i]) < 0) {
            for (auto& v : a[i]) v = -v;
            b[i] = -b[i];
        }
    const std::size_t total = n + m;  // artificials appended
    Mat<T> tab(m + 1, Vec<T>(total + 1, T(Rat(0))));
    std::vector<int> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = a[i][j];
        tab[i][n + i] = T(Rat(1));
        tab[i][total] = b[i];
        basis[i] = static_cast<int>(n + i);
    }
    // Phase 1: minimize sum of artificials.
    for (std::size_t j = n; j < total; ++j) tab[m][j] = T(Rat(1));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= total; ++j) tab[m][j] -= tab[i][j];
    detail::lp_iterate(tab, basis, total, total);
    if (sgn(tab[m][total]) != 0) return {LpResult<T>::INFEASIBLE, T(Rat(0)), {}};
    // Drive remaining artificials out of the basis; redundant rows stay put.
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < static_cast<int>(n)) continue;
        std::size_t col = n;
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(tab[i][j]) != 0) {
                col = j;
                break;
            }
        if (col < n) detail::lp_pivot(tab, basis, i, col);
    }
    // Phase 2 on the real objective.
    for (std::size_t j = 0; j <= total; ++j) tab[m][j] = T(Rat(0));
    for (std::size_t j = 0; j < n; ++j) tab[m][j] = -c[j];
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] >= static_cast<int>(n)) continue;
        T f = tab[m][static_cast<std::size_t>(basis[i])];
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j <= total; ++j) tab[m][j] -= f * tab[i][j];
    }
    bool optimal = detail::lp_iterate(tab, basis, n, total);  // artificials barred from re-entry
    LpResult<T> out;
    out.status = optimal ? LpResult<T>::OPTIMAL : LpResult<T>::UNBOUNDED;
    out.x.assign(n, T(Rat(0)));
    for (std::size_t i = 0; i < m; ++i)
        if (basis[i] < static_cast<int>(n)) out.x[static_cast<std::size_t>(basis[i])] = tab[i][total];
    out.value = tab[m][total];
    return out;
}

// ---------------------------------------------------------------------------
// Point-set predicates.
// ---------------------------------------------------------------------------

template <class T>
int affine_rank(const std::vector<Vec<T>>& pts) {
    if (pts.size() <= 1) return 0;
    Mat<T> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        Vec<T> row;
        for (std::size_t j = 0; j < pts[0].size(); ++j) row.push_back(pts[i][j] - pts[0][j]);
        diffs.push_back(std::move(row));
    }
    return matrix_rank(std::move(diffs));
}

// target in conv{points[i] : i != skip}?
template <class T>
bool conv_contains(const Vec<T>& target, const std::vector<Vec<T>>& points, int skip = -1) {
    std::vector<int> use;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (static_cast<int>(i) != skip) use.push_back(static_cast<int>(i));
    if (use.empty()) return false;
    const std::size_t dim = target.size();
    Mat<T> a(dim + 1, Vec<T>(use.size(), T(Rat(0))));
    Vec<T> b;
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t k = 0; k < use.size(); ++k)
            a[row][k] = points[static_cast<std::size_t>(use[k])][row];
        b.push_back(target[row]);
    }
    for (std::size_t k = 0; k < use.size(); ++k) a[dim][k] = T(Rat(1));
    b.push_back(T(Rat(1)));
    Vec<T> c(use.size(), T(Rat(0)));
    return lp_maximize(std::move(a), std::move(b), std::move(c)).status == LpResult<T>::OPTIMAL;
}

// Supporting functional exactly maximized on `members`: f.x = alpha there and
// f.p <= alpha - 1 elsewhere.  Empty result means `members` is not a face.
template <class T>
std::optional<std::pair<Vec<T>, T>> supporting_functional(const std::vector<int>& members,
                                                          const std::vector<Vec<T>>& points) {
    std::set<int> mem(members.begin(), members.end());
    const std::size_t dim = points.empty() ? 0 : points[0].size();
    std::vector<int> rest;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (!mem.count(static_cast<int>(i))) rest.push_back(static_cast<int>(i));
    // Variables: f+ (dim), f- (dim), alpha+ , alpha-, slack per strict row.
    const std::size_t nf = 2 * dim + 2;
    const std::size_t nvar = nf + rest.size();
    Mat<T> a;
    Vec<T> b;
    auto frow = [&](const Vec<T>& p) {
        Vec<T> row(nvar, T(Rat(0)));
        for (std::size_t j = 0; j < dim; ++j) {
            row[j] = p[j];
            row[dim + j] = -p[j];
        }
        row[2 * dim] = T(Rat(-1));
        row[2 * dim + 1] = T(Rat(1));
        return row;
    };
    for (int i : members) {
        a.push_back(frow(points[static_cast<std::size_t>(i)]));
        b.push_back(T(Rat(0)));
    }
    for (std::size_t k = 0; k < rest.size(); ++k) {
        Vec<T> row = frow(points[static_cast<std::size_t>(rest[k])]);
        row[nf + k] = T(Rat(1));
        a.push_back(std::move(row));
        b.push_back(T(Rat(-1)));
    }
    Vec<T> c(nvar, T(Rat(0)));
    auto res = lp_maximize(std::move(a), std::move(b), std::move(c));
    if (res.status != LpResult<T>::OPTIMAL) return std::nullopt;
    Vec<T> f(dim, T(Rat(0)));
    for (std::size_t j = 0; j < dim; ++j) f[j] = res.x[j] - res.x[dim + j];
    T alpha = res.x[2 * dim] - res.x[2 * dim + 1];
    return std::make_pair(std::move(f), std::move(alpha));
}

// ---------------------------------------------------------------------------
// Exact facet hull over integer point sets in low corank; replaces the
// simplex feasibility tests on the hot paths.
// ---------------------------------------------------------------------------

class IntFacetHull {
public:
    // Points as integer vectors; valid whenever the affine rank is <= 3.
    static std::optional<IntFacetHull> build(const std::vector<std::vector<long>>& pts);

    bool contains(const Vec<Rat>& p) const;
    // Does the hull continue past the member point x along dir?
    bool extends(const Vec<Rat>& x, const Vec<Rat>& dir) const;
    // Active-facet rank tests for faces of the point set.
    bool is_vertex(const std::vector<long>& x) const;
    bool is_edge(const std::vector<long>& a, const std::vector<long>& b) const;
    int dim() const;

private:
    std::vector<std::vector<long long>> normals_;
    std::vector<long long> offsets_;
    // equality constraints pinning the affine hull
    std::vector<std::vector<long long>> eq_normals_;
    std::vector<long long> eq_offsets_;
};

// ---------------------------------------------------------------------------
// Spec-facing rational configuration with face extraction.
// ---------------------------------------------------------------------------

struct AffineConfig {
    std::vector<QVector> points;
    DimVector ambient;

    AffineConfig(std::vector<QVector> pts, DimVector amb);
    std::vector<Vec<Rat>> raw() const;
};

struct Face {
    int dim = 0;
    // For edges the members are ordered along the edge, so front()/back() are
    // the endpoints; otherwise sorted ascending.
    std::vector<int> members;
    std::vector<std::pair<std::vector<Int>, Rat>> functionals;
};

int hull_dim(const AffineConfig& cfg);
std::vector<int> hull_vertex_ids(const AffineConfig& cfg);
std::vector<Face> hull_faces(const AffineConfig& cfg, int k);
bool is_vertex(const AffineConfig& cfg, const QVector& p);

struct not_a_face_error : math_error {
    using math_error::math_error;
};

// The face cut out by sum_{i in I} x_i = target (target 1 or -2 for weight
// configurations); throws not_a_face_error if points sit on both sides.
Face face_cut(const AffineConfig& cfg, const std::vector<int>& index_set, int target);

// Configuration points strictly between the edge's endpoints, in order.
std::vector<int> edge_interior(const Face& edge, const AffineConfig& cfg);

// Integer rescaling of a rational functional.
std::pair<std::vector<Int>, Rat> integerize(const Vec<Rat>& f, const Rat& offset);

}  // namespace spc
