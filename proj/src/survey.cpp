#include "spclass/survey.hpp"

#include "spclass/jform.hpp"
#include "spclass/projection.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>

namespace spc {

namespace {

using IV = std::vector<int>;
using i64 = long long;
using i128 = __int128;

// All weight patterns over r slots, grouped for subset enumeration: type I
// singles, type II orbits (all three or none), type III singles.
struct Universe {
    int r;
    std::vector<IV> type_i;
    std::vector<std::array<IV, 3>> type_ii_orbits;
    std::vector<IV> type_iii;
};

Universe build_universe(int r) {
    Universe u;
    u.r = r;
    for (int i = 0; i < r; ++i) u.type_i.push_back(type_i(i, r).entries);
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            for (int c = b + 1; c < r; ++c)
                u.type_ii_orbits.push_back({type_ii(a, b, c, r).entries,
                                            type_ii(b, a, c, r).entries,
                                            type_ii(c, a, b, r).entries});
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (i != j) u.type_iii.push_back(type_iii(i, j, r).entries);
    return u;
}

// Lexicographic-minimality of the sorted weight list across coordinate
// permutations; keeps one representative per class.
bool is_canonical(const std::vector<IV>& ws, int r) {
    std::vector<IV> base = ws;
    std::sort(base.begin(), base.end());
    std::vector<int> perm(static_cast<std::size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    while (std::next_permutation(perm.begin(), perm.end())) {
        bool less = false, greater = false;
        std::vector<IV> img;
        img.reserve(ws.size());
        for (const IV& w : ws) {
            IV m(static_cast<std::size_t>(r));
            for (int j = 0; j < r; ++j)
                m[static_cast<std::size_t>(j)] = w[static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
            img.push_back(std::move(m));
        }
        std::sort(img.begin(), img.end());
        for (std::size_t k = 0; k < base.size(); ++k) {
            if (img[k] < base[k]) {
                less = true;
                break;
            }
            if (base[k] < img[k]) {
                greater = true;
                break;
            }
        }
        if (less) return false;
        (void)greater;
    }
    return true;
}

int int_rank(const std::vector<IV>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<std::vector<double>> m;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<double> row;
        for (std::size_t j = 0; j < pts[0].size(); ++j)
            row.push_back(static_cast<double>(pts[i][j] - pts[0][j]));
        m.push_back(std::move(row));
    }
    int rank = 0;
    std::size_t rows = m.size(), cols = m[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        for (std::size_t i = piv; i < rows; ++i)
            if (std::fabs(m[i][c]) > std::fabs(m[piv][c])) piv = i;
        if (std::fabs(m[piv][c]) < 1e-9) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == static_cast<std::size_t>(rank)) continue;
            double f = m[i][c] / m[static_cast<std::size_t>(rank)][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[static_cast<std::size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

// Facet description n . x <= b of the hull of integer points (dims 2 and 3 in
// the carrier plane; facets are generated from point tuples).
struct IntHull {
    std::vector<IV> normals;
    std::vector<i64> offsets;

    // p/den strictly inside or on the hull?
    bool contains(const IV& p_num, i64 den) const {
        for (std::size_t f = 0; f < normals.size(); ++f) {
            i64 acc = 0;
            for (std::size_t i = 0; i < p_num.size(); ++i)
                acc += static_cast<i64>(normals[f][i]) * p_num[i];
            if (acc > offsets[f] * den) return false;
        }
        return true;
    }
};

IV cross3(const IV& a, const IV& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Hull facets within the carrier plane: for r = 3 the facets are edges; for
// r = 4 they are planes spanned by point pairs/triples together with the
// all-ones normal direction.
IntHull facets_of(const std::vector<IV>& pts, int r) {
    IntHull hull;
    std::set<std::pair<IV, i64>> seen;
    auto add = [&](IV n, i64 b, bool valid) {
        if (!valid) return;
        // normalize by gcd
        i64 g = std::llabs(b);
        for (int x : n) g = std::gcd(g, static_cast<i64>(std::llabs(x)));
        if (g > 1) {
            for (int& x : n) x /= static_cast<int>(g);
            b /= g;
        }
        if (seen.insert({n, b}).second) {
            hull.normals.push_back(std::move(n));
            hull.offsets.push_back(b);
        }
    };
    const int n = static_cast<int>(pts.size());
    if (r == 3) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                // facet normal orthogonal to (pts[j] - pts[i]) and to (1,1,1)
                IV d(3);
                for (int t = 0; t < 3; ++t) d[t] = pts[j][t] - pts[i][t];
                IV nn = cross3(d, {1, 1, 1});
                if (nn == IV{0, 0, 0}) continue;
                i64 b = 0;
                for (int t = 0; t < 3; ++t) b += static_cast<i64>(nn[t]) * pts[i][t];
                bool le = true, ge = true;
                for (int k = 0; k < n; ++k) {
                    i64 v = 0;
                    for (int t = 0; t < 3; ++t) v += static_cast<i64>(nn[t]) * pts[k][t];
                    le = le && v <= b;
                    ge = ge && v >= b;
                }
                if (le) add(nn, b, true);
                if (ge) {
                    for (int& x : nn) x = -x;
                    add(nn, -b, true);
                }
            }
        return hull;
    }
    // r == 4: normals from two independent difference vectors and (1,1,1,1)
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                IV d1(4), d2(4);
                for (int t = 0; t < 4; ++t) {
                    d1[t] = pts[j][t] - pts[i][t];
                    d2[t] = pts[k][t] - pts[i][t];
                }
                // normal = generalized cross of d1, d2, (1,1,1,1)
                auto det3 = [](i64 a0, i64 a1, i64 a2, i64 b0, i64 b1, i64 b2, i64 c0, i64 c1,
                               i64 c2) {
                    return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) +
                           a2 * (b0 * c1 - b1 * c0);
                };
                IV nn(4);
                int sign = 1;
                for (int t = 0; t < 4; ++t) {
                    i64 a[3], b[3], c[3];
                    int idx = 0;
                    for (int s = 0; s < 4; ++s) {
                        if (s == t) continue;
                        a[idx] = d1[s];
                        b[idx] = d2[s];
                        c[idx] = 1;
                        ++idx;
                    }
                    nn[t] = static_cast<int>(sign * det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0],
                                                         c[1], c[2]));
                    sign = -sign;
                }
                if (nn == IV{0, 0, 0, 0}) continue;
                i64 b0 = 0;
                for (int t = 0; t < 4; ++t) b0 += static_cast<i64>(nn[t]) * pts[i][t];
                bool le = true, ge = true;
                for (int kk = 0; kk < n; ++kk) {
                    i64 v = 0;
                    for (int t = 0; t < 4; ++t) v += static_cast<i64>(nn[t]) * pts[kk][t];
                    le = le && v <= b0;
                    ge = ge && v >= b0;
                }
                if (le) add(nn, b0, true);
                if (ge) {
                    for (int& x : nn) x = -x;
                    add(nn, -b0, true);
                }
            }
    return hull;
}

// Candidate after the fast filters; handed to the exact pipeline.
struct FastCandidate {
    std::vector<Rat> c;
    std::string note;
};

struct ClassData {
    std::vector<IV> weights;
    IntHull hull;
    bool mask3[8] = {false};  // some -2 in this slot
    bool mask2[8] = {false};  // some type II touches this slot
    std::set<std::pair<int, int>> interior_pairs;  // pairs with interior weights
};

// Fast per-dimension candidate detection; returns rational candidates that
// are null and strictly outside the hull.  Exactness relies on integer
// arithmetic scaled by lcm(1..bound).
void detect_candidates(const ClassData& cd, const std::vector<long>& dims, i64 L,
                       std::vector<FastCandidate>& out, bool& has_surd) {
    const int r = static_cast<int>(dims.size());
    std::vector<i64> linv(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) linv[static_cast<std::size_t>(i)] = L / dims[static_cast<std::size_t>(i)];
    const auto& W = cd.weights;
    auto outside = [&](const IV& num, i64 den) { return !cd.hull.contains(num, den); };
    // type I candidates
    for (int i = 0; i < r; ++i) {
        if (dims[static_cast<std::size_t>(i)] != 1) continue;
        IV c(static_cast<std::size_t>(r), 0);
        c[static_cast<std::size_t>(i)] = -1;
        if (std::find(W.begin(), W.end(), c) != W.end()) continue;
        if (!outside(c, 1)) continue;
        std::vector<Rat> cr;
        for (int x : c) cr.emplace_back(x);
        out.push_back({std::move(cr), "type I"});
    }
    has_surd = false;
    for (std::size_t a = 0; a < W.size(); ++a)
        for (std::size_t b = 0; b < W.size(); ++b) {
            if (a == b) continue;
            const IV& v = W[a];
            const IV& w = W[b];
            // mirror: c = 2v - w
            {
                i64 acc = 0;
                IV c(static_cast<std::size_t>(r));
                for (int i = 0; i < r; ++i) {
                    c[static_cast<std::size_t>(i)] = 2 * v[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(i)];
                    acc += static_cast<i64>(c[static_cast<std::size_t>(i)]) * c[static_cast<std::size_t>(i)] *
                           linv[static_cast<std::size_t>(i)];
                }
                if (acc == L && outside(c, 1)) {
                    std::vector<Rat> cr;
                    for (int x : c) cr.emplace_back(x);
                    out.push_back({std::move(cr), "mirror"});
                }
            }
            // third: c = (4v - w)/3 with the balance condition
            {
                i64 cond = 0, null9 = 0;
                IV c3(static_cast<std::size_t>(r));
                for (int i = 0; i < r; ++i) {
                    int vi = v[static_cast<std::size_t>(i)], wi = w[static_cast<std::size_t>(i)];
                    c3[static_cast<std::size_t>(i)] = 4 * vi - wi;
                    cond += static_cast<i64>(2 * vi * wi + wi * wi) * linv[static_cast<std::size_t>(i)];
                    null9 += static_cast<i64>(c3[static_cast<std::size_t>(i)]) * c3[static_cast<std::size_t>(i)] *
                             linv[static_cast<std::size_t>(i)];
                }
                if (cond == 3 * L && null9 == 9 * L && outside(c3, 3)) {
                    std::vector<Rat> cr;
                    for (int x : c3) cr.emplace_back(x, 3);
                    out.push_back({std::move(cr), "third"});
                }
            }
            if (a > b) continue;
            // the full nullity quadratic along the pair line
            i64 A = 0, B = 0, C = 0;
            for (int i = 0; i < r; ++i) {
                i64 di = v[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(i)];
                i64 wi = w[static_cast<std::size_t>(i)];
                A += di * di * linv[static_cast<std::size_t>(i)];
                B += 2 * wi * di * linv[static_cast<std::size_t>(i)];
                C += wi * wi * linv[static_cast<std::size_t>(i)];
            }
            C -= L;
            if (A == 0) continue;
            i64 disc = B * B - 4 * A * C;
            if (disc < 0) continue;
            i64 root = static_cast<i64>(std::sqrt(static_cast<double>(disc)));
            while (root * root > disc) --root;
            while ((root + 1) * (root + 1) <= disc) ++root;
            if (root * root == disc) {
                for (int sgn : {-1, 1}) {
                    // lambda = (-B + sgn root) / (2A), candidates in (1, 2)
                    i64 num = -B + sgn * root;
                    i64 den = 2 * A;
                    if (den < 0) {
                        num = -num;
                        den = -den;
                    }
                    // orientation from both endpoints
                    for (int flip = 0; flip < 2; ++flip) {
                        i64 lam_num = flip ? den - num : num;
                        const IV& nearv = flip ? w : v;
                        const IV& farv = flip ? v : w;
                        if (!(lam_num > den && lam_num <= 2 * den)) continue;
                        if (lam_num == 2 * den) continue;  // the mirror route covers 2
                        IV cnum(static_cast<std::size_t>(r));
                        for (int i = 0; i < r; ++i)
                            cnum[static_cast<std::size_t>(i)] = static_cast<int>(
                                lam_num * nearv[static_cast<std::size_t>(i)] +
                                (den - lam_num) * farv[static_cast<std::size_t>(i)]);
                        i64 g = den;
                        for (int x : cnum) g = std::gcd(g, static_cast<i64>(std::llabs(x)));
                        if (outside([&] {
                                IV red;
                                for (int x : cnum) red.push_back(static_cast<int>(x / g));
                                return red;
                            }(), den / g)) {
                            std::vector<Rat> cr;
                            for (int x : cnum) cr.emplace_back(x, den);
                            out.push_back({std::move(cr), "pair parameter"});
                        }
                    }
                    if (root == 0) break;
                }
            } else if (cd.interior_pairs.count({static_cast<int>(a), static_cast<int>(b)})) {
                // irrational roots matter only on segments with interior weights
                // and only when a root lies in the admissible range (1, 2]
                auto p_at = [&](i64 t_num, i64 t_den) {
                    return A * t_num * t_num + B * t_num * t_den + C * t_den * t_den;
                };
                for (int flip = 0; flip < 2; ++flip) {
                    // after flipping ends the polynomial becomes p(1 - t)
                    i64 p1 = flip ? p_at(0, 1) : p_at(1, 1);
                    i64 p2 = flip ? p_at(-1, 1) : p_at(2, 1);
                    i64 vtx_num = flip ? 2 * A + B : -B;  // vertex of the parabola
                    bool vertex_in = vtx_num > 2 * A && vtx_num < 4 * A;
                    if (p1 * p2 <= 0 || (p1 > 0 && p2 > 0 && vertex_in)) has_surd = true;
                }
            }
        }
}

// Weights that can sit in the orthogonal hyperplane of a null vector:
// Cauchy-Schwarz forces sum s_i^2 / d_i >= 1.
std::vector<int> eligible_orthogonals(const ClassData& cd, const std::vector<long>& dims, i64 L) {
    std::vector<int> out;
    for (std::size_t k = 0; k < cd.weights.size(); ++k) {
        i64 acc = 0;
        for (std::size_t i = 0; i < dims.size(); ++i)
            acc += static_cast<i64>(cd.weights[k][i]) * cd.weights[k][i] * (L / dims[i]);
        if (acc >= L) out.push_back(static_cast<int>(k));
    }
    return out;
}

SweepStats run_sweep(int r, long dim_bound) {
    SweepStats stats;
    Universe uni = build_universe(r);
    const i64 L = [&] {
        i64 l = 1;
        for (long d = 2; d <= dim_bound; ++d) l = std::lcm(l, static_cast<i64>(d));
        return l;
    }();
    const int n_i = static_cast<int>(uni.type_i.size());
    const int n_ii = static_cast<int>(uni.type_ii_orbits.size());
    const int n_iii = static_cast<int>(uni.type_iii.size());
    const long total_masks = 1L << (n_i + n_ii + n_iii);
    for (long mask = 1; mask < total_masks; ++mask) {
        std::vector<IV> ws;
        for (int k = 0; k < n_i; ++k)
            if (mask >> k & 1) ws.push_back(uni.type_i[static_cast<std::size_t>(k)]);
        for (int k = 0; k < n_ii; ++k)
            if (mask >> (n_i + k) & 1)
                for (const IV& w : uni.type_ii_orbits[static_cast<std::size_t>(k)]) ws.push_back(w);
        for (int k = 0; k < n_iii; ++k)
            if (mask >> (n_i + n_ii + k) & 1) ws.push_back(uni.type_iii[static_cast<std::size_t>(k)]);
        if (static_cast<int>(ws.size()) < r) continue;
        if (int_rank(ws) != r - 1) continue;
        if (!is_canonical(ws, r)) continue;
        ++stats.weight_classes;
        ClassData cd;
        cd.weights = ws;
        cd.hull = facets_of(ws, r);
        for (std::size_t a = 0; a < ws.size(); ++a)
            for (std::size_t b = a + 1; b < ws.size(); ++b) {
                bool has = false;
                for (auto [p, q] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
                    IV z(static_cast<std::size_t>(r));
                    bool integral = true;
                    for (int i = 0; i < r; ++i) {
                        int num = p * ws[a][static_cast<std::size_t>(i)] +
                                  (q - p) * ws[b][static_cast<std::size_t>(i)];
                        if (num % q != 0) integral = false;
                        if (integral) z[static_cast<std::size_t>(i)] = num / q;
                    }
                    if (integral && std::find(ws.begin(), ws.end(), z) != ws.end()) has = true;
                }
                if (has) {
                    cd.interior_pairs.insert({static_cast<int>(a), static_cast<int>(b)});
                    cd.interior_pairs.insert({static_cast<int>(b), static_cast<int>(a)});
                }
            }
        for (const IV& w : ws) {
            WType t = classify_weight(w).type;
            for (int i = 0; i < r; ++i) {
                if (w[static_cast<std::size_t>(i)] == -2) cd.mask3[i] = true;
                if (t == WType::II && w[static_cast<std::size_t>(i)] != 0) cd.mask2[i] = true;
            }
        }
        // dimension loop
        std::vector<long> dims(static_cast<std::size_t>(r), 1);
        for (;;) {
            bool valid = true;
            for (int i = 0; i < r && valid; ++i)
                if (dims[static_cast<std::size_t>(i)] == 1 && (cd.mask3[i] || cd.mask2[i]))
                    valid = false;
            if (valid) {
                ++stats.instances;
                std::vector<FastCandidate> cands;
                bool has_surd = false;
                detect_candidates(cd, dims, L, cands, has_surd);
                bool solved_possible =
                    static_cast<int>(eligible_orthogonals(cd, dims, L).size()) >= r - 2;
                if (!cands.empty() || has_surd || solved_possible) {
                    ++stats.bearing;
                    // exact pipeline on the instance
                    std::vector<Weight> weights;
                    for (const IV& w : ws) weights.push_back(classify_weight(w));
                    WeightSystem sys(DimVector(dims), weights);
                    CandidateSet full = enumerate_null_candidates(sys, r >= 4);
                    ++stats.classified;
                    std::vector<QVector> nulls;
                    for (auto& cand : full.rational) nulls.push_back(cand.c);
                    bool fano_here = false;
                    for (auto& cand : full.rational) {
                        auto res = classify_candidate(sys, cand.c, 0, &nulls);
                        if (res.eliminated)
                            ++stats.eliminated;
                        else if (res.fano)
                            fano_here = true;
                        else if (r <= 3)
                            ++stats.residual;
                        else
                            stats.unexpected.push_back(cand.str());
                    }
                    for (auto& sc : full.surd) {
                        auto res = classify_surd_candidate(sys, sc);
                        if (res.eliminated)
                            ++stats.eliminated;
                        else if (r <= 3)
                            ++stats.residual;
                        else
                            stats.unexpected.push_back("irrational candidate on " + sc.v.str() +
                                                       sc.w.str());
                    }
                    if (fano_here) ++stats.fano;
                }
            }
            int i = 0;
            while (i < r && dims[static_cast<std::size_t>(i)] == dim_bound) {
                dims[static_cast<std::size_t>(i)] = 1;
                ++i;
            }
            if (i == r) break;
            ++dims[static_cast<std::size_t>(i)];
        }
    }
    return stats;
}

}  // namespace

SweepStats sweep_rank3(long dim_bound) { return run_sweep(3, dim_bound); }
SweepStats sweep_rank4(long dim_bound) { return run_sweep(4, dim_bound); }

}  // namespace spc
