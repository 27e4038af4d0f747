#include "spclass/polytope.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace spc {

AffineConfig::AffineConfig(std::vector<QVector> pts, DimVector amb)
    : points(std::move(pts)), ambient(std::move(amb)) {
    if (points.empty()) throw dimension_error("empty configuration");
    for (const QVector& p : points) {
        if (p.size() != ambient.r()) throw dimension_error("configuration point length mismatch");
        if (p.level() != points[0].level())
            throw level_error("configuration points must share a level");
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) throw math_error("duplicate configuration point");
}

std::vector<Vec<Rat>> AffineConfig::raw() const {
    std::vector<Vec<Rat>> out;
    out.reserve(points.size());
    for (const QVector& p : points) out.push_back(p.entries());
    return out;
}

int hull_dim(const AffineConfig& cfg) { return affine_rank(cfg.raw()); }

std::vector<int> hull_vertex_ids(const AffineConfig& cfg) {
    auto pts = cfg.raw();
    std::vector<int> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (!conv_contains(pts[i], pts, static_cast<int>(i))) out.push_back(static_cast<int>(i));
    return out;
}

bool is_vertex(const AffineConfig& cfg, const QVector& p) {
    auto pts = cfg.raw();
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (cfg.points[i] == p) return !conv_contains(pts[i], pts, static_cast<int>(i));
    throw math_error("point not in configuration");
}

std::pair<std::vector<Int>, Rat> integerize(const Vec<Rat>& f, const Rat& offset) {
    Int l = denominator(offset);
    for (const Rat& x : f) l = boost::multiprecision::lcm(l, denominator(x));
    std::vector<Int> fi;
    Int g = 0;
    for (const Rat& x : f) {
        Int v = numerator(x) * (l / denominator(x));
        fi.push_back(v);
        g = boost::multiprecision::gcd(g, v);
    }
    Rat off = offset * Rat(l);
    g = boost::multiprecision::gcd(g, numerator(off));
    if (g > 1) {
        for (Int& v : fi) v /= g;
        off /= Rat(g);
    }
    return {std::move(fi), std::move(off)};
}

namespace {

struct LineMembers {
    std::vector<int> ordered;  // along the primitive direction, endpoints at front/back
};

// All configuration points on the line through a and b, ordered by parameter.
LineMembers points_on_line(const std::vector<Vec<Rat>>& pts, int a, int b) {
    const auto& pa = pts[static_cast<std::size_t>(a)];
    const auto& pb = pts[static_cast<std::size_t>(b)];
    std::size_t dim = pa.size();
    std::size_t pivot = 0;
    while (pivot < dim && pa[pivot] == pb[pivot]) ++pivot;
    std::vector<std::pair<Rat, int>> ts;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Rat t = (pts[i][pivot] - pa[pivot]) / (pb[pivot] - pa[pivot]);
        bool on = true;
        for (std::size_t j = 0; j < dim && on; ++j)
            if (pts[i][j] != pa[j] + t * (pb[j] - pa[j])) on = false;
        if (on) ts.emplace_back(t, static_cast<int>(i));
    }
    std::sort(ts.begin(), ts.end());
    LineMembers lm;
    for (auto& [t, i] : ts) lm.ordered.push_back(i);
    return lm;
}

Face make_face(const std::vector<int>& members, const std::vector<Vec<Rat>>& pts, int dim) {
    Face f;
    f.dim = dim;
    f.members = members;
    auto sup = supporting_functional(members, pts);
    if (sup) f.functionals.push_back(integerize(sup->first, sup->second));
    return f;
}

}  // namespace

std::vector<Face> hull_faces(const AffineConfig& cfg, int k) {
    auto pts = cfg.raw();
    std::vector<int> verts = hull_vertex_ids(cfg);
    std::vector<Face> out;
    if (k == 0) {
        for (int v : verts) {
            Face f = make_face({v}, pts, 0);
            out.push_back(std::move(f));
        }
        return out;
    }
    if (hull_dim(cfg) < k) return out;
    std::set<std::vector<int>> seen;
    if (k == 1) {
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                LineMembers lm = points_on_line(pts, verts[i], verts[j]);
                // Both chosen vertices must be the extremes of the collinear set.
                if (lm.ordered.front() != verts[i] && lm.ordered.front() != verts[j]) continue;
                if (lm.ordered.back() != verts[i] && lm.ordered.back() != verts[j]) continue;
                std::vector<int> key = lm.ordered;
                std::sort(key.begin(), key.end());
                if (!seen.insert(key).second) continue;
                if (!supporting_functional(key, pts)) continue;
                Face f = make_face(key, pts, 1);
                f.members = lm.ordered;
                out.push_back(std::move(f));
            }
        return out;
    }
    if (k != 2) throw math_error("hull_faces supports k in {0,1,2}");
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            for (std::size_t l = j + 1; l < verts.size(); ++l) {
                std::vector<Vec<Rat>> tri{pts[static_cast<std::size_t>(verts[i])],
                                          pts[static_cast<std::size_t>(verts[j])],
                                          pts[static_cast<std::size_t>(verts[l])]};
                if (affine_rank(tri) != 2) continue;
                // Collect every configuration point in this plane.
                std::vector<int> plane;
                for (std::size_t p = 0; p < pts.size(); ++p) {
                    auto probe = tri;
                    probe.push_back(pts[p]);
                    if (affine_rank(probe) == 2) plane.push_back(static_cast<int>(p));
                }
                if (!seen.insert(plane).second) continue;
                if (!supporting_functional(plane, pts)) continue;
                out.push_back(make_face(plane, pts, 2));
            }
    return out;
}

Face face_cut(const AffineConfig& cfg, const std::vector<int>& index_set, int target) {
    if (index_set.empty()) throw math_error("empty index set");
    const int r = cfg.ambient.r();
    std::vector<Int> f(static_cast<std::size_t>(r), 0);
    for (int i : index_set) {
        if (i < 0 || i >= r) throw dimension_error("face_cut index out of range");
        f[static_cast<std::size_t>(i)] = 1;
    }
    // target = 1 caps from above, target = -2 from below.
    int orient = target > 0 ? 1 : -1;
    Face face;
    face.dim = -1;  // recomputed below
    for (std::size_t p = 0; p < cfg.points.size(); ++p) {
        Rat v(0);
        for (int i : index_set) v += cfg.points[p][i];
        int c = (v > Rat(target)) - (v < Rat(target));
        if (c == 0)
            face.members.push_back(static_cast<int>(p));
        else if (c * orient > 0)
            throw not_a_face_error("equation does not bound the configuration");
    }
    std::vector<Int> fi = f;
    if (orient < 0)
        for (Int& x : fi) x = -x;
    face.functionals.push_back({fi, Rat(orient < 0 ? -target : target)});
    if (face.members.empty()) return face;
    std::vector<Vec<Rat>> sub;
    for (int m : face.members) sub.push_back(cfg.points[static_cast<std::size_t>(m)].entries());
    face.dim = affine_rank(sub);
    return face;
}

std::vector<int> edge_interior(const Face& edge, const AffineConfig& cfg) {
    if (edge.dim != 1) throw math_error("edge_interior expects a 1-face");
    auto pts = cfg.raw();
    LineMembers lm = points_on_line(pts, edge.members.front(), edge.members.back());
    std::set<int> mem(edge.members.begin(), edge.members.end());
    std::vector<int> ordered;
    for (int i : lm.ordered)
        if (mem.count(i)) ordered.push_back(i);
    std::vector<int> out;
    for (std::size_t i = 1; i + 1 < ordered.size(); ++i) out.push_back(ordered[i]);
    return out;
}

}  // namespace spc

namespace spc {

namespace {

using i64 = long long;
using i128 = __int128;

int sign128(i128 x) { return x > 0 ? 1 : x < 0 ? -1 : 0; }

// determinant of a k x k integer matrix, k <= 4
i128 idet(const std::vector<std::vector<i64>>& m) {
    const std::size_t k = m.size();
    if (k == 1) return m[0][0];
    if (k == 2) return static_cast<i128>(m[0][0]) * m[1][1] - static_cast<i128>(m[0][1]) * m[1][0];
    i128 acc = 0;
    int sgn = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::vector<std::vector<i64>> sub;
        for (std::size_t i = 1; i < k; ++i) {
            std::vector<i64> row;
            for (std::size_t j = 0; j < k; ++j)
                if (j != c) row.push_back(m[i][j]);
            sub.push_back(std::move(row));
        }
        acc += sgn * static_cast<i128>(m[0][c]) * idet(sub);
        sgn = -sgn;
    }
    return acc;
}

}  // namespace

std::optional<IntFacetHull> IntFacetHull::build(const std::vector<std::vector<long>>& pts) {
    if (pts.empty()) return std::nullopt;
    const int dim = static_cast<int>(pts[0].size());
    if (dim > 6) return std::nullopt;
    // affine rank via integer elimination on差 differences
    std::vector<std::vector<i64>> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<i64> row;
        for (int j = 0; j < dim; ++j) row.push_back(pts[i][static_cast<std::size_t>(j)] - pts[0][static_cast<std::size_t>(j)]);
        diffs.push_back(std::move(row));
    }
    // fraction-free elimination for the rank
    auto rank_of = [&](std::vector<std::vector<i64>> m) {
        int rank = 0;
        std::size_t rows = m.size();
        if (!rows) return 0;
        std::size_t cols = m[0].size();
        for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
            std::size_t piv = static_cast<std::size_t>(rank);
            while (piv < rows && m[piv][c] == 0) ++piv;
            if (piv == rows) continue;
            std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
            for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows; ++i) {
                if (m[i][c] == 0) continue;
                i64 a = m[static_cast<std::size_t>(rank)][c], b = m[i][c];
                i64 g = std::gcd(std::llabs(a), std::llabs(b));
                i64 fa = b / g, fb = a / g;
                for (std::size_t j = 0; j < cols; ++j)
                    m[i][j] = m[i][j] * fb - m[static_cast<std::size_t>(rank)][j] * fa;
            }
            ++rank;
        }
        return rank;
    };
    int h = rank_of(diffs);
    if (h > 3) return std::nullopt;
    IntFacetHull hull;
    const int n = static_cast<int>(pts.size());
    // candidate facet normals from h-subsets plus the complement of the
    // affine directions; use the cofactor construction over [diff rows | basis]
    std::vector<int> idx(static_cast<std::size_t>(h - 1 >= 0 ? h - 1 : 0));
    // enumerate (h-1)-subsets of points beyond a base point to span facets;
    // for tiny sizes brute force over all tuples is fine
    auto try_facet = [&](const std::vector<std::vector<i64>>& span_rows) {
        // normal = vector orthogonal to span_rows and to the orthogonal
        // complement of the affine hull: compute via cofactors of the matrix
        // [span_rows; complement basis rows] of size (dim-1) x dim
        if (static_cast<int>(span_rows.size()) != dim - 1) return;
        std::vector<i64> nrm(static_cast<std::size_t>(dim));
        int sgn = 1;
        for (int t = 0; t < dim; ++t) {
            std::vector<std::vector<i64>> sub;
            for (const auto& row : span_rows) {
                std::vector<i64> r2;
                for (int s2 = 0; s2 < dim; ++s2)
                    if (s2 != t) r2.push_back(row[static_cast<std::size_t>(s2)]);
                sub.push_back(std::move(r2));
            }
            i128 d = idet(sub);
            nrm[static_cast<std::size_t>(t)] = static_cast<i64>(sgn * d);
            sgn = -sgn;
        }
        bool zero = true;
        for (i64 x : nrm) zero = zero && x == 0;
        if (zero) return;
        i64 g = 0;
        for (i64 x : nrm) g = std::gcd(g, std::llabs(x));
        for (i64& x : nrm) x /= g;
        i128 b0 = 0;
        for (int t = 0; t < dim; ++t) b0 += static_cast<i128>(nrm[static_cast<std::size_t>(t)]) * pts[0][static_cast<std::size_t>(t)];
        (void)n;
        // classify: one-sided -> facet; two-sided equality -> affine constraint
        bool le = true, ge = true;
        i128 bmax = b0, bmin = b0;
        for (const auto& p : pts) {
            i128 v = 0;
            for (int t = 0; t < dim; ++t) v += static_cast<i128>(nrm[static_cast<std::size_t>(t)]) * p[static_cast<std::size_t>(t)];
            if (v > bmax) bmax = v;
            if (v < bmin) bmin = v;
        }
        le = bmax == bmin;
        if (le) {
            hull.eq_normals_.push_back(std::vector<i64>(nrm.begin(), nrm.end()));
            hull.eq_offsets_.push_back(static_cast<i64>(bmax));
            return;
        }
        (void)ge;
        // supporting from above and below
        hull.normals_.push_back(std::vector<i64>(nrm.begin(), nrm.end()));
        hull.offsets_.push_back(static_cast<i64>(bmax));
        std::vector<i64> neg;
        for (i64 x : nrm) neg.push_back(-x);
        hull.normals_.push_back(std::move(neg));
        hull.offsets_.push_back(static_cast<i64>(-bmin));
    };
    // span rows: combinations of (dim-1) difference vectors out of point pairs;
    // to keep the candidate set small use differences from the base point and
    // from consecutive pairs
    std::vector<std::vector<i64>> all_diffs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<i64> row;
            for (int t = 0; t < dim; ++t)
                row.push_back(pts[static_cast<std::size_t>(j)][static_cast<std::size_t>(t)] -
                              pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)]);
            all_diffs.push_back(std::move(row));
        }
    // base the facet spans at actual points: pick tuples of diffs anchored at
    // a common point plus complement directions of the affine hull
    // complement basis: rows orthogonal to all diffs, via rational nullspace
    Mat<Rat> dm;
    for (auto& row : diffs) {
        Vec<Rat> r2;
        for (i64 x : row) r2.emplace_back(x);
        dm.push_back(std::move(r2));
    }
    std::vector<std::vector<i64>> complement;
    {
        auto aff = solve_affine(dm.empty() ? Mat<Rat>{Vec<Rat>(static_cast<std::size_t>(dim), Rat(0))} : dm,
                                Vec<Rat>(dm.empty() ? 1 : dm.size(), Rat(0)));
        if (aff)
            for (auto& b : aff->second) {
                i64 l = 1;
                for (const Rat& x : b) l = std::lcm(l, static_cast<i64>(denominator(x).convert_to<long>()));
                std::vector<i64> row;
                for (const Rat& x : b)
                    row.push_back(static_cast<i64>((numerator(x) * (l / denominator(x).convert_to<long>())).convert_to<long>()));
                complement.push_back(std::move(row));
            }
    }
    const int comp = static_cast<int>(complement.size());
    const int need = dim - 1 - comp;  // independent hull directions per facet
    if (need < 0) return std::nullopt;
    // choose `need` difference vectors anchored at shared points
    std::vector<int> pick(static_cast<std::size_t>(need));
    std::function<void(int, int, std::vector<std::vector<i64>>&)> rec =
        [&](int start, int left, std::vector<std::vector<i64>>& acc) {
            if (left == 0) {
                auto rows = acc;
                for (auto& c2 : complement) rows.push_back(c2);
                try_facet(rows);
                return;
            }
            for (int k = start; k < static_cast<int>(all_diffs.size()); ++k) {
                acc.push_back(all_diffs[static_cast<std::size_t>(k)]);
                rec(k + 1, left - 1, acc);
                acc.pop_back();
            }
        };
    std::vector<std::vector<i64>> acc;
    rec(0, need, acc);
    (void)idx;
    // the affine hull itself contributes equality constraints
    for (const auto& crow : complement) {
        i128 b0 = 0;
        for (int t = 0; t < dim; ++t) b0 += static_cast<i128>(crow[static_cast<std::size_t>(t)]) * pts[0][static_cast<std::size_t>(t)];
        hull.eq_normals_.push_back(crow);
        hull.eq_offsets_.push_back(static_cast<i64>(b0));
    }
    return hull;
}

bool IntFacetHull::contains(const Vec<Rat>& p) const {
    // common denominator
    Int l = 1;
    for (const Rat& x : p) l = boost::multiprecision::lcm(l, denominator(x));
    std::vector<i128> num;
    for (const Rat& x : p)
        num.push_back(static_cast<i128>((numerator(x) * (l / denominator(x))).convert_to<long long>()));
    i128 den = static_cast<i128>(l.convert_to<long long>());
    for (std::size_t f = 0; f < eq_normals_.size(); ++f) {
        i128 acc = 0;
        for (std::size_t i = 0; i < num.size(); ++i) acc += static_cast<i128>(eq_normals_[f][i]) * num[i];
        if (acc != static_cast<i128>(eq_offsets_[f]) * den) return false;
    }
    for (std::size_t f = 0; f < normals_.size(); ++f) {
        i128 acc = 0;
        for (std::size_t i = 0; i < num.size(); ++i) acc += static_cast<i128>(normals_[f][i]) * num[i];
        if (acc > static_cast<i128>(offsets_[f]) * den) return false;
    }
    return true;
}

int IntFacetHull::dim() const {
    if (normals_.empty() && eq_normals_.empty()) return 0;
    std::size_t width = normals_.empty() ? eq_normals_[0].size() : normals_[0].size();
    return static_cast<int>(width) - static_cast<int>(eq_normals_.size());
}

namespace {

int int_row_rank(std::vector<std::vector<i64>> m) {
    int rank = 0;
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
        for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            i64 a = m[static_cast<std::size_t>(rank)][c], b = m[i][c];
            i64 g = std::gcd(std::llabs(a), std::llabs(b));
            i64 fa = b / g, fb = a / g;
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] = m[i][j] * fb - m[static_cast<std::size_t>(rank)][j] * fa;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

bool IntFacetHull::is_vertex(const std::vector<long>& x) const {
    std::vector<std::vector<i64>> active(eq_normals_.begin(), eq_normals_.end());
    for (std::size_t f = 0; f < normals_.size(); ++f) {
        i128 acc = 0;
        for (std::size_t i = 0; i < x.size(); ++i) acc += static_cast<i128>(normals_[f][i]) * x[i];
        if (acc == static_cast<i128>(offsets_[f])) active.push_back(normals_[f]);
    }
    return int_row_rank(std::move(active)) == static_cast<int>(x.size());
}

bool IntFacetHull::is_edge(const std::vector<long>& a, const std::vector<long>& b) const {
    std::vector<std::vector<i64>> active(eq_normals_.begin(), eq_normals_.end());
    for (std::size_t f = 0; f < normals_.size(); ++f) {
        i128 sa = 0, sb = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            sa += static_cast<i128>(normals_[f][i]) * a[i];
            sb += static_cast<i128>(normals_[f][i]) * b[i];
        }
        if (sa == static_cast<i128>(offsets_[f]) && sb == static_cast<i128>(offsets_[f]))
            active.push_back(normals_[f]);
    }
    return int_row_rank(std::move(active)) == static_cast<int>(a.size()) - 1;
}

bool IntFacetHull::extends(const Vec<Rat>& x, const Vec<Rat>& dir) const {
    // moving from the member x along dir stays inside for small steps iff the
    // direction respects the equalities and every active facet
    Int lx = 1, ld = 1;
    for (const Rat& v : x) lx = boost::multiprecision::lcm(lx, denominator(v));
    for (const Rat& v : dir) ld = boost::multiprecision::lcm(ld, denominator(v));
    std::vector<i128> xn, dn;
    for (const Rat& v : x) xn.push_back(static_cast<i128>((numerator(v) * (lx / denominator(v))).convert_to<long long>()));
    for (const Rat& v : dir) dn.push_back(static_cast<i128>((numerator(v) * (ld / denominator(v))).convert_to<long long>()));
    i128 denx = static_cast<i128>(lx.convert_to<long long>());
    for (std::size_t f = 0; f < eq_normals_.size(); ++f) {
        i128 acc = 0;
        for (std::size_t i = 0; i < dn.size(); ++i) acc += static_cast<i128>(eq_normals_[f][i]) * dn[i];
        if (acc != 0) return false;
    }
    for (std::size_t f = 0; f < normals_.size(); ++f) {
        i128 at = 0, along = 0;
        for (std::size_t i = 0; i < xn.size(); ++i) {
            at += static_cast<i128>(normals_[f][i]) * xn[i];
            along += static_cast<i128>(normals_[f][i]) * dn[i];
        }
        if (at == static_cast<i128>(offsets_[f]) * denx && along > 0) return false;
    }
    (void)sign128;
    return true;
}

}  // namespace spc
