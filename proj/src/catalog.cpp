#include "spclass/catalog.hpp"

#include "spclass/jform.hpp"
#include "spclass/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace spc {

std::vector<std::vector<int>> FaceShape::all_points() const {
    std::vector<std::vector<int>> out = verts;
    out.insert(out.end(), extras.begin(), extras.end());
    return out;
}

namespace {

using IV = std::vector<int>;

std::vector<Rat> rat_vec(const IV& v, long den = 1) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (int x : v) out.emplace_back(x, den);
    return out;
}

IV add3(const IV& a, const IV& b, const IV& c, int ka, int kb, int kc) {
    IV out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = ka * a[i] + kb * b[i] + kc * c[i];
    return out;
}

FaceShape quad(FaceShape::Kind kind, std::string tag, std::vector<IV> vusw,
               std::vector<IV> extras = {}) {
    FaceShape s;
    s.tag = std::move(tag);
    s.kind = kind;
    s.ncols = static_cast<int>(vusw[0].size());
    s.verts = std::move(vusw);
    s.extras = std::move(extras);
    s.never_face = kind == FaceShape::NONFACE_TRAPEZIUM;
    return s;
}

FaceShape triangle(std::string tag, bool split, IV xpp, IV x, IV xp) {
    FaceShape s;
    s.tag = std::move(tag);
    s.kind = split ? FaceShape::TRIANGLE_SPLIT : FaceShape::TRIANGLE_MIDSUM;
    s.ncols = static_cast<int>(x.size());
    if (split) {
        // 3c = 2x + 2x' - x'', 3a = 4x - 2x' + x'', 3a' = -2x + 4x' + x''
        s.c = rat_vec(add3(x, xp, xpp, 2, 2, -1), 3);
        s.a = rat_vec(add3(x, xp, xpp, 4, -2, 1), 3);
        s.ap = rat_vec(add3(x, xp, xpp, -2, 4, 1), 3);
    } else {
        s.c = rat_vec(add3(x, xp, xpp, 1, 1, -1));
        s.a = rat_vec(add3(x, xp, xpp, 1, -1, 1));
        s.ap = rat_vec(add3(x, xp, xpp, -1, 1, 1));
    }
    s.verts = {std::move(xpp), std::move(x), std::move(xp)};
    return s;
}

std::vector<FaceShape> build_catalog() {
    std::vector<FaceShape> cat;

    // Hexagons.
    cat.push_back(quad(FaceShape::HEXAGON, "H1",
                       {{-2, 1, 0}, {0, 1, -2}, {1, 0, -2}, {0, -2, 1}, {1, -2, 0}, {-2, 0, 1}},
                       {{-1, 1, -1}, {-1, -1, 1}, {1, -1, -1}, {-1, 0, 0}, {0, 0, -1}, {0, -1, 0}}));
    cat.push_back(quad(FaceShape::HEXAGON, "H2",
                       {{-2, 1, 0, 0},
                        {1, -2, 0, 0},
                        {-1, 0, 1, -1},
                        {0, -1, 1, -1},
                        {-1, 0, -1, 1},
                        {0, -1, -1, 1}},
                       {{-1, 0, 0, 0}, {0, -1, 0, 0}}));
    cat.push_back(quad(FaceShape::HEXAGON, "H3",
                       {{-1, -1, 1, 0},
                        {0, -1, 1, -1},
                        {1, -1, 0, -1},
                        {1, -1, -1, 0},
                        {0, -1, -1, 1},
                        {-1, -1, 0, 1}},
                       {{0, -1, 0, 0}}));

    // Square with midpoint.
    cat.push_back(quad(FaceShape::SQUARE, "S",
                       {{-1, -1, 1, 0, 0}, {0, -1, 0, 1, -1}, {0, -1, 0, -1, 1}, {1, -1, -1, 0, 0}},
                       {{0, -1, 0, 0, 0}}));

    // Symmetric trapezia, role order v, u, s, w (vu parallel to sw, t = (s+w)/2).
    cat.push_back(quad(FaceShape::TRAPEZIUM, "T1",
                       {{-2, 1, 0, 0}, {-2, 0, 1, 0}, {0, 0, -2, 1}, {0, -2, 0, 1}},
                       {{0, -1, -1, 1}}));
    cat.push_back(quad(FaceShape::TRAPEZIUM, "T2",
                       {{-2, 0, 1, 0}, {-2, 1, 0, 0}, {0, -1, 1, -1}, {0, 1, -1, -1}},
                       {{0, 0, 0, -1}}));
    cat.push_back(quad(FaceShape::TRAPEZIUM, "T3",
                       {{-1, -1, 0, 1}, {0, -1, -1, 1}, {-2, 1, 0, 0}, {0, 1, -2, 0}},
                       {{-1, 1, -1, 0}}));
    cat.push_back(quad(FaceShape::TRAPEZIUM, "T4",
                       {{0, 0, 1, -1, -1}, {1, 0, 0, -1, -1}, {-2, 1, 0, 0, 0}, {0, 1, -2, 0, 0}},
                       {{-1, 1, -1, 0, 0}}));
    cat.push_back(quad(FaceShape::TRAPEZIUM, "T5",
                       {{-1, 0, 0, 1, -1}, {0, 0, -1, 1, -1}, {-2, 1, 0, 0, 0}, {0, 1, -2, 0, 0}},
                       {{-1, 1, -1, 0, 0}}));
    cat.push_back(quad(FaceShape::TRAPEZIUM, "T6",
                       {{1, -1, -1, 0, 0}, {1, -1, 0, -1, 0}, {0, 0, -1, 1, -1}, {0, 0, 1, -1, -1}},
                       {{0, 0, 0, 0, -1}}));

    // Parallelograms, role order v, u, s, w with v - u = s - w.
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P1",
                       {{-2, 1, 0, 0}, {-1, 0, -1, 1}, {-2, 0, 1, 0}, {-1, -1, 0, 1}}));
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P2",
                       {{-2, 1, 0, 0, 0}, {-2, 0, 1, 0, 0}, {0, 1, 0, -1, -1}, {0, 0, 1, -1, -1}}));
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P3",
                       {{-2, 1, 0, 0, 0}, {-2, 0, 1, 0, 0}, {0, 0, -1, -1, 1}, {0, -1, 0, -1, 1}}));
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P4",
                       {{-2, 1, 0, 0}, {-1, 0, 1, -1}, {-1, -1, 0, 1}, {0, -2, 1, 0}}));
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P5",
                       {{-2, 1, 0, 0, 0}, {-1, 0, 0, 1, -1}, {-1, 0, 1, -1, 0}, {0, -1, 1, 0, -1}}));
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P6",
                       {{-2, 1, 0, 0, 0}, {-1, 0, 0, -1, 1}, {-1, 0, -1, 1, 0}, {0, -1, -1, 0, 1}}));
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P7",
                       {{-2, 1, 0, 0, 0}, {0, 1, -1, -1, 0}, {-1, 0, 0, 1, -1}, {1, 0, -1, 0, -1}}));
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P8",
                       {{1, -1, -1, 0, 0, 0},
                        {0, 0, 0, 1, -1, -1},
                        {1, -1, 0, -1, 0, 0},
                        {0, 0, 1, 0, -1, -1}}));
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P9",
                       {{1, -1, -1, 0, 0, 0},
                        {1, -1, 0, 0, -1, 0},
                        {0, 0, -1, 1, 0, -1},
                        {0, 0, 0, 1, -1, -1}}));
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P10",
                       {{1, -1, -1, 0, 0, 0},
                        {1, 0, 0, 0, -1, -1},
                        {0, -1, -1, 1, 0, 0},
                        {0, 0, 0, 1, -1, -1}}));
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P11",
                       {{0, 0, 1, -1, -1, 0},
                        {0, -1, 0, -1, 0, 1},
                        {1, 0, 0, 0, -1, -1},
                        {1, -1, -1, 0, 0, 0}}));
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P12",
                       {{1, 0, -1, 0, -1}, {1, -1, -1, 0, 0}, {0, 0, -1, 1, -1}, {0, -1, -1, 1, 0}}));
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P13",
                       {{-1, 0, -1, 0, 1}, {0, 0, -1, -1, 1}, {0, -1, -1, 1, 0}, {1, -1, -1, 0, 0}}));
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P14",
                       {{-1, 0, 1, 0, -1}, {-1, -1, 1, 0, 0}, {0, 0, -1, 1, -1}, {0, -1, -1, 1, 0}}));
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P15",
                       {{-1, 0, 1, 0, -1}, {-1, -1, 1, 0, 0}, {0, 0, 1, -1, -1}, {0, -1, 1, -1, 0}}));
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P16",
                       {{-2, 1, 0, 0}, {0, 1, -2, 0}, {-1, 0, 1, -1}, {1, 0, -1, -1}},
                       {{-1, 1, -1, 0}, {0, 0, 0, -1}}));
    cat.push_back(quad(FaceShape::PARALLELOGRAM, "P17",
                       {{-2, 1, 0, 0}, {0, 1, 0, -2}, {-2, 0, 1, 0}, {0, 0, 1, -2}},
                       {{-1, 1, 0, -1}, {-1, 0, 1, -1}}));

    // Coplanar sets that can never be faces.
    cat.push_back(quad(FaceShape::NONFACE_TRAPEZIUM, "T*1",
                       {{0, 1, -1, -1}, {1, 0, -1, -1}, {-2, 1, 0, 0}, {1, -2, 0, 0}},
                       {{-1, 0, 0, 0}, {0, -1, 0, 0}}));
    cat.push_back(quad(FaceShape::NONFACE_TRAPEZIUM, "T*2",
                       {{0, -1, 1, -1}, {1, -1, 0, -1}, {-2, 1, 0, 0}, {0, 1, -2, 0}},
                       {{-1, 1, -1, 0}}));
    cat.push_back(quad(FaceShape::NONFACE_TRAPEZIUM, "T*3",
                       {{1, -1, -1, 0}, {1, -1, 0, -1}, {-1, 0, -1, 1}, {-1, 0, 1, -1}},
                       {{-1, 0, 0, 0}}));

    // Triangles with both outer null vectors, c + x'' = a + a'.
    cat.push_back(triangle("Tr1", true, {-2, 1, 0, 0, 0}, {0, 0, -2, 1, 0}, {0, 0, -2, 0, 1}));
    cat.push_back(triangle("Tr2", true, {-2, 1, 0, 0}, {0, 1, -2, 0}, {0, 1, -1, -1}));
    cat.push_back(triangle("Tr3", true, {0, 0, 0, -2, 1}, {-2, 1, 0, 0, 0}, {0, 1, -2, 0, 0}));
    cat.push_back(
        triangle("Tr4", true, {-2, 1, 0, 0, 0, 0}, {0, 0, -2, 1, 0, 0}, {0, 0, 0, 1, -1, -1}));
    cat.push_back(triangle("Tr5", true, {-2, 1, 0, 0, 0}, {0, 1, -1, 0, -1}, {0, 1, -1, -1, 0}));
    cat.push_back(
        triangle("Tr6", true, {-2, 1, 0, 0, 0, 0}, {0, 0, 1, -1, -1, 0}, {0, 0, 1, -1, 0, -1}));
    cat.push_back(
        triangle("Tr7", true, {-2, 1, 0, 0, 0, 0}, {0, 0, 1, -1, -1, 0}, {0, 0, -1, -1, 0, 1}));
    cat.push_back(
        triangle("Tr8", true, {-2, 1, 0, 0, 0, 0}, {0, 0, -1, -1, 1, 0}, {0, 0, -1, -1, 0, 1}));
    cat.push_back(triangle("Tr9", true, {-2, 1, 0, 0, 0, 0, 0}, {0, 0, 1, -1, -1, 0, 0},
                           {0, 0, 1, 0, 0, -1, -1}));
    cat.push_back(triangle("Tr10", true, {-2, 1, 0, 0, 0, 0, 0}, {0, 0, -1, 1, -1, 0, 0},
                           {0, 0, -1, 0, 0, 1, -1}));
    cat.push_back(
        triangle("Tr11", true, {0, 0, 0, 1, -1, -1}, {-2, 1, 0, 0, 0, 0}, {-2, 0, 1, 0, 0, 0}));
    cat.push_back(triangle("Tr12", true, {0, 1, 0, -1, -1}, {-2, 1, 0, 0, 0}, {-1, 1, -1, 0, 0}));
    cat.push_back(
        triangle("Tr13", true, {0, 0, 0, -1, -1, 1}, {-2, 1, 0, 0, 0, 0}, {0, 1, -2, 0, 0, 0}));
    cat.push_back(triangle("Tr14", true, {0, 0, 0, 0, -1, -1, 1}, {0, 1, -1, -1, 0, 0, 0},
                           {-2, 1, 0, 0, 0, 0, 0}));
    cat.push_back(triangle("Tr15", true, {0, 0, 0, 1, -1, -1, 0}, {1, -1, -1, 0, 0, 0, 0},
                           {1, -1, 0, 0, 0, 0, -1}));
    cat.push_back(triangle("Tr16", true, {0, 0, 0, 1, -1, -1, 0}, {1, -1, -1, 0, 0, 0, 0},
                           {0, -1, 1, 0, 0, 0, -1}));
    cat.push_back(triangle("Tr17", true, {0, 0, 0, 1, -1, -1, 0}, {1, -1, -1, 0, 0, 0, 0},
                           {0, -1, -1, 0, 0, 0, 1}));
    cat.push_back(triangle("Tr18", true, {0, 0, 0, 1, -1, -1, 0, 0}, {1, -1, -1, 0, 0, 0, 0, 0},
                           {1, 0, 0, 0, 0, 0, -1, -1}));
    cat.push_back(triangle("Tr19", true, {0, 0, 0, 1, -1, -1, 0, 0}, {1, -1, -1, 0, 0, 0, 0, 0},
                           {0, -1, 0, 0, 0, 0, -1, 1}));
    cat.push_back(
        triangle("Tr20", true, {-1, -1, 1, 0, 0, 0}, {0, 0, 1, -1, -1, 0}, {0, 0, 1, -1, 0, -1}));
    cat.push_back(
        triangle("Tr21", true, {-1, 1, -1, 0, 0, 0}, {0, 0, -1, 1, -1, 0}, {0, 0, -1, 1, 0, -1}));
    cat.push_back(
        triangle("Tr22", true, {-1, 1, -1, 0, 0, 0}, {0, 0, -1, -1, 1, 0}, {0, 0, -1, -1, 0, 1}));

    // Triangles whose outer pair straddles x'' = (a + a')/2.
    cat.push_back(triangle("Tr23", false, {-1, 0, 0, 0, 0}, {0, -2, 1, 0, 0}, {0, 0, 0, -2, 1}));
    cat.push_back(triangle("Tr24", false, {-1, 0, 0, 0}, {0, 1, -2, 0}, {0, -1, -1, 1}));
    cat.push_back(
        triangle("Tr25", false, {-1, 0, 0, 0, 0, 0}, {0, 1, -2, 0, 0, 0}, {0, 0, 0, 1, -1, -1}));
    cat.push_back(triangle("Tr26", false, {-1, 0, 0, 0, 0}, {0, 1, -1, -1, 0}, {0, -1, -1, 0, 1}));
    cat.push_back(triangle("Tr27", false, {-1, 0, 0, 0, 0, 0, 0}, {0, 1, -1, -1, 0, 0, 0},
                           {0, 0, 0, 0, 1, -1, -1}));
    cat.push_back(triangle("Tr28", false, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}));

    return cat;
}

}  // namespace

const std::vector<FaceShape>& catalog() {
    static const std::vector<FaceShape> cat = build_catalog();
    return cat;
}

const FaceShape& shape(const std::string& tag) {
    for (const FaceShape& s : catalog())
        if (s.tag == tag) return s;
    throw math_error("unknown shape tag " + tag);
}

// ---------------------------------------------------------------------------
// Canonical form under column permutation.
// ---------------------------------------------------------------------------

std::pair<std::vector<std::vector<int>>, std::vector<int>> canonical_form(
    std::vector<std::vector<int>> rows) {
    if (rows.empty()) return {rows, {}};
    const std::size_t ncols = rows[0].size();
    std::vector<int> perm(ncols);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> best;
    std::vector<int> best_perm;
    std::vector<int> p = perm;
    do {
        std::vector<std::vector<int>> m;
        m.reserve(rows.size());
        for (const auto& r : rows) {
            std::vector<int> nr(ncols);
            for (std::size_t j = 0; j < ncols; ++j) nr[j] = r[static_cast<std::size_t>(p[j])];
            m.push_back(std::move(nr));
        }
        std::sort(m.begin(), m.end());
        if (best.empty() || m < best) {
            best = std::move(m);
            best_perm = p;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return {best, best_perm};
}

std::optional<ShapeMatch> match_shape(const std::vector<std::vector<int>>& points) {
    if (points.empty()) return std::nullopt;
    const std::size_t width = points[0].size();
    // support columns
    std::vector<int> support;
    for (std::size_t j = 0; j < width; ++j) {
        bool nz = false;
        for (const auto& p : points) nz = nz || p[j] != 0;
        if (nz) support.push_back(static_cast<int>(j));
    }
    std::vector<std::vector<int>> reduced;
    for (const auto& p : points) {
        std::vector<int> row;
        for (int j : support) row.push_back(p[static_cast<std::size_t>(j)]);
        reduced.push_back(std::move(row));
    }
    std::sort(reduced.begin(), reduced.end());
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
    auto [canon_in, perm_in] = canonical_form(reduced);
    // catalog canonical forms are fixed data; compute them once
    static const auto catalog_canon = [] {
        std::vector<std::pair<std::vector<std::vector<int>>, std::vector<int>>> out;
        for (const FaceShape& s : catalog()) {
            auto pts = s.all_points();
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
            out.push_back(canonical_form(pts));
        }
        return out;
    }();
    for (std::size_t si = 0; si < catalog().size(); ++si) {
        const FaceShape& s = catalog()[si];
        if (s.ncols != static_cast<int>(support.size())) continue;
        const auto& [canon_cat, perm_cat] = catalog_canon[si];
        if (canon_cat.size() != canon_in.size()) continue;
        if (canon_cat != canon_in) continue;
        // catalog column k sits at canonical slot perm_cat^{-1}[k]; map through
        // the input permutation and back to ambient coordinates.
        std::vector<int> inv_cat(perm_cat.size());
        for (std::size_t i = 0; i < perm_cat.size(); ++i)
            inv_cat[static_cast<std::size_t>(perm_cat[i])] = static_cast<int>(i);
        std::vector<int> out_perm(perm_cat.size());
        for (std::size_t k = 0; k < perm_cat.size(); ++k) {
            int slot = inv_cat[k];
            out_perm[k] = support[static_cast<std::size_t>(perm_in[static_cast<std::size_t>(slot)])];
        }
        return ShapeMatch{s.tag, out_perm};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Triangle dimension systems.
// ---------------------------------------------------------------------------

FracSystem constraints_for(const std::string& tag) {
    const FaceShape& s = shape(tag);
    if (!s.is_triangle())
        throw domain_error_region("constraints_for covers triangle rows; use region_analysis");
    FracSystem sys;
    sys.nvars = s.ncols;
    auto null_eq = [&](const std::vector<Rat>& v) {
        FracEquation eq;
        eq.rhs = Rat(1);
        for (const Rat& x : v) eq.coeffs.push_back(x * x);
        sys.equations.push_back(std::move(eq));
    };
    null_eq(s.c);
    null_eq(s.a);
    null_eq(s.ap);
    if (s.kind == FaceShape::TRIANGLE_SPLIT) {
        const IV& xpp = s.verts[0];
        for (const std::vector<Rat>* v : {&s.a, &s.ap}) {
            FracEquation eq;
            eq.rhs = Rat(1);
            for (int i = 0; i < s.ncols; ++i)
                eq.coeffs.push_back((*v)[static_cast<std::size_t>(i)] *
                                    Rat(xpp[static_cast<std::size_t>(i)]));
            sys.equations.push_back(std::move(eq));
        }
    }
    return sys;
}

}  // namespace spc
