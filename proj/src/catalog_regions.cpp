#include "spclass/catalog.hpp"
#include "spclass/diophantine.hpp"
#include "spclass/jform.hpp"
#include "spclass/linalg.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

namespace spc {

namespace {

using IV = std::vector<int>;

// The null vector c of a quadrilateral face analysis lives in the 2-plane of
// the pattern: c = p0 + alpha e1 + beta e2.  Once the touched-vertex nullity
// rows use the nullity of c itself, every condition of the case analyses is
// affine in (alpha, beta), so a case reduces per dimension assignment to a
// small linear solve plus one final quadratic.

struct Plane {
    std::vector<Rat> p0, e1, e2;
};

Plane make_plane(const std::vector<IV>& verts) {
    Plane f;
    std::size_t n = verts[0].size();
    f.p0.assign(n, Rat(0));
    f.e1.assign(n, Rat(0));
    f.e2.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        f.p0[i] = Rat(verts[0][i]);
        f.e1[i] = Rat(verts[1][i] - verts[0][i]);
        f.e2[i] = Rat(verts[2][i] - verts[0][i]);
    }
    return f;
}

std::pair<Rat, Rat> plane_coords(const Plane& f, const std::vector<Rat>& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) {
            Rat det = f.e1[i] * f.e2[j] - f.e1[j] * f.e2[i];
            if (det.is_zero()) continue;
            Rat b1 = p[i] - f.p0[i], b2 = p[j] - f.p0[j];
            Rat alpha = (b1 * f.e2[j] - f.e2[i] * b2) / det;
            Rat beta = (f.e1[i] * b2 - b1 * f.e1[j]) / det;
            return {alpha, beta};
        }
    throw math_error("degenerate plane");
}

struct Aff {
    Rat f0, fa, fb;
    Quad eval(const Quad& al, const Quad& be) const {
        return Quad(f0) + Quad(fa) * al + Quad(fb) * be;
    }
    Rat at(const std::pair<Rat, Rat>& p) const { return f0 + fa * p.first + fb * p.second; }
};

Aff functional_through(const Plane& f, const std::vector<Rat>& q1, const Rat& v1,
                       const std::vector<Rat>& q2, const Rat& v2, const std::vector<Rat>& q3,
                       const Rat& v3) {
    auto [a1, b1] = plane_coords(f, q1);
    auto [a2, b2] = plane_coords(f, q2);
    auto [a3, b3] = plane_coords(f, q3);
    Mat<Rat> m{{Rat(1), a1, b1}, {Rat(1), a2, b2}, {Rat(1), a3, b3}};
    auto sol = solve_linear(m, Vec<Rat>{v1, v2, v3});
    if (!sol) throw math_error("collinear anchors for region functional");
    return {(*sol)[0], (*sol)[1], (*sol)[2]};
}

std::vector<Rat> rv(const IV& x) {
    std::vector<Rat> out;
    out.reserve(x.size());
    for (int e : x) out.emplace_back(e);
    return out;
}

struct Ctx {
    const FaceShape* shape = nullptr;
    const Plane* plane = nullptr;
    std::vector<long> dims;
    std::vector<Rat> invd;

    void refresh() {
        invd.clear();
        for (long d : dims) invd.emplace_back(1, d);
    }

    Rat B(const std::vector<Rat>& a, const std::vector<Rat>& b) const {
        Rat acc(0);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i] * invd[i];
        return acc;
    }
    Rat Q(const std::vector<Rat>& a) const { return B(a, a); }

    Aff b_with_c(const std::vector<Rat>& y) const {
        Rat f0(0), fa(0), fb(0);
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (y[i].is_zero()) continue;
            Rat yi = y[i] * invd[i];
            f0 += yi * plane->p0[i];
            fa += yi * plane->e1[i];
            fb += yi * plane->e2[i];
        }
        return {f0, fa, fb};
    }

    std::vector<Quad> c_at(const Quad& al, const Quad& be) const {
        std::vector<Quad> c(plane->p0.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            c[i] = Quad(plane->p0[i]) + Quad(plane->e1[i]) * al + Quad(plane->e2[i]) * be;
        return c;
    }
};

// Level -1 point of the plane expressed as base + ccoef * c.
struct PtExpr {
    std::vector<Rat> base;
    int ccoef = 0;
};

struct DimIneq {
    std::vector<long> coeffs;  // over support columns
    long rhs = 0;              // sum coeffs * d >= rhs
};

struct CaseSpec {
    std::string label;
    int touch_a = -1, touch_b = -1;
    std::vector<std::pair<int, int>> orth;                // j(2x - c, y) = 0 as (y, x)
    std::vector<std::pair<int, int>> reflect_null;        // 2y - (2x - c) null as (y, x)
    std::vector<std::tuple<int, int, int>> reflect_orth;  // j(2y-(2x-c), z) = 0 as (y, x, z)
    std::vector<std::vector<Rat>> null_through;           // 2p - c null for fixed point p
    std::vector<std::pair<int, int>> pure_orth;           // j(y, z) = 0
    std::vector<std::pair<int, int>> equal_selfj;         // Q(y) = Q(z)
    std::vector<Rat> fixed_c;
    std::vector<Rat> exclude_c;
    std::vector<std::tuple<Aff, int, bool>> pre;  // sign preconditions on (alpha, beta)
    std::vector<DimIneq> dim_ineqs;
    bool spine = false;
    bool spine_strict = false;
    Aff spine_fun{Rat(0), Rat(0), Rat(0)};
    Rat spine_bound;
    int spine_dir = -1;
    bool sign_terminal = false;
    std::vector<std::pair<PtExpr, PtExpr>> sign_pairs;  // all must have J > 0 to kill
};

struct RegionEval {
    std::string label;
    std::function<bool(const Ctx&, const Quad&, const Quad&)> member;
    std::vector<CaseSpec> cases;
};

Quad j_expr(const Ctx& cx, const PtExpr& e1, const PtExpr& e2, const std::vector<Quad>& c) {
    Quad acc(Rat(1));
    for (std::size_t i = 0; i < e1.base.size(); ++i) {
        Quad x = Quad(e1.base[i]) + (e1.ccoef ? c[i] * Quad(Rat(e1.ccoef)) : Quad(Rat(0)));
        Quad y = Quad(e2.base[i]) + (e2.ccoef ? c[i] * Quad(Rat(e2.ccoef)) : Quad(Rat(0)));
        acc -= x * y * Quad(cx.invd[i]);
    }
    return acc;
}

using SolutionCollector = std::vector<std::pair<std::vector<Quad>, bool>>;

void run_case(const Ctx& cx, const RegionEval& reg, const CaseSpec& cs, CaseOutcome& out,
              SolutionCollector* collect = nullptr) {
    const FaceShape& s = *cx.shape;
    auto vert = [&](int role) { return rv(s.verts[static_cast<std::size_t>(role)]); };
    for (auto& [y, z] : cs.pure_orth)
        if (cx.B(vert(y), vert(z)) != Rat(1)) return;
    for (auto& [y, z] : cs.equal_selfj)
        if (cx.Q(vert(y)) != cx.Q(vert(z))) return;
    for (const DimIneq& iq : cs.dim_ineqs) {
        long acc = 0;
        for (std::size_t i = 0; i < iq.coeffs.size(); ++i) acc += iq.coeffs[i] * cx.dims[i];
        if (acc < iq.rhs) return;
    }

    std::vector<Aff> rows;
    auto touched_null = [&](int role) {
        std::vector<Rat> x = vert(role);
        Aff b = cx.b_with_c(x);
        rows.push_back({cx.Q(x) - b.f0, -b.fa, -b.fb});
    };
    if (cs.touch_a >= 0) touched_null(cs.touch_a);
    if (cs.touch_b >= 0) touched_null(cs.touch_b);
    for (auto& p : cs.null_through) {
        Aff b = cx.b_with_c(p);
        rows.push_back({cx.Q(p) - b.f0, -b.fa, -b.fb});
    }
    for (auto& [y, x] : cs.orth) {
        Aff b = cx.b_with_c(vert(y));
        Rat k = 2 * cx.B(vert(x), vert(y)) - Rat(1);
        rows.push_back({k - b.f0, -b.fa, -b.fb});
    }
    auto dir2 = [&](int y, int x) {
        std::vector<Rat> w = vert(y);
        std::vector<Rat> xv = vert(x);
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = 2 * (w[i] - xv[i]);
        return w;
    };
    for (auto& [y, x] : cs.reflect_null) {
        std::vector<Rat> w = dir2(y, x);
        Aff b = cx.b_with_c(w);
        rows.push_back({cx.Q(w) + 2 * b.f0, 2 * b.fa, 2 * b.fb});
    }
    for (auto& [y, x, z] : cs.reflect_orth) {
        std::vector<Rat> w = dir2(y, x);
        Aff b = cx.b_with_c(vert(z));
        Rat k = cx.B(w, vert(z)) - Rat(1);
        rows.push_back({k + b.f0, b.fa, b.fb});
    }
    if (!cs.fixed_c.empty()) {
        auto [al, be] = plane_coords(*cx.plane, cs.fixed_c);
        rows.push_back({-al, Rat(1), Rat(0)});
        rows.push_back({-be, Rat(0), Rat(1)});
    }

    Mat<Rat> m;
    Vec<Rat> b;
    for (const Aff& r : rows) {
        m.push_back({r.fa, r.fb});
        b.push_back(-r.f0);
    }
    auto aff = solve_affine(m, b);
    if (!aff) return;
    const auto& [part, basis] = *aff;

    auto null_quadratic = [&](const Rat& a0, const Rat& b0, const Rat& da,
                              const Rat& db) -> std::array<Rat, 3> {
        std::vector<Rat> base(cx.plane->p0.size()), dir(cx.plane->p0.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            base[i] = cx.plane->p0[i] + a0 * cx.plane->e1[i] + b0 * cx.plane->e2[i];
            dir[i] = da * cx.plane->e1[i] + db * cx.plane->e2[i];
        }
        return {cx.Q(dir), 2 * cx.B(base, dir), cx.Q(base) - Rat(1)};
    };

    std::vector<std::pair<Quad, Quad>> candidates;
    if (basis.empty()) {
        auto q = null_quadratic(part[0], part[1], Rat(0), Rat(0));
        if (!q[2].is_zero()) return;
        candidates.emplace_back(Quad(part[0]), Quad(part[1]));
    } else if (basis.size() == 1) {
        auto q = null_quadratic(part[0], part[1], basis[0][0], basis[0][1]);
        if (q[0].is_zero()) {
            if (q[1].is_zero()) {
                if (!q[2].is_zero()) return;
                candidates.emplace_back(Quad(part[0]), Quad(part[1]));
            } else {
                Rat t = -q[2] / q[1];
                candidates.emplace_back(Quad(part[0] + t * basis[0][0]),
                                        Quad(part[1] + t * basis[0][1]));
            }
        } else {
            auto roots = Quad::quadratic_roots(q[0], q[1], q[2]);
            if (!roots) return;
            for (const Quad& t : {roots->first, roots->second}) {
                candidates.emplace_back(Quad(part[0]) + Quad(basis[0][0]) * t,
                                        Quad(part[1]) + Quad(basis[0][1]) * t);
                if (roots->first == roots->second) break;
            }
        }
    } else {
        out.witnesses.push_back(cx.dims);  // underdetermined; never certify falsely
        return;
    }

    for (auto& [al, be] : candidates) {
        std::vector<Quad> c = cx.c_at(al, be);
        if (!cs.exclude_c.empty()) {
            bool same = true;
            for (std::size_t i = 0; i < c.size() && same; ++i)
                if (c[i] != Quad(cs.exclude_c[i])) same = false;
            if (same) continue;
        }
        if (!reg.member(cx, al, be)) continue;
        bool ok = true;
        for (auto& [fun, want, strict] : cs.pre) {
            int sg = fun.eval(al, be).sign();
            if (strict ? sg * want <= 0 : sg * want < 0) ok = false;
        }
        if (!ok) continue;
        if (cs.spine) {
            // spine_dir -1: require fun <= bound (strict: <); +1: fun >= bound.
            Quad val = cs.spine_fun.eval(al, be) - Quad(cs.spine_bound);
            int sg = val.sign() * cs.spine_dir;
            if (cs.spine_strict ? sg <= 0 : sg < 0) continue;
        }
        if (cs.sign_terminal) {
            bool all_pos = true;
            for (auto& [p, q] : cs.sign_pairs)
                if (j_expr(cx, p, q, c).sign() <= 0) all_pos = false;
            if (all_pos) {
                ++out.sign_killed;
                if (collect) collect->push_back({c, true});
                continue;
            }
        }
        out.witnesses.push_back(cx.dims);
        if (collect)
            collect->push_back({c, false});
        else
            return;
    }
}

void enumerate_region(const FaceShape& s, const Plane& plane, RegionEval& reg, long bound,
                      RegionReport& report, const std::vector<long>* only_dims = nullptr,
                      SolutionCollector* collect = nullptr) {
    const int nc = s.ncols;
    for (const CaseSpec& cs : reg.cases) {
        CaseOutcome out;
        out.label = cs.label;
        if (only_dims) {
            Ctx cx;
            cx.shape = &s;
            cx.plane = &plane;
            cx.dims = *only_dims;
            cx.refresh();
            run_case(cx, reg, cs, out, collect);
            report.cases.push_back(std::move(out));
            continue;
        }
        FracSystem pure;
        pure.nvars = nc;
        auto vert = [&](int role) { return s.verts[static_cast<std::size_t>(role)]; };
        for (auto& [y, z] : cs.pure_orth) {
            FracEquation eq;
            eq.rhs = Rat(1);
            for (int i = 0; i < nc; ++i)
                eq.coeffs.emplace_back(vert(y)[static_cast<std::size_t>(i)] *
                                       vert(z)[static_cast<std::size_t>(i)]);
            pure.equations.push_back(std::move(eq));
        }
        for (auto& [y, z] : cs.equal_selfj) {
            FracEquation eq;
            eq.rhs = Rat(0);
            for (int i = 0; i < nc; ++i) {
                int a = vert(y)[static_cast<std::size_t>(i)];
                int b = vert(z)[static_cast<std::size_t>(i)];
                eq.coeffs.emplace_back(a * a - b * b);
            }
            pure.equations.push_back(std::move(eq));
        }
        std::vector<std::vector<long>> seeds;
        std::vector<int> free_dims;
        if (!pure.equations.empty()) {
            auto pre = solve_fracsystem(pure, bound);
            seeds = std::move(pre.solutions);
            free_dims = pre.unconstrained;
        } else {
            seeds.emplace_back(static_cast<std::size_t>(nc), 1L);
            for (int i = 0; i < nc; ++i) free_dims.push_back(i);
        }
        for (auto& seed : seeds) {
            std::vector<long> dims = seed;
            std::function<void(std::size_t)> loop = [&](std::size_t k) {
                if (k == free_dims.size()) {
                    Ctx cx;
                    cx.shape = &s;
                    cx.plane = &plane;
                    cx.dims = dims;
                    cx.refresh();
                    run_case(cx, reg, cs, out);
                    return;
                }
                for (long v = 1; v <= bound; ++v) {
                    dims[static_cast<std::size_t>(free_dims[k])] = v;
                    loop(k + 1);
                }
            };
            loop(0);
        }
        std::sort(out.witnesses.begin(), out.witnesses.end());
        out.witnesses.erase(std::unique(out.witnesses.begin(), out.witnesses.end()),
                            out.witnesses.end());
        report.cases.push_back(std::move(out));
    }
}

std::vector<Rat> combo(const FaceShape& s, int r1, int r2, int r3) {
    std::vector<Rat> out(static_cast<std::size_t>(s.ncols));
    for (int i = 0; i < s.ncols; ++i)
        out[static_cast<std::size_t>(i)] =
            Rat(s.verts[static_cast<std::size_t>(r1)][static_cast<std::size_t>(i)] +
                s.verts[static_cast<std::size_t>(r2)][static_cast<std::size_t>(i)] -
                s.verts[static_cast<std::size_t>(r3)][static_cast<std::size_t>(i)]);
    return out;
}

// ---------------------------------------------------------------------------
// Trapezium regions (roles v=0, u=1, s=2, w=3; vu parallel to sw).
// ---------------------------------------------------------------------------

RegionReport analyze_trapezium(const FaceShape& s_in, const std::string& region, long bound,
                      const std::vector<long>* only_dims = nullptr,
                      SolutionCollector* collect = nullptr) {
    RegionReport rep;
    rep.tag = s_in.tag;
    rep.region = region;
    rep.anchor = "region-infeasible";
    FaceShape sh = s_in;
    std::string reg = region;
    if (region == "VII" || region == "VIII" || region == "IX") {
        std::swap(sh.verts[0], sh.verts[1]);
        std::swap(sh.verts[2], sh.verts[3]);
        reg = region == "VII" ? "V" : region == "VIII" ? "IV" : "III";
        rep.description = "mirrored onto region " + reg + "; ";
    }
    if (reg == "I") {
        rep.description += "reflected chord cannot meet the face";
        rep.anchor = "chord-misses-hull";
        return rep;
    }
    Plane plane = make_plane(sh.verts);
    auto P = [&](int role) { return rv(sh.verts[static_cast<std::size_t>(role)]); };
    Aff eta = functional_through(plane, P(2), Rat(0), P(3), Rat(0), P(0), Rat(1));
    Aff sl = functional_through(plane, P(2), Rat(0), P(0), Rat(0), P(3), Rat(1));
    Aff sr = functional_through(plane, P(3), Rat(0), P(1), Rat(0), P(2), Rat(1));
    auto sgn_at = [](const Aff& f, const Quad& al, const Quad& be) { return f.eval(al, be).sign(); };
    auto shifted = [](Aff f, const Rat& k) {
        f.f0 -= k;
        return f;
    };
    RegionEval ev;
    ev.label = reg;
    if (reg == "II") {
        ev.member = [=](const Ctx&, const Quad& al, const Quad& be) {
            return sgn_at(shifted(eta, Rat(1)), al, be) > 0 && sgn_at(sl, al, be) >= 0 &&
                   sgn_at(sr, al, be) >= 0;
        };
        for (int variant = 0; variant < 3; ++variant) {
            CaseSpec cs;
            cs.touch_a = 0;
            cs.touch_b = 1;
            cs.spine = true;
            cs.spine_fun = eta;
            cs.spine_bound = Rat(4, 3);
            cs.spine_dir = -1;
            if (variant == 0) {
                cs.label = "i";
                cs.orth = {{2, 0}, {3, 1}};
                cs.spine_strict = true;
            } else if (variant == 1) {
                cs.label = "ii";
                cs.orth = {{2, 0}};
                cs.reflect_null = {{3, 1}};
                cs.reflect_orth = {{3, 1, 2}};
            } else {
                cs.label = "iii";
                cs.orth = {{3, 1}};
                cs.reflect_null = {{2, 0}};
                cs.reflect_orth = {{2, 0, 3}};
            }
            ev.cases.push_back(std::move(cs));
        }
    } else if (reg == "III") {
        ev.member = [=](const Ctx&, const Quad& al, const Quad& be) {
            return sgn_at(shifted(eta, Rat(1)), al, be) >= 0 && sgn_at(sr, al, be) < 0 &&
                   sgn_at(sl, al, be) >= 0;
        };
        CaseSpec ci;
        ci.label = "i";
        ci.touch_a = 0;
        ci.touch_b = 3;
        ci.orth = {{2, 0}, {2, 3}};
        ev.cases.push_back(std::move(ci));
        CaseSpec cii;
        cii.label = "ii";
        cii.touch_a = 0;
        cii.touch_b = 3;
        cii.fixed_c = combo(sh, 0, 3, 2);  // c = v + w - s
        ev.cases.push_back(std::move(cii));
    } else if (reg == "IV") {
        ev.member = [=](const Ctx&, const Quad& al, const Quad& be) {
            return sgn_at(eta, al, be) >= 0 && sgn_at(shifted(eta, Rat(1)), al, be) <= 0 &&
                   sgn_at(sr, al, be) < 0;
        };
        // position of a = 2u - c through any affine functional g: g(a) = 2 g(u) - g(c)
        auto at_refl = [&](const Aff& g, int role) {
            Rat gx = g.at(plane_coords(plane, P(role)));
            return Aff{2 * gx - g.f0, -g.fa, -g.fb};
        };
        Aff sl_a = at_refl(sl, 1);
        auto mk = [&](const char* label) {
            CaseSpec cs;
            cs.label = label;
            cs.touch_a = 1;
            cs.touch_b = 3;
            return cs;
        };
        {
            CaseSpec cs = mk("i");
            cs.orth = {{2, 1}, {2, 3}};
            cs.pre = {{sl_a, -1, true}};
            ev.cases.push_back(std::move(cs));
        }
        {
            CaseSpec cs = mk("ii");
            cs.fixed_c = combo(sh, 1, 3, 2);  // c = u + w - s
            cs.pre = {{sl_a, -1, true}};
            ev.cases.push_back(std::move(cs));
        }
        {
            CaseSpec cs = mk("iii");
            cs.orth = {{2, 3}};
            cs.pre = {{sl_a, 1, false}, {sl_a, -1, false}};  // sigma_l(a) == 0
            ev.cases.push_back(std::move(cs));
        }
        {
            CaseSpec cs = mk("iv");
            cs.orth = {{0, 1}, {2, 3}};
            cs.pure_orth = {{0, 2}};
            cs.pre = {{sl_a, 1, true}};
            ev.cases.push_back(std::move(cs));
        }
        {
            CaseSpec cs = mk("v");
            cs.orth = {{0, 1}};
            cs.reflect_null = {{2, 3}};
            cs.reflect_orth = {{2, 3, 0}};
            cs.pre = {{sl_a, 1, true}};
            ev.cases.push_back(std::move(cs));
        }
        {
            CaseSpec cs = mk("vi");
            cs.orth = {{2, 3}};
            cs.reflect_null = {{0, 1}};
            cs.reflect_orth = {{0, 1, 2}};
            cs.pre = {{sl_a, 1, true}};
            ev.cases.push_back(std::move(cs));
        }
    } else if (reg == "V") {
        ev.member = [=](const Ctx&, const Quad& al, const Quad& be) {
            return sgn_at(eta, al, be) < 0 && sgn_at(sr, al, be) < 0;
        };
        CaseSpec ci;
        ci.label = "i";
        ci.touch_a = 2;
        ci.touch_b = 1;
        ci.orth = {{0, 2}, {0, 1}};
        ev.cases.push_back(std::move(ci));
        CaseSpec cii;
        cii.label = "ii";
        cii.touch_a = 2;
        cii.touch_b = 1;
        cii.fixed_c = combo(sh, 1, 2, 0);  // c = u + s - v
        ev.cases.push_back(std::move(cii));
    } else if (reg == "VI") {
        ev.member = [=](const Ctx&, const Quad& al, const Quad& be) {
            return sgn_at(eta, al, be) < 0 && sgn_at(sl, al, be) >= 0 && sgn_at(sr, al, be) >= 0;
        };
        for (int variant = 0; variant < 3; ++variant) {
            CaseSpec cs;
            cs.touch_a = 2;
            cs.touch_b = 3;
            cs.spine = true;
            cs.spine_fun = eta;
            cs.spine_bound = Rat(-1, 3);
            cs.spine_dir = +1;
            if (variant == 0) {
                cs.label = "i";
                cs.orth = {{0, 2}, {1, 3}};
                cs.pure_orth = {{1, 0}};
            } else if (variant == 1) {
                cs.label = "ii";
                cs.orth = {{0, 2}};
                cs.reflect_null = {{1, 3}};
            } else {
                cs.label = "iii";
                cs.orth = {{1, 3}};
                cs.reflect_null = {{0, 2}};
            }
            ev.cases.push_back(std::move(cs));
        }
    } else {
        throw domain_error_region("unknown trapezium region " + region);
    }
    rep.description += "trapezium " + sh.tag + " region " + reg +
                       ": touched-vertex nullity rows plus case orthogonality/reflection "
                       "rows, spine bound, nullity of c";
    enumerate_region(sh, plane, ev, bound, rep, only_dims, collect);
    return rep;
}

// ---------------------------------------------------------------------------
// Parallelogram / square regions.  Sides vu, uw, ws, sv.
// ---------------------------------------------------------------------------

RegionReport analyze_parallelogram(const FaceShape& s, const std::string& region, long bound,
                      const std::vector<long>* only_dims = nullptr,
                      SolutionCollector* collect = nullptr) {
    RegionReport rep;
    rep.tag = s.tag;
    rep.region = region;
    rep.anchor = "region-infeasible";
    if (region == "corner") {
        rep.description = "corner regions: reflected chord cannot meet the face";
        rep.anchor = "chord-misses-hull";
        return rep;
    }
    int x, xp, nx, nxp;
    if (region == "uw") {
        x = 1, xp = 3, nx = 0, nxp = 2;
    } else if (region == "sv") {
        x = 2, xp = 0, nx = 3, nxp = 1;
    } else if (region == "vu") {
        x = 0, xp = 1, nx = 2, nxp = 3;
    } else if (region == "ws") {
        x = 3, xp = 2, nx = 1, nxp = 0;
    } else {
        throw domain_error_region("unknown parallelogram region " + region);
    }
    Plane plane = make_plane(s.verts);
    auto P = [&](int role) { return rv(s.verts[static_cast<std::size_t>(role)]); };
    Aff psi = functional_through(plane, P(nx), Rat(0), P(nxp), Rat(0), P(x), Rat(1));
    Aff tau1 = functional_through(plane, P(x), Rat(0), P(nx), Rat(0), P(xp), Rat(1));
    Aff tau2 = functional_through(plane, P(xp), Rat(0), P(nxp), Rat(0), P(x), Rat(1));

    RegionEval ev;
    ev.label = region;
    ev.member = [=](const Ctx&, const Quad& al, const Quad& be) {
        Aff above = psi;
        above.f0 -= Rat(1);
        return above.eval(al, be).sign() > 0 && tau1.eval(al, be).sign() >= 0 &&
               tau2.eval(al, be).sign() >= 0;
    };

    bool faced_has_midpoint = false;
    for (const IV& e : s.extras)
        for (auto [p, q] : {std::pair{x, xp}, std::pair{nx, nxp}}) {
            bool mid = true;
            for (int i = 0; i < s.ncols; ++i)
                if (2 * e[static_cast<std::size_t>(i)] !=
                    s.verts[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] +
                        s.verts[static_cast<std::size_t>(q)][static_cast<std::size_t>(i)])
                    mid = false;
            if (mid) faced_has_midpoint = true;
        }

    CaseSpec cii;
    cii.label = "ii";
    cii.touch_a = x;
    cii.touch_b = xp;
    cii.orth = {{nx, x}, {nxp, xp}};
    if (!faced_has_midpoint) cii.pure_orth = {{nx, nxp}};
    cii.equal_selfj = {{nx, nxp}};
    cii.spine = true;
    cii.spine_fun = psi;
    cii.spine_bound = Rat(4, 3);
    cii.spine_dir = -1;
    cii.spine_strict = true;
    ev.cases.push_back(std::move(cii));

    bool has_type_i = false;
    for (const IV& vtx : s.verts) {
        int nm1 = 0, nz = 0;
        for (int e : vtx) {
            if (e == -1) ++nm1;
            if (e != 0) ++nz;
        }
        if (nm1 == 1 && nz == 1) has_type_i = true;
    }
    if (s.kind == FaceShape::SQUARE) {
        CaseSpec balanced;
        balanced.label = "i";
        balanced.touch_a = x;
        balanced.touch_b = xp;
        balanced.reflect_null = {{nx, x}};
        std::vector<Rat> fixed(static_cast<std::size_t>(s.ncols));
        for (int i = 0; i < s.ncols; ++i)
            fixed[static_cast<std::size_t>(i)] =
                Rat(s.verts[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)] +
                    s.verts[static_cast<std::size_t>(xp)][static_cast<std::size_t>(i)] -
                    s.extras[0][static_cast<std::size_t>(i)]);
        balanced.fixed_c = fixed;
        ev.cases.push_back(std::move(balanced));
        CaseSpec unbalanced;
        unbalanced.label = "i-unbalanced";
        unbalanced.touch_a = x;
        unbalanced.touch_b = xp;
        unbalanced.reflect_null = {{nx, x}};
        unbalanced.exclude_c = fixed;
        unbalanced.sign_terminal = true;
        ev.cases.push_back(std::move(unbalanced));
    } else {
        CaseSpec ci;
        ci.label = "i";
        ci.touch_a = x;
        ci.touch_b = xp;
        ci.reflect_null = {{nx, x}};
        if (!has_type_i) ci.sign_terminal = true;
        ev.cases.push_back(std::move(ci));
    }
    rep.description = "parallelogram " + s.tag + " faced side " + region +
                      ": touched-vertex nullity rows, neighbor orthogonality, opposite-edge "
                      "orthogonality, equal self-J, spine bound, nullity of c";
    enumerate_region(s, plane, ev, bound, rep, only_dims, collect);
    return rep;
}

// ---------------------------------------------------------------------------
// The regular hexagon H3.  Roles u=0, v=1, w=2, x=3, y=4, z=5; centre t.
// ---------------------------------------------------------------------------

RegionReport analyze_hexagon3(const FaceShape& s, const std::string& region, long bound,
                      const std::vector<long>* only_dims = nullptr,
                      SolutionCollector* collect = nullptr) {
    RegionReport rep;
    rep.tag = s.tag;
    rep.region = region;
    rep.anchor = "region-infeasible";
    std::string reg = region;
    if (region == "IV") reg = "II";
    if (region == "III") reg = "V";
    if (region == "VI") reg = "I";
    if (reg != region) rep.description = "mapped by a hexagon symmetry onto region " + reg + "; ";
    if (reg == "I") {
        rep.description += "reflected chord cannot meet the face";
        rep.anchor = "chord-misses-hull";
        return rep;
    }
    const int RU = 0, RV = 1, RW = 2, RX = 3, RY = 4, RZ = 5;
    Plane plane = make_plane(s.verts);
    auto coord = [&](int idx) {
        return Aff{plane.p0[static_cast<std::size_t>(idx)], plane.e1[static_cast<std::size_t>(idx)],
                   plane.e2[static_cast<std::size_t>(idx)]};
    };
    Aff c1 = coord(0), c3 = coord(2), c4 = coord(3);
    RegionEval ev;
    ev.label = reg;
    if (reg == "II") {
        ev.member = [=](const Ctx&, const Quad& al, const Quad& be) {
            Aff a1 = c1, a3 = c3;
            a1.f0 -= Rat(1);
            a3.f0 -= Rat(1);
            Aff sum{c1.f0 + c3.f0 - Rat(1), c1.fa + c3.fa, c1.fb + c3.fb};
            return a1.eval(al, be).sign() < 0 && a3.eval(al, be).sign() < 0 &&
                   sum.eval(al, be).sign() > 0;
        };
        auto mk = [&](const char* label) {
            CaseSpec cs;
            cs.label = label;
            cs.touch_a = RV;
            cs.touch_b = RW;
            return cs;
        };
        {
            CaseSpec cs = mk("i");
            cs.orth = {{RU, RV}, {RX, RW}};
            ev.cases.push_back(std::move(cs));
        }
        {
            CaseSpec cs = mk("ii");
            cs.orth = {{RU, RV}};
            cs.reflect_null = {{RX, RW}};
            ev.cases.push_back(std::move(cs));
        }
        {
            CaseSpec cs = mk("iii");
            cs.orth = {{RX, RW}};
            cs.reflect_null = {{RU, RV}};
            ev.cases.push_back(std::move(cs));
        }
        {
            CaseSpec cs = mk("iv-a");
            cs.reflect_null = {{RU, RV}, {RX, RW}};
            cs.reflect_orth = {{RU, RV, RZ}};
            ev.cases.push_back(std::move(cs));
        }
        {
            CaseSpec cs = mk("iv-b");
            cs.reflect_null = {{RU, RV}, {RX, RW}};
            cs.reflect_orth = {{RX, RW, RY}};
            ev.cases.push_back(std::move(cs));
        }
        {
            // Both secondary reflections are null; q = 2t - c with t the centre.
            CaseSpec cs = mk("iv-c");
            cs.reflect_null = {{RU, RV}, {RX, RW}};
            cs.null_through = {rv(s.extras[0])};
            // balancing forces d1 + d3 >= 2 d4 and rotations
            cs.dim_ineqs = {{{1, 0, 1, -2}, 0}, {{-2, 0, 1, 1}, 0}, {{1, 0, -2, 1}, 0}};
            cs.sign_terminal = true;
            PtExpr cexp{std::vector<Rat>(static_cast<std::size_t>(s.ncols), Rat(0)), 1};
            PtExpr texp{rv(s.extras[0]), 0};
            PtExpr aexp{rv(s.verts[RV]), -1};
            PtExpr apexp{rv(s.verts[RW]), -1};
            for (auto& v : aexp.base) v *= 2;
            for (auto& v : apexp.base) v *= 2;
            PtExpr eexp;
            eexp.base = rv(s.verts[RU]);
            for (std::size_t i = 0; i < eexp.base.size(); ++i)
                eexp.base[i] = 2 * (eexp.base[i] - Rat(s.verts[RV][i]));
            eexp.ccoef = 1;
            cs.sign_pairs = {{aexp, apexp}, {cexp, eexp}, {texp, cexp}, {texp, aexp}};
            ev.cases.push_back(std::move(cs));
        }
    } else if (reg == "V") {
        ev.member = [=](const Ctx&, const Quad& al, const Quad& be) {
            Aff a1 = c1, a3 = c3, lo = c4, hi = c4;
            a1.f0 -= Rat(1);
            a3.f0 += Rat(1);
            lo.f0 += Rat(1);
            hi.f0 -= Rat(1);
            return a1.eval(al, be).sign() > 0 && a3.eval(al, be).sign() < 0 &&
                   lo.eval(al, be).sign() > 0 && hi.eval(al, be).sign() < 0;
        };
        {
            CaseSpec cs;
            cs.label = "i";
            cs.touch_a = RW;
            cs.touch_b = RY;
            cs.orth = {{RU, RW}, {RU, RY}};
            ev.cases.push_back(std::move(cs));
        }
        {
            CaseSpec cs;
            cs.label = "ii";
            cs.touch_a = RW;
            cs.touch_b = RY;
            cs.fixed_c = combo(s, RW, RY, RU);  // c = w + y - u
            cs.sign_terminal = true;
            PtExpr cexp{std::vector<Rat>(static_cast<std::size_t>(s.ncols), Rat(0)), 1};
            PtExpr aexp{rv(s.verts[RW]), -1};
            PtExpr apexp{rv(s.verts[RY]), -1};
            for (auto& v : aexp.base) v *= 2;
            for (auto& v : apexp.base) v *= 2;
            cs.sign_pairs = {{cexp, aexp}, {cexp, apexp}, {aexp, apexp}};
            ev.cases.push_back(std::move(cs));
        }
    } else {
        throw domain_error_region("unknown H3 region " + region);
    }
    rep.description += "regular hexagon region " + reg +
                       ": touched-vertex nullity rows plus case orthogonality/reflection rows, "
                       "nullity of c";
    enumerate_region(s, plane, ev, bound, rep, only_dims, collect);
    return rep;
}

}  // namespace

RegionReport region_analysis(const std::string& tag, const std::string& region, long bound) {
    const FaceShape& s = shape(tag);
    if (s.kind == FaceShape::TRAPEZIUM) return analyze_trapezium(s, region, bound);
    if (s.kind == FaceShape::PARALLELOGRAM || s.kind == FaceShape::SQUARE)
        return analyze_parallelogram(s, region, bound);
    if (s.tag == "H3") return analyze_hexagon3(s, region, bound);
    throw domain_error_region("region analysis not available for shape " + tag);
}

std::vector<std::pair<std::vector<Quad>, bool>> shape_case_solutions(
    const std::string& tag, const std::vector<long>& support_dims) {
    const FaceShape& s = shape(tag);
    SolutionCollector collect;
    std::vector<std::string> regions;
    if (s.kind == FaceShape::TRAPEZIUM)
        regions = {"II", "III", "IV", "V", "VI", "VII", "VIII", "IX"};
    else if (s.kind == FaceShape::PARALLELOGRAM || s.kind == FaceShape::SQUARE)
        regions = {"uw", "sv", "vu", "ws"};
    else if (s.tag == "H3")
        regions = {"II", "V"};
    else
        return {};
    for (const std::string& reg : regions) {
        if (s.kind == FaceShape::TRAPEZIUM)
            analyze_trapezium(s, reg, 0, &support_dims, &collect);
        else if (s.kind == FaceShape::PARALLELOGRAM || s.kind == FaceShape::SQUARE)
            analyze_parallelogram(s, reg, 0, &support_dims, &collect);
        else
            analyze_hexagon3(s, reg, 0, &support_dims, &collect);
    }
    return collect;
}

}  // namespace spc
