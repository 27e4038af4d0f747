#include "spclass/projection.hpp"

#include "spclass/jform.hpp"
#include "spclass/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace spc {

const std::vector<std::string>& anchor_registry() {
    static const std::vector<std::string> ids = {
        "inside-hull",          // candidate not outside the hull
        "fano-structure",       // type I candidate forces the circle-bundle weight set
        "halfspace-sign",       // some weight pairs negatively against the candidate
        "perp-multiplicity",    // integral candidate with two orthogonal weights
        "shat-dimension",       // repeated -2 slot in the perp set without d_i = 4
        "perp-edge",            // orthogonal-edge pair with nonvanishing J
        "perp-estimate",        // orthogonal-pair estimate violated or degenerate
        "perp-pair-range",      // type II orthogonal pair out of range
        "orthogonal-config",    // perp set matches no admissible configuration
        "projection-dichotomy", // a projected vertex fits none of the three types
        "lambda-range",         // collinearity parameter outside (1, 2]
        "type2-discrete",       // interior-free edge with parameter not 2 or 4/3
        "four-thirds-relation", // the 4/3 case balance fails
        "type2-far-vertex",     // far endpoint type inadmissible for parameter 2
        "multi-type2",          // more than one edge-collinear vertex
        "adjacent-1b",          // adjacent doubled-point vertices in too high rank
        "vertex-count",         // projected polytope has too few vertices
        "min-1a-count",         // too few orthogonal vertices
        "partner-eliminated",   // mirrored null vector fails its own filters
        "edge-orthogonality",   // forced support pair on an edge with J != 0
        "sign-contradiction",   // coefficient signs cannot balance
        "region-infeasible",    // catalog region system has no admissible dimensions
        "chord-misses-hull",    // reflected chord cannot meet the hull
    };
    return ids;
}

bool known_anchor(const std::string& id) {
    const auto& reg = anchor_registry();
    return std::find(reg.begin(), reg.end(), id) != reg.end();
}

namespace {

using RV = std::vector<Rat>;

RV lin(const Rat& s, const RV& x, const Rat& t, const RV& y) {
    RV out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i] + t * y[i];
    return out;
}

Rat bform(const RV& x, const RV& y, const DimVector& d) {
    Rat acc(0);
    for (int i = 0; i < d.r(); ++i)
        acc += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)] / Rat(d[i]);
    return acc;
}

Quad bform_q(const std::vector<Quad>& x, const RV& y, const DimVector& d) {
    Quad acc(Rat(0));
    for (int i = 0; i < d.r(); ++i)
        acc += x[static_cast<std::size_t>(i)] * Quad(y[static_cast<std::size_t>(i)] / Rat(d[i]));
    return acc;
}


// Weight indices collinear with the line through c and x (c != x).
std::vector<int> collinear_weights(const std::vector<RV>& pts, const RV& c, const RV& x,
                                   std::vector<Rat>* params = nullptr) {
    std::size_t piv = 0;
    while (piv < c.size() && c[piv] == x[piv]) ++piv;
    std::vector<int> out;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        Rat t = (pts[k][piv] - c[piv]) / (x[piv] - c[piv]);
        bool on = true;
        for (std::size_t j = 0; j < c.size() && on; ++j)
            if (pts[k][j] != c[j] + t * (x[j] - c[j])) on = false;
        if (on) {
            out.push_back(static_cast<int>(k));
            if (params) params->push_back(t);
        }
    }
    return out;
}

// Does the hull continue past x in direction dir?  Exact max-t LP.
bool hull_extends(const std::vector<RV>& pts, const RV& x, const RV& dir) {
    const std::size_t dim = x.size();
    const std::size_t n = pts.size();
    Mat<Rat> a(dim + 1, Vec<Rat>(n + 1, Rat(0)));
    Vec<Rat> b(dim + 1);
    for (std::size_t row = 0; row < dim; ++row) {
        for (std::size_t k = 0; k < n; ++k) a[row][k] = pts[k][row];
        a[row][n] = -dir[row];
        b[row] = x[row];
    }
    for (std::size_t k = 0; k < n; ++k) a[dim][k] = Rat(1);
    b[dim] = Rat(1);
    Vec<Rat> obj(n + 1, Rat(0));
    obj[n] = Rat(1);
    auto res = lp_maximize(std::move(a), std::move(b), std::move(obj));
    return res.status == LpResult<Rat>::OPTIMAL && res.value.sign() > 0;
}

// Facet-based geometry for integer weight configurations in low rank; falls
// back to the simplex tests when the fast hull is unavailable.
struct Geom {
    std::vector<RV> pts;
    std::vector<std::vector<long>> ipts;
    std::optional<IntFacetHull> fast;

    static Geom of(const WeightSystem& ws) {
        Geom g;
        g.pts = AffineConfig(ws.points(), ws.d).raw();
        for (const Weight& w : ws.weights) {
            std::vector<long> row;
            for (int e : w.entries) row.push_back(e);
            g.ipts.push_back(std::move(row));
        }
        g.fast = IntFacetHull::build(g.ipts);
        return g;
    }

    bool contains(const RV& p) const {
        if (fast) return fast->contains(p);
        return conv_contains(p, pts);
    }
    bool vertex(std::size_t k) const {
        if (fast) return fast->is_vertex(ipts[k]);
        return !conv_contains(pts[k], pts, static_cast<int>(k));
    }
    bool edge(int a, int b) const {
        if (fast) return fast->is_edge(ipts[static_cast<std::size_t>(a)],
                                       ipts[static_cast<std::size_t>(b)]);
        std::vector<int> mem{std::min(a, b), std::max(a, b)};
        return supporting_functional(mem, pts).has_value();
    }
    bool ray_extends(const RV& x, const RV& dir) const {
        if (fast) return fast->extends(x, dir);
        return hull_extends(pts, x, dir);
    }
};

struct Projected {
    RV point;
    std::vector<int> fiber;  // weight indices
};

}  // namespace

std::string NullCandidate::str() const {
    std::string s = c.str();
    if (!note.empty()) s += " [" + note + "]";
    return s;
}

std::vector<int> enumerate_1A(const WeightSystem& ws, const QVector& c) {
    std::vector<int> out;
    for (std::size_t k = 0; k < ws.weights.size(); ++k)
        if (is_orthogonal_bar(ws.weights[k].qvec(), c, ws.d)) out.push_back(static_cast<int>(k));
    return out;
}

std::vector<std::pair<int, QVector>> enumerate_1B(const WeightSystem& ws, const QVector& c) {
    std::vector<std::pair<int, QVector>> out;
    Geom g = Geom::of(ws);
    for (std::size_t k = 0; k < ws.weights.size(); ++k) {
        const RV x = ws.weights[k].qvec().entries();
        // doubled-point relation: Q(x) = B(x, c)
        if (bform(x, x, ws.d) != bform(x, c.entries(), ws.d)) continue;
        if (is_orthogonal_bar(ws.weights[k].qvec(), c, ws.d)) continue;  // orthogonality first
        if (!g.vertex(k)) continue;
        std::vector<int> line = collinear_weights(g.pts, c.entries(), x);
        if (line.size() != 1) continue;
        RV dir_out = lin(Rat(1), x, Rat(-1), c.entries());
        RV dir_in = lin(Rat(-1), x, Rat(1), c.entries());
        if (g.ray_extends(x, dir_out) || g.ray_extends(x, dir_in)) continue;
        QVector a(lin(Rat(2), x, Rat(-1), c.entries()));
        out.push_back({static_cast<int>(k), std::move(a)});
    }
    return out;
}

SHatSets s_hat(const WeightSystem& ws, const QVector& c) {
    SHatSets out;
    std::vector<int> counts(static_cast<std::size_t>(ws.r()), 0);
    for (int k : enumerate_1A(ws, c)) {
        const Weight& w = ws.weights[static_cast<std::size_t>(k)];
        if (w.type != WType::III) continue;
        for (int i = 0; i < ws.r(); ++i)
            if (w.entries[static_cast<std::size_t>(i)] == -2) ++counts[static_cast<std::size_t>(i)];
    }
    for (int i = 0; i < ws.r(); ++i) {
        if (counts[static_cast<std::size_t>(i)] == 1) out.s1.push_back(i);
        if (counts[static_cast<std::size_t>(i)] >= 2) {
            out.s_ge2.push_back(i);
            if (ws.d[i] != 4) out.consistent = false;
        }
    }
    return out;
}

int counting_bound(int one_a, int two, int adjacent_1b, bool has_1b) {
    return one_a + two + (has_1b ? adjacent_1b + 2 : 1);
}

// ---------------------------------------------------------------------------
// Orthogonal-configuration matching.
// ---------------------------------------------------------------------------

std::optional<Class1AMatch> class1a_match(const WeightSystem& ws, const QVector& c,
                                          const std::vector<int>& one_a) {
    (void)c;
    const int r = ws.r();
    std::vector<const Weight*> iii, ii;
    for (int k : one_a) {
        const Weight& w = ws.weights[static_cast<std::size_t>(k)];
        if (w.type == WType::I) return std::nullopt;  // routed through the fano handling
        (w.type == WType::III ? iii : ii).push_back(&w);
    }
    if (iii.empty() && ii.empty()) return Class1AMatch{"empty", 0};
    auto slot = [&](const Weight& w, int val) {
        for (int i = 0; i < r; ++i)
            if (w.entries[static_cast<std::size_t>(i)] == val) return i;
        return -1;
    };
    auto all_distinct = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };

    if (ii.empty() && !iii.empty()) {
        std::set<int> m2, p1;
        for (auto* w : iii) {
            m2.insert(slot(*w, -2));
            p1.insert(slot(*w, 1));
        }
        int m = static_cast<int>(iii.size()) + 1;
        if (m2.size() == 1) {
            std::vector<int> ones;
            for (auto* w : iii) ones.push_back(slot(*w, 1));
            if (!all_distinct(ones)) return std::nullopt;
            if (iii.size() >= 2 && ws.d[*m2.begin()] != 4) return std::nullopt;
            if (m == r) return std::nullopt;  // the full set is excluded
            return Class1AMatch{"1", m};
        }
        if (p1.size() == 1) {
            std::vector<int> twos;
            for (auto* w : iii) twos.push_back(slot(*w, -2));
            if (!all_distinct(twos)) return std::nullopt;
            if (iii.size() >= 2 && ws.d[*p1.begin()] != 1) return std::nullopt;
            if (m == r) return std::nullopt;
            return Class1AMatch{"2", m};
        }
        return std::nullopt;
    }

    if (iii.size() == 2) {
        int a0 = slot(*iii[0], 1), a1 = slot(*iii[1], 1);
        if (a0 != a1) return std::nullopt;
        int b = slot(*iii[0], -2), cidx = slot(*iii[1], -2);
        bool has_apex = false;
        std::vector<int> tails;
        for (auto* w : ii) {
            if (w->entries[static_cast<std::size_t>(a0)] == 1 &&
                w->entries[static_cast<std::size_t>(b)] == -1 &&
                w->entries[static_cast<std::size_t>(cidx)] == -1) {
                has_apex = true;
                continue;
            }
            if (w->entries[static_cast<std::size_t>(b)] != -1 ||
                w->entries[static_cast<std::size_t>(cidx)] != -1)
                return std::nullopt;
            int i = slot(*w, 1);
            if (i == a0 || i == b || i == cidx) return std::nullopt;
            tails.push_back(i);
        }
        if (!all_distinct(tails)) return std::nullopt;
        int m = 3 + static_cast<int>(tails.size());
        if (has_apex && tails.empty()) {
            if (ws.d[a0] == 1) return std::nullopt;
            return Class1AMatch{"4", 3};
        }
        if (ws.d[b] != 2 || ws.d[cidx] != 2) return std::nullopt;
        if (m == r) return std::nullopt;
        if (has_apex) {
            if (ws.d[a0] == 1) return std::nullopt;
            return Class1AMatch{"3ii", m};
        }
        if (ws.d[a0] != 1) return std::nullopt;
        return Class1AMatch{"3i", m};
    }

    if (iii.size() == 1) {
        int a = slot(*iii[0], -2), bslot = slot(*iii[0], 1);
        if (ii.empty()) return Class1AMatch{"1", 2};
        if (ii.size() == 1 && ii[0]->entries[static_cast<std::size_t>(a)] == -1 &&
            ii[0]->entries[static_cast<std::size_t>(bslot)] == 1) {
            bool dims_ok = (ws.d[a] == 4 && ws.d[bslot] == 2) || (ws.d[a] == 3 && ws.d[bslot] == 3);
            if (!dims_ok || r == 3) return std::nullopt;
            return Class1AMatch{"5i", 3};
        }
        if (ws.d[a] != 2) return std::nullopt;
        // all type II carry -1 in place a; they share either the +1 slot or the
        // second -1 slot, at some fresh index g
        std::vector<std::pair<int, int>> pm;  // (+1 slot, other -1 slot)
        for (auto* w : ii) {
            if (w->entries[static_cast<std::size_t>(a)] != -1) return std::nullopt;
            int p1 = slot(*w, 1), m1 = -1;
            for (int i = 0; i < r; ++i)
                if (i != a && w->entries[static_cast<std::size_t>(i)] == -1) m1 = i;
            if (p1 < 0 || m1 < 0) return std::nullopt;
            pm.push_back({p1, m1});
        }
        for (bool plus_shared : {true, false}) {
            int g = plus_shared ? pm[0].first : pm[0].second;
            if (g == bslot) continue;
            bool ok = true;
            std::vector<int> tails;
            for (auto& [p1, m1] : pm) {
                int shared = plus_shared ? p1 : m1;
                int tail = plus_shared ? m1 : p1;
                if (shared != g || tail == bslot || tail == g) ok = false;
                tails.push_back(tail);
            }
            if (!ok || !all_distinct(tails)) continue;
            int m = 3 + static_cast<int>(tails.size());
            if (m > r) continue;
            if (m >= 6 && ws.d[g] != 2) continue;  // sharpened for long chains
            return Class1AMatch{plus_shared ? "5ii" : "5iii", m};
        }
        return std::nullopt;
    }

    // no type III: configuration family (6)
    {
        if (ii.size() == 3) {
            std::set<int> plus, minus;
            for (auto* w : ii) {
                plus.insert(slot(*w, 1));
                for (int i = 0; i < r; ++i)
                    if (w->entries[static_cast<std::size_t>(i)] == -1) minus.insert(i);
            }
            if (plus.size() == 1 && minus.size() == 3 && !minus.count(*plus.begin())) {
                bool dims2 = ws.d[*plus.begin()] == 2;
                for (int i : minus) dims2 = dims2 && ws.d[i] == 2;
                if (dims2 && r != 4) return Class1AMatch{"6iii", 4};
            }
        }
        auto try_variant = [&](bool variant_i) -> std::optional<Class1AMatch> {
            // variant (i): common pair of -1 slots; variant (ii): common +1 and -1
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) {
                    if (a == b) continue;
                    bool ok = true;
                    std::vector<int> tails;
                    for (auto* w : ii) {
                        bool fits;
                        int tail = -1;
                        if (variant_i) {
                            fits = w->entries[static_cast<std::size_t>(a)] == -1 &&
                                   w->entries[static_cast<std::size_t>(b)] == -1;
                            tail = slot(*w, 1);
                        } else {
                            fits = w->entries[static_cast<std::size_t>(a)] == 1 &&
                                   w->entries[static_cast<std::size_t>(b)] == -1;
                            for (int i = 0; i < r; ++i)
                                if (i != b && w->entries[static_cast<std::size_t>(i)] == -1)
                                    tail = i;
                        }
                        if (!fits || tail < 0) ok = false;
                        tails.push_back(tail);
                    }
                    if (!ok || !all_distinct(tails)) continue;
                    int m = 2 + static_cast<int>(tails.size());
                    if (m > r) continue;
                    if (m >= 4 && (ws.d[a] != 2 || ws.d[b] != 2)) continue;
                    return Class1AMatch{variant_i ? "6i" : "6ii", m};
                }
            return std::nullopt;
        };
        if (auto m = try_variant(true)) return m;
        if (auto m = try_variant(false)) return m;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Candidate enumeration.
// ---------------------------------------------------------------------------

namespace {

void push_unique(std::vector<NullCandidate>& out, std::set<std::vector<Rat>>& seen, QVector c,
                 NullCandidate::Origin origin, std::string note) {
    if (!seen.insert(c.entries()).second) return;
    out.push_back(NullCandidate{std::move(c), origin, std::move(note)});
}

}  // namespace

std::vector<NullCandidate> face_derived_candidates(const WeightSystem& ws) {
    std::vector<NullCandidate> out;
    std::set<std::vector<Rat>> seen;
    Geom g = Geom::of(ws);
    const auto& pts = g.pts;
    int dim = affine_rank(pts);
    std::vector<std::vector<int>> planes;
    if (dim == 2) {
        std::vector<int> all(ws.weights.size());
        std::iota(all.begin(), all.end(), 0);
        planes.push_back(all);
    } else if (dim == 3 && g.fast) {
        // the 2-faces of a rank-three hull are its facets
        std::set<std::vector<int>> seen_planes;
        for (std::size_t a = 0; a < pts.size(); ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b)
                for (std::size_t c2 = b + 1; c2 < pts.size(); ++c2) {
                    std::vector<std::vector<Rat>> tri{pts[a], pts[b], pts[c2]};
                    if (affine_rank(tri) != 2) continue;
                    std::vector<int> members;
                    for (std::size_t k = 0; k < pts.size(); ++k) {
                        auto probe = tri;
                        probe.push_back(pts[k]);
                        if (affine_rank(probe) == 2) members.push_back(static_cast<int>(k));
                    }
                    if (!seen_planes.insert(members).second) continue;
                    // face test: midpoint of the plane must not extend outward
                    // in any direction off the plane; use two extreme members
                    bool all_edgewise = g.fast->is_edge(g.ipts[a], g.ipts[b]) ||
                                        g.fast->is_edge(g.ipts[a], g.ipts[c2]) ||
                                        g.fast->is_edge(g.ipts[b], g.ipts[c2]);
                    (void)all_edgewise;
                    // cheap sufficient test: the plane is a face iff some
                    // supporting functional exists; with facets available the
                    // plane is a face iff it is contained in a facet
                    // (rank-three hulls only)
                    AffineConfig cfg2(ws.points(), ws.d);
                    if (supporting_functional(members, pts)) planes.push_back(members);
                }
    } else if (dim > 2) {
        AffineConfig cfg(ws.points(), ws.d);
        for (const Face& f : hull_faces(cfg, 2)) planes.push_back(f.members);
    }
    for (const auto& members : planes) {
        std::vector<std::vector<int>> ipts;
        for (int k : members) ipts.push_back(ws.weights[static_cast<std::size_t>(k)].entries);
        auto m = match_shape(ipts);
        if (!m) continue;
        const FaceShape& s = shape(m->tag);
        auto map_to_ambient = [&](const std::vector<Rat>& pattern) {
            std::vector<Rat> amb(static_cast<std::size_t>(ws.r()), Rat(0));
            for (int j = 0; j < s.ncols; ++j)
                amb[static_cast<std::size_t>(m->perm[static_cast<std::size_t>(j)])] =
                    pattern[static_cast<std::size_t>(j)];
            return amb;
        };
        if (s.is_triangle()) {
            RV camb = map_to_ambient(s.c);
            QVector cq(camb);
            if (is_null(cq, ws.d) && !g.contains(camb))
                push_unique(out, seen, std::move(cq), NullCandidate::Origin::FaceDerived,
                            "face " + s.tag);
            continue;
        }
        if (s.never_face) continue;
        std::vector<long> support_dims;
        for (int j = 0; j < s.ncols; ++j)
            support_dims.push_back(ws.d[m->perm[static_cast<std::size_t>(j)]]);
        for (auto& [cpat, killed] : shape_case_solutions(s.tag, support_dims)) {
            (void)killed;
            bool rational = true;
            for (const Quad& q : cpat) rational = rational && q.is_rational();
            if (!rational) continue;
            std::vector<Rat> pat;
            for (const Quad& q : cpat) pat.push_back(q.as_rational());
            RV camb = map_to_ambient(pat);
            QVector cq(camb);
            if (is_null(cq, ws.d) && !g.contains(camb))
                push_unique(out, seen, std::move(cq), NullCandidate::Origin::FaceDerived,
                            "face " + s.tag);
        }
    }
    return out;
}

CandidateSet enumerate_null_candidates(const WeightSystem& ws, bool with_face_derived) {
    CandidateSet cs;
    std::set<std::vector<Rat>> seen;
    Geom g = Geom::of(ws);
    const auto& pts = g.pts;
    const int r = ws.r();

    for (int i = 0; i < r; ++i) {
        if (ws.d[i] != 1) continue;
        Weight ti = type_i(i, r);
        if (ws.contains(ti.entries)) continue;
        QVector c = ti.qvec();
        if (!g.contains(c.entries()))
            push_unique(cs.rational, seen, std::move(c), NullCandidate::Origin::TypeI, "type I");
    }

    for (std::size_t a = 0; a < ws.weights.size(); ++a)
        for (std::size_t b = 0; b < ws.weights.size(); ++b) {
            if (a == b) continue;
            const RV v = ws.weights[a].qvec().entries();
            const RV w = ws.weights[b].qvec().entries();
            {
                QVector c(lin(Rat(2), v, Rat(-1), w));
                if (is_null(c, ws.d) && !g.contains(c.entries()))
                    push_unique(cs.rational, seen, std::move(c), NullCandidate::Origin::TwoVMinusW,
                                "2" + ws.weights[a].str() + "-" + ws.weights[b].str());
            }
            {
                QVector c(lin(Rat(4, 3), v, Rat(-1, 3), w));
                Rat cond = 2 * j_shifted(ws.weights[a].qvec(), ws.weights[b].qvec(), ws.d) +
                           j_shifted(ws.weights[b].qvec(), ws.weights[b].qvec(), ws.d);
                if (cond.is_zero() && is_null(c, ws.d) && !g.contains(c.entries()))
                    push_unique(cs.rational, seen, std::move(c), NullCandidate::Origin::FourThirds,
                                "(4" + ws.weights[a].str() + "-" + ws.weights[b].str() + ")/3");
            }
            if (a > b) continue;  // the quadratic is symmetric up to reparametrization
            RV dir = lin(Rat(1), v, Rat(-1), w);
            Rat A = bform(dir, dir, ws.d);
            Rat B = 2 * bform(w, dir, ws.d);
            Rat C = bform(w, w, ws.d) - Rat(1);
            if (A.is_zero()) continue;
            auto roots = Quad::quadratic_roots(A, B, C);
            if (!roots) continue;
            for (bool swap_ends : {false, true}) {
                // parameters measured from w toward v, then from v toward w
                for (const Quad& lam0 : {roots->first, roots->second}) {
                    Quad lam = swap_ends ? Quad(Rat(1)) - lam0 : lam0;
                    if (lam <= Quad(Rat(1)) || lam > Quad(Rat(2))) continue;
                    const RV& near = swap_ends ? w : v;
                    const RV& far = swap_ends ? v : w;
                    if (lam.is_rational()) {
                        const Rat& l = lam.as_rational();
                        QVector c(lin(l, near, Rat(1) - l, far));
                        if (!g.contains(c.entries()))
                            push_unique(cs.rational, seen, std::move(c),
                                        NullCandidate::Origin::LambdaFamily,
                                        "parameter " + to_string(l) + " on " +
                                            ws.weights[a].str() + ws.weights[b].str());
                    } else {
                        SurdCandidate sc;
                        sc.v = swap_ends ? ws.weights[b] : ws.weights[a];
                        sc.w = swap_ends ? ws.weights[a] : ws.weights[b];
                        sc.lambda = lam;
                        sc.c.resize(v.size());
                        for (std::size_t i = 0; i < v.size(); ++i)
                            sc.c[i] = Quad(far[i]) + lam * Quad(near[i] - far[i]);
                        cs.surd.push_back(std::move(sc));
                    }
                    if (roots->first == roots->second) break;
                }
            }
        }

    if (with_face_derived)
        for (NullCandidate& cand : face_derived_candidates(ws))
            push_unique(cs.rational, seen, std::move(cand.c), NullCandidate::Origin::FaceDerived,
                        cand.note);

    // solved configurations: orthogonality rows plus an optional doubled vertex
    const int want = r - 2;
    if (want >= 1 && static_cast<int>(ws.weights.size()) >= want) {
        std::vector<int> comb;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(comb.size()) == want) {
                auto solve_with = [&](int u_idx) {
                    Mat<Rat> m;
                    Vec<Rat> b;
                    m.push_back(RV(static_cast<std::size_t>(r), Rat(1)));
                    b.push_back(Rat(-1));
                    for (int k : comb) {
                        RV row(static_cast<std::size_t>(r));
                        const Weight& wt = ws.weights[static_cast<std::size_t>(k)];
                        for (int i = 0; i < r; ++i)
                            row[static_cast<std::size_t>(i)] =
                                Rat(wt.entries[static_cast<std::size_t>(i)]) / Rat(ws.d[i]);
                        m.push_back(std::move(row));
                        b.push_back(Rat(1));
                    }
                    if (u_idx >= 0) {
                        const Weight& wt = ws.weights[static_cast<std::size_t>(u_idx)];
                        RV row(static_cast<std::size_t>(r));
                        Rat rhs(0);
                        for (int i = 0; i < r; ++i) {
                            Rat e(wt.entries[static_cast<std::size_t>(i)]);
                            row[static_cast<std::size_t>(i)] = e / Rat(ws.d[i]);
                            rhs += e * e / Rat(ws.d[i]);
                        }
                        m.push_back(std::move(row));
                        b.push_back(rhs);
                    }
                    auto aff = solve_affine(m, b);
                    if (!aff) return;
                    auto& [part, basis] = *aff;
                    if (basis.size() > 1) return;
                    std::vector<RV> sols;
                    if (basis.empty()) {
                        sols.push_back(part);
                    } else {
                        Rat A = bform(basis[0], basis[0], ws.d);
                        Rat B = 2 * bform(part, basis[0], ws.d);
                        Rat C = bform(part, part, ws.d) - Rat(1);
                        if (A.is_zero()) {
                            if (!B.is_zero()) sols.push_back(lin(Rat(1), part, -C / B, basis[0]));
                        } else if (auto roots = Quad::quadratic_roots(A, B, C)) {
                            for (const Quad& t : {roots->first, roots->second}) {
                                if (t.is_rational())
                                    sols.push_back(lin(Rat(1), part, t.as_rational(), basis[0]));
                                if (roots->first == roots->second) break;
                            }
                        }
                    }
                    for (RV& sol : sols) {
                        QVector c(sol);
                        if (!is_null(c, ws.d)) continue;
                        if (g.contains(sol)) continue;
                        push_unique(cs.rational, seen, std::move(c),
                                    NullCandidate::Origin::SolvedOneB, "orthogonality system");
                    }
                };
                for (std::size_t u = 0; u < ws.weights.size(); ++u)
                    if (std::find(comb.begin(), comb.end(), static_cast<int>(u)) == comb.end())
                        solve_with(static_cast<int>(u));
                solve_with(-1);
                return;
            }
            for (int k = start; k < static_cast<int>(ws.weights.size()); ++k) {
                comb.push_back(k);
                rec(k + 1);
                comb.pop_back();
            }
        };
        rec(0);
    }
    return cs;
}

// ---------------------------------------------------------------------------
// Projection and the filter chain.
// ---------------------------------------------------------------------------

namespace {

struct DeltaData {
    std::vector<Projected> verts;
    std::vector<std::pair<int, int>> edges;  // indices into verts
};

std::optional<DeltaData> project_delta(const std::vector<RV>& pts, const RV& c) {
    std::vector<RV> all = pts;
    all.push_back(c);
    auto sep = supporting_functional({static_cast<int>(pts.size())}, all);
    if (!sep) return std::nullopt;
    const auto& [f, alpha] = *sep;
    auto dot = [&](const RV& x) {
        Rat acc(0);
        for (std::size_t i = 0; i < x.size(); ++i) acc += f[i] * x[i];
        return acc;
    };
    Rat fc = dot(c);
    Rat beta = alpha - Rat(1, 2);
    std::map<RV, std::vector<int>> proj;
    for (std::size_t k = 0; k < pts.size(); ++k) {
        Rat t = (fc - beta) / (fc - dot(pts[k]));
        proj[lin(Rat(1) - t, c, t, pts[k])].push_back(static_cast<int>(k));
    }
    std::vector<RV> dpts;
    std::vector<std::vector<int>> fibers;
    for (auto& [p, fib] : proj) {
        dpts.push_back(p);
        fibers.push_back(fib);
    }
    DeltaData out;
    const int drank = affine_rank(dpts);
    if (drank == 0) {
        out.verts.push_back({dpts[0], fibers[0]});
        return out;
    }
    if (drank == 1) {
        // extremes along the line through the first two distinct points
        std::size_t piv = 0;
        while (piv < dpts[0].size() && dpts[0][piv] == dpts[1][piv]) ++piv;
        std::size_t lo = 0, hi = 0;
        for (std::size_t k = 1; k < dpts.size(); ++k) {
            if (dpts[k][piv] < dpts[lo][piv]) lo = k;
            if (dpts[k][piv] > dpts[hi][piv]) hi = k;
        }
        out.verts.push_back({dpts[lo], fibers[lo]});
        out.verts.push_back({dpts[hi], fibers[hi]});
        out.edges.push_back({0, 1});
        return out;
    }
    if (drank == 2) {
        // exact planar hull: coordinates through a plane frame, then a
        // monotone chain with strict turns
        const RV& p0 = dpts[0];
        RV e1, e2;
        for (std::size_t k = 1; k < dpts.size() && e2.empty(); ++k) {
            RV d = lin(Rat(1), dpts[k], Rat(-1), p0);
            if (e1.empty()) {
                bool nz = false;
                for (const Rat& x : d) nz = nz || !x.is_zero();
                if (nz) e1 = d;
                continue;
            }
            std::vector<RV> probe{RV(p0.size(), Rat(0)), e1, d};
            if (affine_rank(probe) == 2) e2 = d;
        }
        // coordinates via two independent component rows
        std::size_t i1 = 0, i2 = 0;
        Rat det;
        bool found = false;
        for (std::size_t i = 0; i < p0.size() && !found; ++i)
            for (std::size_t j = i + 1; j < p0.size() && !found; ++j) {
                det = e1[i] * e2[j] - e1[j] * e2[i];
                if (!det.is_zero()) {
                    i1 = i;
                    i2 = j;
                    found = true;
                }
            }
        std::vector<std::pair<Rat, Rat>> uv(dpts.size());
        for (std::size_t k = 0; k < dpts.size(); ++k) {
            Rat b1 = dpts[k][i1] - p0[i1], b2 = dpts[k][i2] - p0[i2];
            uv[k] = {(b1 * e2[i2] - e2[i1] * b2) / det, (e1[i1] * b2 - b1 * e1[i2]) / det};
        }
        std::vector<int> order(dpts.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return uv[static_cast<std::size_t>(a)] < uv[static_cast<std::size_t>(b)]; });
        auto cross = [&](int o, int a, int b) {
            Rat x1 = uv[static_cast<std::size_t>(a)].first - uv[static_cast<std::size_t>(o)].first;
            Rat y1 = uv[static_cast<std::size_t>(a)].second - uv[static_cast<std::size_t>(o)].second;
            Rat x2 = uv[static_cast<std::size_t>(b)].first - uv[static_cast<std::size_t>(o)].first;
            Rat y2 = uv[static_cast<std::size_t>(b)].second - uv[static_cast<std::size_t>(o)].second;
            return Rat(x1 * y2 - y1 * x2).sign();
        };
        std::vector<int> hull;
        for (int pass = 0; pass < 2; ++pass) {
            std::size_t start = hull.size();
            auto scan = [&](int k) {
                while (hull.size() >= start + 2 &&
                       cross(hull[hull.size() - 2], hull[hull.size() - 1], k) <= 0)
                    hull.pop_back();
                hull.push_back(k);
            };
            if (pass == 0)
                for (int k : order) scan(k);
            else
                for (auto it = order.rbegin(); it != order.rend(); ++it) scan(*it);
            hull.pop_back();  // endpoint repeats as the next pass's start
        }
        for (int k : hull) out.verts.push_back({dpts[static_cast<std::size_t>(k)], fibers[static_cast<std::size_t>(k)]});
        const int m = static_cast<int>(hull.size());
        for (int k = 0; k < m; ++k) out.edges.push_back({k, (k + 1) % m});
        return out;
    }
    // general rank: simplex-based extraction
    std::vector<int> vert_pos;
    for (std::size_t i = 0; i < dpts.size(); ++i)
        if (!conv_contains(dpts[i], dpts, static_cast<int>(i))) {
            vert_pos.push_back(static_cast<int>(i));
            out.verts.push_back({dpts[i], fibers[i]});
        }
    for (std::size_t a = 0; a < vert_pos.size(); ++a)
        for (std::size_t b = a + 1; b < vert_pos.size(); ++b) {
            const RV& pa = dpts[static_cast<std::size_t>(vert_pos[a])];
            const RV& pb = dpts[static_cast<std::size_t>(vert_pos[b])];
            std::size_t piv = 0;
            while (piv < pa.size() && pa[piv] == pb[piv]) ++piv;
            std::vector<int> members;
            for (std::size_t k = 0; k < dpts.size(); ++k) {
                Rat t = (dpts[k][piv] - pa[piv]) / (pb[piv] - pa[piv]);
                bool on = true;
                for (std::size_t j = 0; j < pa.size() && on; ++j)
                    if (dpts[k][j] != pa[j] + t * (pb[j] - pa[j])) on = false;
                if (on) members.push_back(static_cast<int>(k));
            }
            if (supporting_functional(members, dpts))
                out.edges.push_back({static_cast<int>(a), static_cast<int>(b)});
        }
    return out;
}

Elimination elim(std::string anchor, std::string detail) {
    return Elimination{std::move(anchor), std::move(detail)};
}

}  // namespace

ClassifyOutcome classify_candidate(const WeightSystem& ws, const QVector& c, int depth,
                                   const std::vector<QVector>* all_nulls) {
    ClassifyOutcome out;
    const int r = ws.r();
    Geom g = Geom::of(ws);
    const auto& pts = g.pts;
    auto fail = [&](const std::string& anchor, const std::string& detail) {
        out.eliminated = true;
        out.why = elim(anchor, detail);
        return out;
    };

    if (g.contains(c.entries())) return fail("inside-hull", c.str());

    {
        int slot = -1, nonzero = 0;
        for (int i = 0; i < r; ++i) {
            if (!c[i].is_zero()) ++nonzero;
            if (c[i] == Rat(-1)) slot = i;
        }
        if (nonzero == 1 && slot >= 0) {
            auto pivot = fano_pivot(ws);
            if (pivot && *pivot == slot && ws.d[slot] == 1)
                out.fano = true;
            else
                return fail("fano-structure",
                            "type I candidate but the weight set is not the circle-bundle family");
        }
    }

    for (const Weight& w : ws.weights)
        if (j_shifted(c, w.qvec(), ws.d).sign() < 0)
            return fail("halfspace-sign", "J(c, " + w.str() + ") < 0");

    out.one_a = enumerate_1A(ws, c);

    bool integral = true;
    for (int i = 0; i < r; ++i) integral = integral && denominator(c[i]) == 1;
    if (integral && out.one_a.size() > 1)
        return fail("perp-multiplicity", std::to_string(out.one_a.size()) + " orthogonal weights");

    SHatSets sh = s_hat(ws, c);
    if (!sh.consistent) return fail("shat-dimension", "repeated -2 slot without dimension 4");

    for (std::size_t ai = 0; ai < out.one_a.size(); ++ai)
        for (std::size_t bi = ai + 1; bi < out.one_a.size(); ++bi) {
            int ka = out.one_a[ai], kb = out.one_a[bi];
            const Weight& u = ws.weights[static_cast<std::size_t>(ka)];
            const Weight& v = ws.weights[static_cast<std::size_t>(kb)];
            std::vector<int> line = collinear_weights(pts, pts[static_cast<std::size_t>(ka)],
                                                      pts[static_cast<std::size_t>(kb)]);
            if (line.size() == 2) {
                if (g.edge(ka, kb) && !j_shifted(u.qvec(), v.qvec(), ws.d).is_zero())
                    return fail("perp-edge", u.str() + " " + v.str());
            }
            Rat X = bform(u.qvec().entries(), u.qvec().entries(), ws.d);
            Rat Y = bform(v.qvec().entries(), v.qvec().entries(), ws.d);
            Rat Z = bform(u.qvec().entries(), v.qvec().entries(), ws.d);
            Rat lhs = X + Y - X * Y;
            Rat rhs = Z * (2 - Z);
            if (lhs > rhs) return fail("perp-estimate", u.str() + " " + v.str());
            if (lhs == rhs) {
                RV dir = lin(Rat(1), u.qvec().entries(), Rat(-1), v.qvec().entries());
                std::size_t piv = 0;
                while (piv < dir.size() && dir[piv].is_zero()) ++piv;
                Rat lam = (c[static_cast<int>(piv)] - v.qvec().entries()[piv]) / dir[piv];
                bool on_line = true;
                for (std::size_t i = 0; i < dir.size(); ++i)
                    if (c[static_cast<int>(i)] != v.qvec().entries()[i] + lam * dir[i])
                        on_line = false;
                if (!on_line || (lam >= Rat(0) && lam <= Rat(1)))
                    return fail("perp-estimate", "degenerate pair " + u.str() + " " + v.str());
            }
            if (ws.k_connected && u.type == WType::II && v.type == WType::II)
                if (Z <= Rat(1, 2) || Z >= Rat(3, 2))
                    return fail("perp-pair-range", u.str() + " " + v.str());
        }

    if (ws.k_connected && r >= 3)
        if (!class1a_match(ws, c, out.one_a))
            return fail("orthogonal-config", "perp set fits no admissible configuration");

    out.one_b = enumerate_1B(ws, c);

    auto delta = project_delta(pts, c.entries());
    if (!delta) return fail("projection-dichotomy", "no separating hyperplane");
    std::vector<int> one_b_verts;
    for (std::size_t vi = 0; vi < delta->verts.size(); ++vi) {
        const auto& pv = delta->verts[vi];
        VertexClass vc;
        vc.fiber = pv.fiber;
        const int k0 = pv.fiber.front();
        Rat jc = j_shifted(c, ws.weights[static_cast<std::size_t>(k0)].qvec(), ws.d);
        if (jc.is_zero()) {
            vc.tag = VertexClass::Tag::OneA;
        } else if (pv.fiber.size() == 1) {
            bool found = false;
            for (auto& [k, a] : out.one_b)
                if (k == k0) {
                    vc.tag = VertexClass::Tag::OneB;
                    vc.partner = a;
                    found = true;
                }
            if (!found)
                return fail("projection-dichotomy",
                            "vertex over " + ws.weights[static_cast<std::size_t>(k0)].str() +
                                " fits no type");
            one_b_verts.push_back(static_cast<int>(vi));
        } else {
            std::vector<Rat> params;
            std::vector<int> line =
                collinear_weights(pts, c.entries(), pts[static_cast<std::size_t>(k0)], &params);
            int near = line.front(), far = line.front();
            Rat tn = params.front(), tf = params.front();
            for (std::size_t q = 0; q < line.size(); ++q) {
                if (params[q] < tn) {
                    tn = params[q];
                    near = line[q];
                }
                if (params[q] > tf) {
                    tf = params[q];
                    far = line[q];
                }
            }
            vc.tag = VertexClass::Tag::Two;
            const RV& v = pts[static_cast<std::size_t>(near)];
            const RV& w = pts[static_cast<std::size_t>(far)];
            std::size_t piv = 0;
            while (piv < v.size() && v[piv] == w[piv]) ++piv;
            Rat lam = (c[static_cast<int>(piv)] - w[piv]) / (v[piv] - w[piv]);
            vc.lambda = lam;
            if (lam <= Rat(1) || lam > Rat(2))
                return fail("lambda-range", "parameter " + to_string(lam));
            if (line.size() == 2) {
                if (lam != Rat(2) && lam != Rat(4, 3))
                    return fail("type2-discrete", "parameter " + to_string(lam));
                const Weight& vw = ws.weights[static_cast<std::size_t>(near)];
                const Weight& ww = ws.weights[static_cast<std::size_t>(far)];
                if (lam == Rat(2)) {
                    bool ok = ww.type == WType::I;
                    if (ww.type == WType::III)
                        for (int i = 0; i < r; ++i)
                            if (vw.entries[static_cast<std::size_t>(i)] == -1 &&
                                ww.entries[static_cast<std::size_t>(i)] == -2)
                                ok = true;
                    if (!ok) return fail("type2-far-vertex", ww.str());
                } else {
                    Rat cond = 2 * j_shifted(vw.qvec(), ww.qvec(), ws.d) +
                               j_shifted(ww.qvec(), ww.qvec(), ws.d);
                    if (!cond.is_zero())
                        return fail("four-thirds-relation", vw.str() + " " + ww.str());
                }
            }
            ++out.two_count;
        }
        out.vertices.push_back(std::move(vc));
    }

    if (out.two_count > 1 && !out.fano)
        return fail("multi-type2", std::to_string(out.two_count) + " edge-collinear vertices");

    auto adjacent_1b_count = [&](int vb) {
        int k = 0;
        for (auto& [ea, eb] : delta->edges) {
            int other = ea == vb ? eb : eb == vb ? ea : -1;
            if (other >= 0 &&
                std::find(one_b_verts.begin(), one_b_verts.end(), other) != one_b_verts.end())
                ++k;
        }
        return k;
    };
    for (int vb : one_b_verts) {
        if (adjacent_1b_count(vb) == 0) continue;
        if (r >= 4) return fail("adjacent-1b", "adjacent doubled-point vertices");
        int type_i_count = 0;
        for (const Weight& w : ws.weights)
            if (w.type == WType::I) ++type_i_count;
        if (type_i_count < 3) return fail("adjacent-1b", "missing interior type I vectors");
    }

    int n1a = 0, n1b = 0;
    for (const auto& vc : out.vertices) {
        if (vc.tag == VertexClass::Tag::OneA) ++n1a;
        if (vc.tag == VertexClass::Tag::OneB) ++n1b;
    }
    if (n1b > 0) {
        for (int vb : one_b_verts)
            if (r > counting_bound(n1a, out.two_count, adjacent_1b_count(vb), true))
                return fail("vertex-count", "doubled-point vertex with too small a neighborhood");
    } else if (r > counting_bound(n1a, out.two_count, 0, false)) {
        return fail("vertex-count", "no doubled-point vertices");
    }
    if (!out.fano) {
        if (n1b == 0 && out.two_count == 0 && n1a < r - 2)
            return fail("min-1a-count", "fewer than r-2 orthogonal vertices");
        if ((out.two_count > 0 || r >= 4) && n1a < r - 3)
            return fail("min-1a-count", "fewer than r-3 orthogonal vertices");
    }

    if (depth == 0 && r >= 4 && ws.k_connected && out.two_count == 0 && n1b == 1) {
        const QVector& a = out.one_b.front().second;
        // forced support vertices on interior-free edges must pair orthogonally;
        // alternatives through any enumerated null vector discharge the forcing
        std::vector<QVector> nulls{c, a};
        if (all_nulls)
            for (const QVector& q : *all_nulls)
                if (std::find(nulls.begin(), nulls.end(), q) == nulls.end()) nulls.push_back(q);
        std::vector<int> forced;
        for (std::size_t k = 0; k < pts.size(); ++k) {
            if (!g.vertex(k)) continue;
            bool alternative = false;
            for (const QVector& q : nulls) {
                RV alt = lin(Rat(2), pts[k], Rat(-1), q.entries());
                if (alt == q.entries()) continue;  // the trivial doubling
                if (g.contains(alt)) {
                    alternative = true;
                    break;
                }
                for (const QVector& q2 : nulls)
                    if (alt == q2.entries() && !(q == c && q2 == c)) alternative = true;
                if (alternative) break;
            }
            if (!alternative) forced.push_back(static_cast<int>(k));
        }
        for (std::size_t ai = 0; ai < forced.size(); ++ai)
            for (std::size_t bi = ai + 1; bi < forced.size(); ++bi) {
                int ka = forced[ai], kb = forced[bi];
                std::vector<int> line = collinear_weights(pts, pts[static_cast<std::size_t>(ka)],
                                                          pts[static_cast<std::size_t>(kb)]);
                if (line.size() != 2) continue;
                if (!g.edge(ka, kb)) continue;
                if (!j_shifted(ws.weights[static_cast<std::size_t>(ka)].qvec(),
                               ws.weights[static_cast<std::size_t>(kb)].qvec(), ws.d)
                         .is_zero())
                    return fail("edge-orthogonality",
                                ws.weights[static_cast<std::size_t>(ka)].str() + " " +
                                    ws.weights[static_cast<std::size_t>(kb)].str());
            }
        ClassifyOutcome partner = classify_candidate(ws, a, 1);
        if (partner.eliminated)
            return fail("partner-eliminated", partner.why.anchor + ": " + partner.why.detail);
    }

    return out;
}

ClassifyOutcome classify_surd_candidate(const WeightSystem& ws, const SurdCandidate& cand) {
    ClassifyOutcome out;
    const int r = ws.r();
    auto fail = [&](const std::string& anchor, const std::string& detail) {
        out.eliminated = true;
        out.why = elim(anchor, detail);
        return out;
    };
    {
        // interior-free segments only carry the two discrete parameters
        AffineConfig cfg(ws.points(), ws.d);
        auto pts = cfg.raw();
        std::vector<int> line =
            collinear_weights(pts, cand.v.qvec().entries(), cand.w.qvec().entries());
        if (line.size() == 2)
            return fail("type2-discrete", "irrational parameter on an interior-free edge");
    }
    for (const Weight& w : ws.weights) {
        Quad j = Quad(Rat(1)) - bform_q(cand.c, w.qvec().entries(), ws.d);
        if (j.sign() < 0) return fail("halfspace-sign", "J(c, " + w.str() + ") < 0");
    }
    int ub_1a = 0, ub_1b = 0;
    for (const Weight& w : ws.weights) {
        Quad j = Quad(Rat(1)) - bform_q(cand.c, w.qvec().entries(), ws.d);
        if (j.is_zero()) {
            ++ub_1a;
            continue;
        }
        Rat qx = bform(w.qvec().entries(), w.qvec().entries(), ws.d);
        Quad bx = bform_q(cand.c, w.qvec().entries(), ws.d);
        if (bx == Quad(qx)) ++ub_1b;
    }
    bool has_1b = ub_1b > 0;
    int k_ub = has_1b ? std::max(0, ub_1b - 1) : 0;
    if (r > counting_bound(ub_1a, 1, k_ub, has_1b))
        return fail("vertex-count", "insufficient vertex budget");
    if (ub_1a < r - 3) return fail("min-1a-count", "fewer than r-3 orthogonal vertices");
    return out;
}

}  // namespace spc
