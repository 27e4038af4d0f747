#include "spclass/solver.hpp"

#include "spclass/jform.hpp"
#include "spclass/polytope.hpp"
#include "spclass/projection.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace spc {

namespace {

using RV = std::vector<Rat>;

std::vector<Rat> barred(const QVector& q, const DimVector& d) {
    std::vector<Rat> out;
    for (int i = 0; i < d.r(); ++i) out.push_back((Rat(d[i]) + q[i]) / 2);
    return out;
}

Rat bform(const RV& x, const RV& y, const DimVector& d) {
    Rat acc(0);
    for (int i = 0; i < d.r(); ++i)
        acc += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)] / Rat(d[i]);
    return acc;
}

}  // namespace

bool SupportSet::contains(const QVector& q) const {
    return std::find(points.begin(), points.end(), q) != points.end();
}

std::vector<Violation> check_support(const SupportSet& C, const WeightSystem& ws) {
    std::vector<Violation> out;
    const DimVector& d = ws.d;
    for (const QVector& p : C.points) {
        if (p.size() != d.r()) {
            out.push_back({"support-length", "support point of wrong length"});
            return out;
        }
        if (p.level() != Rat(-1))
            out.push_back({"support-level", "support point off the carrier plane: " + p.str()});
    }
    // the scaled weight hull must sit inside the support hull
    std::vector<RV> cpts;
    for (const QVector& p : C.points) cpts.push_back(p.entries());
    for (const Weight& w : ws.weights)
        if (!conv_contains(w.qvec().entries(), cpts))
            out.push_back({"support-covers", "weight " + w.str() + " outside the support hull"});
    // support points outside the weight hull must be null, pairwise separated
    std::vector<RV> wpts;
    for (const Weight& w : ws.weights) wpts.push_back(w.qvec().entries());
    std::vector<const QVector*> outside;
    for (const QVector& p : C.points)
        if (!conv_contains(p.entries(), wpts)) {
            outside.push_back(&p);
            if (!is_null(p, d))
                out.push_back({"support-null", "outside point " + p.str() + " is not null"});
        }
    // chords between distinct support points must meet the weight hull
    for (std::size_t i = 0; i < C.points.size(); ++i)
        for (std::size_t j = i + 1; j < C.points.size(); ++j) {
            // walk the segment: feasibility of a convex combination inside the hull
            const RV& a = C.points[i].entries();
            const RV& b = C.points[j].entries();
            const std::size_t dim = a.size();
            Mat<Rat> m(dim + 2, Vec<Rat>(wpts.size() + 1, Rat(0)));
            Vec<Rat> rhs(dim + 2);
            for (std::size_t row = 0; row < dim; ++row) {
                for (std::size_t k = 0; k < wpts.size(); ++k) m[row][k] = wpts[k][row];
                m[row][wpts.size()] = a[row] - b[row];  // minus t (a - b)
                rhs[row] = a[row];
            }
            for (std::size_t k = 0; k < wpts.size(); ++k) m[dim][k] = Rat(1);
            rhs[dim] = Rat(1);
            m[dim + 1][wpts.size()] = Rat(1);  // t <= 1 via slack-free bound below
            rhs[dim + 1] = Rat(1);
            // use t in [0, 1] by adding a slack variable for the last row
            for (auto& row : m) row.push_back(Rat(0));
            m[dim + 1][wpts.size() + 1] = Rat(1);
            Vec<Rat> obj(wpts.size() + 2, Rat(0));
            auto res = lp_maximize(std::move(m), std::move(rhs), std::move(obj));
            if (res.status != LpResult<Rat>::OPTIMAL)
                out.push_back({"support-chord", "chord " + C.points[i].str() + " " +
                                                    C.points[j].str() + " misses the weight hull"});
        }
    return out;
}

EqnSystem build_eqnF(const SupportSet& C, const WeightSystem& ws) {
    EqnSystem sys;
    sys.support = C;
    sys.d = ws.d;
    const int n = static_cast<int>(C.points.size());
    std::map<std::vector<Rat>, Equation> by_xi;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            BarPoint bi(C.points[static_cast<std::size_t>(i)], ws.d);
            BarPoint bj(C.points[static_cast<std::size_t>(j)], ws.d);
            Rat coeff = j_bar(bi, bj);
            std::vector<Rat> xi;
            {
                auto a = barred(C.points[static_cast<std::size_t>(i)], ws.d);
                auto b = barred(C.points[static_cast<std::size_t>(j)], ws.d);
                for (std::size_t t = 0; t < a.size(); ++t) xi.push_back(a[t] + b[t]);
            }
            Equation& eq = by_xi.try_emplace(xi).first->second;
            eq.xi = xi;
            if (!coeff.is_zero()) eq.terms.push_back({i, j, i == j ? coeff : 2 * coeff});
        }
    // weights contribute their equation even when no pair reaches them
    for (const Weight& w : ws.weights) {
        std::vector<Rat> xi;
        for (int t = 0; t < ws.r(); ++t)
            xi.push_back(Rat(ws.d[t]) + Rat(w.entries[static_cast<std::size_t>(t)]));
        by_xi.try_emplace(xi).first->second.xi = xi;
    }
    for (auto& [xi, eq] : by_xi) {
        // xi = d + w for a weight w?
        std::vector<int> wvec;
        bool integral = true;
        for (int t = 0; t < ws.r(); ++t) {
            Rat diff = xi[static_cast<std::size_t>(t)] - Rat(ws.d[t]);
            if (denominator(diff) != 1) integral = false;
            if (integral) wvec.push_back(static_cast<int>(numerator(diff).convert_to<long>()));
        }
        if (integral && ws.contains(wvec)) {
            eq.weight = wvec;
            if (auto a = ws.a_of(wvec)) eq.rhs = *a;
            if (eq.terms.empty()) {
                sys.infeasible = true;
                Weight tmp{wvec, WType::I};
                sys.infeasible_detail = "no pair reaches the weight " + tmp.str();
            }
        } else {
            eq.rhs = Rat(0);
        }
        sys.equations.push_back(std::move(eq));
    }
    return sys;
}

SignAnalysis sign_constraints(const EqnSystem& sys, const WeightSystem& ws) {
    SignAnalysis out;
    const int n = static_cast<int>(sys.support.points.size());
    out.component.resize(static_cast<std::size_t>(n));
    out.parity.assign(static_cast<std::size_t>(n), 0);
    std::vector<int> rank(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) out.component[static_cast<std::size_t>(i)] = i;
    std::function<std::pair<int, int>(int)> find = [&](int x) -> std::pair<int, int> {
        if (out.component[static_cast<std::size_t>(x)] == x) return {x, 0};
        auto [root, par] = find(out.component[static_cast<std::size_t>(x)]);
        out.component[static_cast<std::size_t>(x)] = root;
        out.parity[static_cast<std::size_t>(x)] =
            (out.parity[static_cast<std::size_t>(x)] + par) % 2;
        return {root, out.parity[static_cast<std::size_t>(x)]};
    };
    auto unite = [&](int a, int b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa + pb) % 2 != rel) {
                out.contradiction = true;
                out.detail = "incompatible sign relation";
            }
            return;
        }
        out.component[static_cast<std::size_t>(rb)] = ra;
        out.parity[static_cast<std::size_t>(rb)] = (pa + pb + rel) % 2;
    };
    for (const Equation& eq : sys.equations) {
        int sign_rhs = 0;
        if (eq.rhs)
            sign_rhs = eq.rhs->sign();
        else if (eq.weight) {
            // sign-only mode: type decides
            Weight w = classify_weight(*eq.weight);
            sign_rhs = w.type == WType::I ? 1 : -1;
        }
        if (eq.terms.size() != 1) continue;
        const EqnTerm& t = eq.terms[0];
        if (!eq.weight) {
            // lone pair summing off the weight set cannot cancel
            out.contradiction = true;
            out.detail = "isolated pair with no balancing weight";
            return out;
        }
        if (sign_rhs == 0) continue;
        int rel_sign = sign_rhs * t.coeff.sign();  // sign(F_i F_j)
        if (t.i == t.j) {
            if (rel_sign < 0) {
                out.contradiction = true;
                out.detail = "squared coefficient with negative demand";
                return out;
            }
            continue;
        }
        unite(t.i, t.j, rel_sign > 0 ? 0 : 1);
        if (out.contradiction) return out;
    }
    (void)ws;
    return out;
}

std::map<std::vector<int>, Rat> forward_coefficients(const SupportSet& C, const WeightSystem& ws,
                                                     const std::vector<Rat>& F) {
    std::map<std::vector<int>, Rat> out;
    WeightSystem tmp = ws;
    tmp.a_values.reset();
    EqnSystem sys = build_eqnF(C, tmp);
    for (const Equation& eq : sys.equations) {
        if (!eq.weight) continue;
        Rat acc(0);
        for (const EqnTerm& t : eq.terms)
            acc += t.coeff * F[static_cast<std::size_t>(t.i)] * F[static_cast<std::size_t>(t.j)];
        out[*eq.weight] = acc;
    }
    return out;
}

CoefficientAssignment solve(const EqnSystem& sys, unsigned seed, double tol) {
    CoefficientAssignment out;
    out.status = CoefficientAssignment::Status::UNDECIDED;
    const int n = static_cast<int>(sys.support.points.size());
    if (sys.infeasible) {
        out.status = CoefficientAssignment::Status::INFEASIBLE;
        out.detail = sys.infeasible_detail;
        return out;
    }
    // numeric right-hand sides must be present on every weight equation
    std::vector<std::pair<const Equation*, double>> eqs;
    for (const Equation& eq : sys.equations) {
        double rhs = 0.0;
        if (eq.weight) {
            if (!eq.rhs) {
                out.detail = "missing coefficient for a weight equation";
                return out;
            }
            rhs = eq.rhs->convert_to<double>();
        }
        if (eq.terms.empty() && eq.rhs && !eq.rhs->is_zero()) {
            out.status = CoefficientAssignment::Status::INFEASIBLE;
            out.detail = "empty equation with nonzero value";
            return out;
        }
        if (!eq.terms.empty()) eqs.push_back({&eq, rhs});
    }
    {
        WeightSystem dummy(sys.d, {});
        // sign propagation runs on the raw system; a contradiction is exact
        SignAnalysis sa = sign_constraints(sys, dummy);
        if (sa.contradiction) {
            out.status = CoefficientAssignment::Status::INFEASIBLE;
            out.detail = sa.detail;
            return out;
        }
    }

    std::mt19937 rng(seed);
    auto residual_of = [&](const std::vector<double>& F) {
        double worst = 0.0;
        for (auto& [eq, rhs] : eqs) {
            double acc = -rhs;
            for (const EqnTerm& t : eq->terms)
                acc += t.coeff.convert_to<double>() * F[static_cast<std::size_t>(t.i)] *
                       F[static_cast<std::size_t>(t.j)];
            worst = std::max(worst, std::fabs(acc));
        }
        return worst;
    };

    // sequential pass: repeatedly solve equations with one unknown
    auto sequential = [&]() -> std::optional<std::vector<double>> {
        std::vector<double> F(static_cast<std::size_t>(n), 0.0);
        std::vector<bool> known(static_cast<std::size_t>(n), false);
        bool progress = true;
        while (progress) {
            progress = false;
            for (auto& [eq, rhs] : eqs) {
                // classify terms
                int unknown = -1;
                bool quadratic = false, ok = true;
                double lin = 0.0, cst = -rhs;
                for (const EqnTerm& t : eq->terms) {
                    double cf = t.coeff.convert_to<double>();
                    bool ki = known[static_cast<std::size_t>(t.i)];
                    bool kj = known[static_cast<std::size_t>(t.j)];
                    if (ki && kj) {
                        cst += cf * F[static_cast<std::size_t>(t.i)] * F[static_cast<std::size_t>(t.j)];
                    } else if (t.i == t.j) {
                        if (unknown >= 0 && unknown != t.i) ok = false;
                        unknown = t.i;
                        quadratic = true;
                    } else if (ki || kj) {
                        int u = ki ? t.j : t.i;
                        int k = ki ? t.i : t.j;
                        if (unknown >= 0 && unknown != u) ok = false;
                        unknown = u;
                        lin += cf * F[static_cast<std::size_t>(k)];
                    } else {
                        ok = false;
                    }
                }
                if (!ok || unknown < 0) continue;
                if (quadratic) {
                    // coeff * F^2 + lin * F + cst = 0 with the diagonal coeff
                    double qc = 0.0;
                    for (const EqnTerm& t : eq->terms)
                        if (t.i == t.j && t.i == unknown) qc = t.coeff.convert_to<double>();
                    double disc = lin * lin - 4 * qc * cst;
                    if (disc < 0) return std::nullopt;
                    double root = (-lin + std::sqrt(disc)) / (2 * qc);
                    if (std::fabs(root) < 1e-14) root = (-lin - std::sqrt(disc)) / (2 * qc);
                    F[static_cast<std::size_t>(unknown)] = root;
                } else {
                    if (std::fabs(lin) < 1e-14) continue;
                    F[static_cast<std::size_t>(unknown)] = -cst / lin;
                }
                known[static_cast<std::size_t>(unknown)] = true;
                progress = true;
            }
        }
        for (bool k : known)
            if (!k) return std::nullopt;
        return F;
    };

    std::vector<double> best;
    double best_res = 1e300;
    if (auto F = sequential()) {
        double res = residual_of(*F);
        if (res < best_res) {
            best_res = res;
            best = *F;
        }
    }
    // damped least-squares polish from random starts
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    for (int attempt = 0; attempt < 12 && best_res > tol; ++attempt) {
        std::vector<double> F;
        if (attempt == 0 && !best.empty())
            F = best;
        else {
            F.resize(static_cast<std::size_t>(n));
            for (double& x : F) x = unif(rng);
        }
        double lambda = 1e-3;
        for (int it = 0; it < 400; ++it) {
            std::vector<double> r(eqs.size());
            std::vector<std::vector<double>> J(eqs.size(),
                                               std::vector<double>(static_cast<std::size_t>(n), 0.0));
            for (std::size_t e = 0; e < eqs.size(); ++e) {
                double acc = -eqs[e].second;
                for (const EqnTerm& t : eqs[e].first->terms) {
                    double cf = t.coeff.convert_to<double>();
                    acc += cf * F[static_cast<std::size_t>(t.i)] * F[static_cast<std::size_t>(t.j)];
                    if (t.i == t.j) {
                        J[e][static_cast<std::size_t>(t.i)] += 2 * cf * F[static_cast<std::size_t>(t.i)];
                    } else {
                        J[e][static_cast<std::size_t>(t.i)] += cf * F[static_cast<std::size_t>(t.j)];
                        J[e][static_cast<std::size_t>(t.j)] += cf * F[static_cast<std::size_t>(t.i)];
                    }
                }
                r[e] = acc;
            }
            // normal equations with damping
            std::vector<std::vector<double>> A(static_cast<std::size_t>(n),
                                               std::vector<double>(static_cast<std::size_t>(n), 0.0));
            std::vector<double> g(static_cast<std::size_t>(n), 0.0);
            for (std::size_t e = 0; e < eqs.size(); ++e)
                for (int i = 0; i < n; ++i) {
                    g[static_cast<std::size_t>(i)] += J[e][static_cast<std::size_t>(i)] * r[e];
                    for (int j = 0; j < n; ++j)
                        A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                            J[e][static_cast<std::size_t>(i)] * J[e][static_cast<std::size_t>(j)];
                }
            for (int i = 0; i < n; ++i) A[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += lambda;
            // gaussian solve A dx = g
            std::vector<double> dx(static_cast<std::size_t>(n), 0.0);
            {
                auto M = A;
                auto b = g;
                for (int c2 = 0; c2 < n; ++c2) {
                    int piv = c2;
                    for (int i = c2 + 1; i < n; ++i)
                        if (std::fabs(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(c2)]) >
                            std::fabs(M[static_cast<std::size_t>(piv)][static_cast<std::size_t>(c2)]))
                            piv = i;
                    std::swap(M[static_cast<std::size_t>(c2)], M[static_cast<std::size_t>(piv)]);
                    std::swap(b[static_cast<std::size_t>(c2)], b[static_cast<std::size_t>(piv)]);
                    double p = M[static_cast<std::size_t>(c2)][static_cast<std::size_t>(c2)];
                    if (std::fabs(p) < 1e-300) continue;
                    for (int i = 0; i < n; ++i) {
                        if (i == c2) continue;
                        double f = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(c2)] / p;
                        for (int j = c2; j < n; ++j)
                            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                                f * M[static_cast<std::size_t>(c2)][static_cast<std::size_t>(j)];
                        b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(c2)];
                    }
                }
                for (int i = 0; i < n; ++i) {
                    double p = M[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
                    dx[static_cast<std::size_t>(i)] = std::fabs(p) > 1e-300 ? b[static_cast<std::size_t>(i)] / p : 0.0;
                }
            }
            double before = residual_of(F);
            std::vector<double> Fn = F;
            for (int i = 0; i < n; ++i) Fn[static_cast<std::size_t>(i)] -= dx[static_cast<std::size_t>(i)];
            double after = residual_of(Fn);
            if (after < before) {
                F = Fn;
                lambda = std::max(lambda * 0.5, 1e-12);
            } else {
                lambda *= 4;
                if (lambda > 1e8) break;
            }
            if (after < tol * 0.01) break;
        }
        double res = residual_of(F);
        if (res < best_res) {
            best_res = res;
            best = F;
        }
    }
    if (!best.empty()) {
        out.values = best;
        out.residual = best_res;
        if (best_res < tol) out.status = CoefficientAssignment::Status::SOLVED;
    }
    return out;
}

VerifyReport verify(const SupportSet& C, const std::vector<double>& F, const WeightSystem& ws,
                    double tol, unsigned seed, int spots) {
    VerifyReport rep;
    WeightSystem numeric = ws;
    EqnSystem sys = build_eqnF(C, numeric);
    for (const Equation& eq : sys.equations) {
        double rhs = eq.rhs ? eq.rhs->convert_to<double>() : 0.0;
        double acc = -rhs;
        for (const EqnTerm& t : eq.terms)
            acc += t.coeff.convert_to<double>() * F[static_cast<std::size_t>(t.i)] *
                   F[static_cast<std::size_t>(t.j)];
        if (std::fabs(acc) > rep.max_equation_residual) {
            rep.max_equation_residual = std::fabs(acc);
            rep.worst_detail = "equation residual";
        }
    }
    // spot check of the defining identity at random configuration points
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    const int r = ws.r();
    std::vector<std::vector<double>> bars;
    for (const QVector& p : C.points) {
        std::vector<double> b;
        for (int i = 0; i < r; ++i)
            b.push_back((static_cast<double>(ws.d[i]) + p[i].convert_to<double>()) / 2.0);
        bars.push_back(std::move(b));
    }
    for (int s = 0; s < spots; ++s) {
        std::vector<double> q(static_cast<std::size_t>(r));
        for (double& x : q) x = unif(rng);
        std::vector<double> grad(static_cast<std::size_t>(r), 0.0);
        for (std::size_t k = 0; k < bars.size(); ++k) {
            double dot = 0.0;
            for (int i = 0; i < r; ++i) dot += bars[k][static_cast<std::size_t>(i)] * q[static_cast<std::size_t>(i)];
            double wgt = F[k] * std::exp(dot);
            for (int i = 0; i < r; ++i) grad[static_cast<std::size_t>(i)] += wgt * bars[k][static_cast<std::size_t>(i)];
        }
        double sum = 0.0, quad = 0.0;
        long n = ws.d.n();
        for (int i = 0; i < r; ++i) {
            sum += grad[static_cast<std::size_t>(i)];
            quad += grad[static_cast<std::size_t>(i)] * grad[static_cast<std::size_t>(i)] /
                    static_cast<double>(ws.d[i]);
        }
        double lhs = sum * sum / static_cast<double>(n - 1) - quad;
        double dq = 0.0;
        for (int i = 0; i < r; ++i) dq += static_cast<double>(ws.d[i]) * q[static_cast<std::size_t>(i)];
        double rhs = 0.0;
        for (const Weight& w : ws.weights) {
            auto a = ws.a_of(w.entries);
            if (!a) continue;
            double dot = dq;
            for (int i = 0; i < r; ++i)
                dot += static_cast<double>(w.entries[static_cast<std::size_t>(i)]) * q[static_cast<std::size_t>(i)];
            rhs += a->convert_to<double>() * std::exp(dot);
        }
        double defect = std::fabs(lhs - rhs) / std::max(1.0, std::fabs(rhs));
        if (defect > rep.max_spot_defect) rep.max_spot_defect = defect;
    }
    rep.pass = rep.max_equation_residual < tol && rep.max_spot_defect < tol * 10;
    return rep;
}

EdgeAnalysis edge_interior_analysis(const Weight& v, const Weight& w, const SupportSet& C,
                                    const WeightSystem& ws) {
    EdgeAnalysis out;
    out.kind = EdgeAnalysis::Kind::NONE;
    out.contradiction = false;
    out.j_value = j_shifted(v.qvec(), w.qvec(), ws.d);
    if (!C.contains(v.qvec()) || !C.contains(w.qvec())) {
        out.detail = "endpoints not both in the support";
        return out;
    }
    // interior weights of the segment
    std::vector<const Weight*> interior;
    for (const Weight& z : ws.weights) {
        if (z == v || z == w) continue;
        // z = v + t (w - v) with t in (0, 1)?
        std::optional<Rat> t;
        bool on = true;
        for (int i = 0; i < ws.r(); ++i) {
            Rat dv = Rat(w.entries[static_cast<std::size_t>(i)] - v.entries[static_cast<std::size_t>(i)]);
            Rat dz = Rat(z.entries[static_cast<std::size_t>(i)] - v.entries[static_cast<std::size_t>(i)]);
            if (dv.is_zero()) {
                if (!dz.is_zero()) on = false;
            } else {
                Rat ti = dz / dv;
                if (t && *t != ti) on = false;
                t = ti;
            }
        }
        if (on && t && *t > Rat(0) && *t < Rat(1)) interior.push_back(&z);
    }
    if (interior.empty()) {
        out.kind = EdgeAnalysis::Kind::ORTHOGONALITY_REQUIRED;
        out.contradiction = !out.j_value.is_zero();
        out.detail = out.contradiction ? "edge demands orthogonality, J = " + to_string(out.j_value)
                                       : "orthogonal as required";
        return out;
    }
    if (interior.size() == 1) {
        const Weight& u = *interior[0];
        bool midpoint = true;
        for (int i = 0; i < ws.r(); ++i)
            if (2 * u.entries[static_cast<std::size_t>(i)] !=
                v.entries[static_cast<std::size_t>(i)] + w.entries[static_cast<std::size_t>(i)])
                midpoint = false;
        if (midpoint && out.j_value.sign() > 0 &&
            (u.type == WType::II || u.type == WType::III)) {
            out.kind = EdgeAnalysis::Kind::OPPOSITE_SIGNS_REQUIRED;
            out.detail = "midpoint " + u.str() + " forces opposite coefficient signs";
            return out;
        }
    }
    out.detail = "no constraint derived";
    return out;
}

}  // namespace spc
