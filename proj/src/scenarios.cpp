#include "spclass/scenarios.hpp"

#include "spclass/catalog.hpp"
#include "spclass/diophantine.hpp"
#include "spclass/driver.hpp"
#include "spclass/projection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace spc {

namespace {

using IV = std::vector<int>;

// ---------------------------------------------------------------------------
// Abstract weight patterns over a fixed number of slots.
// ---------------------------------------------------------------------------

std::vector<IV> all_patterns(int width) {
    std::vector<IV> out;
    for (int i = 0; i < width; ++i) {
        IV e(static_cast<std::size_t>(width), 0);
        e[static_cast<std::size_t>(i)] = -1;
        out.push_back(e);
    }
    for (int i = 0; i < width; ++i)
        for (int j = 0; j < width; ++j) {
            if (i == j) continue;
            IV e(static_cast<std::size_t>(width), 0);
            e[static_cast<std::size_t>(i)] = -2;
            e[static_cast<std::size_t>(j)] = 1;
            out.push_back(e);
        }
    for (int k = 0; k < width; ++k)
        for (int i = 0; i < width; ++i)
            for (int j = i + 1; j < width; ++j) {
                if (i == k || j == k) continue;
                IV e(static_cast<std::size_t>(width), 0);
                e[static_cast<std::size_t>(k)] = 1;
                e[static_cast<std::size_t>(i)] = -1;
                e[static_cast<std::size_t>(j)] = -1;
                out.push_back(e);
            }
    return out;
}

// Ordered-pair canonical form: lexicographically smallest (v, w) over column
// permutations of the joint support.
std::pair<IV, IV> pair_canon(const IV& v, const IV& w) {
    std::vector<int> support;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] || w[i]) support.push_back(static_cast<int>(i));
    std::sort(support.begin(), support.end());
    std::pair<IV, IV> best;
    bool first = true;
    std::vector<int> perm(support.begin(), support.end());
    std::sort(perm.begin(), perm.end());
    do {
        IV pv, pw;
        for (int col : perm) {
            pv.push_back(v[static_cast<std::size_t>(col)]);
            pw.push_back(w[static_cast<std::size_t>(col)]);
        }
        if (first || std::make_pair(pv, pw) < best) {
            best = {pv, pw};
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool is_weight_pattern(const IV& e) { return try_classify_weight(e).has_value(); }

// Lattice points strictly between v and w that are themselves weights.
std::vector<IV> lattice_interior(const IV& v, const IV& w) {
    std::vector<IV> out;
    for (auto [p, q] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
        bool integral = true;
        IV z(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            int num = p * v[i] + (q - p) * w[i];
            if (num % q != 0) integral = false;
            if (integral) z[i] = num / q;
        }
        if (integral && is_weight_pattern(z)) out.push_back(z);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

WType type_of(const IV& e) { return classify_weight(e).type; }

bool patterns_overlap(const IV& a, const IV& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return true;
    return false;
}

std::vector<std::pair<IV, IV>> table1_pairs() {
    std::set<std::pair<IV, IV>> rows;
    auto pats = all_patterns(7);
    for (const IV& v : pats)
        for (const IV& w : pats) {
            if (v == w) continue;
            WType tv = type_of(v), tw = type_of(w);
            bool far_ok = tw == WType::I;
            if (tw == WType::III)
                for (std::size_t i = 0; i < v.size(); ++i)
                    if (v[i] == -1 && w[i] == -2) far_ok = true;
            if (!far_ok) continue;
            if (tw == WType::I && tv == WType::II && patterns_overlap(v, w)) continue;
            if (!lattice_interior(v, w).empty()) continue;
            // type I mirror would re-enter the circle-bundle family
            IV c(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) c[i] = 2 * v[i] - w[i];
            int nm1 = 0, nz = 0;
            for (int e : c) {
                if (e == -1) ++nm1;
                if (e) ++nz;
            }
            if (nm1 == 1 && nz == 1) continue;
            rows.insert(pair_canon(v, w));
        }
    return {rows.begin(), rows.end()};
}

std::vector<std::pair<IV, IV>> table2_pairs() {
    std::set<std::pair<IV, IV>> rows;
    std::map<std::pair<IV, IV>, bool> memo;
    auto pats = all_patterns(6);
    for (const IV& v : pats)
        for (const IV& w : pats) {
            if (v == w) continue;
            WType tw = type_of(w);
            if (tw == WType::I) continue;
            if (!lattice_interior(v, w).empty()) continue;
            auto key = pair_canon(v, w);
            auto it = memo.find(key);
            if (it != memo.end()) {
                if (it->second) rows.insert(key);
                continue;
            }
            // both the balance condition and the nullity of the mirror must
            // admit common integer dimensions, with the far vertex negative
            FracSystem sys;
            sys.nvars = static_cast<int>(v.size());
            {
                FracEquation eq;
                eq.rhs = Rat(3);
                for (std::size_t i = 0; i < v.size(); ++i)
                    eq.coeffs.emplace_back(2 * v[i] * w[i] + w[i] * w[i]);
                sys.equations.push_back(std::move(eq));
            }
            {
                FracEquation eq;
                eq.rhs = Rat(9);
                for (std::size_t i = 0; i < v.size(); ++i) {
                    int c3 = 4 * v[i] - w[i];
                    eq.coeffs.emplace_back(c3 * c3);
                }
                sys.equations.push_back(std::move(eq));
            }
            auto sol = solve_fracsystem(sys, 20, 400);
            bool solvable = false;
            for (const auto& d : sol.solutions) {
                // need J(w-bar, w-bar) < 0, i.e. sum w^2 / d > 1
                Rat acc(0);
                for (std::size_t i = 0; i < w.size(); ++i)
                    acc += Rat(w[i] * w[i], d[i]);
                if (acc > Rat(1)) solvable = true;
                if (solvable) break;
            }
            memo[key] = solvable;
            if (solvable) rows.insert(key);
        }
    return {rows.begin(), rows.end()};
}

std::vector<std::pair<IV, IV>> table3_pairs() {
    std::set<std::pair<IV, IV>> rows;
    auto pats = all_patterns(5);
    for (const IV& v : pats)
        for (const IV& w : pats) {
            if (v == w) continue;
            if (lattice_interior(v, w).empty()) continue;
            rows.insert(pair_canon(v, w));
        }
    return {rows.begin(), rows.end()};
}

ScenarioResult table_scenario(int which) {
    ScenarioResult res;
    std::vector<std::pair<IV, IV>> expected_raw;
    std::vector<std::pair<IV, IV>> got;
    if (which == 1) {
        expected_raw = {
            {{-1, 1, -1, 0}, {-2, 1, 0, 0}},   {{-1, -1, 1, 0}, {-2, 1, 0, 0}},
            {{-1, 0, -1, 1}, {-2, 1, 0, 0}},   {{-2, 1, 0, 0}, {-1, 0, 0, 0}},
            {{-2, 1, 0, 0}, {0, 0, -1, 0}},    {{-1, 0}, {0, -1}},
            {{1, -1, -1, 0, 0}, {0, 0, 0, -1, 0}},
        };
        got = table1_pairs();
    } else if (which == 2) {
        expected_raw = {
            {{0, 0, -2, 1}, {-2, 1, 0, 0}},       {{-2, 0, 1}, {-2, 1, 0}},
            {{-1, 0, 1, -1}, {-2, 1, 0, 0}},
            {{0, 0, 1, -1, -1}, {-2, 1, 0, 0, 0}},{{0, 1, -1, -1}, {-2, 1, 0, 0}},
            {{0, -1, -1, 1}, {1, -1, -1, 0}},     {{1, -1, 0, -1}, {1, -1, -1, 0}},
            {{1, 0, 0, -2}, {1, -1, -1, 0}},
            {{0, 0, 0, -2, 1}, {1, -1, -1, 0, 0}},{{0, -1, 0, 1, -1}, {1, -1, -1, 0, 0}},
            {{1, 0, 0, -1, -1}, {1, -1, -1, 0, 0}},
            {{0, 0, 0, 1, -1, -1}, {1, -1, -1, 0, 0, 0}},
        };
        got = table2_pairs();
    } else {
        expected_raw = {
            {{1, -2, 0}, {-2, 1, 0}}, {{1, -2}, {-1, 0}}, {{-1, 0}, {1, -2}},
            {{-2, 1, 0}, {0, 1, -2}}, {{1, -1, -1, 0}, {-1, 1, -1, 0}},
        };
        got = table3_pairs();
    }
    std::set<std::pair<IV, IV>> expected;
    for (auto& [v, w] : expected_raw) expected.insert(pair_canon(v, w));
    std::set<std::pair<IV, IV>> got_set(got.begin(), got.end());
    res.pass = expected == got_set;
    res.expected = std::to_string(expected.size()) + " rows";
    res.observed = std::to_string(got_set.size()) + " rows";
    if (!res.pass) {
        for (auto& p : got_set)
            if (!expected.count(p)) {
                Weight a{p.first, WType::I}, b{p.second, WType::I};
                res.observed += " extra " + a.str() + b.str();
            }
        for (auto& p : expected)
            if (!got_set.count(p)) {
                Weight a{p.first, WType::I}, b{p.second, WType::I};
                res.observed += " missing " + a.str() + b.str();
            }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Helpers for building elimination instances.
// ---------------------------------------------------------------------------

WeightSystem make_ws(std::vector<long> dims, std::vector<IV> weights, bool connected = true) {
    std::vector<Weight> w;
    for (auto& e : weights) w.push_back(classify_weight(e));
    return WeightSystem(DimVector(std::move(dims)), std::move(w), connected);
}

// All type I vectors plus the given list; the usual connected-K closure.
std::vector<IV> with_type_i(std::vector<IV> weights, int r, std::set<int> skip = {}) {
    for (int i = 0; i < r; ++i) {
        if (skip.count(i)) continue;
        IV e(static_cast<std::size_t>(r), 0);
        e[static_cast<std::size_t>(i)] = -1;
        weights.push_back(e);
    }
    return weights;
}

ScenarioResult expect_candidate_eliminated(const WeightSystem& ws, const QVector& c,
                                           const std::string& want_anchor) {
    ScenarioResult res;
    res.expected = "eliminated [" + want_anchor + "]";
    CandidateSet cands = enumerate_null_candidates(ws);
    std::vector<QVector> nulls;
    for (auto& cand : cands.rational) nulls.push_back(cand.c);
    bool enumerated = false;
    for (auto& cand : cands.rational) enumerated = enumerated || cand.c == c;
    auto out = classify_candidate(ws, c, 0, &nulls);
    if (!out.eliminated) {
        res.observed = enumerated ? "survives" : "survives (and missing from enumeration)";
        return res;
    }
    res.observed = std::string(enumerated ? "" : "(not enumerated) ") + "eliminated [" +
                   out.why.anchor + "] " + out.why.detail;
    // a point swallowed by the hull is vacuously ruled out as a vertex
    bool vacuous = out.why.anchor == "inside-hull";
    res.pass = (enumerated || vacuous) && (want_anchor.empty() || out.why.anchor == want_anchor);
    return res;
}

ScenarioResult expect_verdict(const WeightSystem& ws, Outcome want, unsigned seed) {
    ScenarioResult res;
    res.expected = outcome_name(want);
    ClassifyOptions opt;
    opt.seed = seed;
    Verdict v = classify_instance(ws, opt);
    res.observed = outcome_name(v.outcome);
    res.pass = v.outcome == want;
    return res;
}

ScenarioResult expect_region_infeasible(const std::string& tag, const std::string& region,
                                        long bound) {
    ScenarioResult res;
    res.expected = "no admissible dimensions";
    RegionReport rep = region_analysis(tag, region, bound);
    if (rep.feasible()) {
        res.observed = "admissible dimensions found";
        return res;
    }
    res.observed = "no admissible dimensions";
    res.pass = true;
    return res;
}

// ---------------------------------------------------------------------------
// The 1A-configuration / doubled-vertex reference rows.
// ---------------------------------------------------------------------------

// Concrete configuration / doubled-vertex data points with their dimension
// vectors; the scenario re-derives c from the orthogonality system exactly.
struct PairPoint {
    std::string config;
    std::vector<IV> one_a;
    IV u;
    std::vector<long> dims;
    IV c_num;
    long c_den;
};

std::vector<PairPoint> unique_1b_points() {
    std::vector<PairPoint> pts;
    pts.push_back({"1", {{-2, 1, 0, 0}, {-2, 0, 1, 0}}, {0, 0, 0, -1},
                   {4, 2, 2, 9}, {-4, 2, 2, -3}, 3});
    pts.push_back({"2", {{1, -2, 0, 0, 0}, {1, 0, -2, 0, 0}, {1, 0, 0, -2, 0}},
                   {0, -1, 0, 0, 0}, {1, 3, 2, 2, 9}, {1, -3, -2, -2, 3}, 3});
    pts.push_back({"3",
                   {{1, -2, 0, 0, 0}, {1, 0, -2, 0, 0}, {1, -1, -1, 0, 0}, {0, -1, -1, 1, 0}},
                   {0, 0, 0, 0, -1}, {2, 2, 2, 2, 9}, {2, -2, -2, 2, -3}, 3});
    pts.push_back({"4", {{1, -2, 0, 0}, {1, 0, -2, 0}, {1, -1, -1, 0}}, {0, 0, 0, -1},
                   {4, 2, 2, 9}, {4, -2, -2, -3}, 3});
    pts.push_back({"4", {{1, -2, 0, 0}, {1, 0, -2, 0}, {1, -1, -1, 0}}, {1, -1, 0, -1},
                   {2, 5, 3, 20}, {4, -5, -3, 0}, 4});
    pts.push_back({"4", {{1, -2, 0, 0}, {1, 0, -2, 0}, {1, -1, -1, 0}}, {0, 0, 0, -1},
                   {2, 2, 4, 25}, {6, -2, -4, -5}, 5});
    pts.push_back({"5i", {{-2, 1, 0, 0}, {-1, 1, -1, 0}}, {-1, 0, 0, 0},
                   {3, 3, 2, 1}, {-3, 3, -2, -1}, 3});
    pts.push_back({"5i", {{-2, 1, 0, 0}, {-1, 1, -1, 0}}, {0, 0, 0, -1},
                   {4, 2, 2, 25}, {-4, 6, -2, -5}, 5});
    pts.push_back({"6ii", {{1, -1, -1, 0}, {1, -1, 0, -1}}, {1, 0, -2, 0},
                   {2, 2, 36, 10}, {20, -15, -18, -5}, 18});
    pts.push_back({"6iii",
                   {{1, -1, -1, 0, 0}, {1, -1, 0, -1, 0}, {1, 0, -1, -1, 0}},
                   {0, 0, 0, 0, -1}, {2, 2, 2, 2, 25}, {6, -2, -2, -2, -5}, 5});
    return pts;
}

ScenarioResult table7_scenario() {
    ScenarioResult res;
    res.expected = "every configuration / doubled-vertex data point re-derives";
    std::ostringstream bad;
    for (const PairPoint& pt : unique_1b_points()) {
        const int r = static_cast<int>(pt.dims.size());
        DimVector d(pt.dims);
        std::vector<Rat> c;
        for (int x : pt.c_num) c.emplace_back(x, pt.c_den);
        QVector cq(c);
        if (!is_null(cq, d)) {
            bad << " config " << pt.config << ": c not null";
            continue;
        }
        for (const IV& svec : pt.one_a)
            if (!is_orthogonal_bar(QVector::from_ints(svec), cq, d))
                bad << " config " << pt.config << ": orthogonality fails";
        // the doubled relation: 2u - c null, i.e. Q(u) = B(u, c)
        Rat qu(0), bu(0);
        for (int i = 0; i < r; ++i) {
            qu += Rat(pt.u[static_cast<std::size_t>(i)] * pt.u[static_cast<std::size_t>(i)], d[i]);
            bu += Rat(pt.u[static_cast<std::size_t>(i)]) * cq[i] / Rat(d[i]);
        }
        if (qu != bu) bad << " config " << pt.config << ": doubled relation fails";
    }
    res.observed = bad.str().empty() ? res.expected : "mismatch:" + bad.str();
    res.pass = bad.str().empty();
    return res;
}

}  // namespace

std::vector<std::pair<std::vector<int>, std::vector<int>>> collinear_pair_table(int which) {
    if (which == 1) return table1_pairs();
    if (which == 2) return table2_pairs();
    return table3_pairs();
}

const std::vector<Scenario>& named_scenarios() {
    static const std::vector<Scenario> all = [] {
        std::vector<Scenario> s;
        auto add = [&](std::string name, std::string group, std::string citation, long dmax,
                       std::function<ScenarioResult(long, unsigned)> run) {
            s.push_back({std::move(name), std::move(group), std::move(citation), dmax,
                         std::move(run)});
        };

        // --- circle-bundle systems ---
        for (int r = 2; r <= 5; ++r) {
            add("fano-r" + std::to_string(r), "fano",
                "circle-bundle weight system classifies as the special case", 64,
                [r](long, unsigned seed) {
                    WeightSystem ws = fano_system(std::vector<long>(static_cast<std::size_t>(r - 1), 2));
                    return expect_verdict(ws, Outcome::FANO_CASE, seed);
                });
        }
        add("fano-r3-solve", "fano", "forward-generated coefficients reproduce a solution", 64,
            [](long, unsigned seed) {
                ScenarioResult res;
                res.expected = "SUPERPOTENTIAL_FOUND";
                WeightSystem ws = fano_system({2, 3});
                SupportSet C = fano_support(ws, 0);
                std::vector<Rat> F(C.points.size(), Rat(1));
                for (auto& [w, val] : forward_coefficients(C, ws, F)) ws.set_a(w, val);
                ClassifyOptions opt;
                opt.seed = seed;
                Verdict v = classify_instance(ws, opt);
                res.observed = outcome_name(v.outcome);
                res.pass = v.outcome == Outcome::SUPERPOTENTIAL_FOUND;
                return res;
            });

        // --- pattern tables ---
        add("table1", "tables", "edge-mirror pair listing", 64,
            [](long, unsigned) { return table_scenario(1); });
        add("table2", "tables", "four-thirds pair listing with the balance condition", 64,
            [](long, unsigned) { return table_scenario(2); });
        add("table3", "tables", "interior-point pair listing", 64,
            [](long, unsigned) { return table_scenario(3); });
        add("table7", "tables", "orthogonal-configuration / doubled-vertex pairs", 225,
            [](long, unsigned) { return table7_scenario(); });

        // --- catalog ---
        add("catalog-counts", "catalog", "face catalog cardinalities", 64, [](long, unsigned) {
            ScenarioResult res;
            int trap = 0, par = 0, tri = 0, hex = 0, nonface = 0, sq = 0;
            for (const FaceShape& sh : catalog()) switch (sh.kind) {
                    case FaceShape::TRAPEZIUM: ++trap; break;
                    case FaceShape::PARALLELOGRAM: ++par; break;
                    case FaceShape::HEXAGON: ++hex; break;
                    case FaceShape::SQUARE: ++sq; break;
                    case FaceShape::NONFACE_TRAPEZIUM: ++nonface; break;
                    default: ++tri;
                }
            res.expected = "6/17/3/1/3/28";
            std::ostringstream os;
            os << trap << "/" << par << "/" << hex << "/" << sq << "/" << nonface << "/" << tri;
            res.observed = os.str();
            res.pass = trap == 6 && par == 17 && hex == 3 && sq == 1 && nonface == 3 && tri == 28;
            return res;
        });
        add("tr-dimensions", "catalog", "triangle dimension restrictions reproduce", 64,
            [](long dmax, unsigned) {
                ScenarioResult res;
                res.expected = "all triangle systems reproduce their restriction lists";
                std::ostringstream bad;
                std::map<std::string, std::vector<long>> unique{
                    {"Tr1", {2, 1, 16, 4, 4}},      {"Tr2", {2, 3, 12, 4}},
                    {"Tr3", {16, 4, 16, 2, 1}},     {"Tr5", {2, 3, 6, 6, 6}},
                    {"Tr7", {2, 1, 12, 3, 12, 12}}, {"Tr11", {16, 4, 4, 1, 1, 1}},
                    {"Tr12", {12, 3, 4, 1, 1}},     {"Tr13", {16, 4, 16, 1, 1, 1}},
                    {"Tr16", {12, 3, 12, 1, 1, 1, 12}}};
                for (auto& [tag, dims] : unique) {
                    auto r = solve_fracsystem(constraints_for(tag), dmax);
                    if (r.solutions.size() != 1 || r.solutions[0] != dims) bad << " " << tag;
                }
                for (const char* tag : {"Tr4", "Tr6", "Tr8", "Tr14", "Tr15", "Tr17"}) {
                    auto r = solve_fracsystem(constraints_for(tag), dmax);
                    if (r.families.size() != 1 || r.families[0].target != Rat(1, 4))
                        bad << " " << tag;
                }
                for (const char* tag : {"Tr9", "Tr10", "Tr18", "Tr19"}) {
                    auto r = solve_fracsystem(constraints_for(tag), dmax);
                    if (r.families.size() != 2) bad << " " << tag;
                }
                {
                    std::set<std::vector<long>> expect{{1, 1, 3, 6, 6, 6},
                                                       {1, 2, 2, 8, 8, 8},
                                                       {2, 1, 2, 8, 8, 8}};
                    for (const char* tag : {"Tr20", "Tr21", "Tr22"}) {
                        auto r = solve_fracsystem(constraints_for(tag), dmax);
                        std::set<std::vector<long>> got(r.solutions.begin(), r.solutions.end());
                        if (got != expect) bad << " " << tag;
                    }
                }
                {
                    auto r = solve_fracsystem(constraints_for("Tr24"), 40);
                    bool ok = !r.solutions.empty();
                    for (auto& d : r.solutions) ok = ok && d[2] == 2 * d[1];
                    if (!ok) bad << " Tr24";
                    auto r26 = solve_fracsystem(constraints_for("Tr26"), 30);
                    ok = !r26.solutions.empty();
                    for (auto& d : r26.solutions) ok = ok && d[1] == d[2];
                    if (!ok) bad << " Tr26";
                }
                {
                    auto r = solve_fracsystem(constraints_for("Tr28"), dmax);
                    std::set<std::vector<long>> got;
                    for (auto d : r.solutions) {
                        std::sort(d.begin(), d.end());
                        got.insert(d);
                    }
                    if (got != std::set<std::vector<long>>{{2, 3, 6}, {2, 4, 4}, {3, 3, 3}})
                        bad << " Tr28";
                }
                res.observed = bad.str().empty() ? res.expected : "mismatch:" + bad.str();
                res.pass = bad.str().empty();
                return res;
            });
        add("quarter-family", "catalog", "pair family at one quarter", 64, [](long, unsigned) {
            ScenarioResult res;
            auto t = unit_fraction_tuples(Rat(1, 4), 2);
            res.expected = "(5,20) (6,12) (8,8)";
            std::ostringstream os;
            for (auto& p : t) os << "(" << p[0] << "," << p[1] << ") ";
            res.observed = os.str();
            res.pass = t == std::vector<std::vector<long>>{{5, 20}, {6, 12}, {8, 8}};
            return res;
        });

        // --- region eliminations ---
        for (const char* reg : {"I", "II", "III", "IV", "V", "VI"})
            add(std::string("t3-region-") + reg, "region",
                "long-trapezium region admits no dimensions", 10,
                [reg](long dmax, unsigned) { return expect_region_infeasible("T3", reg, dmax); });
        for (const char* reg : {"uw", "sv", "vu", "ws"})
            add(std::string("p8-") + reg, "region",
                "split parallelogram side admits no dimensions", 6,
                [reg](long dmax, unsigned) { return expect_region_infeasible("P8", reg, dmax); });
        add("square-s-caseii", "region", "square with centre, orthogonality case is empty", 6,
            [](long dmax, unsigned) {
                ScenarioResult res;
                res.expected = "orthogonality case empty";
                RegionReport rep = region_analysis("S", "uw", dmax);
                for (const CaseOutcome& c : rep.cases)
                    if (c.label == "ii" && !c.witnesses.empty()) {
                        res.observed = "admissible dimensions found";
                        return res;
                    }
                res.observed = res.expected;
                res.pass = true;
                return res;
            });
        for (const char* reg : {"I", "II", "V"})
            add(std::string("h3-region-") + reg, "region",
                "regular hexagon region admits no dimensions", 10,
                [reg](long dmax, unsigned) { return expect_region_infeasible("H3", reg, dmax); });

        // --- pipeline eliminations over constructed instances ---
        struct PairRow {
            std::string name;
            std::vector<long> dims;
            std::vector<IV> weights;
            IV c_num;
            long c_den;
        };
        std::vector<PairRow> rows;
        rows.push_back({"sec9-i-1", {3, 2, 8},
                        with_type_i({{-1, 1, -1}, {1, -1, -1}, {-1, -1, 1}, {-2, 1, 0}}, 3),
                        {0, 1, -2}, 1});
        rows.push_back({"sec9-i-2", {2, 12, 16},
                        with_type_i({{-1, -1, 1}, {1, -1, -1}, {-1, 1, -1}, {-2, 1, 0}}, 3),
                        {0, -3, 2}, 1});
        rows.push_back({"sec9-i-3", {2, 2, 16, 16},
                        with_type_i({{-1, 0, -1, 1}, {1, 0, -1, -1}, {-1, 0, 1, -1}, {-2, 1, 0, 0}},
                                    4),
                        {0, -1, -2, 2}, 1});
        rows.push_back({"sec9-i-4", {12, 16, 2}, with_type_i({{-2, 1, 0}}, 3), {-3, 2, 0}, 1});
        rows.push_back({"sec9-i-5", {32, 12, 6}, with_type_i({{-2, 1, 0}}, 3), {-4, 2, 1}, 1});
        rows.push_back({"sec9-i-6", {8, 2, 3}, with_type_i({}, 3), {-2, 1, 0}, 1});
        rows.push_back({"sec9-i-7", {24, 12, 12, 6},
                        with_type_i({{1, -1, -1, 0}, {-1, 1, -1, 0}, {-1, -1, 1, 0}}, 4),
                        {2, -2, -2, 1}, 1});
        rows.push_back({"sec9-ii-1", {2, 1, 16, 8},
                        with_type_i({{0, 0, -2, 1}, {-2, 1, 0, 0}}, 4, {1}),
                        {2, -1, -8, 4}, 3});
        rows.push_back({"sec9-ii-2", {6, 1, 8},
                        with_type_i({{-2, 0, 1}, {-2, 1, 0}}, 3, {1}),
                        {-6, -1, 4}, 3});
        rows.push_back({"sec9-ii-5", {3, 3, 3, 8},
                        with_type_i({{-1, 0, 1, -1}, {1, 0, -1, -1}, {-1, 0, -1, 1},
                                     {-2, 1, 0, 0}}, 4),
                        {-2, -1, 4, -4}, 3});
        rows.push_back({"sec9-ii-7", {2, 1, 8, 8, 8},
                        with_type_i({{0, 0, 1, -1, -1}, {0, 0, -1, 1, -1}, {0, 0, -1, -1, 1},
                                     {-2, 1, 0, 0, 0}}, 5, {1}),
                        {2, -1, 4, -4, -4}, 3});
        rows.push_back({"sec9-ii-8", {2, 3, 8, 8},
                        with_type_i({{0, 1, -1, -1}, {0, -1, 1, -1}, {0, -1, -1, 1},
                                     {-2, 1, 0, 0}}, 4),
                        {2, 3, -4, -4}, 3});
        rows.push_back({"sec9-ii-9", {2, 2, 3, 16},
                        with_type_i({{0, -1, -1, 1}, {0, 1, -1, -1}, {0, -1, 1, -1},
                                     {1, -1, -1, 0}, {-1, 1, -1, 0}, {-1, -1, 1, 0}}, 4),
                        {-1, -3, -3, 4}, 3});
        rows.push_back({"sec9-ii-10", {2, 3, 2, 16},
                        with_type_i({{1, -1, 0, -1}, {-1, 1, 0, -1}, {-1, -1, 0, 1},
                                     {1, -1, -1, 0}, {-1, 1, -1, 0}, {-1, -1, 1, 0}}, 4),
                        {3, -3, 1, -4}, 3});
        rows.push_back({"sec10-noaperp-a1", {2, 5, 3, 20},
                        with_type_i({{1, -2, 0, 0}, {1, 0, -2, 0}, {1, -1, -1, 0}, {-1, 1, -1, 0},
                                     {-1, -1, 1, 0}, {1, -1, 0, -1}, {-1, 1, 0, -1},
                                     {-1, -1, 0, 1}}, 4),
                        {4, -5, -3, 0}, 4});
        rows.push_back({"sec10-noaperp-a2", {2, 6, 2, 12},
                        with_type_i({{1, -2, 0, 0}, {1, 0, -2, 0}, {1, -1, -1, 0}, {-1, 1, -1, 0},
                                     {-1, -1, 1, 0}, {1, -1, 0, -1}, {-1, 1, 0, -1},
                                     {-1, -1, 0, 1}}, 4),
                        {2, -3, -1, 0}, 2});
        rows.push_back({"sec10-noaperp-g1", {2, 2, 4, 25},
                        with_type_i({{1, -2, 0, 0}, {1, 0, -2, 0}, {1, -1, -1, 0}, {-1, 1, -1, 0},
                                     {-1, -1, 1, 0}}, 4),
                        {6, -2, -4, -5}, 5});
        rows.push_back({"sec10-noaperp-g2", {2, 3, 3, 25},
                        with_type_i({{1, -2, 0, 0}, {1, 0, -2, 0}, {1, -1, -1, 0}, {-1, 1, -1, 0},
                                     {-1, -1, 1, 0}}, 4),
                        {6, -3, -3, -5}, 5});
        rows.push_back({"sec10-noaperp-g3", {2, 2, 2, 4},
                        with_type_i({{1, -2, 0, 0}, {1, 0, -2, 0}, {1, -1, -1, 0}, {-1, 1, -1, 0},
                                     {-1, -1, 1, 0}}, 4),
                        {2, -1, -1, -2}, 2});
        rows.push_back({"sec10-noaperp-b1", {2, 2, 36, 10},
                        with_type_i({{1, -1, -1, 0}, {1, -1, 0, -1}, {-1, 1, -1, 0},
                                     {-1, 1, 0, -1}, {-1, -1, 1, 0}, {-1, -1, 0, 1},
                                     {1, 0, -2, 0}}, 4),
                        {20, -15, -18, -5}, 18});
        rows.push_back({"sec10-case2-a", {1, 3, 2, 2, 9},
                        with_type_i({{1, -2, 0, 0, 0}, {1, 0, -2, 0, 0}, {1, 0, 0, -2, 0}}, 5,
                                    {0}),
                        {1, -3, -2, -2, 3}, 3});
        rows.push_back({"sec10-no5i-1", {3, 3, 2, 1},
                        with_type_i({{-2, 1, 0, 0}, {-1, 1, -1, 0}, {1, -1, -1, 0},
                                     {-1, -1, 1, 0}}, 4),
                        {-3, 3, -2, -1}, 3});
        rows.push_back({"sec10-no5i-2", {4, 2, 2, 2},
                        with_type_i({{-2, 1, 0, 0}, {-1, 1, -1, 0}, {1, -1, -1, 0},
                                     {-1, -1, 1, 0}}, 4),
                        {-2, 2, -1, -1}, 2});
        rows.push_back({"sec10-no5i-3", {3, 3, 2, 121},
                        with_type_i({{-2, 1, 0, 0}, {-1, 1, -1, 0}, {1, -1, -1, 0},
                                     {-1, -1, 1, 0}}, 4),
                        {-9, 15, -6, -11}, 11});
        rows.push_back({"sec10-no5i-4", {4, 2, 2, 25},
                        with_type_i({{-2, 1, 0, 0}, {-1, 1, -1, 0}, {1, -1, -1, 0},
                                     {-1, -1, 1, 0}}, 4),
                        {-4, 6, -2, -5}, 5});
        rows.push_back({"h2-subrect", {8, 2, 16, 16},
                        with_type_i({{-1, 0, 1, -1}, {0, -1, 1, -1}, {-1, 0, -1, 1},
                                     {0, -1, -1, 1}}, 4),
                        {-2, 1, 0, 0}, 1});
        rows.push_back({"pentagon", {4, 2, 16, 16},
                        with_type_i({{-2, 1, 0, 0}, {-1, 0, 1, -1}, {0, -1, 1, -1},
                                     {-1, 0, -1, 1}, {0, -1, -1, 1}}, 4),
                        {0, -1, 2, -2}, 1});
        rows.push_back({"case4", {4, 2, 2, 9},
                        with_type_i({{1, -2, 0, 0}, {1, 0, -2, 0}, {-2, 1, 0, 0}, {-2, 0, 1, 0},
                                     {1, -1, -1, 0}, {-1, 1, -1, 0}, {-1, -1, 1, 0}}, 4),
                        {4, -2, -2, -3}, 3});
        rows.push_back({"case3", {2, 2, 2, 2, 9},
                        with_type_i({{1, -2, 0, 0, 0}, {1, 0, -2, 0, 0}, {-2, 1, 0, 0, 0},
                                     {0, 1, 0, -2, 0}, {1, -1, -1, 0, 0}, {-1, 1, -1, 0, 0},
                                     {-1, -1, 1, 0, 0}}, 5),
                        {2, -2, -2, 2, -3}, 3});
        for (const PairRow& row : rows) {
            add(row.name, "elimination", "constructed instance admits no surviving candidate", 64,
                [row](long, unsigned) {
                    std::vector<Rat> centries;
                    for (int x : row.c_num) centries.emplace_back(x, row.c_den);
                    WeightSystem ws = make_ws(row.dims, row.weights);
                    return expect_candidate_eliminated(ws, QVector(centries), "");
                });
        }

        // four-thirds rows whose dimension systems are empty
        struct EmptyRow {
            std::string name;
            IV v, w;
        };
        for (const EmptyRow& row :
             {EmptyRow{"sec9-ii-3", {-1, 0, 0}, {-2, 1, 0}},
              EmptyRow{"sec9-ii-4", {0, 0, -1}, {-2, 1, 0}},
              EmptyRow{"sec9-ii-6", {-1, 1, -1}, {-2, 1, 0}},
              EmptyRow{"sec9-ii-11", {1, -2, 0}, {1, -1, -1}}}) {
            add(row.name, "elimination",
                "balance and nullity conditions have no common dimensions", 64,
                [row](long dmax, unsigned) {
                    ScenarioResult res;
                    res.expected = "no admissible dimensions";
                    const int r = static_cast<int>(row.v.size());
                    std::vector<long> dims(static_cast<std::size_t>(r), 1);
                    bool found = false;
                    std::function<void(int)> rec = [&](int pos) {
                        if (found) return;
                        if (pos == r) {
                            Rat cond(0), null_acc(0);
                            for (int i = 0; i < r; ++i) {
                                int vi = row.v[static_cast<std::size_t>(i)];
                                int wi = row.w[static_cast<std::size_t>(i)];
                                cond += Rat(2 * vi * wi + wi * wi, dims[static_cast<std::size_t>(i)]);
                                int ci = 4 * vi - wi;  // thirds cleared below
                                null_acc += Rat(ci * ci, 9 * dims[static_cast<std::size_t>(i)]);
                            }
                            if (cond == Rat(3) && null_acc == Rat(1)) found = true;
                            return;
                        }
                        for (long dv = 1; dv <= dmax && !found; ++dv) {
                            dims[static_cast<std::size_t>(pos)] = dv;
                            rec(pos + 1);
                        }
                    };
                    rec(0);
                    res.observed = found ? "admissible dimensions found" : res.expected;
                    res.pass = !found;
                    return res;
                });
        }

        add("double-warped-r2", "elimination", "rank-two mirror survives to the residual case",
            64, [](long, unsigned seed) {
                WeightSystem ws = make_ws({8, 2}, {{-1, 0}, {0, -1}});
                return expect_verdict(ws, Outcome::R_LE_3_RESIDUAL, seed);
            });
        add("tr3-triangle", "elimination", "triangle system pins its dimension vector", 64,
            [](long dmax, unsigned) {
                ScenarioResult res;
                res.expected = "(16,4,16,2,1)";
                auto r = solve_fracsystem(constraints_for("Tr3"), dmax);
                std::ostringstream os;
                for (auto& sol : r.solutions) {
                    os << "(";
                    for (std::size_t i = 0; i < sol.size(); ++i)
                        os << (i ? "," : "") << sol[i];
                    os << ")";
                }
                res.observed = os.str();
                res.pass = r.solutions ==
                           std::vector<std::vector<long>>{{16, 4, 16, 2, 1}};
                return res;
            });
        add("p8-parallelogram", "region", "split parallelogram admits no dimensions", 6,
            [](long dmax, unsigned) {
                ScenarioResult res;
                res.expected = "no admissible dimensions";
                for (const char* regn : {"uw", "sv", "vu", "ws"}) {
                    RegionReport rep = region_analysis("P8", regn, dmax);
                    if (rep.feasible()) {
                        res.observed = "admissible dimensions found";
                        return res;
                    }
                }
                res.observed = res.expected;
                res.pass = true;
                return res;
            });

        return s;
    }();
    return all;
}

}  // namespace spc
