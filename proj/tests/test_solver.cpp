#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spclass/driver.hpp"
#include "spclass/solver.hpp"

#include <random>

using namespace spc;

namespace {

SupportSet fano_sup(const WeightSystem& ws) { return fano_support(ws, 0); }

}  // namespace

TEST_CASE("fano r=2 equation structure") {
    WeightSystem ws = fano_system({2});
    SupportSet C = fano_sup(ws);
    REQUIRE(C.points.size() == 2);
    EqnSystem sys = build_eqnF(C, ws);
    REQUIRE(!sys.infeasible);
    // equations: 2c (vanishing), c+b -> weight (0,-1), 2b -> weight (1,-2)
    int with_weight = 0, vanished = 0;
    for (const Equation& eq : sys.equations) {
        if (eq.weight) {
            ++with_weight;
            REQUIRE(eq.terms.size() == 1);
            if (*eq.weight == std::vector<int>{0, -1}) {
                // pair coefficient carries the cross factor 2: 2 * (1/2) = 1
                CHECK(eq.terms[0].coeff == Rat(1));
                CHECK(eq.terms[0].i != eq.terms[0].j);
            }
            if (*eq.weight == std::vector<int>{1, -2}) {
                CHECK(eq.terms[0].coeff == Rat(-1, 2));  // -1/d2 with d2 = 2
                CHECK(eq.terms[0].i == eq.terms[0].j);
            }
        } else if (eq.terms.empty()) {
            ++vanished;
        }
    }
    CHECK(with_weight == 2);
    CHECK(vanished >= 1);  // the doubled null vertex
}

TEST_CASE("pairwise sums vanish through the apex dimension") {
    WeightSystem ws = fano_system({2, 3});
    SupportSet C = fano_sup(ws);
    EqnSystem sys = build_eqnF(C, ws);
    for (const Equation& eq : sys.equations) {
        if (eq.weight) continue;
        CHECK(eq.terms.empty());  // every off-weight pair has J = 0 via d_1 = 1
    }
}

TEST_CASE("check_support accepts the fano set and rejects a broken one") {
    WeightSystem ws = fano_system({2, 2});
    SupportSet C = fano_sup(ws);
    CHECK(check_support(C, ws).empty());
    SupportSet broken;
    broken.points = {C.points[1], C.points[2]};  // missing the apex
    CHECK(!check_support(broken, ws).empty());
}

TEST_CASE("forward then solve round-trips on fano systems") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> den(1, 4), num(1, 7);
    for (std::vector<long> rest : {std::vector<long>{2}, {2, 3}, {3, 2, 4}}) {
        WeightSystem ws = fano_system(rest);
        SupportSet C = fano_sup(ws);
        std::vector<Rat> F;
        for (std::size_t i = 0; i < C.points.size(); ++i)
            F.emplace_back(num(rng), den(rng));
        auto A = forward_coefficients(C, ws, F);
        for (auto& [w, value] : A) ws.set_a(w, value);
        CHECK(validate(ws).empty());  // generated signs follow the type pattern
        EqnSystem sys = build_eqnF(C, ws);
        auto sol = solve(sys, 11);
        REQUIRE(sol.status == CoefficientAssignment::Status::SOLVED);
        CHECK(sol.residual < 1e-10);
        // recovered values match the inputs up to the global sign flip
        double flip = sol.values[0] * F[0].convert_to<double>() < 0 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < F.size(); ++i)
            CHECK(std::fabs(flip * sol.values[i] - F[i].convert_to<double>()) < 1e-8);
        auto rep = verify(C, sol.values, ws, 1e-9, 3, 50);
        CHECK(rep.pass);
        CHECK(rep.max_spot_defect < 1e-9);
    }
}

TEST_CASE("empty equation with a nonzero demand is infeasible") {
    WeightSystem ws = fano_system({2});
    ws.set_a({0, -1}, Rat(1));
    ws.set_a({1, -2}, Rat(-1, 2));
    SupportSet broken;
    broken.points = {type_iii(1, 0, 2).qvec()};  // only the type III point
    EqnSystem sys = build_eqnF(broken, ws);
    CHECK(sys.infeasible);
    auto sol = solve(sys, 1);
    CHECK(sol.status == CoefficientAssignment::Status::INFEASIBLE);
}

TEST_CASE("sign contradiction is detected exactly") {
    WeightSystem ws = fano_system({2});
    // type III coefficient with the wrong sign makes F^2 * (negative) = positive
    ws.set_a({0, -1}, Rat(1));
    ws.set_a({1, -2}, Rat(1, 2));
    SupportSet C = fano_sup(ws);
    EqnSystem sys = build_eqnF(C, ws);
    auto sol = solve(sys, 1);
    CHECK(sol.status == CoefficientAssignment::Status::INFEASIBLE);
}

TEST_CASE("perturbed coefficients fail verification") {
    WeightSystem ws = fano_system({2, 2});
    SupportSet C = fano_sup(ws);
    std::vector<Rat> F(C.points.size(), Rat(1));
    auto A = forward_coefficients(C, ws, F);
    for (auto& [w, value] : A) ws.set_a(w, value);
    std::vector<double> good(C.points.size(), 1.0);
    CHECK(verify(C, good, ws, 1e-9).pass);
    std::vector<double> bad = good;
    bad[1] += 1e-3;
    CHECK(!verify(C, bad, ws, 1e-9).pass);
    std::vector<double> flipped = good;
    flipped[1] = -flipped[1];
    CHECK(!verify(C, flipped, ws, 1e-9).pass);
}

TEST_CASE("edge analysis demands orthogonality on interior-free support edges") {
    // the case-4 contradiction: both endpoints in the support, no interior
    // weight, and J = 1/4
    std::vector<Weight> w{classify_weight({1, -2, 0, 0}),  classify_weight({1, 0, -2, 0}),
                          classify_weight({-2, 1, 0, 0}),  classify_weight({-2, 0, 1, 0}),
                          classify_weight({1, -1, -1, 0}), classify_weight({-1, 1, -1, 0}),
                          classify_weight({-1, -1, 1, 0}), classify_weight({0, 0, 0, -1}),
                          classify_weight({-1, 0, 0, 0}),  classify_weight({0, -1, 0, 0}),
                          classify_weight({0, 0, -1, 0})};
    WeightSystem ws(DimVector({4, 2, 2, 9}), std::move(w));
    SupportSet C;
    C.points = {classify_weight({1, -2, 0, 0}).qvec(), classify_weight({-1, -1, 1, 0}).qvec()};
    auto rep = edge_interior_analysis(classify_weight({1, -2, 0, 0}),
                                      classify_weight({-1, -1, 1, 0}), C, ws);
    CHECK(rep.kind == EdgeAnalysis::Kind::ORTHOGONALITY_REQUIRED);
    CHECK(rep.j_value == Rat(1, 4));
    CHECK(rep.contradiction);
}

TEST_CASE("edge analysis with a unique type II midpoint") {
    WeightSystem ws(DimVector({3, 3, 4}),
                    {classify_weight({1, -2, 0}), classify_weight({-2, 1, 0}),
                     classify_weight({-1, 0, 0}), classify_weight({0, -1, 0}),
                     classify_weight({0, 0, -1}), classify_weight({1, -1, -1}),
                     classify_weight({-1, 1, -1}), classify_weight({-1, -1, 1})});
    SupportSet C;
    C.points = {classify_weight({1, -1, -1}).qvec(), classify_weight({-1, 1, -1}).qvec()};
    auto rep = edge_interior_analysis(classify_weight({1, -1, -1}),
                                      classify_weight({-1, 1, -1}), C, ws);
    // midpoint (0,0,-1) is type I, so no sign constraint arises here
    CHECK(rep.kind == EdgeAnalysis::Kind::NONE);
}
