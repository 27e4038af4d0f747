#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spclass/projection.hpp"

#include <iostream>
#include <set>

using namespace spc;

namespace {

WeightSystem case4_system() {
    // d = (4,2,2,9): both type III pairs, the type II closure triple, and all
    // type I vectors (present since every summand has dimension > 1)
    std::vector<Weight> w{classify_weight({1, -2, 0, 0}),  classify_weight({1, 0, -2, 0}),
                          classify_weight({-2, 1, 0, 0}),  classify_weight({-2, 0, 1, 0}),
                          classify_weight({1, -1, -1, 0}), classify_weight({-1, 1, -1, 0}),
                          classify_weight({-1, -1, 1, 0}), classify_weight({0, 0, 0, -1}),
                          classify_weight({-1, 0, 0, 0}),  classify_weight({0, -1, 0, 0}),
                          classify_weight({0, 0, -1, 0})};
    return WeightSystem(DimVector({4, 2, 2, 9}), std::move(w));
}

QVector qv(std::vector<int> e) { return QVector::from_ints(e); }

}  // namespace

TEST_CASE("anchor registry is closed and well-formed") {
    CHECK(known_anchor("halfspace-sign"));
    CHECK(known_anchor("edge-orthogonality"));
    CHECK(!known_anchor("made-up-anchor"));
    std::set<std::string> uniq(anchor_registry().begin(), anchor_registry().end());
    CHECK(uniq.size() == anchor_registry().size());
}

TEST_CASE("counting bounds") {
    CHECK(counting_bound(2, 0, 1, true) == 5);
    CHECK(counting_bound(0, 0, 0, true) == 2);
    CHECK(counting_bound(0, 1, 0, false) == 2);
}

TEST_CASE("fano candidates enumerate and classify") {
    for (std::vector<long> rest : {std::vector<long>{2}, {2, 2}, {2, 3, 2}}) {
        WeightSystem ws = fano_system(rest);
        auto cand = enumerate_null_candidates(ws);
        bool found = false;
        for (const NullCandidate& c : cand.rational) {
            if (c.c == type_i(0, ws.r()).qvec()) {
                found = true;
                auto res = classify_candidate(ws, c.c);
                CHECK(!res.eliminated);
                CHECK(res.fano);
                // every projected vertex is edge-collinear
                for (const auto& vc : res.vertices) CHECK(vc.tag == VertexClass::Tag::Two);
                CHECK(res.two_count == ws.r() - 1);
            }
        }
        CHECK(found);
    }
}

TEST_CASE("orthogonal set of the case-4 mirror") {
    // a = (-4/3, 2/3, 2/3, -1) pairs with exactly the two repeated-slot IIIs
    WeightSystem ws = case4_system();
    QVector a({Rat(-4, 3), Rat(2, 3), Rat(2, 3), Rat(-1)});
    auto one_a = enumerate_1A(ws, a);
    std::set<std::vector<int>> got;
    for (int k : one_a) got.insert(ws.weights[static_cast<std::size_t>(k)].entries);
    std::set<std::vector<int>> expect{{-2, 1, 0, 0}, {-2, 0, 1, 0}};
    CHECK(got == expect);
}

TEST_CASE("doubled vertex of the case-4 candidate") {
    WeightSystem ws = case4_system();
    QVector c({Rat(4, 3), Rat(-2, 3), Rat(-2, 3), Rat(-1)});
    REQUIRE(is_null(c, ws.d));
    auto one_b = enumerate_1B(ws, c);
    REQUIRE(one_b.size() == 1);
    CHECK(ws.weights[static_cast<std::size_t>(one_b[0].first)].entries ==
          std::vector<int>{0, 0, 0, -1});
    CHECK(one_b[0].second == QVector({Rat(-4, 3), Rat(2, 3), Rat(2, 3), Rat(-1)}));
    CHECK(is_null(one_b[0].second, ws.d));
}

TEST_CASE("case-4 candidate is eliminated through the edge pairing") {
    WeightSystem ws = case4_system();
    QVector c({Rat(4, 3), Rat(-2, 3), Rat(-2, 3), Rat(-1)});
    auto res = classify_candidate(ws, c);
    CHECK(res.eliminated);
    CHECK(res.why.anchor == "edge-orthogonality");
}

TEST_CASE("case-3 candidate at r=5 is eliminated") {
    // d = (2,2,2,2,9); the candidate pairs with its mirror across the system
    std::vector<Weight> w{classify_weight({1, -2, 0, 0, 0}),  classify_weight({1, 0, -2, 0, 0}),
                          classify_weight({-2, 1, 0, 0, 0}),  classify_weight({0, 1, 0, -2, 0}),
                          classify_weight({1, -1, -1, 0, 0}), classify_weight({-1, 1, -1, 0, 0}),
                          classify_weight({-1, -1, 1, 0, 0}), classify_weight({0, 0, 0, 0, -1}),
                          classify_weight({-1, 0, 0, 0, 0}),  classify_weight({0, -1, 0, 0, 0}),
                          classify_weight({0, 0, -1, 0, 0}),  classify_weight({0, 0, 0, -1, 0})};
    WeightSystem ws(DimVector({2, 2, 2, 2, 9}), std::move(w));
    QVector c({Rat(2, 3), Rat(-2, 3), Rat(-2, 3), Rat(2, 3), Rat(-1)});
    REQUIRE(is_null(c, ws.d));
    auto res = classify_candidate(ws, c);
    CHECK(res.eliminated);
}

TEST_CASE("integral candidates with two orthogonal weights are rejected") {
    // c = (0,1,-2,...) style candidates admit at most one orthogonal weight
    WeightSystem ws = case4_system();
    QVector a({Rat(-4, 3), Rat(2, 3), Rat(2, 3), Rat(-1)});
    CHECK(enumerate_1A(ws, a).size() == 2);  // non-integral: fine
}

TEST_CASE("s_hat counts repeated -2 slots") {
    WeightSystem ws = case4_system();
    QVector a({Rat(-4, 3), Rat(2, 3), Rat(2, 3), Rat(-1)});
    SHatSets sh = s_hat(ws, a);
    CHECK(sh.s_ge2 == std::vector<int>{0});
    CHECK(sh.consistent);  // d_1 = 4
    WeightSystem bad(DimVector({5, 2, 2, 9}), ws.weights);
    // same orthogonality pattern cannot arise for d_1 = 5, but force the check
    SHatSets sh2 = s_hat(bad, a);
    if (sh2.s_ge2 == std::vector<int>{0}) CHECK(!sh2.consistent);
}

TEST_CASE("class-1a matching") {
    WeightSystem ws = case4_system();
    QVector a({Rat(-4, 3), Rat(2, 3), Rat(2, 3), Rat(-1)});
    auto m = class1a_match(ws, a, enumerate_1A(ws, a));
    REQUIRE(m.has_value());
    CHECK(m->tag == "1");
    CHECK(m->m == 3);

    // configuration (1) with the full index range is excluded
    std::vector<Weight> w3{classify_weight({-2, 1, 0}), classify_weight({-2, 0, 1}),
                           classify_weight({0, 0, -1})};
    WeightSystem full(DimVector({4, 2, 2}), w3);
    std::vector<int> all{0, 1};
    CHECK(!class1a_match(full, a, all).has_value());  // m == r

    // empty set matches trivially
    CHECK(class1a_match(ws, a, {}).has_value());
}

TEST_CASE("case-3 orthogonal configuration") {
    // the (1^1,-2^2),(1^1,-2^3),(-1^2,-1^3,1^i) picture with d = (1,2,2,...)
    std::vector<Weight> w{classify_weight({1, -2, 0, 0, 0}), classify_weight({1, 0, -2, 0, 0}),
                          classify_weight({0, -1, -1, 1, 0})};
    WeightSystem ws(DimVector({1, 2, 2, 3, 9}), w, false);
    std::vector<int> idx{0, 1, 2};
    auto m = class1a_match(ws, qv({0, 0, 0, 0, -1}), idx);
    REQUIRE(m.has_value());
    CHECK(m->tag == "3i");
}

TEST_CASE("surd candidates run the bounding filters") {
    // a segment with an interior point and an irrational nullity root
    std::vector<Weight> w{classify_weight({1, -2, 0}), classify_weight({-2, 1, 0}),
                          classify_weight({-1, 0, 0}), classify_weight({0, -1, 0})};
    WeightSystem ws(DimVector({5, 7, 3}), w, false);
    auto cand = enumerate_null_candidates(ws);
    for (const SurdCandidate& sc : cand.surd) {
        auto res = classify_surd_candidate(ws, sc);
        (void)res;  // either outcome is legal; the call must be exact and total
    }
    CHECK(true);
}
