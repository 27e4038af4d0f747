#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spclass/weights.hpp"

using namespace spc;

TEST_CASE("classify_weight recognizes the three shapes") {
    CHECK(classify_weight({-1, 0, 0}).type == WType::I);
    CHECK(classify_weight({1, -1, -1, 0}).type == WType::II);
    CHECK(classify_weight({-2, 1, 0}).type == WType::III);
    CHECK_THROWS_AS(classify_weight({0, -3, 2}), not_a_weight_error);
    CHECK_THROWS_AS(classify_weight({1, -1, 0}), not_a_weight_error);
    CHECK_THROWS_AS(classify_weight({-1, -1, 1, -1, 1}), not_a_weight_error);
}

TEST_CASE("constructors round-trip through classify_weight") {
    for (int r = 3; r <= 6; ++r) {
        CHECK(classify_weight(type_i(1, r).entries).type == WType::I);
        CHECK(classify_weight(type_ii(0, 1, 2, r).entries).type == WType::II);
        CHECK(classify_weight(type_iii(2, 0, r).entries).type == WType::III);
    }
}

TEST_CASE("fano systems validate cleanly") {
    for (std::vector<long> rest : {std::vector<long>{2}, {2, 3}, {4, 4, 4}, {2, 3, 4, 5}}) {
        WeightSystem ws = fano_system(rest);
        CHECK(validate(ws).empty());
        CHECK(fano_pivot(ws) == 0);
        CHECK(static_cast<int>(ws.weights.size()) == 2 * (ws.r() - 1));
    }
    CHECK_THROWS_AS(fano_system({}), dimension_error);
}

TEST_CASE("fano r=2 shape") {
    WeightSystem ws = fano_system({2});
    CHECK(ws.d.dims() == std::vector<long>{1, 2});
    CHECK(ws.contains({0, -1}));
    CHECK(ws.contains({1, -2}));
    // (-1, 0) is null whenever d1 = 1
    CHECK(is_null(QVector::from_ints({-1, 0}), ws.d));
}

TEST_CASE("fano r=3 weight set") {
    WeightSystem ws = fano_system({2, 2});
    CHECK(ws.contains({0, -1, 0}));
    CHECK(ws.contains({0, 0, -1}));
    CHECK(ws.contains({1, -2, 0}));
    CHECK(ws.contains({1, 0, -2}));
    CHECK(ws.weights.size() == 4);
}

TEST_CASE("type II permutation closure") {
    WeightSystem ws(DimVector({2, 2, 2}), {classify_weight({1, -1, -1})});
    auto v = validate(ws);
    REQUIRE(v.size() == 2);
    CHECK(v[0].code == "type2-closure");
    WeightSystem closed(DimVector({2, 2, 2}),
                        {classify_weight({1, -1, -1}), classify_weight({-1, 1, -1}),
                         classify_weight({-1, -1, 1})});
    CHECK(validate(closed).empty());
}

TEST_CASE("dimension-1 exclusions") {
    WeightSystem bad(DimVector({1, 2, 2}), {classify_weight({-2, 1, 0})});
    auto v = validate(bad);
    REQUIRE(!v.empty());
    CHECK(v[0].code == "dim1-type3");

    std::vector<Weight> closure{classify_weight({1, -1, -1}), classify_weight({-1, 1, -1}),
                                classify_weight({-1, -1, 1})};
    WeightSystem conn(DimVector({1, 2, 2}), closure, true);
    bool saw = false;
    for (const auto& viol : validate(conn)) saw = saw || viol.code == "dim1-type2";
    CHECK(saw);
    WeightSystem disc(DimVector({1, 2, 2}), closure, false);
    for (const auto& viol : validate(disc)) CHECK(viol.code != "dim1-type2");
}

TEST_CASE("coefficient signs follow the type") {
    WeightSystem ws = fano_system({2, 2});
    ws.set_a({0, -1, 0}, Rat(1, 2));
    ws.set_a({1, -2, 0}, Rat(-1, 2));
    CHECK(validate(ws).empty());
    ws.set_a({0, 0, -1}, Rat(-1));  // wrong sign for type I
    bool saw = false;
    for (const auto& viol : validate(ws)) saw = saw || viol.code == "coeff-sign";
    CHECK(saw);
}

TEST_CASE("every weight sums to -1 by construction") {
    for (const Weight& w :
         {type_i(0, 4), type_ii(1, 0, 3, 4), type_iii(3, 2, 4)}) {
        int s = 0;
        for (int e : w.entries) s += e;
        CHECK(s == -1);
    }
}
