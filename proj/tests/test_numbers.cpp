#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spclass/linalg.hpp"
#include "spclass/numbers.hpp"

#include <random>

using namespace spc;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-1.5") == Rat(-3, 2));
    CHECK(parse_rational("12") == Rat(12));
    CHECK(parse_rational("0.125") == Rat(1, 8));
    CHECK(parse_rational("-4/6") == Rat(-2, 3));
    CHECK(to_string(Rat(-2, 3)) == "-2/3");
    CHECK(to_string(Rat(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
    CHECK_THROWS_AS(parse_rational("abc"), parse_error);
}

TEST_CASE("square extraction") {
    auto [s, f] = extract_square(Int(72));
    CHECK(s == 6);
    CHECK(f == 2);
    auto [s2, f2] = extract_square(Int(49));
    CHECK(s2 == 7);
    CHECK(f2 == 1);
    CHECK(is_perfect_square(Int(144)));
    CHECK(!is_perfect_square(Int(145)));
}

TEST_CASE("quad arithmetic and ordering") {
    Quad x(Rat(1), Rat(1), Int(2));  // 1 + sqrt(2)
    Quad y(Rat(3), Rat(-1), Int(2)); // 3 - sqrt(2)
    CHECK((x + y) == Quad(Rat(4)));
    CHECK((x * y).rat_part() == Rat(1));   // (1+s)(3-s) = 1 + 2 sqrt(2)
    CHECK((x * y).surd_part() == Rat(2));
    CHECK(x > Quad(Rat(2)));
    CHECK(x < Quad(Rat(5, 2)));
    Quad inv = Quad(Rat(1)) / x;  // 1/(1+sqrt 2) = sqrt2 - 1
    CHECK(inv.rat_part() == Rat(-1));
    CHECK(inv.surd_part() == Rat(1));
    CHECK((x * inv) == Quad(Rat(1)));
    // radicand normalization: sqrt(8) = 2 sqrt(2)
    Quad z(Rat(0), Rat(1), Int(8));
    CHECK(z.radicand() == 2);
    CHECK(z.surd_part() == Rat(2));
    // rational collapse: sqrt(9) = 3
    Quad w(Rat(1), Rat(2), Int(9));
    CHECK(w.is_rational());
    CHECK(w.as_rational() == Rat(7));
}

TEST_CASE("quad sign against doubles") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-20, 20), den(1, 9), rad(2, 50);
    for (int it = 0; it < 500; ++it) {
        Rat a(num(rng), den(rng)), b(num(rng), den(rng));
        Int d(rad(rng));
        Quad q(a, b, d);
        double v = q.to_double();
        if (std::abs(v) > 1e-9) CHECK(q.sign() == (v > 0 ? 1 : -1));
    }
}

TEST_CASE("quadratic roots") {
    // x^2 - 3x + 2: roots 1, 2
    auto roots = Quad::quadratic_roots(Rat(1), Rat(-3), Rat(2));
    REQUIRE(roots.has_value());
    CHECK(roots->first == Quad(Rat(1)));
    CHECK(roots->second == Quad(Rat(2)));
    // x^2 - 2: roots +-sqrt(2)
    auto r2 = Quad::quadratic_roots(Rat(1), Rat(0), Rat(-2));
    REQUIRE(r2.has_value());
    CHECK(r2->second.radicand() == 2);
    CHECK((r2->second * r2->second) == Quad(Rat(2)));
    CHECK(!Quad::quadratic_roots(Rat(1), Rat(0), Rat(1)).has_value());
    // negative leading coefficient keeps ordering
    auto r3 = Quad::quadratic_roots(Rat(-2), Rat(6), Rat(-4));
    REQUIRE(r3.has_value());
    CHECK(r3->first == Quad(Rat(1)));
    CHECK(r3->second == Quad(Rat(2)));
}

TEST_CASE("linear algebra over rationals") {
    Mat<Rat> a{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
    auto x = solve_linear(a, Vec<Rat>{Rat(5), Rat(11)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rat(1));
    CHECK((*x)[1] == Rat(2));
    CHECK(matrix_rank(Mat<Rat>{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
    auto none = solve_linear(Mat<Rat>{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}},
                             Vec<Rat>{Rat(0), Rat(1)});
    CHECK(!none.has_value());

    auto aff = solve_affine(Mat<Rat>{{Rat(1), Rat(1), Rat(0)}}, Vec<Rat>{Rat(2)});
    REQUIRE(aff.has_value());
    CHECK(aff->second.size() == 2);
}

TEST_CASE("symmetric inertia") {
    Mat<Rat> diag{{Rat(2), Rat(0)}, {Rat(0), Rat(-3)}};
    auto [p, n, z] = symmetric_inertia(diag);
    CHECK(p == 1);
    CHECK(n == 1);
    CHECK(z == 0);
    // zero diagonal, hyperbolic plane
    Mat<Rat> hyp{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    auto [p2, n2, z2] = symmetric_inertia(hyp);
    CHECK(p2 == 1);
    CHECK(n2 == 1);
    CHECK(z2 == 0);
    Mat<Rat> sing{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
    auto [p3, n3, z3] = symmetric_inertia(sing);
    CHECK(p3 == 1);
    CHECK(n3 == 0);
    CHECK(z3 == 1);
}
