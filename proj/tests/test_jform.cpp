#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spclass/jform.hpp"
#include "spclass/linalg.hpp"

#include <random>

using namespace spc;

namespace {

QVector qv(std::vector<int> e) { return QVector::from_ints(e); }

// Random vector of given length summing to -1.
QVector random_level_vec(std::mt19937& rng, int r) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    std::vector<Rat> e;
    Rat sum(0);
    for (int i = 0; i + 1 < r; ++i) {
        Rat x(num(rng), den(rng));
        e.push_back(x);
        sum += x;
    }
    e.push_back(Rat(-1) - sum);
    return QVector(std::move(e));
}

DimVector random_dims(std::mt19937& rng, int rmin = 2, int rmax = 8, int dmax = 20) {
    std::uniform_int_distribution<int> rd(rmin, rmax);
    int r = rd(rng);
    std::uniform_int_distribution<int> dd(1, dmax);
    std::vector<long> dims;
    for (int i = 0; i < r; ++i) dims.push_back(dd(rng));
    return DimVector(std::move(dims));
}

}  // namespace

TEST_CASE("wdw_form basics") {
    DimVector d({1, 1});
    QVector p = qv({1, 0});
    CHECK(wdw_form(p, p, d) == Rat(0));

    // shifted null vector for d1 = 1: d + c with c = (-1, 0, ...)
    DimVector d2({1, 3, 4});
    QVector shifted({Rat(0), Rat(3), Rat(4)});
    CHECK(wdw_form(shifted, shifted, d2) == Rat(0));

    CHECK_THROWS_AS(wdw_form(qv({1, 0, 0}), qv({1, 0}), DimVector({1, 1})), dimension_error);
    CHECK_THROWS_AS(DimVector({1}), dimension_error);
}

TEST_CASE("j_shifted matches wdw_form on shifted vectors") {
    std::mt19937 rng(11);
    for (int it = 0; it < 1000; ++it) {
        DimVector d = random_dims(rng);
        QVector v = random_level_vec(rng, d.r());
        QVector w = random_level_vec(rng, d.r());
        std::vector<Rat> sv, sw;
        for (int i = 0; i < d.r(); ++i) {
            sv.push_back(Rat(d[i]) + v[i]);
            sw.push_back(Rat(d[i]) + w[i]);
        }
        CHECK(wdw_form(QVector(sv), QVector(sw), d) == j_shifted(v, w, d));
    }
}

TEST_CASE("j_shifted closed forms") {
    // v = (-2,1,0), w = (0,-2,1): 1 + 2/d2
    DimVector d({3, 5, 7});
    CHECK(j_shifted(qv({-2, 1, 0}), qv({0, -2, 1}), d) == Rat(1) + Rat(2, 5));
    // v = (-2,1,0), w = (-1,-1,1): 1 - 2/d1 + 1/d2
    CHECK(j_shifted(qv({-2, 1, 0}), qv({-1, -1, 1}), d) == Rat(1) - Rat(2, 3) + Rat(1, 5));
    // type I with d_i = 1 is null
    DimVector d1({1, 4});
    CHECK(j_shifted(qv({-1, 0}), qv({-1, 0}), d1) == Rat(0));
    CHECK_THROWS_AS(j_shifted(QVector({Rat(1), Rat(1)}), qv({-1, 0}), d1), level_error);
}

TEST_CASE("j_bar values") {
    // disjoint type IIIs: 1/4
    DimVector d({2, 3, 4, 5});
    BarPoint x(qv({-2, 1, 0, 0}), d);
    BarPoint y(qv({0, 0, -2, 1}), d);
    CHECK(j_bar(x, y) == Rat(1, 4));
    // bar of a null c against itself
    DimVector df({1, 6});
    BarPoint c(qv({-1, 0}), df);
    CHECK(j_bar(c, c) == Rat(0));
    // fano r=2: c=(-1,0), b=(1,-2), d=(1,d2): j_bar = (1+1)/4
    BarPoint b(qv({1, -2}), df);
    CHECK(j_bar(c, b) == Rat(1, 2));
}

TEST_CASE("barred coordinates land on the (n-1)/2 plane") {
    DimVector d({1, 2, 9});
    BarPoint b(qv({1, -2, 0}), d);
    auto e = b.barred();
    Rat sum(0);
    for (const Rat& x : e) sum += x;
    CHECK(sum == Rat(d.n() - 1, 2));
    CHECK(e[0] == Rat(1));
    CHECK(e[1] == Rat(0));
    CHECK(e[2] == Rat(9, 2));
}

TEST_CASE("nullity examples") {
    CHECK(is_null(QVector({Rat(-4, 3), Rat(2, 3), Rat(2, 3), Rat(-1)}), DimVector({4, 2, 2, 9})));
    CHECK(is_null(QVector({Rat(2, 3), Rat(-2, 3), Rat(-2, 3), Rat(2, 3), Rat(-1)}),
                  DimVector({2, 2, 2, 2, 9})));
    CHECK(!is_null(qv({-1, 0}), DimVector({2, 1})));
}

TEST_CASE("orthogonality examples") {
    DimVector d({4, 2, 2, 9});
    QVector a({Rat(-4, 3), Rat(2, 3), Rat(2, 3), Rat(-1)});
    CHECK(is_orthogonal_bar(qv({-2, 1, 0, 0}), a, d));
    CHECK(is_orthogonal_bar(qv({-2, 0, 1, 0}), a, d));
    CHECK(!is_orthogonal_bar(qv({0, 0, 0, -1}), a, d));
}

TEST_CASE("overlap") {
    CHECK(overlap(qv({1, -2, 0}), qv({0, -1, 0})));
    CHECK(!overlap(qv({-1, 0, 0}), qv({0, -1, 0})));
    CHECK(!overlap(qv({-2, 1, 0, 0, 0, 0}), QVector({Rat(0), Rat(0), Rat(-2), Rat(1), Rat(0), Rat(0)})));
}

TEST_CASE("bilinearity and symmetry") {
    std::mt19937 rng(23);
    for (int it = 0; it < 200; ++it) {
        DimVector d = random_dims(rng, 2, 5, 9);
        QVector p = random_level_vec(rng, d.r());
        QVector q = random_level_vec(rng, d.r());
        CHECK(wdw_form(p, q, d) == wdw_form(q, p, d));
        std::vector<Rat> sum2;
        for (int i = 0; i < d.r(); ++i) sum2.push_back(p[i] + q[i]);
        QVector s(sum2);
        CHECK(wdw_form(s, s, d) ==
              wdw_form(p, p, d) + 2 * wdw_form(p, q, d) + wdw_form(q, q, d));
    }
}

TEST_CASE("gram signature is (1, r-1)") {
    std::mt19937 rng(37);
    for (int it = 0; it < 200; ++it) {
        DimVector d = random_dims(rng);
        auto [pos, neg, zero] = symmetric_inertia(wdw_gram(d));
        CHECK(pos == 1);
        CHECK(neg == d.r() - 1);
        CHECK(zero == 0);
    }
}

TEST_CASE("null tangency and the two-sided sign law") {
    // any x != c orthogonal to a null c has j(x,x) < 0;
    // j >= 0 vectors pair nonnegatively, vanishing only on equal null pairs.
    std::mt19937 rng(41);
    int built = 0;
    while (built < 100) {
        DimVector d = random_dims(rng, 2, 6, 9);
        if (d[0] != 1) continue;  // rational points via the (-1,0,...) chart
        QVector c0 = QVector::from_ints([&] {
            std::vector<int> e(static_cast<std::size_t>(d.r()), 0);
            e[0] = -1;
            return e;
        }());
        QVector dir = [&] {
            std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
            std::vector<Rat> e;
            Rat sum(0);
            for (int i = 0; i + 1 < d.r(); ++i) {
                Rat x(num(rng), den(rng));
                e.push_back(x);
                sum += x;
            }
            e.push_back(-sum);
            return QVector(e);
        }();
        // c0 + t dir crosses the ellipsoid at t = 0 and one rational t.
        Rat a(0), b(0);
        for (int i = 0; i < d.r(); ++i) {
            a += dir[i] * dir[i] / Rat(d[i]);
            b += 2 * c0[i] * dir[i] / Rat(d[i]);
        }
        if (a.is_zero() || b.is_zero()) continue;
        Rat t = -b / a;
        std::vector<Rat> ce;
        for (int i = 0; i < d.r(); ++i) ce.push_back(c0[i] + t * dir[i]);
        QVector c(ce);
        REQUIRE(is_null(c, d));
        ++built;
        // orthogonal companion: solve sum x_i c_i / d_i = 1 on the level plane
        std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
        for (int attempt = 0; attempt < 20; ++attempt) {
            std::vector<Rat> x(static_cast<std::size_t>(d.r()));
            for (int i = 2; i < d.r(); ++i) x[static_cast<std::size_t>(i)] = Rat(num(rng), den(rng));
            // two linear conditions on x0, x1
            // x0 + x1 = -1 - rest ; x0 c0/d0 + x1 c1/d1 = 1 - rest.
            Rat s1(-1), s2(1);
            for (int i = 2; i < d.r(); ++i) {
                s1 -= x[static_cast<std::size_t>(i)];
                s2 -= x[static_cast<std::size_t>(i)] * c[i] / Rat(d[i]);
            }
            Rat a00(1), a01(1), a10 = c[0] / Rat(d[0]), a11 = c[1] / Rat(d[1]);
            Rat det = a00 * a11 - a01 * a10;
            if (det.is_zero()) continue;
            x[0] = (s1 * a11 - a01 * s2) / det;
            x[1] = (a00 * s2 - s1 * a10) / det;
            QVector xv(x);
            REQUIRE(is_orthogonal_bar(xv, c, d));
            if (xv == c) continue;
            CHECK(j_shifted(xv, xv, d) < Rat(0));
            break;
        }
        // sign law on pairs of null vectors
        if (built > 1) {
            CHECK(j_shifted(c, c0, d) >= Rat(0));
        }
    }
}
