#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spclass/diophantine.hpp"

using namespace spc;

namespace {

FracSystem make(int nvars, std::vector<std::pair<std::vector<long>, Rat>> eqs) {
    FracSystem sys;
    sys.nvars = nvars;
    for (auto& [coeffs, rhs] : eqs) {
        FracEquation eq;
        for (long c : coeffs) eq.coeffs.emplace_back(c);
        eq.rhs = rhs;
        sys.equations.push_back(std::move(eq));
    }
    return sys;
}

}  // namespace

TEST_CASE("unit fraction pairs at 1/4") {
    auto t = unit_fraction_tuples(Rat(1, 4), 2);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == std::vector<long>{5, 20});
    CHECK(t[1] == std::vector<long>{6, 12});
    CHECK(t[2] == std::vector<long>{8, 8});
}

TEST_CASE("unit fraction triples summing to 1") {
    auto t = unit_fraction_tuples(Rat(1), 3);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == std::vector<long>{2, 3, 6});
    CHECK(t[1] == std::vector<long>{2, 4, 4});
    CHECK(t[2] == std::vector<long>{3, 3, 3});
}

TEST_CASE("single equation enumeration") {
    // 4/d1 + 1/d2 = 3 forces (2, 1)
    auto sys = make(2, {{{4, 1}, Rat(3)}});
    auto res = solve_fracsystem(sys, 64);
    REQUIRE(res.solutions.size() == 1);
    CHECK(res.solutions[0] == std::vector<long>{2, 1});
}

TEST_CASE("pair family detection") {
    // 1/d1 + 1/d2 = 1/4, nothing else
    auto sys = make(2, {{{1, 1}, Rat(1, 4)}});
    auto res = solve_fracsystem(sys, 64);
    REQUIRE(res.families.size() == 1);
    CHECK(res.families[0].vars == std::vector<int>{0, 1});
    CHECK(res.families[0].target == Rat(1, 4));
    // within the bound: ordered pairs
    CHECK(res.solutions.size() == 5);  // (5,20),(20,5),(6,12),(12,6),(8,8)
}

TEST_CASE("inconsistent system is empty") {
    auto sys = make(2, {{{1, 1}, Rat(1, 2)}, {{2, 2}, Rat(2)}});
    auto res = solve_fracsystem(sys, 64);
    CHECK(res.solutions.empty());
    CHECK(res.families.empty());
}

TEST_CASE("forced values mix with a family") {
    // 1/d1 = 1/2; 1/d2 + 1/d3 = 1/4
    auto sys = make(3, {{{1, 0, 0}, Rat(1, 2)}, {{0, 1, 1}, Rat(1, 4)}});
    auto res = solve_fracsystem(sys, 20);
    REQUIRE(res.families.size() == 1);
    CHECK(res.families[0].vars == std::vector<int>{1, 2});
    // d1 = 2 everywhere, ordered pairs within 20: (5,20),(20,5),(6,12),(12,6),(8,8)
    CHECK(res.solutions.size() == 5);
    for (const auto& s : res.solutions) CHECK(s[0] == 2);
}

TEST_CASE("unconstrained variables reported") {
    auto sys = make(3, {{{1, 1, 0}, Rat(1)}});
    auto res = solve_fracsystem(sys, 10);
    REQUIRE(res.unconstrained.size() == 1);
    CHECK(res.unconstrained[0] == 2);
    for (const auto& s : res.solutions) CHECK(s[2] == 1);
}
