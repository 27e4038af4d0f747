#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spclass/catalog.hpp"
#include "spclass/jform.hpp"

#include <map>
#include <random>
#include <set>

using namespace spc;

namespace {

std::vector<Rat> rat3(const std::vector<int>& v) {
    std::vector<Rat> out;
    for (int x : v) out.emplace_back(x, 3);
    return out;
}

std::vector<Rat> rat1(const std::vector<int>& v) {
    std::vector<Rat> out;
    for (int x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("catalog counts") {
    int hex = 0, square = 0, trap = 0, par = 0, nonface = 0, tri = 0;
    for (const FaceShape& s : catalog()) {
        switch (s.kind) {
            case FaceShape::HEXAGON: ++hex; break;
            case FaceShape::SQUARE: ++square; break;
            case FaceShape::TRAPEZIUM: ++trap; break;
            case FaceShape::PARALLELOGRAM: ++par; break;
            case FaceShape::NONFACE_TRAPEZIUM: ++nonface; break;
            default: ++tri;
        }
    }
    CHECK(hex == 3);
    CHECK(square == 1);
    CHECK(trap == 6);
    CHECK(par == 17);
    CHECK(nonface == 3);
    CHECK(tri == 28);
    CHECK(shape("T*2").never_face);
    CHECK(!shape("T3").never_face);
}

TEST_CASE("quadrilateral role relations") {
    for (const FaceShape& s : catalog()) {
        if (s.kind == FaceShape::TRAPEZIUM) {
            // 2v - s = 2u - w and the extra point is (s + w)/2
            for (int i = 0; i < s.ncols; ++i) {
                CHECK(2 * s.verts[0][i] - s.verts[2][i] == 2 * s.verts[1][i] - s.verts[3][i]);
                CHECK(2 * s.extras[0][i] == s.verts[2][i] + s.verts[3][i]);
            }
        }
        if (s.kind == FaceShape::PARALLELOGRAM || s.kind == FaceShape::SQUARE) {
            for (int i = 0; i < s.ncols; ++i)
                CHECK(s.verts[0][i] - s.verts[1][i] == s.verts[2][i] - s.verts[3][i]);
        }
    }
}

TEST_CASE("triangle tables reproduce the tabulated outer vectors") {
    // split rows carry 3c / 3a / 3a'; straddled rows carry c / a / a'.
    std::map<std::string, std::array<std::vector<Rat>, 3>> expected;
    expected["Tr1"] = {rat3({2, -1, -8, 2, 2}), rat3({-2, 1, -4, 4, -2}), rat3({-2, 1, -4, -2, 4})};
    expected["Tr2"] = {rat3({2, 3, -6, -2}), rat3({-2, 3, -6, 2}), rat3({-2, 3, 0, -4})};
    expected["Tr3"] = {rat3({-4, 4, -4, 2, -1}), rat3({-8, 2, 4, -2, 1}), rat3({4, 2, -8, -2, 1})};
    expected["Tr4"] = {rat3({2, -1, -4, 4, -2, -2}), rat3({-2, 1, -8, 2, 2, 2}),
                       rat3({-2, 1, 4, 2, -4, -4})};
    expected["Tr5"] = {rat3({2, 3, -4, -2, -2}), rat3({-2, 3, -2, 2, -4}), rat3({-2, 3, -2, -4, 2})};
    expected["Tr6"] = {rat3({2, -1, 4, -4, -2, -2}), rat3({-2, 1, 2, -2, -4, 2}),
                       rat3({-2, 1, 2, -2, 2, -4})};
    expected["Tr7"] = {rat3({2, -1, 0, -4, -2, 2}), rat3({-2, 1, 6, -2, -4, -2}),
                       rat3({-2, 1, -6, -2, 2, 4})};
    expected["Tr8"] = {rat3({2, -1, -4, -4, 2, 2}), rat3({-2, 1, -2, -2, 4, -2}),
                       rat3({-2, 1, -2, -2, -2, 4})};
    expected["Tr9"] = {rat3({2, -1, 4, -2, -2, -2, -2}), rat3({-2, 1, 2, -4, -4, 2, 2}),
                       rat3({-2, 1, 2, 2, 2, -4, -4})};
    expected["Tr10"] = {rat3({2, -1, -4, 2, -2, 2, -2}), rat3({-2, 1, -2, 4, -4, -2, 2}),
                        rat3({-2, 1, -2, -2, 2, 4, -4})};
    expected["Tr11"] = {rat3({-8, 2, 2, -1, 1, 1}), rat3({-4, 4, -2, 1, -1, -1}),
                        rat3({-4, -2, 4, 1, -1, -1})};
    expected["Tr12"] = {rat3({-6, 3, -2, 1, 1}), rat3({-6, 3, 2, -1, -1}), rat3({0, 3, -4, -1, -1})};
    expected["Tr13"] = {rat3({-4, 4, -4, 1, 1, -1}), rat3({-8, 2, 4, -1, -1, 1}),
                        rat3({4, 2, -8, -1, -1, 1})};
    expected["Tr14"] = {rat3({-4, 4, -2, -2, 1, 1, -1}), rat3({4, 2, -4, -4, -1, -1, 1}),
                        rat3({-8, 2, 2, 2, -1, -1, 1})};
    expected["Tr15"] = {rat3({4, -4, -2, -1, 1, 1, -2}), rat3({2, -2, -4, 1, -1, -1, 2}),
                        rat3({2, -2, 2, 1, -1, -1, -4})};
    expected["Tr16"] = {rat3({2, -4, 0, -1, 1, 1, -2}), rat3({4, -2, -6, 1, -1, -1, 2}),
                        rat3({-2, -2, 6, 1, -1, -1, -4})};
    expected["Tr17"] = {rat3({2, -4, -4, -1, 1, 1, 2}), rat3({4, -2, -2, 1, -1, -1, -2}),
                        rat3({-2, -2, -2, 1, -1, -1, 4})};
    expected["Tr18"] = {rat3({4, -2, -2, -1, 1, 1, -2, -2}), rat3({2, -4, -4, 1, -1, -1, 2, 2}),
                        rat3({2, 2, 2, 1, -1, -1, -4, -4})};
    expected["Tr19"] = {rat3({2, -4, -2, -1, 1, 1, -2, 2}), rat3({4, -2, -4, 1, -1, -1, 2, -2}),
                        rat3({-2, -2, 2, 1, -1, -1, -4, 4})};
    expected["Tr20"] = {rat3({1, 1, 3, -4, -2, -2}), rat3({-1, -1, 3, -2, -4, 2}),
                        rat3({-1, -1, 3, -2, 2, -4})};
    expected["Tr21"] = {rat3({1, -1, -3, 4, -2, -2}), rat3({-1, 1, -3, 2, -4, 2}),
                        rat3({-1, 1, -3, 2, 2, -4})};
    expected["Tr22"] = {rat3({1, -1, -3, -4, 2, 2}), rat3({-1, 1, -3, -2, 4, -2}),
                        rat3({-1, 1, -3, -2, -2, 4})};
    expected["Tr23"] = {rat1({1, -2, 1, -2, 1}), rat1({-1, -2, 1, 2, -1}), rat1({-1, 2, -1, -2, 1})};
    expected["Tr24"] = {rat1({1, 0, -3, 1}), rat1({-1, 2, -1, -1}), rat1({-1, -2, 1, 1})};
    expected["Tr25"] = {rat1({1, 1, -2, 1, -1, -1}), rat1({-1, 1, -2, -1, 1, 1}),
                        rat1({-1, -1, 2, 1, -1, -1})};
    expected["Tr26"] = {rat1({1, 0, -2, -1, 1}), rat1({-1, 2, 0, -1, -1}), rat1({-1, -2, 0, 1, 1})};
    expected["Tr27"] = {rat1({1, 1, -1, -1, 1, -1, -1}), rat1({-1, 1, -1, -1, -1, 1, 1}),
                        rat1({-1, -1, 1, 1, 1, -1, -1})};
    expected["Tr28"] = {rat1({1, -1, -1}), rat1({-1, -1, 1}), rat1({-1, 1, -1})};

    for (auto& [tag, vals] : expected) {
        const FaceShape& s = shape(tag);
        CHECK(s.c == vals[0]);
        CHECK(s.a == vals[1]);
        CHECK(s.ap == vals[2]);
    }
}

TEST_CASE("triangle outer vectors sit on the level plane") {
    for (const FaceShape& s : catalog()) {
        if (!s.is_triangle()) continue;
        for (const std::vector<Rat>* v : {&s.c, &s.a, &s.ap}) {
            Rat sum(0);
            for (const Rat& x : *v) sum += x;
            CHECK(sum == Rat(-1));
        }
    }
}

TEST_CASE("triangle dimension restrictions") {
    auto solve = [](const std::string& tag, long bound = 64) {
        return solve_fracsystem(constraints_for(tag), bound);
    };

    SUBCASE("unique solutions") {
        std::map<std::string, std::vector<long>> unique{
            {"Tr1", {2, 1, 16, 4, 4}},   {"Tr2", {2, 3, 12, 4}},
            {"Tr3", {16, 4, 16, 2, 1}},  {"Tr5", {2, 3, 6, 6, 6}},
            {"Tr7", {2, 1, 12, 3, 12, 12}}, {"Tr11", {16, 4, 4, 1, 1, 1}},
            {"Tr12", {12, 3, 4, 1, 1}},  {"Tr13", {16, 4, 16, 1, 1, 1}},
            {"Tr16", {12, 3, 12, 1, 1, 1, 12}},
        };
        for (auto& [tag, dims] : unique) {
            auto res = solve(tag);
            REQUIRE_MESSAGE(res.solutions.size() == 1, tag);
            CHECK_MESSAGE(res.solutions[0] == dims, tag);
        }
    }

    SUBCASE("families with forced prefix") {
        // Tr4: (2,1,16,4,*,*) with 1/d5 + 1/d6 = 1/4
        auto res = solve("Tr4");
        REQUIRE(res.families.size() == 1);
        CHECK(res.families[0].vars == std::vector<int>{4, 5});
        CHECK(res.families[0].target == Rat(1, 4));
        for (const auto& s : res.solutions) {
            CHECK(s[0] == 2);
            CHECK(s[1] == 1);
            CHECK(s[2] == 16);
            CHECK(s[3] == 4);
            CHECK(Rat(1, s[4]) + Rat(1, s[5]) == Rat(1, 4));
        }
        // Tr6 / Tr8: (2,1,d3,d4,4,4) with 1/d3 + 1/d4 = 1/4
        for (const char* tag : {"Tr6", "Tr8"}) {
            auto r = solve(tag);
            REQUIRE_MESSAGE(r.families.size() == 1, tag);
            CHECK(r.families[0].vars == std::vector<int>{2, 3});
            CHECK(r.families[0].target == Rat(1, 4));
            for (const auto& s : r.solutions) {
                CHECK(s[0] == 2);
                CHECK(s[1] == 1);
                CHECK(s[4] == 4);
                CHECK(s[5] == 4);
            }
        }
        // Tr9 / Tr10: two independent quarter families
        for (const char* tag : {"Tr9", "Tr10"}) {
            auto r = solve(tag);
            REQUIRE_MESSAGE(r.families.size() == 2, tag);
            for (const auto& fam : r.families) CHECK(fam.target == Rat(1, 4));
            for (const auto& s : r.solutions) {
                CHECK(s[0] == 2);
                CHECK(s[1] == 1);
                CHECK(s[2] == 4);
            }
        }
        // Tr14: (16,4,d3,d4,1,1,1), quarter family on (d3,d4)
        auto r14 = solve("Tr14");
        REQUIRE(r14.families.size() == 1);
        CHECK(r14.families[0].vars == std::vector<int>{2, 3});
        for (const auto& s : r14.solutions) {
            CHECK(s[0] == 16);
            CHECK(s[1] == 4);
            CHECK(s[4] == 1);
            CHECK(s[5] == 1);
            CHECK(s[6] == 1);
        }
        // Tr15: (d1,d2,4,1,1,1,4) with 1/d1 + 1/d2 = 1/4
        auto r15 = solve("Tr15");
        REQUIRE(r15.families.size() == 1);
        CHECK(r15.families[0].vars == std::vector<int>{0, 1});
        for (const auto& s : r15.solutions) {
            CHECK(s[2] == 4);
            CHECK(s[6] == 4);
        }
        // Tr17: (4,d2,d3,1,1,1,4)
        auto r17 = solve("Tr17");
        REQUIRE(r17.families.size() == 1);
        CHECK(r17.families[0].vars == std::vector<int>{1, 2});
        // Tr18 / Tr19: two quarter families
        for (const char* tag : {"Tr18", "Tr19"}) {
            auto r = solve(tag);
            CHECK(r.families.size() == 2);
        }
    }

    SUBCASE("Tr20 to Tr22 triples") {
        std::set<std::vector<long>> expect{{1, 1, 3, 6, 6, 6}, {1, 2, 2, 8, 8, 8},
                                           {2, 1, 2, 8, 8, 8}};
        for (const char* tag : {"Tr20", "Tr21", "Tr22"}) {
            auto r = solve(tag);
            std::set<std::vector<long>> got(r.solutions.begin(), r.solutions.end());
            CHECK_MESSAGE(got == expect, tag);
        }
    }

    SUBCASE("Tr24 forces d3 = 2 d2") {
        auto r = solve("Tr24", 40);
        CHECK(!r.solutions.empty());
        for (const auto& s : r.solutions) {
            CHECK(s[2] == 2 * s[1]);
            CHECK(Rat(1, s[0]) + Rat(9, s[2]) + Rat(1, s[3]) == Rat(1));
        }
    }

    SUBCASE("Tr26 forces d2 = d3") {
        auto r = solve("Tr26", 30);
        CHECK(!r.solutions.empty());
        for (const auto& s : r.solutions) {
            CHECK(s[1] == s[2]);
            CHECK(Rat(1, s[0]) + Rat(4, s[2]) + Rat(1, s[3]) + Rat(1, s[4]) == Rat(1));
        }
    }

    SUBCASE("Tr28 unit fraction triples") {
        auto r = solve("Tr28");
        std::set<std::vector<long>> got;
        for (auto& s : r.solutions) {
            std::vector<long> v = s;
            std::sort(v.begin(), v.end());
            got.insert(v);
        }
        std::set<std::vector<long>> expect{{2, 3, 6}, {2, 4, 4}, {3, 3, 3}};
        CHECK(got == expect);
    }

    SUBCASE("nullity closure on solutions") {
        for (const char* tag : {"Tr3", "Tr5", "Tr24", "Tr28"}) {
            const FaceShape& s = shape(tag);
            auto r = solve(tag, 40);
            for (const auto& dims : r.solutions) {
                DimVector d(std::vector<long>(dims.begin(), dims.end()));
                CHECK(is_null(QVector(s.c), d));
                CHECK(is_null(QVector(s.a), d));
                CHECK(is_null(QVector(s.ap), d));
            }
        }
    }
}

TEST_CASE("match_shape recovers tags under random permutation") {
    std::mt19937 rng(97);
    for (const FaceShape& s : catalog()) {
        // skip shapes whose point sets coincide across tags (none expected)
        auto pts = s.all_points();
        // random permutation, random embedding into a wider ambient
        int width = s.ncols + 2;
        std::vector<int> cols(static_cast<std::size_t>(width));
        std::iota(cols.begin(), cols.end(), 0);
        std::shuffle(cols.begin(), cols.end(), rng);
        std::vector<std::vector<int>> input;
        for (auto& p : pts) {
            std::vector<int> row(static_cast<std::size_t>(width), 0);
            for (int j = 0; j < s.ncols; ++j)
                row[static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])] =
                    p[static_cast<std::size_t>(j)];
            input.push_back(std::move(row));
        }
        std::shuffle(input.begin(), input.end(), rng);
        auto m = match_shape(input);
        REQUIRE_MESSAGE(m.has_value(), s.tag);
        // P5 and P6 are the two orientations of one permutation class
        if (s.tag == "P5" || s.tag == "P6")
            CHECK((m->tag == "P5" || m->tag == "P6"));
        else
            CHECK_MESSAGE(m->tag == s.tag, s.tag);
        // permutation witness maps matched-catalog points onto input points
        std::set<std::vector<int>> in_set(input.begin(), input.end());
        for (auto& p : shape(m->tag).all_points()) {
            std::vector<int> row(static_cast<std::size_t>(width), 0);
            for (int j = 0; j < s.ncols; ++j)
                row[static_cast<std::size_t>(m->perm[static_cast<std::size_t>(j)])] =
                    p[static_cast<std::size_t>(j)];
            CHECK(in_set.count(row));
        }
    }
}

TEST_CASE("match_shape rejects a generic triangle") {
    std::vector<std::vector<int>> pts{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, -2}};
    auto m = match_shape(pts);
    CHECK(!m.has_value());
}

TEST_CASE("H3 point set matches with centre present") {
    const FaceShape& h3 = shape("H3");
    auto m = match_shape(h3.all_points());
    REQUIRE(m.has_value());
    CHECK(m->tag == "H3");
}
