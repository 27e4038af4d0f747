#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spclass/polytope.hpp"
#include "spclass/weights.hpp"

#include <random>

using namespace spc;

namespace {

AffineConfig config_of(const WeightSystem& ws) { return AffineConfig(ws.points(), ws.d); }

AffineConfig config_from_ints(std::vector<std::vector<int>> rows, DimVector d) {
    std::vector<QVector> pts;
    for (auto& r : rows) pts.push_back(QVector::from_ints(r));
    return AffineConfig(std::move(pts), std::move(d));
}

// The H1 hexagon weight set in r = 3.
std::vector<std::vector<int>> h1_points() {
    return {{-2, 1, 0}, {0, 1, -2}, {1, 0, -2}, {0, -2, 1}, {1, -2, 0}, {-2, 0, 1},
            {-1, 1, -1}, {-1, -1, 1}, {1, -1, -1}, {-1, 0, 0}, {0, 0, -1}, {0, -1, 0}};
}

}  // namespace

TEST_CASE("lp sanity") {
    // max x subject to x + y = 1, x,y >= 0
    auto res = lp_maximize<Rat>({{Rat(1), Rat(1)}}, {Rat(1)}, {Rat(1), Rat(0)});
    CHECK(res.status == LpResult<Rat>::OPTIMAL);
    CHECK(res.value == Rat(1));
    // infeasible: x + y = -1
    auto bad = lp_maximize<Rat>({{Rat(1), Rat(1)}}, {Rat(-1)}, {Rat(0), Rat(0)});
    CHECK(bad.status == LpResult<Rat>::INFEASIBLE);
    // redundant rows are fine
    auto red = lp_maximize<Rat>({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, {Rat(1), Rat(2)},
                                {Rat(0), Rat(1)});
    CHECK(red.status == LpResult<Rat>::OPTIMAL);
    CHECK(red.value == Rat(1));
}

TEST_CASE("conv_contains") {
    std::vector<Vec<Rat>> tri{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    CHECK(conv_contains(Vec<Rat>{Rat(1, 3), Rat(1, 3)}, tri));
    CHECK(!conv_contains(Vec<Rat>{Rat(1), Rat(1)}, tri));
    CHECK(conv_contains(Vec<Rat>{Rat(1, 2), Rat(1, 2)}, tri));  // boundary counts
    CHECK(!conv_contains(tri[0], tri, 0));
}

TEST_CASE("hull_dim examples") {
    WeightSystem fano3 = fano_system({2, 2});
    CHECK(hull_dim(config_of(fano3)) == 2);
    auto single = config_from_ints({{-1, 0}}, DimVector({1, 1}));
    CHECK(hull_dim(single) == 0);
    auto h1 = config_from_ints(h1_points(), DimVector({2, 2, 2}));
    CHECK(hull_dim(h1) == 2);
    // fano hull dimension is r - 1 across r
    for (std::vector<long> rest : {std::vector<long>{2}, {2, 2}, {2, 2, 2}, {3, 3, 2, 2}}) {
        WeightSystem ws = fano_system(rest);
        CHECK(hull_dim(config_of(ws)) == ws.r() - 1);
    }
}

TEST_CASE("H1 vertices are the type III vectors") {
    auto h1 = config_from_ints(h1_points(), DimVector({2, 2, 2}));
    auto faces0 = hull_faces(h1, 0);
    CHECK(faces0.size() == 6);
    for (const Face& f : faces0) {
        const QVector& p = h1.points[static_cast<std::size_t>(f.members[0])];
        std::vector<int> e;
        for (int i = 0; i < p.size(); ++i) e.push_back(static_cast<int>(numerator(p[i]).convert_to<long>()));
        CHECK(classify_weight(e).type == WType::III);
    }
    auto edges = hull_faces(h1, 1);
    CHECK(edges.size() == 6);  // hexagon boundary
}

TEST_CASE("H2 interior points are not vertices") {
    // plane x1+x2 = -1, x3+x4 = 0 inside r = 4
    auto h2 = config_from_ints({{-2, 1, 0, 0},
                                {1, -2, 0, 0},
                                {-1, 0, 1, -1},
                                {0, -1, 1, -1},
                                {-1, 0, -1, 1},
                                {0, -1, -1, 1},
                                {-1, 0, 0, 0},
                                {0, -1, 0, 0}},
                               DimVector({2, 2, 2, 2}));
    auto v = hull_vertex_ids(h2);
    CHECK(v.size() == 6);
    CHECK(!is_vertex(h2, QVector::from_ints({-1, 0, 0, 0})));
    CHECK(!is_vertex(h2, QVector::from_ints({0, -1, 0, 0})));
    CHECK(hull_faces(h2, 1).size() == 6);
    // alpha and beta sit on the u-v diagonal; on the segment alone they are
    // its interior points, ordered from u
    auto seg = config_from_ints({{-2, 1, 0, 0}, {1, -2, 0, 0}, {-1, 0, 0, 0}, {0, -1, 0, 0}},
                                DimVector({2, 2, 2, 2}));
    auto segedges = hull_faces(seg, 1);
    REQUIRE(segedges.size() == 1);
    auto interior = edge_interior(segedges[0], seg);
    REQUIRE(interior.size() == 2);
    bool from_u = seg.points[static_cast<std::size_t>(segedges[0].members.front())] ==
                  QVector::from_ints({-2, 1, 0, 0});
    int first = from_u ? interior[0] : interior[1];
    int second = from_u ? interior[1] : interior[0];
    CHECK(seg.points[static_cast<std::size_t>(first)] == QVector::from_ints({-1, 0, 0, 0}));
    CHECK(seg.points[static_cast<std::size_t>(second)] == QVector::from_ints({0, -1, 0, 0}));
}

TEST_CASE("two point edge") {
    auto cfg = config_from_ints({{-1, 0}, {0, -1}}, DimVector({3, 4}));
    auto edges = hull_faces(cfg, 1);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0].members.size() == 2);
    CHECK(edge_interior(edges[0], cfg).empty());
}

TEST_CASE("face_cut on the fano r=3 system") {
    WeightSystem ws = fano_system({2, 2});
    auto cfg = config_of(ws);
    Face f = face_cut(cfg, {0}, 1);
    REQUIRE(f.members.size() == 2);
    for (int m : f.members) CHECK(cfg.points[static_cast<std::size_t>(m)][0] == Rat(1));
    // I = everything at target 1 cuts nothing (level is -1)
    Face empty = face_cut(cfg, {0, 1, 2}, 1);
    CHECK(empty.members.empty());
    // the 2 x_i + x_j = -3 cut catches the pair from the orthogonality analysis
    auto cfg2 = config_from_ints({{-2, 1, 0}, {-1, -1, 1}, {0, -1, 0}, {0, 0, -1}},
                                 DimVector({4, 2, 3}));
    // functional 2x1 + x2 is not of the face_cut form; emulate via index doubling:
    // use face_cut twice instead: x1 = -2 face and x1 + x2 = -1 is not a cut —
    // check the raw containment instead.
    Rat v1 = 2 * cfg2.points[0][0] + cfg2.points[0][1];
    Rat v2 = 2 * cfg2.points[1][0] + cfg2.points[1][1];
    CHECK(v1 == Rat(-3));
    CHECK(v2 == Rat(-3));
}

TEST_CASE("face_cut rejects non-bounding equations") {
    // only reachable for non-weight configurations
    auto cfg = config_from_ints({{3, -4}, {0, -1}}, DimVector({2, 2}));
    CHECK_THROWS_AS(face_cut(cfg, {0}, 1), not_a_face_error);
}

TEST_CASE("triangle with midpoints: midpoint is edge interior") {
    auto cfg = config_from_ints({{1, -2, 0}, {1, 0, -2}, {-1, 0, 0}, {1, -1, -1}, {0, -1, 0},
                                 {0, 0, -1}},
                                DimVector({2, 2, 2}));
    auto edges = hull_faces(cfg, 1);
    CHECK(edges.size() == 3);
    for (const Face& e : edges) {
        auto in = edge_interior(e, cfg);
        CHECK(in.size() == 1);
    }
}

TEST_CASE("vertex rule for type II with both type IIIs present") {
    // (-1,-1,1) fails to be a vertex once (-2,0,1) and (0,-2,1) are there
    auto cfg = config_from_ints({{-2, 0, 1}, {0, -2, 1}, {-1, -1, 1}, {0, 0, -1}},
                                DimVector({2, 2, 2}));
    CHECK(!is_vertex(cfg, QVector::from_ints({-1, -1, 1})));
    auto cfg2 = config_from_ints({{-2, 0, 1}, {-1, -1, 1}, {0, 0, -1}}, DimVector({2, 2, 2}));
    CHECK(is_vertex(cfg2, QVector::from_ints({-1, -1, 1})));
}

TEST_CASE("euler count on 2-faces") {
    std::mt19937 rng(51);
    std::uniform_int_distribution<int> coord(-2, 1);
    for (int it = 0; it < 30; ++it) {
        // random small integer configurations in a 2-plane of r = 3
        std::set<std::vector<int>> raw;
        while (raw.size() < 6) {
            int a = coord(rng), b = coord(rng);
            raw.insert({a, b, -1 - a - b});
        }
        std::vector<QVector> pts;
        for (auto& e : raw) pts.push_back(QVector::from_ints(e));
        AffineConfig cfg(pts, DimVector({2, 2, 2}));
        if (hull_dim(cfg) != 2) continue;
        auto verts = hull_faces(cfg, 0);
        auto edges = hull_faces(cfg, 1);
        CHECK(verts.size() == edges.size());
        auto faces = hull_faces(cfg, 2);
        REQUIRE(faces.size() == 1);
        CHECK(faces[0].members.size() == pts.size());
    }
}

TEST_CASE("face functional certifies the cut") {
    WeightSystem ws = fano_system({2, 3, 2});
    auto cfg = config_of(ws);
    for (const Face& f : hull_faces(cfg, 1)) {
        REQUIRE(!f.functionals.empty());
        const auto& [coeffs, offset] = f.functionals[0];
        std::set<int> mem(f.members.begin(), f.members.end());
        for (std::size_t p = 0; p < cfg.points.size(); ++p) {
            Rat v(0);
            for (int i = 0; i < cfg.ambient.r(); ++i)
                v += Rat(coeffs[static_cast<std::size_t>(i)]) * cfg.points[p][i];
            if (mem.count(static_cast<int>(p)))
                CHECK(v == offset);
            else
                CHECK(v < offset);
        }
    }
}

TEST_CASE("vertices are extreme points") {
    WeightSystem ws = fano_system({3, 2, 4});
    auto cfg = config_of(ws);
    auto pts = cfg.raw();
    auto verts = hull_vertex_ids(cfg);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool isv = std::find(verts.begin(), verts.end(), static_cast<int>(i)) != verts.end();
        CHECK(isv == !conv_contains(pts[i], pts, static_cast<int>(i)));
    }
}
