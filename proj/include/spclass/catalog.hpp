#pragma once

#include "spclass/diophantine.hpp"
#include "spclass/numbers.hpp"
#include "spclass/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spc {

// One entry of the 2-face listing.  Triangles carry their derived c, a, a'
// vectors; quadrilaterals carry vertices in role order v, u, s, w plus any
// forced midpoints/interior points.
struct FaceShape {
    enum Kind {
        HEXAGON,
        SQUARE,
        TRAPEZIUM,
        PARALLELOGRAM,
        NONFACE_TRAPEZIUM,
        TRIANGLE_SPLIT,   // outer null pair: c + x'' = a + a'
        TRIANGLE_MIDSUM,  // x'' = (a + a')/2, one vertex type I
    };

    std::string tag;
    Kind kind = HEXAGON;
    int ncols = 0;
    std::vector<std::vector<int>> verts;
    std::vector<std::vector<int>> extras;
    bool never_face = false;
    std::vector<Rat> c, a, ap;

    std::vector<std::vector<int>> all_points() const;
    bool is_triangle() const { return kind == TRIANGLE_SPLIT || kind == TRIANGLE_MIDSUM; }
};

const std::vector<FaceShape>& catalog();
const FaceShape& shape(const std::string& tag);

// Canonical form of an integer point set under column permutation:
// lexicographically smallest sorted row matrix.  Returns the column
// permutation applied (canonical[i][j] = rows[.][perm[j]]).
std::pair<std::vector<std::vector<int>>, std::vector<int>> canonical_form(
    std::vector<std::vector<int>> rows);

struct ShapeMatch {
    std::string tag;
    // perm[k] = input coordinate holding catalog column k.
    std::vector<int> perm;
};

// Matches a coplanar point set against the catalog up to coordinate
// permutation; input points are given on their full ambient width.
std::optional<ShapeMatch> match_shape(const std::vector<std::vector<int>>& points);

// Dimension-constraint system of a triangle row: nullity of c, a, a' plus,
// for the split kind, orthogonality of a and a' to x''.  Variables are the
// pattern's support dimensions d_1..d_ncols.
FracSystem constraints_for(const std::string& tag);

// Every dimension assignment (within the bound) admitting the shape with the
// null vector c placed in the named region, together with the case systems
// examined.  Empty witness lists certify elimination within the bound.
struct CaseOutcome {
    std::string label;
    std::vector<std::vector<long>> witnesses;  // support dims admitting the case
    long sign_killed = 0;                      // assignments removed by the sign argument
};

struct RegionReport {
    std::string tag;
    std::string region;
    std::string description;
    std::vector<CaseOutcome> cases;
    std::string anchor;  // elimination anchor when no witnesses exist
    bool feasible() const {
        for (const auto& c : cases)
            if (!c.witnesses.empty()) return true;
        return false;
    }
};

RegionReport region_analysis(const std::string& tag, const std::string& region, long bound = 20);

// All case solutions of every region of a quadrilateral shape at one fixed
// dimension assignment (pattern coordinates).  The flag marks solutions
// removed by the coefficient-sign argument.
std::vector<std::pair<std::vector<Quad>, bool>> shape_case_solutions(
    const std::string& tag, const std::vector<long>& support_dims);

struct domain_error_region : math_error {
    using math_error::math_error;
};

}  // namespace spc
