#pragma once

#include "spclass/numbers.hpp"

#include <string>
#include <vector>

namespace spc {

// System of equations sum_i coeffs[i] / d_i = rhs over positive integer
// unknowns d_i.  Linear in the reciprocals, which is what every nullity and
// orthogonality condition reduces to.
struct FracEquation {
    std::vector<Rat> coeffs;
    Rat rhs;
};

struct FracSystem {
    int nvars = 0;
    std::vector<FracEquation> equations;
    std::string str() const;
};

// A detected closed-form relation sum_{i in vars} 1/d_i = target whose
// variables occur nowhere else; solvable independently of any bound.
struct UnitFamily {
    std::vector<int> vars;
    Rat target;
};

struct DimSolveResult {
    std::vector<std::vector<long>> solutions;  // full assignments, lexicographic
    std::vector<UnitFamily> families;
    std::vector<int> unconstrained;  // variables with zero coefficient throughout
    bool truncated = false;          // hit the solution cap
};

DimSolveResult solve_fracsystem(const FracSystem& sys, long bound,
                                std::size_t max_solutions = 100000);

// All unordered k-tuples (d_1 <= ... <= d_k) with sum 1/d_i = target; finite
// without any external bound.
std::vector<std::vector<long>> unit_fraction_tuples(const Rat& target, int k);

}  // namespace spc
