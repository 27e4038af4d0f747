#pragma once

#include "spclass/weights.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spc {

// Support set for the exponential-sum ansatz, stored through the sum = -1
// representatives; the barred points are (d + c)/2.
struct SupportSet {
    std::vector<QVector> points;

    bool contains(const QVector& q) const;
};

std::vector<Violation> check_support(const SupportSet& C, const WeightSystem& ws);

struct EqnTerm {
    int i, j;   // support indices, i <= j
    Rat coeff;  // exact pair coefficient including the off-diagonal factor 2
};

struct Equation {
    std::vector<Rat> xi;  // the exponent sum in barred coordinates
    std::vector<EqnTerm> terms;
    std::optional<std::vector<int>> weight;  // w with xi = d + w, when present
    std::optional<Rat> rhs;                  // numeric A_w when supplied
};

struct EqnSystem {
    SupportSet support;
    DimVector d{std::vector<long>{1, 1}};
    std::vector<Equation> equations;
    bool infeasible = false;     // an empty equation demands a nonzero value
    std::string infeasible_detail;
};

// Assembles the full system over all pairwise sums; coefficients are exact
// and pairs with vanishing J are dropped.  Numeric right-hand sides come from
// ws.a_values when present (sign-only assembly otherwise).
EqnSystem build_eqnF(const SupportSet& C, const WeightSystem& ws);

struct SignAnalysis {
    bool contradiction = false;
    std::string detail;
    // relative sign classes: sign(F_i F_j) fixed for pairs in the same class
    std::vector<int> component;  // union-find leader per variable
    std::vector<int> parity;     // sign relative to the leader
};

SignAnalysis sign_constraints(const EqnSystem& sys, const WeightSystem& ws);

struct CoefficientAssignment {
    enum class Status { SOLVED, INFEASIBLE, UNDECIDED } status;
    std::vector<double> values;
    double residual = 0.0;
    std::string detail;
};

CoefficientAssignment solve(const EqnSystem& sys, unsigned seed = 1, double tol = 1e-10);

// A values generated from prescribed coefficients; the exact forward map.
std::map<std::vector<int>, Rat> forward_coefficients(const SupportSet& C, const WeightSystem& ws,
                                                     const std::vector<Rat>& F);

struct VerifyReport {
    bool pass = false;
    double max_equation_residual = 0.0;
    double max_spot_defect = 0.0;
    std::string worst_detail;
};

// Checks every assembled equation and spot-checks the defining identity at
// random points of the configuration space.
VerifyReport verify(const SupportSet& C, const std::vector<double>& F, const WeightSystem& ws,
                    double tol, unsigned seed = 1, int spots = 50);

struct EdgeAnalysis {
    enum class Kind { ORTHOGONALITY_REQUIRED, OPPOSITE_SIGNS_REQUIRED, NONE } kind;
    Rat j_value;          // exact 4 J(v-bar, w-bar)
    bool contradiction;   // orthogonality required but J != 0
    std::string detail;
};

// The interior-point law for a hull edge whose endpoints both lie in the
// support: no interior weight forces J = 0; a unique type II/III midpoint
// with positive J forces opposite coefficient signs.
EdgeAnalysis edge_interior_analysis(const Weight& v, const Weight& w, const SupportSet& C,
                                    const WeightSystem& ws);

}  // namespace spc
