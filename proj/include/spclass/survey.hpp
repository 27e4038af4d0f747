#pragma once

#include "spclass/weights.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spc {

// Exhaustive classification sweep over every valid weight system of the given
// rank with bounded summand dimensions.  Weight sets are enumerated up to
// coordinate permutation; the fast integer filters prune instances without
// admissible null vectors and the exact pipeline classifies the rest.
struct SweepStats {
    long long weight_classes = 0;   // permutation classes with full-dimensional hulls
    long long instances = 0;        // valid (weights, dims) pairs examined
    long long bearing = 0;          // instances carrying at least one candidate
    long long classified = 0;       // exact pipeline runs
    long long eliminated = 0;       // candidates removed with evidence
    long long residual = 0;         // rank <= 3 survivors
    long long fano = 0;             // circle-bundle instances
    std::vector<std::string> unexpected;  // non-fano survivors at rank >= 4
};

SweepStats sweep_rank3(long dim_bound = 6);
SweepStats sweep_rank4(long dim_bound = 6);

}  // namespace spc
