#pragma once

#include "spclass/weights.hpp"

#include <functional>
#include <string>
#include <vector>

namespace spc {

struct ScenarioResult {
    bool pass = false;
    std::string expected;
    std::string observed;
};

struct Scenario {
    std::string name;
    std::string group;     // fano | tables | catalog | region | elimination | survey
    std::string citation;  // what the scenario certifies, in registry language
    long dmax = 64;
    std::function<ScenarioResult(long dmax, unsigned seed)> run;
};

const std::vector<Scenario>& named_scenarios();

// Pattern-pair tables used by the regression suite: derived from first
// principles and compared against frozen row lists.
std::vector<std::pair<std::vector<int>, std::vector<int>>> collinear_pair_table(int which);

}  // namespace spc
