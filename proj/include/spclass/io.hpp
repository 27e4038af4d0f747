#pragma once

#include "spclass/solver.hpp"
#include "spclass/weights.hpp"

#include <string>

namespace spc {

struct input_error : math_error {
    using math_error::math_error;
};

// {"r":4, "d":[4,2,2,9], "weights":[[1,-2,0,0],...],
//  "A":{"1,-2,0,0":"-1.5", ...}, "k_connected":true}
// Coefficient values may be numbers or decimal strings; both parse exactly.
WeightSystem parse_instance_text(const std::string& text);
WeightSystem load_instance(const std::string& path);

std::string instance_to_json(const WeightSystem& ws);

// {"support": [[-1,0],[1,-2]]} on the sum = -1 plane.
SupportSet parse_support_text(const std::string& text, int r);
SupportSet load_support(const std::string& path, int r);

std::string read_file(const std::string& path);

}  // namespace spc
