#pragma once

#include <string>

#include "unitc/lang/eval.hpp"

namespace unitc::lang {

// Deterministic JSON report of an evaluation: keys in alphabetical order,
// two-space indentation, trailing newline. Equal inputs give byte-equal
// output.
std::string to_json(const EvalOutput& output);

}  // namespace unitc::lang
