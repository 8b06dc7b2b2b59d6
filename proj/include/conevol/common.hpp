#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace conevol {

// A point or direction in R^n. Dimension is the runtime length.
using Vec = std::vector<double>;

// Error taxonomy:
//   input_error        - a caller violated an operation precondition
//   domain_error       - geometrically out of domain (origin not interior, ...)
//   construction_error - input data does not define a valid polytope
//   invariant_error    - an internal contract failed; indicates a bug or a
//                        counterexample to a claim the pipeline relies on
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invariant_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace conevol
