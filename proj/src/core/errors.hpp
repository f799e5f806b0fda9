#pragma once

#include <stdexcept>
#include <string>

namespace reeseq {

// Bad user input: malformed polynomials, wrong generator counts, ideals
// outside the supported shape.  Maps to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A verified mathematical assertion failed on data that should satisfy it.
// Maps to exit code 1.
struct theorem_error : std::runtime_error {
    explicit theorem_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two independent computations of the same object disagree.  Maps to exit
// code 3 and always indicates a bug.
struct internal_error : std::runtime_error {
    explicit internal_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace reeseq
