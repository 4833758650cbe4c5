#pragma once

#include <stdexcept>
#include <string>

namespace detold {

// Bad user input: malformed files, out-of-range vertices, violated preconditions.
// CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a documented size cap (exhaustive enumeration, oracle sweep).
// CLI maps this to exit code 3.
struct capability_error : std::runtime_error {
    explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an operation requires a feasible instance and none exists
// (e.g. forced detectors on a graph with no DET:OLD set).
struct no_solution_error : std::runtime_error {
    explicit no_solution_error(const std::string& what) : std::runtime_error(what) {}
};

// A produced or supplied certificate failed verification.
struct certification_error : std::runtime_error {
    explicit certification_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace detold
