#pragma once

#include <stdexcept>
#include <string>

namespace graphscape {

// Bad input data: parse failures, invariant violations, unknown labels.
// CLI exit code 1.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric failure: singular committor system, non-convergent iteration,
// reducible chain where an irreducible one is required. CLI exit code 2.
struct solver_error : std::runtime_error {
    explicit solver_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Resource guard tripped (simplex-count cap). CLI exit code 3.
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace graphscape
