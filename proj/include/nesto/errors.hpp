#pragma once

#include <stdexcept>
#include <string>

namespace nesto {

// Bad user input: malformed families, violated axioms, out-of-range params.
// The CLI maps this to exit code 1.
struct invalid_input_error : std::runtime_error {
    explicit invalid_input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration or series computation exceeded a configured cap.
// The CLI maps this to exit code 2.
struct resource_cap_error : std::runtime_error {
    explicit resource_cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two independent computations of the same quantity disagreed.  This is an
// internal-consistency alarm, not a user error.  The CLI maps it to exit code 3.
struct cross_check_error : std::runtime_error {
    explicit cross_check_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct non_palindromic_error : invalid_input_error {
    explicit non_palindromic_error(const std::string& msg) : invalid_input_error(msg) {}
};

}  // namespace nesto
