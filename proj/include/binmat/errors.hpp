#pragma once

#include <stdexcept>
#include <string>

namespace binmat {

// Bad user input: malformed files, out-of-range parameters, violated
// operation preconditions. CLI exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A configured search budget (nodes, codimension, enumeration size) ran out
// before the question was decided. Distinct from a definite "no". Exit code 3.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency failure: a verified invariant that the library's own
// mathematics guarantees did not hold. Should never occur. Exit code 4.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace binmat
