#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathdeg {

// Caller passed arguments outside an operation's contract.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed graph6 input. `offset` is the byte position of the defect.
struct Graph6ParseError : std::runtime_error {
    std::size_t offset;
    Graph6ParseError(const std::string& what, std::size_t off)
        : std::runtime_error(what + " (byte offset " + std::to_string(off) + ")"),
          offset(off) {}
};

// Request exceeds a hard cost guard (exhaustive search size limits).
struct CostGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A greedy selection step found an empty candidate set on an instance that
// validated. Must never happen; reaching it is a bug, not a user error.
struct ConstructionFailure : std::logic_error {
    int stuck_index;
    ConstructionFailure(const std::string& what, int index)
        : std::logic_error(what + " (stuck at connector index " + std::to_string(index) + ")"),
          stuck_index(index) {}
};

}  // namespace pathdeg
