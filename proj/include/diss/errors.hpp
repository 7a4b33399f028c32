#pragma once

#include <stdexcept>
#include <string>

namespace diss {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (edge list, graph6, trace JSON).
struct ParseError : Error {
    using Error::Error;
};

// A precondition on an operation's input graph is violated.
struct InvalidInputError : Error {
    using Error::Error;
};

// Induced-cycle enumeration hit its cap; c1 consumers must not proceed.
struct CycleCapExceededError : Error {
    using Error::Error;
};

// Conflict-graph search limit for the packing number was exceeded.
struct SearchLimitExceededError : Error {
    using Error::Error;
};

// A runtime invariant check failed; indicates a bug, not bad input.
struct InternalError : Error {
    using Error::Error;
};

} // namespace diss
