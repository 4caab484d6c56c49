#pragma once

#include <stdexcept>
#include <string>

namespace treedeg {

// Base for all library errors so callers can catch one type at the boundary.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyGraphError : Error {
    EmptyGraphError() : Error("operation undefined on the empty graph") {}
};

struct DisconnectedError : Error {
    explicit DisconnectedError(const std::string& ctx)
        : Error("graph must be connected: " + ctx) {}
};

// A documented precondition of an operation does not hold; message names the clause.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& clause)
        : Error("precondition violated: " + clause) {}
};

struct NotATreeError : Error {
    explicit NotATreeError(const std::string& why) : Error("not a tree: " + why) {}
};

struct StarNotSupportedError : Error {
    StarNotSupportedError()
        : Error("stars have no spine labelling (longest path has 3 vertices)") {}
};

struct DegenerateShapeError : Error {
    explicit DegenerateShapeError(const std::string& why)
        : Error("degenerate shape: " + why) {}
};

struct DeskScaleError : Error {
    explicit DeskScaleError(const std::string& what_limit)
        : Error("instance exceeds desk scale: " + what_limit) {}
};

struct SamplingExhaustedError : Error {
    explicit SamplingExhaustedError(const std::string& params)
        : Error("rejection sampling exhausted its attempt budget: " + params) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& why) : Error("parse error: " + why) {}
};

// Raised when an exhaustive search contradicts a guarantee the decision
// procedure relies on. Reaching this is a falsifying event, not a user error;
// the CLI maps it to a dedicated exit code.
struct InternalContradictionError : Error {
    explicit InternalContradictionError(const std::string& detail)
        : Error("internal contradiction: " + detail) {}
};

} // namespace treedeg
