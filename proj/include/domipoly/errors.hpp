#pragma once

#include <stdexcept>
#include <string>

namespace domipoly {

// Exact division found a nonzero remainder. When raised from the
// division-based conditional recovery this signals a broken identity
// upstream, not a user error.
struct RemainderNonZero : std::runtime_error {
    explicit RemainderNonZero(const std::string& what) : std::runtime_error(what) {}
};

struct NonUnitConstantTerm : std::runtime_error {
    explicit NonUnitConstantTerm(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionByMonomialFailed : std::runtime_error {
    explicit DivisionByMonomialFailed(const std::string& what) : std::runtime_error(what) {}
};

struct NegativePowerEncountered : std::runtime_error {
    explicit NegativePowerEncountered(const std::string& what) : std::runtime_error(what) {}
};

struct GraphTooLarge : std::runtime_error {
    explicit GraphTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct NotACutVertex : std::runtime_error {
    explicit NotACutVertex(const std::string& what) : std::runtime_error(what) {}
};

struct NotACutEdge : std::runtime_error {
    explicit NotACutEdge(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionFailed : std::runtime_error {
    explicit PreconditionFailed(const std::string& what) : std::runtime_error(what) {}
};

struct MalformedGraph6 : std::runtime_error {
    explicit MalformedGraph6(const std::string& what) : std::runtime_error(what) {}
};

struct VerticesAdjacent : std::runtime_error {
    explicit VerticesAdjacent(const std::string& what) : std::runtime_error(what) {}
};

// Malformed polynomial / edge-list text input.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace domipoly
