#pragma once

#include <stdexcept>
#include <string>

namespace polyent {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an exact computation would exceed its configured resource cap
// (piece counts of composed maps, hull iterations, doubling searches).
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct NotType1 : std::runtime_error {
    explicit NotType1(const std::string& what) : std::runtime_error(what) {}
};

struct NotMonotone : std::runtime_error {
    explicit NotMonotone(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyChain : std::runtime_error {
    explicit EmptyChain(const std::string& what) : std::runtime_error(what) {}
};

struct NoSimpleCycleFound : std::runtime_error {
    explicit NoSimpleCycleFound(const std::string& what) : std::runtime_error(what) {}
};

struct PreimageSelectionFailure : std::runtime_error {
    explicit PreimageSelectionFailure(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

struct PrefixTooShort : std::runtime_error {
    explicit PrefixTooShort(const std::string& what) : std::runtime_error(what) {}
};

// A postcondition that should hold by theory failed on concrete data.
// Signals a bug (or an inconsistent budgeted verdict), never user error.
struct InternalInvariantViolation : std::logic_error {
    explicit InternalInvariantViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace polyent
