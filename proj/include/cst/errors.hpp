#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace cst {

/// Every failure the library reports. The CLI maps these to exit codes
/// through `category()`.
enum class ErrorKind {
    ParseError,
    NotSimple,
    NonMonotoneCurve,
    InvalidRadii,
    EmptySet,
    NotTwiggly,
    UnknownEdge,
    TooLarge,
    Incompatible,
    NodeMissing,
    NotCylindrical,
    NoSideEdge,
    NotMonotone,
    NotStronglyCMonotone,
    RelationCyclic,
    NotDoubleStar,
    NotTwinStar,
    NotSpecialTree,
    BadTree,
    IncompatibleStep,
    FullCircleCorridor,
    RejectionBudgetExceeded,
    MethodInapplicable,
    InternalInvariantViolated,
};

enum class ErrorCategory { InvalidInput = 1, Inapplicable = 2, Internal = 3 };

const char* to_string(ErrorKind kind);
ErrorCategory category(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::optional<int> index = std::nullopt)
        : std::runtime_error(message), kind_(kind), index_(index) {}

    ErrorKind kind() const noexcept { return kind_; }
    /// Position of the offending item (tree index, edge id) when one exists.
    std::optional<int> index() const noexcept { return index_; }

private:
    ErrorKind kind_;
    std::optional<int> index_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message,
                              std::optional<int> index = std::nullopt) {
    throw Error(kind, message, index);
}

/// Runtime check of a proof obligation; failure means a bug or a misclassified input.
inline void ensure(bool condition, const std::string& what) {
    if (!condition) fail(ErrorKind::InternalInvariantViolated, what);
}

}  // namespace cst
