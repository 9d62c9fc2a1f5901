#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sqfree {

using BigInt = boost::multiprecision::cpp_int;

// Validation errors: the request itself is malformed. The CLI maps these to
// exit code 2.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAPrimePower : ValidationError {
    using ValidationError::ValidationError;
};
struct Unsupported : ValidationError {
    using ValidationError::ValidationError;
};
struct DivisionByZero : ValidationError {
    using ValidationError::ValidationError;
};
struct SpecMismatch : ValidationError {
    using ValidationError::ValidationError;
};
struct BadDegree : ValidationError {
    using ValidationError::ValidationError;
};
struct DimensionMismatch : ValidationError {
    using ValidationError::ValidationError;
};
struct BadArgs : ValidationError {
    using ValidationError::ValidationError;
};
struct BadRange : ValidationError {
    using ValidationError::ValidationError;
};
struct BadPreset : ValidationError {
    using ValidationError::ValidationError;
};
struct TooManyMonomials : ValidationError {
    using ValidationError::ValidationError;
};

// Internal consistency failure; seeing one of these is a bug, not bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};
struct RankDeficient : InternalError {
    using InternalError::InternalError;
};

// Resource errors: the instance exceeds a configured cap or budget. The CLI
// maps these to exit code 3.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a subspace enumeration would visit more subspaces than the
// configured cap. Carries the exact count so callers can switch strategy.
struct CapExceeded : ResourceError {
    CapExceeded(const std::string& what, BigInt exact_count)
        : ResourceError(what), count(std::move(exact_count)) {}
    BigInt count;
};

// Thrown when an exhaustive search runs out of its node budget. For the
// support-search oracle this carries the largest value that was still fully
// verified as a lower bound before the budget ran out.
struct BudgetExceeded : ResourceError {
    explicit BudgetExceeded(const std::string& what,
                            std::optional<std::size_t> lower_bound = std::nullopt)
        : ResourceError(what), verified_lower_bound(lower_bound) {}
    std::optional<std::size_t> verified_lower_bound;
};

}  // namespace sqfree
