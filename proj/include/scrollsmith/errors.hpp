#ifndef SCROLLSMITH_ERRORS_HPP
#define SCROLLSMITH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace scrollsmith {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two exact values from different coefficient fields were combined.
struct ContextMismatchError : Error {
    using Error::Error;
};

/// A rational value could not be reduced modulo the requested prime
/// (prime divides a denominator), or a prime is otherwise unusable.
struct BadReductionError : Error {
    using Error::Error;
};

/// No chain plan satisfies the singularity budget.
struct PlanInfeasibleError : Error {
    using Error::Error;
};

/// A randomized search stage exhausted its retry budget.
struct SearchFailedError : Error {
    SearchFailedError(std::string stage_, const std::string& what_)
        : Error(what_), stage(std::move(stage_)) {}
    std::string stage;
};

/// Input outside the supported parameter range (e.g. u >= 2 scans).
struct UnsupportedError : Error {
    using Error::Error;
};

}  // namespace scrollsmith

#endif
