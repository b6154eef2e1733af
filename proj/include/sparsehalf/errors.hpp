#pragma once

#include <stdexcept>
#include <string>

namespace sparsehalf {

// Error taxonomy shared by all modules. The CLI maps these onto exit codes:
//   HypothesisError / ConstraintError / PipelineError -> 1
//   ResourceLimitError                                -> 2
//   TheoremViolationError                             -> 3
// std::invalid_argument is reserved for malformed arguments and files.

/// A guard on instance size was exceeded (enumeration, search depth, ...).
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A stated hypothesis or precondition of an operation does not hold for
/// the given input (e.g. minimum degree below 5/14, unbalanced weights).
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structural constraint on the input data is violated (invalid half,
/// infeasible constraint box, inconsistent disturbed-pair input, ...).
struct ConstraintError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An end-to-end construction could not complete; the message names the
/// failing stage.
struct PipelineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when a computation contradicts a proved statement. This never
/// fires on correct inputs; it exists so that a would-be refutation is
/// loud, fatal and carries the offending instance in its message.
struct TheoremViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace sparsehalf
