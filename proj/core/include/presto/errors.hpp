#pragma once

#include <stdexcept>
#include <string>

namespace presto {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// A category probability came out nonpositive: the decision boundaries
/// cross at the queried point and the model is not a valid distribution there.
struct InfeasibleProbabilities : Error {
    using Error::Error;
};

struct NotDifferentiable : Error {
    using Error::Error;
};

struct InfeasibleStart : Error {
    using Error::Error;
};

struct DegenerateData : Error {
    using Error::Error;
};

struct FeasibilityRetriesExhausted : Error {
    using Error::Error;
};

struct NoValidLambda : Error {
    using Error::Error;
};

struct SplitRetriesExhausted : Error {
    using Error::Error;
};

}  // namespace presto
