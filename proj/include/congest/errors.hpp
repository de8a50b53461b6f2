#pragma once

#include <stdexcept>
#include <string>

namespace congest {

// Input/contract violations. The CLI maps these to exit code 1.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numeric failures (non-convergence, blown budgets). Exit code 2.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPositiveWeight : ValidationError { using ValidationError::ValidationError; };
struct SelfLoop : ValidationError { using ValidationError::ValidationError; };
struct DuplicateEdge : ValidationError { using ValidationError::ValidationError; };
struct DisconnectedGraph : ValidationError { using ValidationError::ValidationError; };
struct DemandShapeMismatch : ValidationError { using ValidationError::ValidationError; };
struct UnknownEdge : ValidationError { using ValidationError::ValidationError; };
struct UnknownVertex : ValidationError { using ValidationError::ValidationError; };
struct TriangleInequalityViolated : ValidationError { using ValidationError::ValidationError; };
struct NotInterior : ValidationError { using ValidationError::ValidationError; };
struct ZeroArea : ValidationError { using ValidationError::ValidationError; };
struct EmptySample : ValidationError { using ValidationError::ValidationError; };
struct InvalidValence : ValidationError { using ValidationError::ValidationError; };
struct InvalidSide : ValidationError { using ValidationError::ValidationError; };
struct RadiusOutOfRange : ValidationError { using ValidationError::ValidationError; };
struct PointOutsideBall : ValidationError { using ValidationError::ValidationError; };
struct BallNotContained : ValidationError { using ValidationError::ValidationError; };
struct UnsupportedDimension : ValidationError { using ValidationError::ValidationError; };
struct BadSampleCount : ValidationError { using ValidationError::ValidationError; };
struct BudgetExceeded : ValidationError { using ValidationError::ValidationError; };
struct UsageError : ValidationError { using ValidationError::ValidationError; };

struct QuadratureNotConverged : NumericError { using NumericError::NumericError; };
struct PathLimitExceeded : NumericError { using NumericError::NumericError; };

}  // namespace congest
