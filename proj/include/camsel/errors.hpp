#pragma once

#include <stdexcept>
#include <string>

namespace camsel {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Matrix validation failures.
struct NotSquare : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct BadDiagonal : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };

// Eigen/spectral failures.
struct EigenFailure : Error { using Error::Error; };
struct NonPositiveEigenvalue : Error { using Error::Error; };

// Structure / selection failures.
struct SingularSubmatrix : Error { using Error::Error; };
struct InvalidStructure : Error { using Error::Error; };
struct DegenerateCorrelation : Error { using Error::Error; };

// Numerics.
struct OutOfDomain : Error { using Error::Error; };
struct QuadratureNonConvergence : Error { using Error::Error; };
struct InvalidBeta : Error { using Error::Error; };
struct RootNotBracketed : Error { using Error::Error; };
struct EmptyBin : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// File I/O.
struct ParseError : Error { using Error::Error; };

}  // namespace camsel
