#pragma once

#include <stdexcept>
#include <string>

namespace pulab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter construction
struct DegenerateGap : Error { using Error::Error; };
struct InvalidSector : Error { using Error::Error; };
struct ComplexBranch : Error { using Error::Error; };
struct SingularSigma : Error { using Error::Error; };
struct ComplexFrequency : Error { using Error::Error; };
struct SingularMap : Error { using Error::Error; };

// Operator / state algebra
struct VarSetMismatch : Error { using Error::Error; };
struct GaussianMismatch : Error { using Error::Error; };
struct ChainDepthExceeded : Error { using Error::Error; };

// Classical structures
struct ForbiddenRay : Error { using Error::Error; };

// Factorisation
struct DegenerateEigenvalues : Error { using Error::Error; };
struct NonNormalizable : Error { using Error::Error; };

} // namespace pulab
