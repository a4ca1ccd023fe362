#pragma once

#include <array>

#include "sdcwalk/types.hpp"

namespace sdcwalk {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kDefaultZeroTol = 1e-12;

struct EigenDecomposition {
    std::array<double, 4> values;  // ascending
    Matrix4 vectors;               // orthonormal eigenvectors as columns

    Matrix4 reconstruct() const;
};

// Cyclic complex Jacobi for a 4x4 Hermitian matrix. Sweeps until the
// off-diagonal Frobenius norm falls below 1e-14 (relative to the matrix
// norm), at most 100 sweeps.
//
// Throws ValidationError when ||m - m^H||_max > hermitian_tol and
// NumericalError if the sweeps fail to converge.
EigenDecomposition eig_hermitian(const Matrix4& m, double hermitian_tol = kHermitianTol);

struct SupportLog {
    Matrix4 log;                  // V log(Lambda+) V^H on the support, zero elsewhere
    std::array<bool, 4> support;  // aligned with EigenDecomposition::values
    Matrix4 projector;            // orthogonal projector onto the support
};

// Eigenvalues <= zero_tol are treated as exact zeros and left out of the log.
// Throws NotPsdError if an eigenvalue is below -zero_tol.
SupportLog log_on_support(const EigenDecomposition& d, double zero_tol = kDefaultZeroTol);

}  // namespace sdcwalk
