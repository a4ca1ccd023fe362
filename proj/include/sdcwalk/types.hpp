#pragma once

#include <complex>
#include <compare>

#include <Eigen/Dense>

namespace sdcwalk {

using complex_t = std::complex<double>;
using Spinor = Eigen::Vector4cd;
using Matrix4 = Eigen::Matrix4cd;

inline constexpr complex_t kI{0.0, 1.0};

// Lattice site (m, n) of the 2D walk.
struct Site {
    int m = 0;
    int n = 0;

    friend auto operator<=>(const Site&, const Site&) = default;
};

// Largest |entry| of a matrix expression.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.cwiseAbs().maxCoeff();
}

}  // namespace sdcwalk
