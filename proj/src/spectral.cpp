#include "sdcwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sdcwalk/errors.hpp"

namespace sdcwalk {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kSweepTol = 1e-14;

double off_diagonal_norm(const Matrix4& a) {
    double s = 0.0;
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
            if (p != q) s += std::norm(a(p, q));
    return std::sqrt(s);
}

// Zeroes a(p, q) by a unitary rotation in the (p, q) plane: a phase that
// makes a(p, q) real, followed by a real Jacobi rotation.
void rotate(Matrix4& a, Matrix4& v, int p, int q) {
    const complex_t h = a(p, q);
    const double mag = std::abs(h);
    if (mag == 0.0) return;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * mag);
    const double t = tau == 0.0 ? 1.0 : std::copysign(1.0, tau) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const complex_t conj_phase = std::conj(h) / mag;  // e^{-i arg h}

    Matrix4 g = Matrix4::Identity();
    g(p, p) = c;
    g(p, q) = s;
    g(q, p) = -s * conj_phase;
    g(q, q) = c * conj_phase;

    a = (g.adjoint() * a * g).eval();
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    v = (v * g).eval();
}

}  // namespace

Matrix4 EigenDecomposition::reconstruct() const {
    Eigen::Vector4cd lam;
    for (int i = 0; i < 4; ++i) lam[i] = values[static_cast<std::size_t>(i)];
    return vectors * lam.asDiagonal() * vectors.adjoint();
}

EigenDecomposition eig_hermitian(const Matrix4& m, double hermitian_tol) {
    if (!m.allFinite()) throw ValidationError("eig_hermitian: non-finite entries");
    const double asym = max_abs(m - m.adjoint());
    if (asym > hermitian_tol) {
        throw ValidationError("eig_hermitian: matrix is not Hermitian (deviation " + std::to_string(asym) + ")");
    }

    Matrix4 a = 0.5 * (m + m.adjoint());
    Matrix4 v = Matrix4::Identity();
    const double scale = a.norm();

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= kSweepTol * scale) break;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 4; ++q) rotate(a, v, p, q);
    }
    if (sweep == kMaxSweeps && off_diagonal_norm(a) > kSweepTol * scale) {
        throw NumericalError("eig_hermitian: Jacobi sweeps did not converge");
    }

    std::array<int, 4> order{};
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenDecomposition d;
    for (std::size_t k = 0; k < 4; ++k) {
        d.values[k] = a(order[k], order[k]).real();
        d.vectors.col(static_cast<Eigen::Index>(k)) = v.col(order[k]);
    }
    return d;
}

SupportLog log_on_support(const EigenDecomposition& d, double zero_tol) {
    SupportLog out;
    out.log.setZero();
    out.projector.setZero();
    for (std::size_t k = 0; k < 4; ++k) {
        const double lam = d.values[k];
        if (lam < -zero_tol) {
            throw NotPsdError("log_on_support: eigenvalue " + std::to_string(lam) + " below -zero_tol");
        }
        out.support[k] = lam > zero_tol;
        if (!out.support[k]) continue;
        const auto col = d.vectors.col(static_cast<Eigen::Index>(k));
        const Matrix4 proj = col * col.adjoint();
        out.log += std::log(lam) * proj;
        out.projector += proj;
    }
    return out;
}

}  // namespace sdcwalk
