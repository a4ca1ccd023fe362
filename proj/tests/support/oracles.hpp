#pragma once

// Test-only reference implementations. Nothing here calls into the code paths
// it is used to check: the dense walk indexes a full grid and builds the coin
// from scalar trig calls, and the QRE route works on matrix logs instead of
// the eigenbasis expansion.

#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "sdcwalk/spectral.hpp"

namespace oracle {

using cplx = std::complex<double>;

// C_t written out entry by entry from plain doubles.
inline Eigen::Matrix4cd coin(double theta1, double theta2, double phi, int t) {
    const cplx i{0.0, 1.0};
    const cplx em = std::exp(-i * (t * phi));
    const cplx ep = std::exp(i * (t * phi));
    Eigen::Matrix4cd c = Eigen::Matrix4cd::Zero();
    c(0, 0) = em * std::cos(t * theta1);
    c(0, 3) = -i * em * std::sin(t * theta1);
    c(1, 1) = ep * std::cos(t * theta2);
    c(1, 2) = -i * ep * std::sin(t * theta2);
    c(2, 1) = -i * ep * std::sin(t * theta2);
    c(2, 2) = ep * std::cos(t * theta2);
    c(3, 0) = -i * em * std::sin(t * theta1);
    c(3, 3) = em * std::cos(t * theta1);
    return c;
}

// Full (2T+1)^2 grid walk, origin at (0, 0). amp[c][(m+T)*(2T+1) + (n+T)].
class DenseWalk {
public:
    DenseWalk(int max_steps, const Eigen::Vector4cd& spinor) : T_(max_steps), w_(2 * max_steps + 1) {
        for (auto& comp : amp_) comp.assign(static_cast<std::size_t>(w_ * w_), cplx{});
        for (int c = 0; c < 4; ++c) amp_[c][index(0, 0)] = spinor[c];
    }

    // step uses angles step*theta (or 1*theta when sic).
    void advance(double theta1, double theta2, double phi, bool sic) {
        ++t_;
        const Eigen::Matrix4cd c = coin(theta1, theta2, phi, sic ? 1 : t_);
        std::array<std::vector<cplx>, 4> next;
        for (auto& comp : next) comp.assign(static_cast<std::size_t>(w_ * w_), cplx{});
        const int dm[4] = {1, 1, -1, -1};
        const int dn[4] = {1, -1, 1, -1};
        for (int m = -T_; m <= T_; ++m) {
            for (int n = -T_; n <= T_; ++n) {
                Eigen::Vector4cd v;
                for (int k = 0; k < 4; ++k) v[k] = amp_[k][index(m, n)];
                if (v.isZero(0.0)) continue;
                const Eigen::Vector4cd u = c * v;
                for (int k = 0; k < 4; ++k) {
                    const int mm = m + dm[k], nn = n + dn[k];
                    if (std::abs(mm) > T_ || std::abs(nn) > T_) continue;
                    next[k][index(mm, nn)] += u[k];
                }
            }
        }
        amp_ = std::move(next);
    }

    cplx at(int m, int n, int c) const {
        if (std::abs(m) > T_ || std::abs(n) > T_) return {};
        return amp_[c][index(m, n)];
    }
    int step() const { return t_; }
    int radius() const { return T_; }

private:
    std::size_t index(int m, int n) const { return static_cast<std::size_t>((m + T_) * w_ + (n + T_)); }

    int T_;
    int w_;
    int t_ = 0;
    std::array<std::vector<cplx>, 4> amp_;
};

// Direct route: D = tr rho (log rho - log sigma),
// V = tr rho (log rho - log sigma)^2 - D^2, with logs restricted to supports.
struct DirectQre {
    double d;
    double v;
};

inline DirectQre direct_qre(const Eigen::Matrix4cd& rho, const Eigen::Matrix4cd& sigma) {
    const auto lr = sdcwalk::log_on_support(sdcwalk::eig_hermitian(rho)).log;
    const auto ls = sdcwalk::log_on_support(sdcwalk::eig_hermitian(sigma)).log;
    const Eigen::Matrix4cd diff = lr - ls;
    const double d = (rho * diff).trace().real();
    const double second = (rho * diff * diff).trace().real();
    return {d, second - d * d};
}

inline Eigen::Matrix4cd random_hermitian(std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> g(0.0, scale);
    Eigen::Matrix4cd a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = cplx{g(rng), g(rng)};
    return 0.5 * (a + a.adjoint());
}

// Random full-rank density matrix: G G^H / tr.
inline Eigen::Matrix4cd random_density(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::Matrix4cd a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = cplx{g(rng), g(rng)};
    Eigen::Matrix4cd rho = a * a.adjoint();
    return rho / rho.trace().real();
}

inline Eigen::Matrix4cd random_unitary(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::Matrix4cd a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = cplx{g(rng), g(rng)};
    Eigen::HouseholderQR<Eigen::Matrix4cd> qr(a);
    return qr.householderQ();
}

}  // namespace oracle
