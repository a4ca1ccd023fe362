#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "sdcwalk/coin.hpp"
#include "sdcwalk/types.hpp"

namespace sdcwalk {

inline constexpr double kDefaultPoleTol = 1e-12;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct DispersionPoint {
    double k1 = 0.0, k2 = 0.0;
    double omega1 = 0.0, omega2 = 0.0;  // principal branch [0, pi]
};

// cos w1 = cos th1 cos(k1 + k2), cos w2 = cos th2 cos(k1 - k2).
DispersionPoint dispersion(const Angle& theta1, const Angle& theta2, double k1, double k2);

struct TransferMatrix {
    Matrix4 entries;
    std::int64_t step = 1;
};

// Transfer operator at step t with (0,3) block
//   [ e^{-it phi + i w1} sec t th1    -i tan t th1                  ]
//   [ i tan t th1                      e^{it phi - i w1} sec t th1  ]
// and the analogous (1,2) block in th2, w2 with the phase signs swapped.
// SIC mode uses the step-1 angles. Throws PoleError when |cos t th| <= pole_tol.
TransferMatrix transfer_matrix(const CoinParams& params, double omega1, double omega2, std::int64_t t,
                               double pole_tol = kDefaultPoleTol);

struct LyapunovResult {
    double omega = 0.0;
    double lambda = 0.0;  // kInfinity when divergent
    double l_loc = 0.0;   // 1/lambda; kInfinity when lambda == 0, 0 when divergent
    bool divergent = false;
    std::int64_t pole_step = 0;  // first step hitting a pole, when divergent
};

// Iterates v_x = T_x v_{x-1} from v_0 = (1, 0, 0, 0) with w1 = w2 = omega,
// renormalizing each step: lambda = (1/steps) sum log(|v_x| / |v_{x-1}|).
LyapunovResult lyapunov(const CoinParams& params, double omega, std::int64_t steps,
                        double pole_tol = kDefaultPoleTol);

// Grid points are independent; `threads` = 0 picks the hardware concurrency.
// Results are identical for any thread count.
std::vector<LyapunovResult> lloc_sweep(const CoinParams& params, std::span<const double> omega_grid,
                                       std::int64_t steps, unsigned threads = 0,
                                       double pole_tol = kDefaultPoleTol);

// omega_min + k*step for k = 0, 1, ... while <= omega_max (+ a half-step
// guard against rounding). Throws ValidationError for step <= 0 or an empty grid.
std::vector<double> make_grid(double omega_min, double omega_max, double step);

struct SicDiagonalization {
    Matrix4 similarity;                   // S
    std::array<complex_t, 4> diagonal;    // e^{i wb1}, e^{i wb2}, e^{-i wb2}, e^{-i wb1}
    double omega_bar1 = 0.0, omega_bar2 = 0.0;
    double xi1 = 0.0, xi2 = 0.0;
};

// S^{-1} T_SIC S = diag(e^{i wb1}, e^{i wb2}, e^{-i wb2}, e^{-i wb1}) with
// cos wb_i = cos w_i sec th_i and xi_i = sin w_i sec th_i - sin wb_i.
// Requires phi = 0. Throws BandError when |cos w_i sec th_i| >= 1 (complex
// or degenerate wb) and NumericalError if the identity fails to 1e-9.
SicDiagonalization sic_diagonalization(const CoinParams& params, double omega1, double omega2,
                                       double pole_tol = kDefaultPoleTol);

struct PerturbCoeffs {
    complex_t alpha, beta, gamma, delta;
    double xi1 = 0.0, xi2 = 0.0;
    double omega_bar1 = 0.0, omega_bar2 = 0.0;
    std::int64_t step = 1;

    // S^{-1} T_SDC S rebuilt from the four coefficients.
    Matrix4 conjugated_transfer() const;
};

PerturbCoeffs perturbation_coeffs(const CoinParams& params, double omega1, double omega2, std::int64_t t,
                                  double pole_tol = kDefaultPoleTol);

struct Sec2Options {
    std::int64_t n_max = 10000;
    double cap = 1e12;
};

// (1/N) sum_{n=1..N} sec^2(n theta), or nullopt if a term exceeds the cap.
// An exact rational multiple of pi is averaged over one full period of
// sec^2(n theta), which is the N -> infinity limit; other angles use N = n_max.
std::optional<double> sec2_average(const Angle& theta, const Sec2Options& options = {});

// 2 / (cos^2 w1 <sec^2(n th1)> + cos^2 w2 <sec^2(n th2)>), defined up to an
// overall constant. 0 when an average diverges; kInfinity when the
// denominator vanishes (cos w1 = cos w2 = 0).
double analytic_lloc(const CoinParams& params, double omega1, double omega2, const Sec2Options& options = {});

struct AnalyticCurve {
    std::vector<double> omega;
    std::vector<double> raw;
    std::vector<double> normalized;  // raw / max(raw); infinite peaks map to 1
};

AnalyticCurve analytic_lloc_curve(const CoinParams& params, std::span<const double> omega_grid,
                                  const Sec2Options& options = {});

}  // namespace sdcwalk
