#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "sdcwalk/observables.hpp"
#include "sdcwalk/spectral.hpp"
#include "sdcwalk/walk.hpp"

namespace sdcwalk {

// Coin-space density matrix after tracing out position.
struct ReducedDensity {
    Matrix4 matrix;
    std::int64_t step = 0;
};

ReducedDensity reduced_density(const Wavefunction& psi);

// von Neumann entropy -sum lambda log lambda over eigenvalues > zero_tol.
double entanglement(const ReducedDensity& rho, double zero_tol = kDefaultZeroTol);

struct QreOptions {
    double zero_tol = kDefaultZeroTol;
    // Weight of rho outside supp(sigma) above this is a support violation.
    double support_tol = 1e-10;
    // When set, sigma -> (1 - eps) sigma + eps I/4 before the comparison.
    std::optional<double> smoothing_eps;
};

inline constexpr double kInfiniteQre = std::numeric_limits<double>::infinity();

struct QreResult {
    double d = 0.0;  // kInfiniteQre on support violation
    double v = 0.0;  // NaN on support violation
    Eigen::Matrix4d overlap = Eigen::Matrix4d::Zero();  // |<phi_i|phi'_k>|^2
    bool support_violation = false;

    // V = 0 while D != 0; reported, not interpreted.
    bool zero_variance_event(double tol = 1e-9) const { return !support_violation && std::abs(v) <= tol && d > tol; }
};

// Quantum relative entropy D(rho||sigma) and information variance V(rho||sigma)
// through the eigenbasis expansion with overlaps c_ik = <phi_i|phi'_k>:
//   D = sum_i l_i log l_i - sum_ij l_i log l'_j |c_ij|^2
//   V = sum_i l_i (log l_i)^2 + sum_ij l_i (log l'_j)^2 |c_ij|^2
//       - 2 sum_ij l_i log l_i log l'_j |c_ij|^2 - D^2
// with every sum restricted to the supports. Throws ValidationError when the
// steps differ.
QreResult qre(const ReducedDensity& rho, const ReducedDensity& sigma, const QreOptions& options = {});

struct EntropySeries {
    TimeSeries shannon_position_sdc{"S_P sdc", {}};
    TimeSeries shannon_position_sic{"S_P sic", {}};
    TimeSeries shannon_coin_sdc{"S_C sdc", {}};
    TimeSeries shannon_coin_sic{"S_C sic", {}};
    TimeSeries entanglement_sdc{"E sdc", {}};
    TimeSeries entanglement_sic{"E sic", {}};
    TimeSeries qre_d{"D(sdc||sic)", {}};
    TimeSeries qre_v{"V(sdc||sic)", {}};
    // Steps where D is infinite; those steps are absent from qre_d and qre_v.
    std::vector<std::int64_t> support_violation_steps;
    std::vector<std::int64_t> zero_variance_steps;
};

struct SeriesOptions {
    QreOptions qre;
    LogBase shannon_base = LogBase::Natural;
    EvolveOptions evolve;
};

// Runs SDC and SIC walks in lockstep from the same initial state and records
// every diagnostic for t = 0..steps. params.mode is ignored.
EntropySeries entropy_series(const CoinParams& params, const InitialState& init, std::int64_t steps,
                             const SeriesOptions& options = {});

}  // namespace sdcwalk
