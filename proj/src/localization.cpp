#include "sdcwalk/localization.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "sdcwalk/errors.hpp"

namespace sdcwalk {
namespace {

// |lambda| below this is free propagation round-off.
constexpr double kFreePropagationTol = 1e-13;

struct SecTan {
    double sec;
    double tan;
};

SecTan sec_tan(const Angle& theta, std::int64_t t, double pole_tol) {
    const Trig tr = theta.at_step(t);
    if (std::abs(tr.cos) <= pole_tol) {
        throw PoleError("transfer matrix pole: cos(" + std::to_string(t) + " * " + theta.str() + ") = 0", static_cast<int>(t));
    }
    return {1.0 / tr.cos, tr.sin / tr.cos};
}

complex_t expi(double x) { return {std::cos(x), std::sin(x)}; }

void require_zero_phi(const CoinParams& params) {
    if (params.phi.value() != 0.0) {
        throw ValidationError("SIC diagonalization is defined for phi = 0 only");
    }
}

// Band frequency for one block. The sign of sin(wb) is chosen opposite to
// sin(w), which maximizes |xi| and keeps S invertible away from band edges.
void band_frequency(const Angle& theta, double omega, double pole_tol, double& omega_bar, double& xi) {
    const double sec = sec_tan(theta, 1, pole_tol).sec;
    const double c = std::cos(omega) * sec;
    if (!(std::abs(c) < 1.0)) {
        throw BandError("evanescent band: |cos(omega) sec(theta)| = " + std::to_string(std::abs(c)) + " >= 1");
    }
    const double wb = std::acos(c);
    omega_bar = std::sin(omega) > 0.0 ? -wb : wb;
    xi = std::sin(omega) * sec - std::sin(omega_bar);
}

}  // namespace

DispersionPoint dispersion(const Angle& theta1, const Angle& theta2, double k1, double k2) {
    DispersionPoint p;
    p.k1 = k1;
    p.k2 = k2;
    const double c1 = std::clamp(theta1.at_step(1).cos * std::cos(k1 + k2), -1.0, 1.0);
    const double c2 = std::clamp(theta2.at_step(1).cos * std::cos(k1 - k2), -1.0, 1.0);
    p.omega1 = std::acos(c1);
    p.omega2 = std::acos(c2);
    return p;
}

TransferMatrix transfer_matrix(const CoinParams& params, double omega1, double omega2, std::int64_t t,
                               double pole_tol) {
    if (t < 1) throw ValidationError("transfer matrix step must be >= 1");
    const std::int64_t s = params.effective_step(t);
    const SecTan a = sec_tan(params.theta1, s, pole_tol);
    const SecTan b = sec_tan(params.theta2, s, pole_tol);
    const Trig p = params.phi.at_step(s);
    const complex_t plus_phi{p.cos, p.sin};

    TransferMatrix tm;
    tm.step = t;
    auto& m = tm.entries;
    m.setZero();
    m(0, 0) = std::conj(plus_phi) * expi(omega1) * a.sec;
    m(0, 3) = -kI * a.tan;
    m(3, 0) = kI * a.tan;
    m(3, 3) = plus_phi * expi(-omega1) * a.sec;
    m(1, 1) = plus_phi * expi(omega2) * b.sec;
    m(1, 2) = -kI * b.tan;
    m(2, 1) = kI * b.tan;
    m(2, 2) = std::conj(plus_phi) * expi(-omega2) * b.sec;
    return tm;
}

LyapunovResult lyapunov(const CoinParams& params, double omega, std::int64_t steps, double pole_tol) {
    if (steps < 1) throw ValidationError("lyapunov: steps must be >= 1");
    LyapunovResult r;
    r.omega = omega;

    Spinor v(1.0, 0.0, 0.0, 0.0);
    double log_growth = 0.0;
    for (std::int64_t x = 1; x <= steps; ++x) {
        TransferMatrix tm;
        try {
            tm = transfer_matrix(params, omega, omega, x, pole_tol);
        } catch (const PoleError&) {
            r.divergent = true;
            r.lambda = kInfinity;
            r.l_loc = 0.0;
            r.pole_step = x;
            return r;
        }
        v = tm.entries * v;
        const double n = v.norm();
        log_growth += std::log(n);
        v /= n;
    }
    r.lambda = log_growth / static_cast<double>(steps);
    if (std::abs(r.lambda) < kFreePropagationTol) {
        r.lambda = 0.0;
        r.l_loc = kInfinity;
    } else {
        r.l_loc = 1.0 / r.lambda;
    }
    return r;
}

std::vector<LyapunovResult> lloc_sweep(const CoinParams& params, std::span<const double> omega_grid,
                                       std::int64_t steps, unsigned threads, double pole_tol) {
    if (omega_grid.empty()) throw ValidationError("lloc_sweep: empty frequency grid");
    if (steps < 1) throw ValidationError("lloc_sweep: steps must be >= 1");
    std::vector<LyapunovResult> out(omega_grid.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, omega_grid.size()));

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out[i] = lyapunov(params, omega_grid[i], steps, pole_tol);
    };
    if (threads <= 1) {
        work(0, out.size());
        return out;
    }
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (out.size() + threads - 1) / threads;
        for (std::size_t begin = 0; begin < out.size(); begin += chunk) {
            pool.emplace_back(work, begin, std::min(out.size(), begin + chunk));
        }
    }
    return out;
}

std::vector<double> make_grid(double omega_min, double omega_max, double step) {
    if (!(step > 0.0) || !std::isfinite(omega_min) || !std::isfinite(omega_max)) {
        throw ValidationError("frequency grid needs finite bounds and a positive step");
    }
    std::vector<double> grid;
    for (std::int64_t k = 0;; ++k) {
        const double w = omega_min + static_cast<double>(k) * step;
        if (w > omega_max + 1e-9 * step) break;
        grid.push_back(w);
    }
    if (grid.empty()) throw ValidationError("frequency grid is empty");
    return grid;
}

SicDiagonalization sic_diagonalization(const CoinParams& params, double omega1, double omega2, double pole_tol) {
    require_zero_phi(params);
    SicDiagonalization d;
    band_frequency(params.theta1, omega1, pole_tol, d.omega_bar1, d.xi1);
    band_frequency(params.theta2, omega2, pole_tol, d.omega_bar2, d.xi2);
    const double t1 = params.theta1.at_step(1).sin / params.theta1.at_step(1).cos;
    const double t2 = params.theta2.at_step(1).sin / params.theta2.at_step(1).cos;

    auto& s = d.similarity;
    s.setZero();
    s(0, 0) = t1;
    s(0, 3) = -d.xi1;
    s(3, 0) = d.xi1;
    s(3, 3) = -t1;
    s(1, 1) = t2;
    s(1, 2) = -d.xi2;
    s(2, 1) = d.xi2;
    s(2, 2) = -t2;

    d.diagonal = {expi(d.omega_bar1), expi(d.omega_bar2), expi(-d.omega_bar2), expi(-d.omega_bar1)};

    const Matrix4 t_sic = transfer_matrix(params.with_mode(CoinMode::SIC), omega1, omega2, 1, pole_tol).entries;
    Matrix4 expected = Matrix4::Zero();
    for (int i = 0; i < 4; ++i) expected(i, i) = d.diagonal[static_cast<std::size_t>(i)];
    const Matrix4 got = s.inverse() * t_sic * s;
    if (!got.allFinite() || max_abs(got - expected) > 1e-9) {
        throw NumericalError("SIC diagonalization identity failed");
    }
    return d;
}

Matrix4 PerturbCoeffs::conjugated_transfer() const {
    Matrix4 m = Matrix4::Zero();
    m(0, 0) = alpha;
    m(0, 3) = beta;
    m(3, 0) = std::conj(beta);
    m(3, 3) = std::conj(alpha);
    m(1, 1) = gamma;
    m(1, 2) = delta;
    m(2, 1) = std::conj(delta);
    m(2, 2) = std::conj(gamma);
    return m;
}

PerturbCoeffs perturbation_coeffs(const CoinParams& params, double omega1, double omega2, std::int64_t t,
                                  double pole_tol) {
    if (t < 1) throw ValidationError("perturbation_coeffs: step must be >= 1");
    const SicDiagonalization d = sic_diagonalization(params, omega1, omega2, pole_tol);

    // alpha/gamma share one closed form, beta/delta another, per block.
    auto block = [&](const Angle& theta, double omega, double xi, complex_t& diag, complex_t& off) {
        const Trig base = theta.at_step(1);
        const double tn = base.sin / base.cos;
        const SecTan st = sec_tan(theta, t, pole_tol);
        const double sin_t = theta.at_step(t).sin;
        const double denom = xi * xi - tn * tn;
        diag = (xi * xi * expi(-omega) * st.sec + 2.0 * kI * xi * tn * st.tan - expi(omega) * tn * tn * st.sec) / denom;
        off = kI * st.sec * (2.0 * xi * tn * std::sin(omega) - xi * xi * sin_t - tn * tn * sin_t) / denom;
    };

    PerturbCoeffs c;
    c.step = t;
    c.xi1 = d.xi1;
    c.xi2 = d.xi2;
    c.omega_bar1 = d.omega_bar1;
    c.omega_bar2 = d.omega_bar2;
    block(params.theta1, omega1, d.xi1, c.alpha, c.beta);
    block(params.theta2, omega2, d.xi2, c.gamma, c.delta);
    return c;
}

std::optional<double> sec2_average(const Angle& theta, const Sec2Options& options) {
    if (options.n_max < 1) throw ValidationError("sec2_average: n_max must be >= 1");
    std::int64_t n_terms = options.n_max;
    if (const auto period = theta.half_turn_period(); period && *period <= options.n_max) n_terms = *period;

    double sum = 0.0;
    for (std::int64_t n = 1; n <= n_terms; ++n) {
        const double c = theta.at_step(n).cos;
        if (c == 0.0) return std::nullopt;
        const double term = 1.0 / (c * c);
        if (!(term <= options.cap)) return std::nullopt;
        sum += term;
    }
    return sum / static_cast<double>(n_terms);
}

namespace {

double analytic_from_averages(double omega1, double omega2, double avg1, double avg2) {
    const double c1 = std::cos(omega1), c2 = std::cos(omega2);
    const double denom = c1 * c1 * avg1 + c2 * c2 * avg2;
    if (denom == 0.0) return kInfinity;
    return 2.0 / denom;
}

}  // namespace

double analytic_lloc(const CoinParams& params, double omega1, double omega2, const Sec2Options& options) {
    const auto a1 = sec2_average(params.theta1, options);
    const auto a2 = sec2_average(params.theta2, options);
    if (!a1 || !a2) return 0.0;
    return analytic_from_averages(omega1, omega2, *a1, *a2);
}

AnalyticCurve analytic_lloc_curve(const CoinParams& params, std::span<const double> omega_grid,
                                  const Sec2Options& options) {
    if (omega_grid.empty()) throw ValidationError("analytic_lloc_curve: empty frequency grid");
    AnalyticCurve c;
    c.omega.assign(omega_grid.begin(), omega_grid.end());
    const auto a1 = sec2_average(params.theta1, options);
    const auto a2 = sec2_average(params.theta2, options);
    for (double w : omega_grid) c.raw.push_back(a1 && a2 ? analytic_from_averages(w, w, *a1, *a2) : 0.0);

    const double peak = *std::max_element(c.raw.begin(), c.raw.end());
    for (double v : c.raw) {
        if (std::isinf(peak)) {
            c.normalized.push_back(std::isinf(v) ? 1.0 : 0.0);
        } else {
            c.normalized.push_back(peak > 0.0 ? v / peak : 0.0);
        }
    }
    return c;
}

}  // namespace sdcwalk
