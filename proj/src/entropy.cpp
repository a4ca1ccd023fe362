#include "sdcwalk/entropy.hpp"

#include <cmath>

#include "sdcwalk/errors.hpp"

namespace sdcwalk {

ReducedDensity reduced_density(const Wavefunction& psi) {
    ReducedDensity r;
    r.step = psi.step();
    r.matrix.setZero();
    for (const auto& e : psi.entries()) r.matrix.noalias() += e.amp * e.amp.adjoint();
    return r;
}

double entanglement(const ReducedDensity& rho, double zero_tol) {
    const auto d = eig_hermitian(rho.matrix);
    double s = 0.0;
    for (double lam : d.values) {
        if (lam > zero_tol) s -= lam * std::log(lam);
    }
    return std::max(s, 0.0);
}

QreResult qre(const ReducedDensity& rho, const ReducedDensity& sigma, const QreOptions& options) {
    if (rho.step != sigma.step) {
        throw ValidationError("qre: density matrices from different steps (" + std::to_string(rho.step) + " vs " +
                              std::to_string(sigma.step) + ")");
    }
    Matrix4 sigma_m = sigma.matrix;
    if (options.smoothing_eps) {
        const double eps = *options.smoothing_eps;
        if (!(eps >= 0.0 && eps <= 1.0)) throw ValidationError("qre: smoothing eps must lie in [0, 1]");
        sigma_m = (1.0 - eps) * sigma_m + (eps / 4.0) * Matrix4::Identity();
    }

    const auto dr = eig_hermitian(rho.matrix);
    const auto ds = eig_hermitian(sigma_m);
    for (double lam : dr.values)
        if (lam < -options.zero_tol) throw NotPsdError("qre: rho is not positive semidefinite");
    for (double lam : ds.values)
        if (lam < -options.zero_tol) throw NotPsdError("qre: sigma is not positive semidefinite");

    QreResult r;
    const Matrix4 c = dr.vectors.adjoint() * ds.vectors;
    r.overlap = c.cwiseAbs2();

    std::array<bool, 4> in_rho{}, in_sigma{};
    std::array<double, 4> log_rho{}, log_sigma{};
    for (std::size_t k = 0; k < 4; ++k) {
        in_rho[k] = dr.values[k] > options.zero_tol;
        in_sigma[k] = ds.values[k] > options.zero_tol;
        if (in_rho[k]) log_rho[k] = std::log(dr.values[k]);
        if (in_sigma[k]) log_sigma[k] = std::log(ds.values[k]);
    }

    double outside = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!in_rho[i]) continue;
        for (std::size_t j = 0; j < 4; ++j)
            if (!in_sigma[j]) outside += dr.values[i] * r.overlap(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    if (outside > options.support_tol) {
        r.support_violation = true;
        r.d = kInfiniteQre;
        r.v = std::numeric_limits<double>::quiet_NaN();
        return r;
    }

    double self = 0.0, self_sq = 0.0, cross = 0.0, cross_sq = 0.0, mixed = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!in_rho[i]) continue;
        const double li = dr.values[i];
        self += li * log_rho[i];
        self_sq += li * log_rho[i] * log_rho[i];
        for (std::size_t j = 0; j < 4; ++j) {
            if (!in_sigma[j]) continue;
            const double w = li * r.overlap(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            cross += w * log_sigma[j];
            cross_sq += w * log_sigma[j] * log_sigma[j];
            mixed += w * log_rho[i] * log_sigma[j];
        }
    }
    r.d = self - cross;
    r.v = self_sq + cross_sq - 2.0 * mixed - r.d * r.d;
    return r;
}

EntropySeries entropy_series(const CoinParams& params, const InitialState& init, std::int64_t steps,
                             const SeriesOptions& options) {
    if (steps < 1) throw ValidationError("entropy_series: steps must be >= 1");
    check_site_budget(steps, options.evolve);

    const CoinParams sdc = params.with_mode(CoinMode::SDC);
    const CoinParams sic = params.with_mode(CoinMode::SIC);
    Wavefunction a = init.wavefunction();
    Wavefunction b = a;

    EntropySeries out;
    for (std::int64_t t = 0;; ++t) {
        const auto fa = probability_field(a);
        const auto fb = probability_field(b);
        out.shannon_position_sdc.push(t, shannon_position(fa, options.shannon_base));
        out.shannon_position_sic.push(t, shannon_position(fb, options.shannon_base));
        out.shannon_coin_sdc.push(t, shannon_coin(a, options.shannon_base));
        out.shannon_coin_sic.push(t, shannon_coin(b, options.shannon_base));

        const auto rho = reduced_density(a);
        const auto sigma = reduced_density(b);
        out.entanglement_sdc.push(t, entanglement(rho, options.qre.zero_tol));
        out.entanglement_sic.push(t, entanglement(sigma, options.qre.zero_tol));

        const auto q = qre(rho, sigma, options.qre);
        if (q.support_violation) {
            out.support_violation_steps.push_back(t);
        } else {
            out.qre_d.push(t, q.d);
            out.qre_v.push(t, q.v);
            if (q.zero_variance_event()) out.zero_variance_steps.push_back(t);
        }

        if (t == steps) break;
        a = step(a, sdc);
        b = step(b, sic);
    }
    return out;
}

}  // namespace sdcwalk
