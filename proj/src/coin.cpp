#include "sdcwalk/coin.hpp"

#include "sdcwalk/errors.hpp"

namespace sdcwalk {

const char* to_string(CoinMode mode) noexcept { return mode == CoinMode::SIC ? "sic" : "sdc"; }

CoinParams symmetric_params(const Angle& theta, CoinMode mode) {
    return CoinParams{theta, theta, Angle::pi_times(Rational(0)), mode};
}

CoinMatrix coin_matrix(const CoinParams& params, std::int64_t t) {
    if (t < 1) throw ValidationError("coin step must be >= 1");
    const std::int64_t s = params.effective_step(t);

    const Trig a = params.theta1.at_step(s);
    const Trig b = params.theta2.at_step(s);
    const Trig p = params.phi.at_step(s);
    const complex_t minus_phase{p.cos, -p.sin};  // e^{-i s phi}
    const complex_t plus_phase{p.cos, p.sin};    // e^{+i s phi}

    CoinMatrix c;
    c.step = t;
    c.entries.setZero();
    c.entries(0, 0) = minus_phase * a.cos;
    c.entries(0, 3) = -kI * minus_phase * a.sin;
    c.entries(3, 0) = -kI * minus_phase * a.sin;
    c.entries(3, 3) = minus_phase * a.cos;
    c.entries(1, 1) = plus_phase * b.cos;
    c.entries(1, 2) = -kI * plus_phase * b.sin;
    c.entries(2, 1) = -kI * plus_phase * b.sin;
    c.entries(2, 2) = plus_phase * b.cos;
    return c;
}

}  // namespace sdcwalk
