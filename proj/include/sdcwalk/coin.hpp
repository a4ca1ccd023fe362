#pragma once

#include <cstdint>

#include "sdcwalk/angle.hpp"
#include "sdcwalk/types.hpp"

namespace sdcwalk {

enum class CoinMode {
    SDC,  // angles scale with the step number
    SIC,  // the step-1 coin is reused at every step
};

const char* to_string(CoinMode mode) noexcept;

struct CoinParams {
    Angle theta1;
    Angle theta2;
    Angle phi;
    CoinMode mode = CoinMode::SDC;

    // Same angles with a different schedule.
    CoinParams with_mode(CoinMode m) const {
        CoinParams p = *this;
        p.mode = m;
        return p;
    }

    // Step whose angles are used when the walk advances to `step`.
    std::int64_t effective_step(std::int64_t step) const noexcept { return mode == CoinMode::SIC ? 1 : step; }
};

// theta1 = theta2 = theta, phi = 0.
CoinParams symmetric_params(const Angle& theta, CoinMode mode = CoinMode::SDC);

struct CoinMatrix {
    Matrix4 entries;
    std::int64_t step = 1;
};

// The step-dependent coin C_t: a (0,3) block rotated by t*theta1 with phase
// e^{-i t phi} and a (1,2) block rotated by t*theta2 with phase e^{+i t phi}.
// Throws ValidationError for t < 1.
CoinMatrix coin_matrix(const CoinParams& params, std::int64_t t);

}  // namespace sdcwalk
