#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace sdcwalk {

// Exact rational number num/den with den > 0, always kept in lowest terms.
// Arithmetic throws ValidationError on int64 overflow.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    bool is_zero() const noexcept { return num_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a);
    friend bool operator==(const Rational&, const Rational&) = default;

    std::string str() const;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

struct Trig {
    double cos;
    double sin;
};

// An angle in radians, canonicalized into (-pi, pi].
//
// Angles built from a rational multiple of pi keep that multiple exactly, so
// t*angle can be reduced modulo 2*pi in integer arithmetic. This keeps the
// quarter-turn zeros of cos/sin exact at any step count, which is what makes
// poles and complete localization detectable without float dust.
class Angle {
public:
    Angle() = default;

    static Angle radians(double value);
    static Angle pi_times(const Rational& multiple);

    double value() const noexcept { return value_; }
    const std::optional<Rational>& pi_multiple() const noexcept { return pi_multiple_; }
    bool is_exact() const noexcept { return pi_multiple_.has_value(); }

    // cos and sin of step*angle.
    Trig at_step(std::int64_t step) const;

    // Smallest p >= 1 with p*angle a multiple of pi, if the angle is exact.
    std::optional<std::int64_t> half_turn_period() const;

    std::string str() const;

private:
    double value_ = 0.0;
    std::optional<Rational> pi_multiple_;
};

}  // namespace sdcwalk
