#include "sdcwalk/angle.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "sdcwalk/errors.hpp"

namespace sdcwalk {
namespace {

__extension__ using i128 = __int128;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw ValidationError("rational overflow");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw ValidationError("rational overflow");
    return out;
}

// Exact cos/sin of pi*k/den for k in (-den, den].
Trig trig_of_pi_fraction(std::int64_t k, std::int64_t den) {
    if (k == 0) return {1.0, 0.0};
    if (k == den) return {-1.0, 0.0};
    if (2 * k == den) return {0.0, 1.0};
    if (2 * k == -den) return {0.0, -1.0};
    const double x = std::numbers::pi * static_cast<double>(k) / static_cast<double>(den);
    return {std::cos(x), std::sin(x)};
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw ValidationError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = g == 0 ? 0 : num / g;
    den_ = g == 0 ? 1 : den / g;
}

Rational operator+(const Rational& a, const Rational& b) {
    const std::int64_t l = std::lcm(a.den_, b.den_);
    return {checked_add(checked_mul(a.num_, l / a.den_), checked_mul(b.num_, l / b.den_)), l};
}

Rational operator-(const Rational& a) { return {checked_mul(a.num_, -1), a.den_}; }

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    // cross-reduce first to keep intermediates small
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    const std::int64_t an = g1 ? a.num_ / g1 : a.num_, bd = g1 ? b.den_ / g1 : b.den_;
    const std::int64_t bn = g2 ? b.num_ / g2 : b.num_, ad = g2 ? a.den_ / g2 : a.den_;
    return {checked_mul(an, bn), checked_mul(ad, bd)};
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw ValidationError("division by zero");
    return a * Rational(b.den_, b.num_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Angle Angle::radians(double value) {
    if (!std::isfinite(value)) throw ValidationError("angle must be finite");
    double r = std::remainder(value, 2.0 * std::numbers::pi);
    if (r <= -std::numbers::pi) r += 2.0 * std::numbers::pi;
    Angle a;
    a.value_ = r;
    return a;
}

Angle Angle::pi_times(const Rational& multiple) {
    // reduce num/den into (-1, 1]
    const std::int64_t den = multiple.den();
    const std::int64_t period = checked_mul(2, den);
    std::int64_t k = multiple.num() % period;
    if (k <= -den) k += period;
    if (k > den) k -= period;
    Angle a;
    a.pi_multiple_ = Rational(k, den);
    a.value_ = std::numbers::pi * a.pi_multiple_->to_double();
    return a;
}

Trig Angle::at_step(std::int64_t step) const {
    if (!pi_multiple_) {
        const double x = static_cast<double>(step) * value_;
        return {std::cos(x), std::sin(x)};
    }
    const std::int64_t den = pi_multiple_->den();
    const i128 period = static_cast<i128>(2) * den;
    i128 k = (static_cast<i128>(pi_multiple_->num()) * step) % period;
    if (k <= -den) k += period;
    if (k > den) k -= period;
    return trig_of_pi_fraction(static_cast<std::int64_t>(k), den);
}

std::optional<std::int64_t> Angle::half_turn_period() const {
    if (!pi_multiple_) return std::nullopt;
    // p*num/den integer  <=>  den | p (num, den coprime)
    return pi_multiple_->den();
}

std::string Angle::str() const {
    if (pi_multiple_) {
        if (pi_multiple_->is_zero()) return "0";
        return "pi*" + pi_multiple_->str();
    }
    std::ostringstream os;
    os.precision(17);
    os << value_;
    return os.str();
}

}  // namespace sdcwalk
