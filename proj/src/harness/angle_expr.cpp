#include "sdcwalk/harness/angle_expr.hpp"

#include <cctype>
#include <numbers>
#include <optional>
#include <string>

#include "sdcwalk/errors.hpp"

namespace sdcwalk::harness {
namespace {

// coeff * pi^power, or a radian value once exactness is lost.
struct Value {
    std::optional<Rational> coeff;
    double approx = 0.0;  // numeric value including the pi factor
    int power = 0;
};

Value exact(Rational r, int power) {
    const double base = r.to_double();
    return {r, power == 1 ? base * std::numbers::pi : base, power};
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Value parse() {
        Value v = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ValidationError("angle expression '" + std::string(text_) + "': " + why + " at offset " +
                              std::to_string(pos_));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value expr() {
        Value v = term();
        for (;;) {
            if (accept('+')) v = add(v, term(), false);
            else if (accept('-')) v = add(v, term(), true);
            else return v;
        }
    }

    Value term() {
        Value v = factor();
        for (;;) {
            if (accept('*')) v = mul(v, factor(), false);
            else if (accept('/')) v = mul(v, factor(), true);
            else return v;
        }
    }

    Value factor() {
        if (accept('+')) return factor();
        if (accept('-')) return negate(factor());
        if (accept('(')) {
            Value v = expr();
            if (!accept(')')) fail("missing ')'");
            return v;
        }
        skip_space();
        if (text_.substr(pos_, 2) == "pi") {
            pos_ += 2;
            return exact(Rational(1), 1);
        }
        if (text_.substr(pos_, 2) == "π") {
            pos_ += 2;
            return exact(Rational(1), 1);
        }
        return number();
    }

    Value number() {
        const std::size_t start = pos_;
        std::int64_t num = 0, den = 1;
        bool digits = false, point = false;
        for (; pos_ < text_.size(); ++pos_) {
            const char c = text_[pos_];
            if (c == '.' && !point) {
                point = true;
                continue;
            }
            if (!std::isdigit(static_cast<unsigned char>(c))) break;
            digits = true;
            if (__builtin_mul_overflow(num, 10, &num) || __builtin_add_overflow(num, c - '0', &num) ||
                (point && __builtin_mul_overflow(den, 10, &den))) {
                pos_ = start;
                fail("number has too many digits");
            }
        }
        if (!digits) {
            if (pos_ >= text_.size()) fail("unexpected end of input");
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return exact(Rational(num, den), 0);
    }

    Value negate(Value v) {
        if (v.coeff) v.coeff = -*v.coeff;
        v.approx = -v.approx;
        return v;
    }

    Value add(const Value& a, const Value& b, bool subtract) {
        const Value rhs = subtract ? negate(b) : b;
        if (a.coeff && rhs.coeff && (a.power == rhs.power || a.coeff->is_zero() || rhs.coeff->is_zero())) {
            const int power = a.coeff->is_zero() ? rhs.power : a.power;
            return exact(*a.coeff + *rhs.coeff, power);
        }
        return {std::nullopt, a.approx + rhs.approx, 0};
    }

    Value mul(const Value& a, const Value& b, bool divide) {
        if (divide && (b.coeff ? b.coeff->is_zero() : b.approx == 0.0)) fail("division by zero");
        const int power = divide ? a.power - b.power : a.power + b.power;
        if (a.coeff && b.coeff) {
            if (a.coeff->is_zero()) return exact(Rational(0), 0);
            if (power != 0 && power != 1) fail("only the first power of pi is supported");
            return exact(divide ? *a.coeff / *b.coeff : *a.coeff * *b.coeff, power);
        }
        if (power != 0 && power != 1) fail("only the first power of pi is supported");
        return {std::nullopt, divide ? a.approx / b.approx : a.approx * b.approx, 0};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Angle parse_angle(std::string_view text) {
    Value v = Parser(text).parse();
    if (v.coeff && v.coeff->is_zero()) return Angle::pi_times(Rational(0));
    if (v.coeff) return v.power == 1 ? Angle::pi_times(*v.coeff) : Angle::radians(v.coeff->to_double());
    return Angle::radians(v.approx);
}

}  // namespace sdcwalk::harness
