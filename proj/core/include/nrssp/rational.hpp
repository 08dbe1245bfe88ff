#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nrssp {

// Exact rational scalar. Always held in canonical form: the denominator is
// positive and shares no factor with the numerator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);
    explicit Rational(mpq_class value);

    // Parses `sign? digits ("/" digits)?` or `sign? digits "." digits`.
    // Decimal literals convert exactly ("0.05" == 1/20). Throws
    // std::invalid_argument with the offending offset on malformed input.
    static Rational parse(std::string_view text);

    std::string numerator_str() const;
    std::string denominator_str() const;

    // Reduced fraction, or a bare integer when the denominator is 1.
    std::string to_string() const;

    // Decimal rendering rounded half away from zero to `significant` digits.
    // Meant for human-facing output only; never parse it back.
    std::string to_decimal(int significant = 12) const;

    int sign() const { return sgn(value_); }
    bool is_integer() const;

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

private:
    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational abs(const Rational& value);

}  // namespace nrssp
