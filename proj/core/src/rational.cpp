#include "nrssp/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace nrssp {

namespace {

std::invalid_argument bad_literal(std::string_view text, std::size_t offset,
                                  std::string_view what) {
    return std::invalid_argument("invalid rational literal \"" + std::string(text) +
                                 "\" at offset " + std::to_string(offset) + ": " +
                                 std::string(what));
}

// Length of the run of ASCII digits starting at `pos`.
std::size_t digit_run(std::string_view text, std::size_t pos) {
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end])) != 0) {
        ++end;
    }
    return end - pos;
}

mpz_class parse_digits(std::string_view digits) {
    return mpz_class(std::string(digits), 10);
}

mpz_class pow10(unsigned long exponent) {
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

}  // namespace

Rational::Rational(std::int64_t value) {
    // mpq_class has no int64 constructor on every platform; go through a string
    // only for values outside long's range.
    if (value >= std::numeric_limits<long>::min() && value <= std::numeric_limits<long>::max()) {
        value_ = static_cast<long>(value);
    } else {
        value_ = mpq_class(std::to_string(value), 10);
    }
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(Rational(numerator).value_.get_num(),
                       Rational(denominator).value_.get_num());
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    if (value_.get_den() == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const std::size_t int_len = digit_run(text, pos);
    if (int_len == 0) {
        throw bad_literal(text, pos, "expected digits");
    }
    const std::string_view int_part = text.substr(pos, int_len);
    pos += int_len;

    mpq_class value;
    if (pos == text.size()) {
        value = mpq_class(parse_digits(int_part));
    } else if (text[pos] == '/') {
        ++pos;
        const std::size_t den_len = digit_run(text, pos);
        if (den_len == 0) {
            throw bad_literal(text, pos, "expected denominator digits");
        }
        mpz_class den = parse_digits(text.substr(pos, den_len));
        if (den == 0) {
            throw bad_literal(text, pos, "denominator must be positive");
        }
        pos += den_len;
        if (pos != text.size()) {
            throw bad_literal(text, pos, "trailing characters");
        }
        value = mpq_class(parse_digits(int_part), den);
        value.canonicalize();
    } else if (text[pos] == '.') {
        ++pos;
        const std::size_t frac_len = digit_run(text, pos);
        if (frac_len == 0) {
            throw bad_literal(text, pos, "expected fraction digits");
        }
        const std::string_view frac_part = text.substr(pos, frac_len);
        pos += frac_len;
        if (pos != text.size()) {
            throw bad_literal(text, pos, "trailing characters");
        }
        value = mpq_class(parse_digits(std::string(int_part) + std::string(frac_part)),
                          pow10(frac_len));
        value.canonicalize();
    } else {
        throw bad_literal(text, pos, "unexpected character");
    }
    if (negative) {
        value = -value;
    }
    return Rational(std::move(value));
}

std::string Rational::numerator_str() const { return value_.get_num().get_str(10); }

std::string Rational::denominator_str() const { return value_.get_den().get_str(10); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::to_string() const {
    if (is_integer()) {
        return numerator_str();
    }
    return numerator_str() + "/" + denominator_str();
}

std::string Rational::to_decimal(int significant) const {
    if (significant < 1) {
        throw std::invalid_argument("to_decimal needs at least one significant digit");
    }
    if (sgn(value_) == 0) {
        return "0";
    }
    const mpz_class num = ::abs(value_.get_num());
    const mpz_class& den = value_.get_den();

    // Find the decimal exponent e with 10^e <= |x| < 10^(e+1).
    long exponent = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
                    static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
    auto at_least = [&](long e) {
        // |x| >= 10^e
        return e >= 0 ? num >= den * pow10(static_cast<unsigned long>(e))
                      : num * pow10(static_cast<unsigned long>(-e)) >= den;
    };
    while (!at_least(exponent)) --exponent;
    while (at_least(exponent + 1)) ++exponent;

    // digits = round(|x| * 10^(significant - 1 - exponent))
    const long shift = significant - 1 - exponent;
    mpz_class scaled_num = num;
    mpz_class scaled_den = den;
    if (shift >= 0) {
        scaled_num *= pow10(static_cast<unsigned long>(shift));
    } else {
        scaled_den *= pow10(static_cast<unsigned long>(-shift));
    }
    mpz_class digits = (2 * scaled_num + scaled_den) / (2 * scaled_den);
    long point = exponent + 1;  // digits before the decimal point
    std::string body = digits.get_str(10);
    if (body.size() > static_cast<std::size_t>(significant)) {
        // Rounding carried into a new leading digit (9.99.. -> 10.0..).
        body.pop_back();
        ++point;
    }

    std::string out;
    if (point <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-point), '0') + body;
    } else if (static_cast<std::size_t>(point) >= body.size()) {
        out = body + std::string(static_cast<std::size_t>(point) - body.size(), '0');
    } else {
        out = body.substr(0, static_cast<std::size_t>(point)) + "." +
              body.substr(static_cast<std::size_t>(point));
    }
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return sgn(value_) < 0 ? "-" + out : out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (sgn(rhs.value_) == 0) {
        throw std::domain_error("rational division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& value) {
    return os << value.to_string();
}

Rational abs(const Rational& value) { return value.sign() < 0 ? -value : value; }

}  // namespace nrssp
