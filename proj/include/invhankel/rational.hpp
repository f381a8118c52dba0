#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace invhankel {

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("rational division by zero") {}
};

class RationalParseError : public std::invalid_argument {
public:
    explicit RationalParseError(const std::string& text)
        : std::invalid_argument("malformed rational literal '" + text + "'") {}
};

/// Exact fraction with unbounded numerator and denominator.
///
/// Every value is kept canonical: the denominator is positive, numerator
/// and denominator are coprime, and zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(const mpq_class& value);

    /// Parses `-?[0-9]+(/[0-9]+)?` with no surrounding or inner whitespace.
    static Rational parse(std::string_view text);

    std::string to_string() const;
    double to_double() const;

    std::string numerator_string() const { return value_.get_num().get_str(); }
    std::string denominator_string() const { return value_.get_den().get_str(); }

    bool is_zero() const { return sgn(value_) == 0; }
    int sign() const { return sgn(value_); }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const { return Rational(::abs(value_)); }
    Rational inverse() const;

    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const { return Rational(mpq_class(-value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    mpq_class value_;
};

/// Three-way comparison by real value.
inline std::strong_ordering cmp(const Rational& a, const Rational& b) { return a <=> b; }

Rational binomial(unsigned n, unsigned k);

}  // namespace invhankel
