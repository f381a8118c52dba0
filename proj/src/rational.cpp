#include "invhankel/rational.hpp"

#include <cmath>
#include <limits>

namespace invhankel {

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw DivisionByZero();
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-') {
        ++pos;
    }
    auto digits = [&]() {
        const std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            ++pos;
        }
        return pos - start;
    };
    if (digits() == 0) {
        throw RationalParseError(std::string(text));
    }
    const std::size_t slash = pos;
    if (pos < text.size()) {
        if (text[pos] != '/') {
            throw RationalParseError(std::string(text));
        }
        ++pos;
        if (digits() == 0 || pos != text.size()) {
            throw RationalParseError(std::string(text));
        }
    }
    mpz_class num(std::string(text.substr(0, slash)), 10);
    mpz_class den = 1;
    if (slash < text.size()) {
        den = mpz_class(std::string(text.substr(slash + 1)), 10);
        if (den == 0) {
            throw DivisionByZero();
        }
    }
    return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
    // mpq's get_str already omits "/1" for integers.
    return value_.get_str();
}

double Rational::to_double() const {
    // Round-to-nearest: form a 63-bit quotient with the remainder folded into
    // a sticky low bit, then let the hardware conversion round once.
    if (is_zero()) {
        return 0.0;
    }
    mpz_class num = ::abs(value_.get_num());
    const mpz_class& den = value_.get_den();
    const long shift = 63 - (static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)));
    mpz_class scaled = num;
    if (shift > 0) {
        scaled <<= static_cast<mp_bitcnt_t>(shift);
    }
    mpz_class divisor = den;
    if (shift < 0) {
        divisor <<= static_cast<mp_bitcnt_t>(-shift);
    }
    mpz_class quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), scaled.get_mpz_t(),
                divisor.get_mpz_t());
    // quotient now lies in [2^62, 2^64)
    std::uint64_t bits = 0;
    mpz_export(&bits, nullptr, -1, sizeof(bits), 0, 0, quotient.get_mpz_t());
    if (remainder != 0) {
        bits |= 1u;
    }
    const double magnitude = std::ldexp(static_cast<double>(bits), static_cast<int>(-shift));
    return sign() < 0 ? -magnitude : magnitude;
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw DivisionByZero();
    }
    return Rational(mpq_class(1) / value_);
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
    if (rhs.is_zero()) {
        throw DivisionByZero();
    }
    value_ /= rhs.value_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = ::cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational binomial(unsigned n, unsigned k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return Rational(mpq_class(out));
}

}  // namespace invhankel
