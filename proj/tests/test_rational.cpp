#include <doctest.h>

#include <cmath>
#include <gmpxx.h>

#include "invhankel/rational.hpp"
#include "support.hpp"

using invhankel::DivisionByZero;
using invhankel::Rational;
using invhankel::RationalParseError;

namespace {

bool canonical(const Rational& r) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return r.raw().get_den() > 0 && g == 1;
}

}  // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational::parse("4264/9") * Rational(9) == Rational(4264));
    CHECK((Rational::parse("4264/9") * Rational(9)).to_string() == "4264");
    CHECK_THROWS_AS(Rational(17) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("zero is 0/1 and signs live in the numerator") {
    const Rational z = Rational(3, 7) - Rational(3, 7);
    CHECK(z.to_string() == "0");
    CHECK(z.denominator_string() == "1");
    const Rational neg(3, -6);
    CHECK(neg.to_string() == "-1/2");
    CHECK(neg.denominator_string() == "2");
}

TEST_CASE("ordering") {
    CHECK(cmp(Rational::parse("4264/9"), Rational(768)) == std::strong_ordering::less);
    CHECK(cmp(Rational(768), Rational(768)) == std::strong_ordering::equal);
    CHECK(cmp(Rational(-1, 4), Rational(0)) == std::strong_ordering::less);
    CHECK(Rational(1, 3) > Rational(33, 100));
}

TEST_CASE("nearest double") {
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK(Rational(1152).to_double() == 1152.0);
    CHECK(Rational(1, 3).to_double() == 1.0 / 3.0);
    CHECK(Rational(-2, 3).to_double() == -2.0 / 3.0);
    CHECK(Rational(1, 10).to_double() == 0.1);
    // 2^53 + 1 is a tie between 2^53 and 2^53 + 2; ties go to even.
    CHECK(Rational::parse("9007199254740993").to_double() == 9007199254740992.0);
    // Just above the tie must round up.
    CHECK(Rational::parse("90071992547409930001/10000").to_double() == 9007199254740994.0);
    CHECK(std::isinf(Rational::parse("1" + std::string(400, '0')).to_double()));

    invhankel::testing::Gen gen(7);
    for (int i = 0; i < 500; ++i) {
        const long n = gen.integer(-1000000, 1000000);
        const long d = gen.integer(1, 1000000);
        // A single IEEE division of exact integers is correctly rounded.
        CHECK(Rational(n, d).to_double() == static_cast<double>(n) / static_cast<double>(d));
    }
}

TEST_CASE("parse") {
    CHECK(Rational::parse("-12/8") == Rational(-3, 2));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("007") == Rational(7));
    for (const char* bad : {"", "-", "1/", "/2", "1 /2", " 1", "1/-2", "+1", "1.5", "1/2/3", "abc"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), RationalParseError);
    }
    CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
}

TEST_CASE("field axioms, canonical form and text round trip on random values") {
    invhankel::testing::Gen gen(2024);
    for (int i = 0; i < 500; ++i) {
        const Rational a = gen.rational(1000, 1000);
        const Rational b = gen.rational(1000, 1000);
        const Rational c = gen.rational(1000, 1000);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        Rational r = a * b - c;
        if (!b.is_zero()) r = r / b;
        CHECK(canonical(r));
        CHECK(Rational::parse(r.to_string()) == r);
    }
}

TEST_CASE("unbounded integers") {
    Rational big(1);
    for (int i = 0; i < 10; ++i) big *= Rational(1000000007);
    CHECK(big.to_string().size() > 80);
    CHECK(big / big == Rational(1));
}
