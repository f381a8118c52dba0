#include <doctest.h>

#include "invhankel/bernstein.hpp"
#include "invhankel/repro.hpp"
#include "support.hpp"

using namespace invhankel;

namespace {

Polynomial u1() { return Polynomial::variable(1, 0); }
Polynomial k1(Rational v) { return Polynomial::constant(1, v); }

void check_sound(const Polynomial& p, const Box& box, const Certificate& cert, testing::Gen& gen,
                 int samples) {
    if (cert.status == CertificateStatus::negative_witness) {
        REQUIRE(cert.witness);
        CHECK(cert.witness->value.sign() < 0);
        CHECK(box.contains(std::span<const Rational>(cert.witness->point)));
        CHECK(p.evaluate(std::span<const Rational>(cert.witness->point)) == cert.witness->value);
    } else {
        CHECK_FALSE(cert.witness);
    }
    if (cert.status == CertificateStatus::nonnegative) {
        for (int i = 0; i < samples; ++i) {
            const auto pt = gen.point_in(box);
            CHECK(p.evaluate(std::span<const Rational>(pt)).sign() >= 0);
        }
    }
}

}  // namespace

TEST_CASE("Phi(2u,x,y) is certified at depth 0") {
    const Polynomial unit = repro::phi_on_unit_cube(repro::expected_phi());
    const auto cert = certify_nonneg(unit, Box::unit(3), {0, 0});
    CHECK(cert.status == CertificateStatus::nonnegative);
    CHECK(cert.max_depth_used == 0);
    CHECK(cert.boxes_processed == 1);
    CHECK(cert.elevation == std::vector<unsigned>{0, 0, 0});
    CHECK(cert.min_bernstein_coeff == Rational(0));
    CHECK(cert.max_bernstein_coeff == Rational(768));
    testing::Gen gen(1);
    check_sound(unit, Box::unit(3), cert, gen, 1000);
}

TEST_CASE("negative corner gives an exact witness") {
    const auto cert = certify_nonneg(u1() - k1(1), Box::unit(1), {0, 0});
    CHECK(cert.status == CertificateStatus::negative_witness);
    REQUIRE(cert.witness);
    CHECK(cert.witness->point == std::vector<Rational>{0});
    CHECK(cert.witness->value == Rational(-1));

    const auto neg = certify_nonneg(-u1(), Box::unit(1), {0, 0});
    REQUIRE(neg.witness);
    CHECK(neg.witness->point == std::vector<Rational>{1});
    CHECK(neg.witness->value == Rational(-1));
}

TEST_CASE("subdivision settles (u - 1/2)^2") {
    const Polynomial d = u1() - k1(Rational(1, 2));
    const Polynomial sq = d * d;
    const auto shallow = certify_nonneg(sq, Box::unit(1), {0, 0});
    CHECK(shallow.status == CertificateStatus::inconclusive);
    CHECK(shallow.min_bernstein_coeff == Rational(-1, 4));
    CHECK_FALSE(shallow.witness);

    const auto deep = certify_nonneg(sq, Box::unit(1), {1, 0});
    CHECK(deep.status == CertificateStatus::nonnegative);
    CHECK(deep.max_depth_used == 1);
    CHECK(deep.boxes_processed == 3);
    CHECK(deep.min_bernstein_coeff == Rational(0));
    CHECK(deep.max_bernstein_coeff == Rational(1, 4));
}

TEST_CASE("elevation can settle a box without subdivision") {
    // 1 - 3u + 3u^2 has Bernstein coefficients (1, -1/2, 1) at degree 2 and
    // (1, 0, 0, 1) at degree 3.
    const Polynomial p = k1(1) - Rational(3) * u1() + Rational(3) * u1().pow(2);
    CHECK(certify_nonneg(p, Box::unit(1), {0, 0}).status == CertificateStatus::inconclusive);
    const auto cert = certify_nonneg(p, Box::unit(1), {0, 4});
    CHECK(cert.status == CertificateStatus::nonnegative);
    CHECK(cert.boxes_processed == 1);
    CHECK(cert.elevation == std::vector<unsigned>{1});
}

TEST_CASE("interior negativity is driven to a corner by subdivision") {
    // (u - 1/3)^2 - 1/100 is negative near u = 1/3 only.
    const Polynomial d = u1() - k1(Rational(1, 3));
    const Polynomial p = d * d - k1(Rational(1, 100));
    const auto cert = certify_nonneg(p, Box::unit(1), {12, 0});
    CHECK(cert.status == CertificateStatus::negative_witness);
    testing::Gen gen(2);
    check_sound(p, Box::unit(1), cert, gen, 0);
}

TEST_CASE("zero polynomial is trivially nonnegative") {
    const auto cert = certify_nonneg(Polynomial(2), Box::unit(2), {0, 0});
    CHECK(cert.status == CertificateStatus::nonnegative);
    CHECK(cert.min_bernstein_coeff == Rational(0));
    CHECK(cert.max_bernstein_coeff == Rational(0));
}

TEST_CASE("dimension mismatch is an error") {
    CHECK_THROWS_AS(certify_nonneg(u1(), Box::unit(2), {0, 0}), BernsteinError);
}

TEST_CASE("certificates are deterministic and sound on random inputs") {
    testing::Gen gen(77);
    int decided = 0;
    for (int i = 0; i < 80; ++i) {
        const std::size_t dims = static_cast<std::size_t>(gen.integer(1, 2));
        Polynomial p = gen.polynomial(dims, 2, 4);
        // Shift upward half the time so nonnegative cases occur.
        if (i % 2 == 0) p += Polynomial::constant(dims, Rational(gen.integer(0, 60)));
        const Box box = gen.box(dims);
        const CertifyBudget budget{static_cast<unsigned>(gen.integer(0, 5)),
                                   static_cast<unsigned>(gen.integer(0, 2))};
        const auto a = certify_nonneg(p, box, budget);
        const auto b = certify_nonneg(p, box, budget);
        CHECK(a.status == b.status);
        CHECK(a.boxes_processed == b.boxes_processed);
        CHECK(a.min_bernstein_coeff == b.min_bernstein_coeff);
        if (a.status != CertificateStatus::inconclusive) ++decided;
        check_sound(p, box, a, gen, 12);
        CHECK(a.max_depth_used <= budget.max_depth);
    }
    CHECK(decided > 40);
}
