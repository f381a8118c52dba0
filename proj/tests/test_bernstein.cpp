#include <doctest.h>

#include "invhankel/bernstein.hpp"
#include "invhankel/repro.hpp"
#include "support.hpp"

using namespace invhankel;

namespace {

std::vector<Rational> rv(std::initializer_list<Rational> values) { return values; }

Polynomial shifted_square() {
    // (u - 1/2)^2
    const Polynomial u = Polynomial::variable(1, 0);
    const Polynomial d = u - Polynomial::constant(1, Rational(1, 2));
    return d * d;
}

BernsteinTensor tensor_1d(std::vector<Rational> coeffs) {
    const unsigned degree = static_cast<unsigned>(coeffs.size() - 1);
    return BernsteinTensor({degree}, std::move(coeffs), Box::unit(1));
}

}  // namespace

TEST_CASE("box validation") {
    CHECK_THROWS_AS(Box({Interval{Rational(1), Rational(1)}}), BernsteinError);
    CHECK_THROWS_AS(Box({Interval{Rational(2), Rational(1)}}), BernsteinError);
    const Box b({Interval{Rational(0), Rational(2)}, Interval{Rational(-1), Rational(1)}});
    const std::vector<Rational> inside = {Rational(1), Rational(0)};
    CHECK(b.contains(std::span<const Rational>(inside)));
    const auto [l, r] = b.split(0, Rational(1, 2));
    CHECK(l[0].hi == Rational(1));
    CHECK(r[0].lo == Rational(1));
}

TEST_CASE("conversion") {
    const Polynomial c288 = Polynomial::constant(3, Rational(288));
    const std::vector<unsigned> deg = {4, 3, 2};
    const auto t = to_bernstein(c288, deg, Box::unit(3));
    CHECK(t.coeffs().size() == 60);
    for (const auto& b : t.coeffs()) CHECK(b == Rational(288));

    const auto lin = to_bernstein(Polynomial::variable(1, 0), Box::unit(1));
    CHECK(lin.coeffs() == rv({0, 1}));

    const auto sq = to_bernstein(shifted_square(), Box::unit(1));
    CHECK(sq.coeffs() == rv({Rational(1, 4), Rational(-1, 4), Rational(1, 4)}));

    const std::vector<unsigned> too_small = {1};
    CHECK_THROWS_AS(to_bernstein(shifted_square(), too_small, Box::unit(1)), BernsteinError);
    CHECK_THROWS_AS(to_bernstein(shifted_square(), Box::unit(2)), BernsteinError);
}

TEST_CASE("conversion of Phi(2u, x, y) reproduces the reference layers") {
    const Polynomial unit = repro::phi_on_unit_cube(repro::expected_phi());
    const std::vector<unsigned> deg = {4, 3, 2};
    const auto t = to_bernstein(unit, deg, Box::unit(3));
    using I = std::vector<unsigned>;
    CHECK(t.at(I{2, 2, 0}) == Rational(4264, 9));
    CHECK(t.at(I{4, 0, 0}) == Rational(720));
    CHECK(t.at(I{4, 3, 2}) == Rational(0));
    CHECK(t.at(I{0, 0, 0}) == Rational(288));
    const auto layers = repro::expected_matrices();
    for (unsigned k = 0; k < 3; ++k)
        for (unsigned i = 0; i < 5; ++i)
            for (unsigned j = 0; j < 4; ++j) CHECK(t.at(I{i, j, k}) == layers[k][i][j]);

    // Same tensor from Phi on [0,2] x [0,1]^2 directly.
    const Box d({Interval{Rational(0), Rational(2)}, Interval{Rational(0), Rational(1)},
                 Interval{Rational(0), Rational(1)}});
    CHECK(to_bernstein(repro::expected_phi(), deg, d).coeffs() == t.coeffs());
}

TEST_CASE("extremal coefficients") {
    const Polynomial unit = repro::phi_on_unit_cube(repro::expected_phi());
    const auto t = to_bernstein(unit, Box::unit(3));
    CHECK(max_coeff(t) == Rational(768));
    CHECK(min_coeff(t) == Rational(0));
    CHECK(range_enclosure(t) == Interval{Rational(0), Rational(768)});
    using I = std::vector<unsigned>;
    CHECK(t.at(I{4, 3, 2}) == Rational(0));    // corner (p1, x, y) = (2, 1, 1)
    CHECK(t.at(I{4, 0, 0}) == Rational(720));
    CHECK(t.at(I{4, 3, 0}) == Rational(768));  // corner (2, 1, 0)

    const auto five = to_bernstein(Polynomial::constant(1, Rational(5)), Box::unit(1));
    CHECK(range_enclosure(five) == Interval{Rational(5), Rational(5)});
    CHECK(range_enclosure(to_bernstein(shifted_square(), Box::unit(1))) ==
          Interval{Rational(-1, 4), Rational(1, 4)});
}

TEST_CASE("degree elevation") {
    testing::Gen gen(3);
    auto agree = [&](const BernsteinTensor& a, const BernsteinTensor& b) {
        for (int i = 0; i < 5; ++i) {
            const auto pt = gen.point_in(a.box());
            if (testing::bernstein_value(a, pt) != testing::bernstein_value(b, pt)) return false;
        }
        return true;
    };
    const auto sq = tensor_1d(rv({0, 0, 1}));
    const auto sq3 = elevate(sq, 0);
    CHECK(sq3.coeffs() == rv({0, 0, Rational(1, 3), 1}));
    CHECK(agree(sq, sq3));

    const auto lin = tensor_1d(rv({0, 1}));
    const auto lin2 = elevate(lin, 0);
    CHECK(lin2.coeffs() == rv({0, Rational(1, 2), 1}));
    CHECK(agree(lin, lin2));

    const auto c = tensor_1d(rv({7, 7, 7}));
    CHECK(elevate(c, 0).coeffs() == rv({7, 7, 7, 7}));
    CHECK_THROWS_AS(elevate(c, 1), BernsteinError);
}

TEST_CASE("subdivision") {
    const auto sq = to_bernstein(shifted_square(), Box::unit(1));
    const auto [left, right] = subdivide(sq, 0, Rational(1, 2));
    CHECK(left.coeffs() == rv({Rational(1, 4), 0, 0}));
    CHECK(right.coeffs() == rv({0, 0, Rational(1, 4)}));
    CHECK(left.box()[0].hi == Rational(1, 2));
    CHECK(right.box()[0].lo == Rational(1, 2));

    testing::Gen gen(8);
    for (int i = 0; i < 5; ++i) {
        const auto pl = gen.point_in(left.box());
        const auto pr = gen.point_in(right.box());
        CHECK(testing::bernstein_value(left, pl) == shifted_square().evaluate(std::span<const Rational>(pl)));
        CHECK(testing::bernstein_value(right, pr) == shifted_square().evaluate(std::span<const Rational>(pr)));
    }

    const auto c = tensor_1d(rv({3, 3}));
    const auto [cl, cr] = subdivide(c, 0, Rational(1, 3));
    CHECK(cl.coeffs() == rv({3, 3}));
    CHECK(cr.coeffs() == rv({3, 3}));

    const auto [ll, lr] = subdivide(tensor_1d(rv({0, 1})), 0, Rational(1, 2));
    CHECK(ll.coeffs() == rv({0, Rational(1, 2)}));
    CHECK(lr.coeffs() == rv({Rational(1, 2), 1}));

    CHECK_THROWS_AS(subdivide(c, 0, Rational(0)), BernsteinError);
    CHECK_THROWS_AS(subdivide(c, 0, Rational(1)), BernsteinError);
    CHECK_THROWS_AS(subdivide(c, 0, Rational(3, 2)), BernsteinError);
    CHECK_THROWS_AS(subdivide(c, 2, Rational(1, 2)), BernsteinError);
}

TEST_CASE("basis helpers") {
    CHECK(bernstein_basis(4, 2, Rational(1, 2)) == Rational(6, 16));
    CHECK(bernstein_basis(3, 4, Rational(1, 2)) == Rational(0));
    CHECK(bernstein_basis(3, 0, Rational(0)) == Rational(1));
    CHECK(bernstein_basis(2, 1, 0.5) == doctest::Approx(0.5));
}

TEST_CASE("random tensor properties") {
    testing::Gen gen(1234);
    for (int i = 0; i < 60; ++i) {
        const std::size_t dims = static_cast<std::size_t>(gen.integer(1, 3));
        const Polynomial p = gen.polynomial(dims, 3, 6);
        const Box box = gen.box(dims);
        const auto t = to_bernstein(p, box);

        // Corner coefficients are exact values.
        for (std::size_t flat = 0; flat < t.coeffs().size(); ++flat) {
            const auto idx = t.multi_index(flat);
            if (!t.is_corner(idx)) continue;
            std::vector<Rational> corner;
            for (std::size_t v = 0; v < dims; ++v)
                corner.push_back(idx[v] == 0 ? box[v].lo : box[v].hi);
            CHECK(t.coeffs()[flat] == p.evaluate(std::span<const Rational>(corner)));
        }
        for (int s = 0; s < 4; ++s) {
            const auto pt = gen.point_in(box);
            const Rational value = p.evaluate(std::span<const Rational>(pt));
            CHECK(t.evaluate(std::span<const Rational>(pt)) == value);
            CHECK(range_enclosure(t).contains(value));
        }
    }
}
