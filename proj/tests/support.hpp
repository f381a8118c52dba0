#pragma once

// Random generators and independent oracles shared by the test binaries.
// Nothing here calls into the code paths it is used to check.

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "invhankel/bernstein.hpp"
#include "invhankel/polynomial.hpp"
#include "invhankel/rational.hpp"

namespace invhankel::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    Rational rational(long max_num = 20, long max_den = 9) {
        return Rational(integer(-max_num, max_num), integer(1, max_den));
    }

    /// Rational in [0, 1] with denominator up to max_den.
    Rational unit_rational(long max_den = 17) {
        const long den = integer(1, max_den);
        return Rational(integer(0, den), den);
    }

    /// Rational in [lo, hi].
    Rational in_interval(const Interval& side) {
        return side.lo + (side.hi - side.lo) * unit_rational();
    }

    std::vector<Rational> point_in(const Box& box) {
        std::vector<Rational> out;
        for (const auto& side : box.sides()) out.push_back(in_interval(side));
        return out;
    }

    Polynomial polynomial(std::size_t nvars, unsigned max_degree, std::size_t max_terms) {
        Polynomial p(nvars);
        const std::size_t n = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
        for (std::size_t t = 0; t < n; ++t) {
            Exponents e(nvars);
            for (auto& k : e) k = static_cast<unsigned>(integer(0, max_degree));
            p.add_term(e, rational());
        }
        return p;
    }

    Box box(std::size_t dims) {
        std::vector<Interval> sides;
        for (std::size_t i = 0; i < dims; ++i) {
            const Rational lo = rational(3, 4);
            sides.push_back(Interval{lo, lo + Rational(integer(1, 6), integer(1, 3))});
        }
        return Box(std::move(sides));
    }

    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    std::complex<double> in_disk() {
        return std::polar(real(0.0, 1.0), real(0.0, 6.283185307179586));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Truncated composition f(g(w)) of two normalized series given as dense
/// coefficient arrays (index = power, entry 0 unused), by Horner's scheme.
template <class Scalar>
std::vector<Scalar> compose_truncated(const std::vector<Scalar>& f, const std::vector<Scalar>& g,
                                      std::size_t order) {
    auto mul = [&](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
        std::vector<Scalar> out(order + 1, Scalar(0));
        for (std::size_t i = 0; i <= order; ++i)
            for (std::size_t j = 0; i + j <= order; ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    std::vector<Scalar> acc(order + 1, Scalar(0));
    for (std::size_t k = order; k >= 1; --k) {
        acc[0] += f[k];
        acc = mul(acc, g);
    }
    return acc;
}

/// Tensor evaluation straight from the basis definition, independent of
/// BernsteinTensor::evaluate's bookkeeping.
inline Rational bernstein_value(const BernsteinTensor& t, const std::vector<Rational>& point) {
    Rational sum;
    for (std::size_t flat = 0; flat < t.coeffs().size(); ++flat) {
        const auto index = t.multi_index(flat);
        Rational w = t.coeffs()[flat];
        for (std::size_t v = 0; v < t.dims(); ++v) {
            const Rational s = (point[v] - t.box()[v].lo) / (t.box()[v].hi - t.box()[v].lo);
            const unsigned n = t.degrees()[v];
            const unsigned m = index[v];
            Rational b = binomial(n, m);
            for (unsigned i = 0; i < m; ++i) b *= s;
            for (unsigned i = m; i < n; ++i) b *= Rational(1) - s;
            w *= b;
        }
        sum += w;
    }
    return sum;
}

}  // namespace invhankel::testing
