#pragma once

// Coefficient arithmetic for normalized power series f(z) = z + a_2 z^2 + ...
//
// Everything here is templated on the coefficient ring. The same code runs
// over Rational (exact), std::complex<double> (numeric) and Polynomial
// (symbolic, used to derive closed forms in the coefficients themselves).

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "invhankel/polynomial.hpp"
#include "invhankel/rational.hpp"

namespace invhankel {

class SeriesError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Zero and one of a coefficient ring. Polynomial needs a template element
/// to learn its variable count.
template <class Scalar>
struct RingTraits {
    static Scalar zero(const Scalar&) { return Scalar(0); }
    static Scalar one(const Scalar&) { return Scalar(1); }
    static Scalar from_rational(const Scalar&, const Rational& r) { return Scalar(r); }
};

template <>
struct RingTraits<std::complex<double>> {
    using C = std::complex<double>;
    static C zero(const C&) { return C(0.0); }
    static C one(const C&) { return C(1.0); }
    static C from_rational(const C&, const Rational& r) { return C(r.to_double()); }
};

template <>
struct RingTraits<Polynomial> {
    static Polynomial zero(const Polynomial& like) { return Polynomial(like.nvars(), like.names()); }
    static Polynomial one(const Polynomial& like) {
        return Polynomial::constant(like.nvars(), Rational(1), like.names());
    }
    static Polynomial from_rational(const Polynomial& like, const Rational& r) {
        return Polynomial::constant(like.nvars(), r, like.names());
    }
};

/// Finite prefix (a_2, ..., a_N) of a normalized series; a_1 = 1 is implicit.
template <class Scalar>
class SeriesCoeffs {
public:
    SeriesCoeffs() = default;
    explicit SeriesCoeffs(std::vector<Scalar> tail) : tail_(std::move(tail)) {
        if (tail_.empty()) {
            throw SeriesError("a series prefix needs at least a_2");
        }
    }

    /// Highest index N carried.
    std::size_t order() const { return tail_.size() + 1; }
    const std::vector<Scalar>& tail() const { return tail_; }

    /// a_n for 1 <= n <= order(); a_1 is the ring's one.
    Scalar at(std::size_t n) const {
        if (n == 0 || n > order()) {
            throw SeriesError("coefficient a_" + std::to_string(n) + " is not available (order " +
                              std::to_string(order()) + ")");
        }
        return n == 1 ? RingTraits<Scalar>::one(tail_.front()) : tail_[n - 2];
    }

    friend bool operator==(const SeriesCoeffs&, const SeriesCoeffs&) = default;

private:
    std::vector<Scalar> tail_;
};

namespace detail {

// Dense truncated product; index = power of the variable.
template <class Scalar>
std::vector<Scalar> truncated_product(const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                                      std::size_t max_power, const Scalar& zero) {
    std::vector<Scalar> out(max_power + 1, zero);
    for (std::size_t i = 0; i < a.size() && i <= max_power; ++i) {
        for (std::size_t j = 0; j < b.size() && i + j <= max_power; ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

}  // namespace detail

/// Coefficients (A_2, ..., A_N) of the compositional inverse, found one at a
/// time from f(g(w)) = w: the w^n coefficient of f(g) is A_n plus terms that
/// only involve A_2, ..., A_{n-1}.
template <class Scalar>
SeriesCoeffs<Scalar> invert_series(const SeriesCoeffs<Scalar>& f) {
    const std::size_t order = f.order();
    const Scalar zero = RingTraits<Scalar>::zero(f.tail().front());
    const Scalar one = RingTraits<Scalar>::one(f.tail().front());

    std::vector<Scalar> g(order + 1, zero);
    g[1] = one;
    for (std::size_t n = 2; n <= order; ++n) {
        // g currently holds A_2..A_{n-1}; A_n is still zero.
        Scalar rest = zero;
        std::vector<Scalar> power = g;
        for (std::size_t k = 2; k <= n; ++k) {
            power = detail::truncated_product(power, g, n, zero);
            rest += f.at(k) * power[n];
        }
        g[n] = -rest;
    }
    return SeriesCoeffs<Scalar>(std::vector<Scalar>(g.begin() + 2, g.end()));
}

/// Starlike coefficients from Caratheodory coefficients via z f' = f p:
/// (n - 1) a_n = sum_{k=1}^{n-1} a_{n-k} c_k. The input carries (c_1, ...,
/// c_{N-1}) in its tail slots, giving (a_2, ..., a_N).
template <class Scalar>
SeriesCoeffs<Scalar> caratheodory_to_schlicht(const std::vector<Scalar>& c) {
    if (c.empty()) {
        throw SeriesError("need at least c_1");
    }
    const std::size_t order = c.size() + 1;
    const Scalar one = RingTraits<Scalar>::one(c.front());
    std::vector<Scalar> a(order + 1, RingTraits<Scalar>::zero(c.front()));
    a[1] = one;
    for (std::size_t n = 2; n <= order; ++n) {
        Scalar sum = RingTraits<Scalar>::zero(c.front());
        for (std::size_t k = 1; k < n; ++k) {
            sum += a[n - k] * c[k - 1];
        }
        a[n] = sum * RingTraits<Scalar>::from_rational(c.front(),
                                                       Rational(1, static_cast<long>(n - 1)));
    }
    return SeriesCoeffs<Scalar>(std::vector<Scalar>(a.begin() + 2, a.end()));
}

/// q x q Hankel matrix with entry (r, s) = a_{n + r + s}, 0-based r and s.
template <class Scalar>
std::vector<std::vector<Scalar>> hankel_matrix(std::size_t q, std::size_t n,
                                               const SeriesCoeffs<Scalar>& a) {
    if (q == 0 || n == 0) {
        throw SeriesError("Hankel determinant needs q >= 1 and n >= 1");
    }
    if (n + 2 * q - 2 > a.order()) {
        throw SeriesError("H(" + std::to_string(q) + "," + std::to_string(n) + ") needs a_" +
                          std::to_string(n + 2 * q - 2) + " but only a_" +
                          std::to_string(a.order()) + " is available");
    }
    std::vector<std::vector<Scalar>> m(q);
    for (std::size_t r = 0; r < q; ++r) {
        m[r].reserve(q);
        for (std::size_t s = 0; s < q; ++s) {
            m[r].push_back(a.at(n + r + s));
        }
    }
    return m;
}

/// Determinant by cofactor expansion along the first row; ring operations
/// only, so it is exact for Rational and Polynomial entries.
template <class Scalar>
Scalar determinant(const std::vector<std::vector<Scalar>>& m) {
    const std::size_t size = m.size();
    if (size == 1) {
        return m[0][0];
    }
    Scalar total = m[0][0] - m[0][0];
    for (std::size_t col = 0; col < size; ++col) {
        std::vector<std::vector<Scalar>> minor;
        minor.reserve(size - 1);
        for (std::size_t r = 1; r < size; ++r) {
            std::vector<Scalar> row;
            row.reserve(size - 1);
            for (std::size_t c = 0; c < size; ++c) {
                if (c != col) row.push_back(m[r][c]);
            }
            minor.push_back(std::move(row));
        }
        Scalar term = m[0][col] * determinant(minor);
        if (col % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

template <class Scalar>
Scalar hankel_det(std::size_t q, std::size_t n, const SeriesCoeffs<Scalar>& a) {
    return determinant(hankel_matrix(q, n, a));
}

using ComplexSeries = SeriesCoeffs<std::complex<double>>;

/// Coefficients of f_theta(z) = e^{-i theta} f(e^{i theta} z):
/// a_n -> e^{i (n-1) theta} a_n.
inline ComplexSeries rotate_coeffs(const ComplexSeries& a, double theta) {
    std::vector<std::complex<double>> out;
    out.reserve(a.tail().size());
    for (std::size_t n = 2; n <= a.order(); ++n) {
        out.push_back(std::polar(1.0, static_cast<double>(n - 1) * theta) * a.at(n));
    }
    return ComplexSeries(std::move(out));
}

inline ComplexSeries to_complex(const SeriesCoeffs<Rational>& a) {
    std::vector<std::complex<double>> out;
    out.reserve(a.tail().size());
    for (const auto& r : a.tail()) out.emplace_back(r.to_double(), 0.0);
    return ComplexSeries(std::move(out));
}

/// Point of the Libera-Zlotkiewicz parameter space: real c_1 in [0, 2] and
/// three parameters in the closed unit disk.
struct ParamPoint {
    double c1 = 0.0;
    std::complex<double> gamma;
    std::complex<double> eta;
    std::complex<double> rho;

    bool valid() const {
        return c1 >= 0.0 && c1 <= 2.0 && std::abs(gamma) <= 1.0 && std::abs(eta) <= 1.0 &&
               std::abs(rho) <= 1.0;
    }
    void validate() const {
        if (!valid()) {
            throw std::domain_error("parameter point outside [0,2] x closed unit disk^3");
        }
    }
};

/// (c_1, c_2, c_3, c_4) of a Caratheodory function from its parameters.
inline std::vector<std::complex<double>> libera_cs(const ParamPoint& pp) {
    pp.validate();
    using C = std::complex<double>;
    const C c1(pp.c1, 0.0);
    const C g = pp.gamma;
    const C e = pp.eta;
    const C k = 4.0 - c1 * c1;
    const double g_abs2 = std::norm(g);
    const double e_abs2 = std::norm(e);

    const C c2 = (c1 * c1 + g * k) / 2.0;
    const C c3 = (c1 * c1 * c1 + 2.0 * k * c1 * g - k * c1 * g * g + 2.0 * k * (1.0 - g_abs2) * e) /
                 4.0;
    const C c4 = (std::pow(c1, 4) + k * g * (c1 * c1 * (g * g - 3.0 * g + 3.0) + 4.0 * g) -
                  4.0 * k * (1.0 - g_abs2) *
                      (c1 * (g - 1.0) * e + std::conj(g) * e * e - (1.0 - e_abs2) * pp.rho)) /
                 8.0;
    return {c1, c2, c3, c4};
}

}  // namespace invhankel
