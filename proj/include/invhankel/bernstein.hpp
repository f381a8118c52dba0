#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "invhankel/polynomial.hpp"
#include "invhankel/rational.hpp"

namespace invhankel {

class BernsteinError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Interval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Axis-aligned box with rational endpoints, lo < hi on every axis.
class Box {
public:
    Box() = default;
    explicit Box(std::vector<Interval> sides);

    static Box unit(std::size_t dims);

    std::size_t dims() const { return sides_.size(); }
    const Interval& operator[](std::size_t i) const { return sides_[i]; }
    const std::vector<Interval>& sides() const { return sides_; }

    bool contains(std::span<const Rational> point) const;
    /// Maps relative coordinates in [0,1]^k to the box.
    std::vector<Rational> from_unit(std::span<const Rational> t) const;
    /// Splits axis `var` at relative position `at`.
    std::pair<Box, Box> split(std::size_t var, const Rational& at) const;

    friend bool operator==(const Box&, const Box&) = default;

private:
    std::vector<Interval> sides_;
};

/// Bernstein basis polynomial C(n,m) t^m (1-t)^(n-m).
Rational bernstein_basis(unsigned n, unsigned m, const Rational& t);
double bernstein_basis(unsigned n, unsigned m, double t);

/// Tensor-product Bernstein coefficients of a polynomial over a box.
///
/// Storage is row-major with the last variable varying fastest, so for
/// degrees (4,3,2) the entry b_{ijk} sits at ((i*4)+j)*3+k.
class BernsteinTensor {
public:
    BernsteinTensor(std::vector<unsigned> degrees, std::vector<Rational> coeffs, Box box);

    std::size_t dims() const { return degrees_.size(); }
    const std::vector<unsigned>& degrees() const { return degrees_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Box& box() const { return box_; }

    const Rational& at(std::span<const unsigned> index) const;
    std::size_t flat_index(std::span<const unsigned> index) const;
    std::vector<unsigned> multi_index(std::size_t flat) const;
    std::size_t stride(std::size_t var) const { return strides_[var]; }

    /// Value of the represented polynomial at a point of box().
    Rational evaluate(std::span<const Rational> point) const;

    /// True when every multi-index component is 0 or the degree.
    bool is_corner(std::span<const unsigned> index) const;

    friend bool operator==(const BernsteinTensor&, const BernsteinTensor&) = default;

private:
    std::vector<unsigned> degrees_;
    std::vector<std::size_t> strides_;
    std::vector<Rational> coeffs_;
    Box box_;
};

/// Bernstein form of `p` on `box` at the given per-variable degrees
/// (each must be at least p's degree in that variable).
BernsteinTensor to_bernstein(const Polynomial& p, std::span<const unsigned> degrees,
                             const Box& box);
/// Same, at p's own per-variable degrees.
BernsteinTensor to_bernstein(const Polynomial& p, const Box& box);

Rational max_coeff(const BernsteinTensor& t);
Rational min_coeff(const BernsteinTensor& t);
/// [min_coeff, max_coeff]; contains the range of the polynomial on t.box().
Interval range_enclosure(const BernsteinTensor& t);

/// Raises the degree in `var` by one without changing the polynomial.
BernsteinTensor elevate(const BernsteinTensor& t, std::size_t var);

/// de Casteljau split of axis `var` at relative position `at` in (0,1).
std::pair<BernsteinTensor, BernsteinTensor> subdivide(const BernsteinTensor& t, std::size_t var,
                                                      const Rational& at);

enum class CertificateStatus { nonnegative, negative_witness, inconclusive };

std::string to_string(CertificateStatus status);

struct Witness {
    std::vector<Rational> point;
    Rational value;
};

struct Certificate {
    CertificateStatus status = CertificateStatus::inconclusive;
    std::vector<unsigned> elevation;
    unsigned max_depth_used = 0;
    std::size_t boxes_processed = 0;
    Rational min_bernstein_coeff;
    Rational max_bernstein_coeff;
    std::optional<Witness> witness;
};

struct CertifyBudget {
    unsigned max_depth = 0;
    unsigned max_elevation = 0;
};

/// Branch-and-bound nonnegativity check of `p` on `box`.
///
/// A box is settled when all of its Bernstein coefficients are nonnegative.
/// A negative corner coefficient is an exact negative value and ends the
/// search with a witness. Otherwise the box is bisected at the relative
/// midpoint of the axis with the largest scaled coefficient difference,
/// until `max_depth`. Up to `max_elevation` rounds of degree elevation on
/// every axis are tried on the root box before any subdivision. Traversal
/// is depth-first, left child first.
Certificate certify_nonneg(const Polynomial& p, const Box& box, CertifyBudget budget);

}  // namespace invhankel
