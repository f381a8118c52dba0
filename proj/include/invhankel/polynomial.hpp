#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "invhankel/rational.hpp"

namespace invhankel {

using Exponents = std::vector<unsigned>;

class PolynomialError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Sparse multivariate polynomial over Rational.
///
/// Terms are keyed by exponent vectors of length nvars() and never store a
/// zero coefficient, so structural equality is mathematical equality.
/// Variable 0 is the most significant variable of the lexicographic order
/// used for leading terms and division.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars, std::vector<std::string> names = {});

    static Polynomial constant(std::size_t nvars, const Rational& value,
                               std::vector<std::string> names = {});
    /// The polynomial `x_index`.
    static Polynomial variable(std::size_t nvars, std::size_t index,
                               std::vector<std::string> names = {});
    static Polynomial monomial(const Rational& coefficient, Exponents exponents,
                               std::vector<std::string> names = {});

    std::size_t nvars() const { return nvars_; }
    const std::vector<std::string>& names() const { return names_; }
    /// Display name of variable i; falls back to x0, x1, ...
    std::string name(std::size_t i) const;
    Polynomial with_names(std::vector<std::string> names) const;

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// Coefficient of the given monomial (zero when absent).
    Rational coefficient(const Exponents& exponents) const;
    /// Adds `coefficient * x^exponents`, dropping the term if it cancels.
    void add_term(const Exponents& exponents, const Rational& coefficient);

    /// Largest exponent of `var` over all terms; 0 for the zero polynomial
    /// (check is_zero() to tell the two apart).
    unsigned degree(std::size_t var) const;
    std::vector<unsigned> degrees() const;
    unsigned total_degree() const;

    Rational evaluate(std::span<const Rational> point) const;
    double evaluate(std::span<const double> point) const;

    /// Replaces variable `var` by `replacement`, which lives over the same
    /// variables as this polynomial.
    Polynomial substitute(std::size_t var, const Polynomial& replacement) const;
    /// Fixes variable `var` to a value; the variable count is unchanged.
    Polynomial substitute(std::size_t var, const Rational& value) const;

    Polynomial pow(unsigned exponent) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Polynomial& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(Polynomial lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Polynomial operator*(const Rational& lhs, Polynomial rhs) { return rhs *= lhs; }
    Polynomial operator-() const;

    /// Equality of term maps; variable names are display-only and ignored.
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    void require_same_arity(const Polynomial& other, const char* op) const;

    std::size_t nvars_ = 0;
    std::vector<std::string> names_;
    TermMap terms_;
};

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Multivariate division by a single divisor under lexicographic order
/// (variable 0 most significant). Always satisfies
/// `dividend == divisor * quotient + remainder`, and the remainder is zero
/// whenever the divisor divides the dividend.
DivisionResult exact_divide(const Polynomial& dividend, const Polynomial& divisor);

/// Divides by each factor in turn and stops at the first nonzero remainder.
/// Returns the final quotient and the remainder of the step that failed (or
/// zero when all succeed).
DivisionResult divide_by_factors(const Polynomial& dividend,
                                 std::span<const Polynomial> factors);

}  // namespace invhankel
