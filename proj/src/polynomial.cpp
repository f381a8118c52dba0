#include "invhankel/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace invhankel {

namespace {

void check_names(std::size_t nvars, const std::vector<std::string>& names) {
    if (!names.empty() && names.size() != nvars) {
        throw PolynomialError("expected " + std::to_string(nvars) + " variable names, got " +
                              std::to_string(names.size()));
    }
}

bool divides(const Exponents& small, const Exponents& big) {
    for (std::size_t i = 0; i < small.size(); ++i) {
        if (small[i] > big[i]) {
            return false;
        }
    }
    return true;
}

}  // namespace

Polynomial::Polynomial(std::size_t nvars, std::vector<std::string> names)
    : nvars_(nvars), names_(std::move(names)) {
    check_names(nvars_, names_);
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& value,
                                std::vector<std::string> names) {
    Polynomial p(nvars, std::move(names));
    p.add_term(Exponents(nvars, 0), value);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index,
                                std::vector<std::string> names) {
    if (index >= nvars) {
        throw PolynomialError("variable index out of range");
    }
    Exponents e(nvars, 0);
    e[index] = 1;
    Polynomial p(nvars, std::move(names));
    p.add_term(e, Rational(1));
    return p;
}

Polynomial Polynomial::monomial(const Rational& coefficient, Exponents exponents,
                                std::vector<std::string> names) {
    Polynomial p(exponents.size(), std::move(names));
    p.add_term(exponents, coefficient);
    return p;
}

std::string Polynomial::name(std::size_t i) const {
    if (i < names_.size()) {
        return names_[i];
    }
    return "x" + std::to_string(i);
}

Polynomial Polynomial::with_names(std::vector<std::string> names) const {
    check_names(nvars_, names);
    Polynomial p = *this;
    p.names_ = std::move(names);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                        [](unsigned e) { return e == 0; }));
}

Rational Polynomial::coefficient(const Exponents& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& exponents, const Rational& coefficient) {
    if (exponents.size() != nvars_) {
        throw PolynomialError("exponent vector has length " + std::to_string(exponents.size()) +
                              ", polynomial has " + std::to_string(nvars_) + " variables");
    }
    if (coefficient.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

unsigned Polynomial::degree(std::size_t var) const {
    if (var >= nvars_) {
        throw PolynomialError("variable index out of range");
    }
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e[var]);
    }
    return d;
}

std::vector<unsigned> Polynomial::degrees() const {
    std::vector<unsigned> out(nvars_, 0);
    for (std::size_t v = 0; v < nvars_; ++v) {
        out[v] = degree(v);
    }
    return out;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (unsigned k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) {
        throw PolynomialError("evaluation point has " + std::to_string(point.size()) +
                              " coordinates, polynomial has " + std::to_string(nvars_) +
                              " variables");
    }
    // Power tables keep the cost linear in the number of terms.
    std::vector<std::vector<Rational>> powers(nvars_);
    const auto deg = degrees();
    for (std::size_t v = 0; v < nvars_; ++v) {
        powers[v].reserve(deg[v] + 1);
        powers[v].push_back(Rational(1));
        for (unsigned k = 1; k <= deg[v]; ++k) {
            powers[v].push_back(powers[v].back() * point[v]);
        }
    }
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (e[v] != 0) term *= powers[v][e[v]];
        }
        sum += term;
    }
    return sum;
}

double Polynomial::evaluate(std::span<const double> point) const {
    if (point.size() != nvars_) {
        throw PolynomialError("evaluation point has wrong dimension");
    }
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.to_double();
        for (std::size_t v = 0; v < nvars_; ++v) {
            for (unsigned k = 0; k < e[v]; ++k) term *= point[v];
        }
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& replacement) const {
    if (var >= nvars_) {
        throw PolynomialError("substitution index out of range");
    }
    require_same_arity(replacement, "substitute");
    const unsigned max_power = degree(var);
    std::vector<Polynomial> powers;
    powers.reserve(max_power + 1);
    powers.push_back(constant(nvars_, Rational(1)));
    for (unsigned k = 1; k <= max_power; ++k) {
        powers.push_back(powers.back() * replacement);
    }
    Polynomial out(nvars_, names_);
    for (const auto& [e, c] : terms_) {
        Exponents rest = e;
        const unsigned k = rest[var];
        rest[var] = 0;
        Polynomial term = monomial(c, rest) * powers[k];
        out += term;
    }
    return out;
}

Polynomial Polynomial::substitute(std::size_t var, const Rational& value) const {
    return substitute(var, constant(nvars_, value));
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(nvars_, Rational(1), names_);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1;
        if (exponent > 0) base *= base;
    }
    return result;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    require_same_arity(rhs, "+");
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    require_same_arity(rhs, "-");
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    require_same_arity(rhs, "*");
    TermMap product;
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            for (std::size_t v = 0; v < nvars_; ++v) e[v] = ea[v] + eb[v];
            auto [it, inserted] = product.try_emplace(e, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    std::erase_if(product, [](const auto& kv) { return kv.second.is_zero(); });
    terms_ = std::move(product);
    if (names_.empty()) names_ = rhs.names_;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= scalar;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    // Highest lex term first reads like the usual written form.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool has_var = false;
        std::ostringstream vars;
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (has_var) vars << "*";
            vars << name(v);
            if (e[v] > 1) vars << "^" << e[v];
            has_var = true;
        }
        if (!has_var) {
            os << mag;
        } else if (mag == Rational(1)) {
            os << vars.str();
        } else {
            os << mag << "*" << vars.str();
        }
    }
    return os.str();
}

void Polynomial::require_same_arity(const Polynomial& other, const char* op) const {
    if (other.nvars_ != nvars_) {
        throw PolynomialError(std::string("operator ") + op + ": variable count mismatch (" +
                              std::to_string(nvars_) + " vs " + std::to_string(other.nvars_) +
                              ")");
    }
    if (!names_.empty() && !other.names_.empty() && names_ != other.names_) {
        throw PolynomialError(std::string("operator ") + op + ": variable order mismatch");
    }
}

DivisionResult exact_divide(const Polynomial& dividend, const Polynomial& divisor) {
    if (divisor.is_zero()) {
        throw DivisionByZero();
    }
    if (dividend.nvars() != divisor.nvars()) {
        throw PolynomialError("exact_divide: variable count mismatch");
    }
    const std::size_t n = dividend.nvars();
    const auto& [lead_exp, lead_coef] = *divisor.terms().rbegin();

    DivisionResult out{Polynomial(n, dividend.names()), Polynomial(n, dividend.names())};
    Polynomial work = dividend;
    while (!work.is_zero()) {
        const auto [exp, coef] = *work.terms().rbegin();
        if (divides(lead_exp, exp)) {
            Exponents shift(n);
            for (std::size_t v = 0; v < n; ++v) shift[v] = exp[v] - lead_exp[v];
            const Polynomial step = Polynomial::monomial(coef / lead_coef, shift);
            out.quotient += step;
            work -= step * divisor;
        } else {
            out.remainder.add_term(exp, coef);
            work.add_term(exp, -coef);
        }
    }
    return out;
}

DivisionResult divide_by_factors(const Polynomial& dividend,
                                 std::span<const Polynomial> factors) {
    DivisionResult out{dividend, Polynomial(dividend.nvars(), dividend.names())};
    for (const auto& factor : factors) {
        DivisionResult step = exact_divide(out.quotient, factor);
        out.quotient = std::move(step.quotient);
        if (!step.remainder.is_zero()) {
            out.remainder = std::move(step.remainder);
            return out;
        }
    }
    return out;
}

}  // namespace invhankel
