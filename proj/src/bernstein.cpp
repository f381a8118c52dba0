#include "invhankel/bernstein.hpp"

#include <algorithm>
#include <cmath>

namespace invhankel {

Box::Box(std::vector<Interval> sides) : sides_(std::move(sides)) {
    for (std::size_t i = 0; i < sides_.size(); ++i) {
        if (!(sides_[i].lo < sides_[i].hi)) {
            throw BernsteinError("box side " + std::to_string(i) + " is empty or degenerate: [" +
                                 sides_[i].lo.to_string() + ", " + sides_[i].hi.to_string() + "]");
        }
    }
}

Box Box::unit(std::size_t dims) {
    return Box(std::vector<Interval>(dims, Interval{Rational(0), Rational(1)}));
}

bool Box::contains(std::span<const Rational> point) const {
    if (point.size() != dims()) return false;
    for (std::size_t i = 0; i < dims(); ++i) {
        if (!sides_[i].contains(point[i])) return false;
    }
    return true;
}

std::vector<Rational> Box::from_unit(std::span<const Rational> t) const {
    if (t.size() != dims()) {
        throw BernsteinError("point dimension does not match box");
    }
    std::vector<Rational> out;
    out.reserve(dims());
    for (std::size_t i = 0; i < dims(); ++i) {
        out.push_back(sides_[i].lo + (sides_[i].hi - sides_[i].lo) * t[i]);
    }
    return out;
}

std::pair<Box, Box> Box::split(std::size_t var, const Rational& at) const {
    const Rational mid = sides_[var].lo + (sides_[var].hi - sides_[var].lo) * at;
    auto left = sides_;
    auto right = sides_;
    left[var].hi = mid;
    right[var].lo = mid;
    return {Box(std::move(left)), Box(std::move(right))};
}

Rational bernstein_basis(unsigned n, unsigned m, const Rational& t) {
    if (m > n) return Rational(0);
    Rational out = binomial(n, m);
    const Rational s = Rational(1) - t;
    for (unsigned i = 0; i < m; ++i) out *= t;
    for (unsigned i = m; i < n; ++i) out *= s;
    return out;
}

double bernstein_basis(unsigned n, unsigned m, double t) {
    if (m > n) return 0.0;
    return binomial(n, m).to_double() * std::pow(t, m) * std::pow(1.0 - t, n - m);
}

BernsteinTensor::BernsteinTensor(std::vector<unsigned> degrees, std::vector<Rational> coeffs,
                                 Box box)
    : degrees_(std::move(degrees)), coeffs_(std::move(coeffs)), box_(std::move(box)) {
    if (box_.dims() != degrees_.size()) {
        throw BernsteinError("box dimension does not match degree vector");
    }
    strides_.assign(degrees_.size(), 1);
    std::size_t size = 1;
    for (std::size_t v = degrees_.size(); v-- > 0;) {
        strides_[v] = size;
        size *= degrees_[v] + 1;
    }
    if (coeffs_.size() != size) {
        throw BernsteinError("coefficient count " + std::to_string(coeffs_.size()) +
                             " does not match tensor shape (" + std::to_string(size) + ")");
    }
}

std::size_t BernsteinTensor::flat_index(std::span<const unsigned> index) const {
    if (index.size() != dims()) {
        throw BernsteinError("multi-index has wrong length");
    }
    std::size_t flat = 0;
    for (std::size_t v = 0; v < dims(); ++v) {
        if (index[v] > degrees_[v]) throw BernsteinError("multi-index out of range");
        flat += index[v] * strides_[v];
    }
    return flat;
}

std::vector<unsigned> BernsteinTensor::multi_index(std::size_t flat) const {
    std::vector<unsigned> index(dims());
    for (std::size_t v = 0; v < dims(); ++v) {
        index[v] = static_cast<unsigned>(flat / strides_[v]);
        flat %= strides_[v];
    }
    return index;
}

const Rational& BernsteinTensor::at(std::span<const unsigned> index) const {
    return coeffs_[flat_index(index)];
}

bool BernsteinTensor::is_corner(std::span<const unsigned> index) const {
    for (std::size_t v = 0; v < dims(); ++v) {
        if (index[v] != 0 && index[v] != degrees_[v]) return false;
    }
    return true;
}

Rational BernsteinTensor::evaluate(std::span<const Rational> point) const {
    if (point.size() != dims()) {
        throw BernsteinError("evaluation point has wrong dimension");
    }
    // Basis values per axis, then one pass over the tensor.
    std::vector<std::vector<Rational>> basis(dims());
    for (std::size_t v = 0; v < dims(); ++v) {
        const Rational t = (point[v] - box_[v].lo) / (box_[v].hi - box_[v].lo);
        for (unsigned m = 0; m <= degrees_[v]; ++m) {
            basis[v].push_back(bernstein_basis(degrees_[v], m, t));
        }
    }
    Rational sum;
    for (std::size_t flat = 0; flat < coeffs_.size(); ++flat) {
        if (coeffs_[flat].is_zero()) continue;
        const auto index = multi_index(flat);
        Rational w = coeffs_[flat];
        for (std::size_t v = 0; v < dims(); ++v) w *= basis[v][index[v]];
        sum += w;
    }
    return sum;
}

namespace {

// Applies `op` to every 1-D fibre of `data` along `var`.
template <class Op>
void for_each_fibre(const std::vector<unsigned>& degrees, const std::vector<std::size_t>& strides,
                    std::size_t var, std::size_t total, Op op) {
    const std::size_t stride = strides[var];
    const std::size_t len = degrees[var] + 1;
    for (std::size_t base = 0; base < total; ++base) {
        if ((base / stride) % len != 0) continue;
        op(base, stride, len);
    }
}

std::vector<std::size_t> strides_for(const std::vector<unsigned>& degrees) {
    std::vector<std::size_t> strides(degrees.size(), 1);
    std::size_t size = 1;
    for (std::size_t v = degrees.size(); v-- > 0;) {
        strides[v] = size;
        size *= degrees[v] + 1;
    }
    return strides;
}

Polynomial remap_to_unit(const Polynomial& p, const Box& box) {
    // x_v = lo_v + (hi_v - lo_v) t_v, variable by variable.
    Polynomial out = p;
    for (std::size_t v = 0; v < box.dims(); ++v) {
        const Interval& side = box[v];
        if (side.lo == Rational(0) && side.hi == Rational(1)) continue;
        Polynomial affine = Polynomial::constant(p.nvars(), side.lo) +
                            Polynomial::variable(p.nvars(), v) * (side.hi - side.lo);
        out = out.substitute(v, affine.with_names(p.names()));
    }
    return out;
}

}  // namespace

BernsteinTensor to_bernstein(const Polynomial& p, std::span<const unsigned> degrees,
                             const Box& box) {
    const std::size_t k = p.nvars();
    if (box.dims() != k || degrees.size() != k) {
        throw BernsteinError("polynomial, degree vector and box disagree on dimension");
    }
    std::vector<unsigned> deg(degrees.begin(), degrees.end());
    for (std::size_t v = 0; v < k; ++v) {
        if (p.degree(v) > deg[v]) {
            throw BernsteinError("degree " + std::to_string(deg[v]) + " for " + p.name(v) +
                                 " is below the polynomial's degree " +
                                 std::to_string(p.degree(v)));
        }
    }
    const Polynomial unit = remap_to_unit(p, box);
    const auto strides = strides_for(deg);
    std::size_t total = 1;
    for (unsigned d : deg) total *= d + 1;

    // Dense monomial coefficients a_J, then per axis
    // b_i = sum_{j <= i} C(i,j)/C(d,j) a_j.
    std::vector<Rational> data(total);
    for (const auto& [e, c] : unit.terms()) {
        std::size_t flat = 0;
        for (std::size_t v = 0; v < k; ++v) flat += e[v] * strides[v];
        data[flat] = c;
    }
    for (std::size_t v = 0; v < k; ++v) {
        const unsigned d = deg[v];
        std::vector<std::vector<Rational>> weight(d + 1);
        for (unsigned i = 0; i <= d; ++i) {
            for (unsigned j = 0; j <= i; ++j) {
                weight[i].push_back(binomial(i, j) / binomial(d, j));
            }
        }
        for_each_fibre(deg, strides, v, total, [&](std::size_t base, std::size_t stride,
                                                   std::size_t len) {
            std::vector<Rational> in(len);
            for (std::size_t i = 0; i < len; ++i) in[i] = data[base + i * stride];
            for (std::size_t i = 0; i < len; ++i) {
                Rational s;
                for (std::size_t j = 0; j <= i; ++j) {
                    if (!in[j].is_zero()) s += weight[i][j] * in[j];
                }
                data[base + i * stride] = s;
            }
        });
    }
    return BernsteinTensor(std::move(deg), std::move(data), box);
}

BernsteinTensor to_bernstein(const Polynomial& p, const Box& box) {
    const auto deg = p.degrees();
    return to_bernstein(p, deg, box);
}

Rational max_coeff(const BernsteinTensor& t) {
    return *std::max_element(t.coeffs().begin(), t.coeffs().end());
}

Rational min_coeff(const BernsteinTensor& t) {
    return *std::min_element(t.coeffs().begin(), t.coeffs().end());
}

Interval range_enclosure(const BernsteinTensor& t) {
    const auto [lo, hi] = std::minmax_element(t.coeffs().begin(), t.coeffs().end());
    return Interval{*lo, *hi};
}

BernsteinTensor elevate(const BernsteinTensor& t, std::size_t var) {
    if (var >= t.dims()) {
        throw BernsteinError("elevate: variable index out of range");
    }
    auto deg = t.degrees();
    const unsigned d = deg[var];
    deg[var] = d + 1;
    const auto strides = strides_for(deg);
    std::size_t total = 1;
    for (unsigned e : deg) total *= e + 1;

    // b'_i = i/(d+1) b_{i-1} + (1 - i/(d+1)) b_i
    std::vector<Rational> out(total);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::vector<unsigned> index(deg.size());
        std::size_t rest = flat;
        for (std::size_t v = 0; v < deg.size(); ++v) {
            index[v] = static_cast<unsigned>(rest / strides[v]);
            rest %= strides[v];
        }
        const unsigned i = index[var];
        const Rational w(static_cast<long>(i), static_cast<long>(d + 1));
        Rational value;
        if (i > 0) {
            index[var] = i - 1;
            value += w * t.at(index);
        }
        if (i <= d) {
            index[var] = i;
            value += (Rational(1) - w) * t.at(index);
        }
        out[flat] = value;
    }
    return BernsteinTensor(std::move(deg), std::move(out), t.box());
}

std::pair<BernsteinTensor, BernsteinTensor> subdivide(const BernsteinTensor& t, std::size_t var,
                                                      const Rational& at) {
    if (var >= t.dims()) {
        throw BernsteinError("subdivide: variable index out of range");
    }
    if (!(Rational(0) < at && at < Rational(1))) {
        throw BernsteinError("subdivision point " + at.to_string() + " is outside (0,1)");
    }
    std::vector<Rational> left(t.coeffs().size());
    std::vector<Rational> right(t.coeffs().size());
    const auto& deg = t.degrees();
    const std::vector<std::size_t> strides = strides_for(deg);
    const Rational one_minus = Rational(1) - at;
    for_each_fibre(deg, strides, var, t.coeffs().size(),
                   [&](std::size_t base, std::size_t stride, std::size_t len) {
                       std::vector<Rational> work(len);
                       for (std::size_t i = 0; i < len; ++i) work[i] = t.coeffs()[base + i * stride];
                       // Left takes the first entry of each de Casteljau row,
                       // right the last (filled back to front).
                       left[base] = work[0];
                       right[base + (len - 1) * stride] = work[len - 1];
                       for (std::size_t r = 1; r < len; ++r) {
                           for (std::size_t i = 0; i + r < len; ++i) {
                               work[i] = one_minus * work[i] + at * work[i + 1];
                           }
                           left[base + r * stride] = work[0];
                           right[base + (len - 1 - r) * stride] = work[len - 1 - r];
                       }
                   });
    auto [lbox, rbox] = t.box().split(var, at);
    return {BernsteinTensor(deg, std::move(left), std::move(lbox)),
            BernsteinTensor(deg, std::move(right), std::move(rbox))};
}

}  // namespace invhankel
