#include <algorithm>
#include <optional>

#include "invhankel/bernstein.hpp"

namespace invhankel {

std::string to_string(CertificateStatus status) {
    switch (status) {
        case CertificateStatus::nonnegative: return "nonnegative";
        case CertificateStatus::negative_witness: return "negative_witness";
        case CertificateStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

namespace {

bool all_nonnegative(const BernsteinTensor& t) {
    return std::all_of(t.coeffs().begin(), t.coeffs().end(),
                       [](const Rational& c) { return c.sign() >= 0; });
}

// Most negative corner coefficient (first in storage order on ties).
std::optional<std::size_t> negative_corner(const BernsteinTensor& t) {
    std::optional<std::size_t> best;
    for (std::size_t flat = 0; flat < t.coeffs().size(); ++flat) {
        const Rational& c = t.coeffs()[flat];
        if (c.sign() >= 0) continue;
        const auto index = t.multi_index(flat);
        if (!t.is_corner(index)) continue;
        if (!best || c < t.coeffs()[*best]) best = flat;
    }
    return best;
}

// Axis whose coefficients vary most, measured as degree times the largest
// jump between neighbours along that axis.
std::size_t branching_axis(const BernsteinTensor& t) {
    std::size_t best_axis = 0;
    Rational best_spread(-1);
    const auto& coeffs = t.coeffs();
    for (std::size_t v = 0; v < t.dims(); ++v) {
        const unsigned d = t.degrees()[v];
        if (d == 0) continue;
        const std::size_t stride = t.stride(v);
        Rational spread;
        for (std::size_t flat = 0; flat < coeffs.size(); ++flat) {
            if ((flat / stride) % (d + 1) == d) continue;
            const Rational jump = (coeffs[flat + stride] - coeffs[flat]).abs();
            if (spread < jump) spread = jump;
        }
        spread *= Rational(static_cast<long>(d));
        if (best_spread < spread) {
            best_spread = spread;
            best_axis = v;
        }
    }
    return best_axis;
}

class Search {
public:
    Search(const Polynomial& p, CertifyBudget budget) : poly_(p), budget_(budget) {}

    Certificate run(const Box& box) {
        BernsteinTensor root = to_bernstein(poly_, box);
        cert_.elevation.assign(box.dims(), 0);
        visit(root, 0, true);
        if (cert_.witness) {
            cert_.status = CertificateStatus::negative_witness;
        } else if (undecided_) {
            cert_.status = CertificateStatus::inconclusive;
        } else {
            cert_.status = CertificateStatus::nonnegative;
        }
        return cert_;
    }

private:
    void record_leaf(const BernsteinTensor& t) {
        const Interval range = range_enclosure(t);
        if (!seen_leaf_ || range.lo < cert_.min_bernstein_coeff) cert_.min_bernstein_coeff = range.lo;
        if (!seen_leaf_ || cert_.max_bernstein_coeff < range.hi) cert_.max_bernstein_coeff = range.hi;
        seen_leaf_ = true;
    }

    void visit(BernsteinTensor t, unsigned depth, bool is_root) {
        if (cert_.witness) return;
        ++cert_.boxes_processed;
        cert_.max_depth_used = std::max(cert_.max_depth_used, depth);

        if (is_root) {
            for (unsigned round = 0; round < budget_.max_elevation && !all_nonnegative(t) &&
                                     !negative_corner(t);
                 ++round) {
                for (std::size_t v = 0; v < t.dims(); ++v) {
                    t = elevate(t, v);
                    ++cert_.elevation[v];
                }
            }
        }
        if (all_nonnegative(t)) {
            record_leaf(t);
            return;
        }
        if (auto corner = negative_corner(t)) {
            record_leaf(t);
            const auto index = t.multi_index(*corner);
            std::vector<Rational> point;
            point.reserve(t.dims());
            for (std::size_t v = 0; v < t.dims(); ++v) {
                point.push_back(index[v] == 0 ? t.box()[v].lo : t.box()[v].hi);
            }
            cert_.witness = Witness{std::move(point), t.coeffs()[*corner]};
            return;
        }
        if (depth >= budget_.max_depth) {
            record_leaf(t);
            undecided_ = true;
            return;
        }
        const std::size_t axis = branching_axis(t);
        auto [left, right] = subdivide(t, axis, Rational(1, 2));
        visit(std::move(left), depth + 1, false);
        visit(std::move(right), depth + 1, false);
    }

    const Polynomial& poly_;
    CertifyBudget budget_;
    Certificate cert_;
    bool seen_leaf_ = false;
    bool undecided_ = false;
};

}  // namespace

Certificate certify_nonneg(const Polynomial& p, const Box& box, CertifyBudget budget) {
    if (p.nvars() != box.dims()) {
        throw BernsteinError("polynomial has " + std::to_string(p.nvars()) +
                             " variables but the box has " + std::to_string(box.dims()) +
                             " sides");
    }
    return Search(p, budget).run(box);
}

}  // namespace invhankel
