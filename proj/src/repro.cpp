#include "invhankel/repro.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "invhankel/text_format.hpp"

namespace invhankel::repro {

namespace {

using C = std::complex<double>;

Rational R(long n, long d = 1) { return Rational(n, d); }

std::vector<std::string> c_names() { return {"c1", "c2", "c3", "c4"}; }
std::vector<std::string> a_names() { return {"a2", "a3", "a4", "a5"}; }
std::vector<std::string> h_names() { return {"p1", "x", "y"}; }
std::vector<std::string> unit_names() { return {"u", "x", "y"}; }

std::vector<Polynomial> variables(const std::vector<std::string>& names) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        out.push_back(Polynomial::variable(names.size(), i, names));
    }
    return out;
}

Polynomial konst(std::size_t nvars, const Rational& v, const std::vector<std::string>& names) {
    return Polynomial::constant(nvars, v, names);
}

// Drops trailing variables that do not occur.
Polynomial project(const Polynomial& p, std::size_t keep, std::vector<std::string> names) {
    Polynomial out(keep, std::move(names));
    for (const auto& [e, c] : p.terms()) {
        out.add_term(Exponents(e.begin(), e.begin() + static_cast<long>(keep)), c);
    }
    return out;
}

}  // namespace

Polynomial expected_hankel_polynomial() {
    const auto names = c_names();
    Polynomial p(4, names);
    auto t = [&](long coef, unsigned e1, unsigned e2, unsigned e3, unsigned e4) {
        p.add_term({e1, e2, e3, e4}, R(coef));
    };
    t(17, 6, 0, 0, 0);
    t(-51, 4, 1, 0, 0);
    t(45, 2, 2, 0, 0);
    t(-27, 0, 3, 0, 0);
    t(8, 3, 0, 1, 0);
    t(24, 1, 1, 1, 0);
    t(-16, 0, 0, 2, 0);
    t(-18, 2, 0, 0, 1);
    t(18, 0, 1, 0, 1);
    return p;
}

std::vector<Polynomial> expected_starlike_coeffs() {
    const auto names = c_names();
    const auto v = variables(names);
    const auto &c1 = v[0], &c2 = v[1], &c3 = v[2], &c4 = v[3];
    return {
        c1,
        R(1, 2) * c2 + R(1, 2) * c1.pow(2),
        R(1, 6) * c1.pow(3) + R(1, 2) * c1 * c2 + R(1, 3) * c3,
        R(1, 24) * c1.pow(4) + R(1, 4) * c2 * c1.pow(2) + R(1, 3) * c1 * c3 +
            R(1, 8) * c2.pow(2) + R(1, 4) * c4,
    };
}

std::vector<Polynomial> expected_inverse_coeffs() {
    const auto names = a_names();
    const auto v = variables(names);
    const auto &a2 = v[0], &a3 = v[1], &a4 = v[2], &a5 = v[3];
    return {
        -a2,
        R(2) * a2.pow(2) - a3,
        R(5) * a2 * a3 - R(5) * a2.pow(3) - a4,
        R(14) * a2.pow(4) - R(21) * a3 * a2.pow(2) + R(6) * a2 * a4 + R(3) * a3.pow(2) - a5,
    };
}

Polynomial expected_phi(Fault fault) {
    Polynomial phi(3, h_names());
    auto t = [&](long coef, unsigned ep, unsigned ex, unsigned ey) {
        phi.add_term({ep, ex, ey}, R(coef));
    };
    t(-1, 4, 3, 0);
    t(16, 4, 2, 0);
    t(-33, 4, 1, 0);
    t(18, 4, 0, 0);
    t(4, 3, 3, 1);
    t(-12, 3, 2, 1);
    t(-28, 3, 1, 1);
    t(-12, 3, 0, 1);
    t(4, 2, 3, 2);
    t(4, 2, 3, 0);
    t(-68, 2, 2, 2);
    t(-64, 2, 2, 0);
    t(-4, 2, 1, 2);
    t(72, 2, 1, 0);
    t(68, 2, 0, 2);
    t(36, 2, 0, 0);
    t(-16, 1, 3, 1);
    t(-96, 1, 2, 1);
    t(-80, 1, 1, 1);
    t(-16, 0, 3, 2);
    t(128, 0, 2, 2);
    t(144, 0, 2, 0);
    t(16, 0, 1, 2);
    t(144, 0, 1, 0);
    t(-128, 0, 0, 2);
    t(fault == Fault::phi_constant ? 287 : 288, 0, 0, 0);
    return phi;
}

std::vector<RationalMatrix> expected_matrices(Fault fault) {
    auto m = [](std::initializer_list<std::initializer_list<const char*>> rows) {
        RationalMatrix out;
        for (const auto& row : rows) {
            std::vector<Rational> r;
            for (const char* s : row) r.push_back(Rational::parse(s));
            out.push_back(std::move(r));
        }
        return out;
    };
    std::vector<RationalMatrix> layers = {
        m({{"288", "336", "432", "576"},
           {"288", "336", "432", "576"},
           {"312", "376", "4264/9", "608"},
           {"360", "456", "1672/3", "672"},
           {"720", "688", "704", "768"}}),
        m({{"288", "336", "432", "576"},
           {"288", "988/3", "1232/3", "528"},
           {"312", "1088/3", "3880/9", "512"},
           {"348", "1244/3", "1376/3", "480"},
           {"672", "576", "480", "384"}}),
        m({{"160", "640/3", "1072/3", "576"},
           {"160", "200", "944/3", "480"},
           {"688/3", "2440/9", "3080/9", "416"},
           {"344", "384", "1112/3", "288"},
           {"768", "608", "352", "0"}}),
    };
    if (fault == Fault::matrix_entry) {
        layers[0][2][2] = Rational::parse("4265/9");
    }
    return layers;
}

std::vector<Rational> expected_maxima() { return {R(768), R(672), R(768)}; }

HankelDerivation derive_hankel_polynomial() {
    HankelDerivation out;

    // Generic series code against the closed forms, both symbolic.
    {
        const auto c = variables(c_names());
        const auto a = caratheodory_to_schlicht(c);
        out.starlike_matches_closed_form = a.tail() == expected_starlike_coeffs();
    }
    {
        const auto a = variables(a_names());
        const auto inv = invert_series(SeriesCoeffs<Polynomial>(a));
        out.inverse_matches_closed_form = inv.tail() == expected_inverse_coeffs();
    }

    // Carry c5 along (order 6) so its absence from H(3,1) is a real check.
    const std::vector<std::string> names5 = {"c1", "c2", "c3", "c4", "c5"};
    const auto c = variables(names5);
    const auto a = caratheodory_to_schlicht(c);
    const auto inv = invert_series(a);
    const Polynomial scaled = hankel_det(3, 1, inv) * R(144);
    out.free_of_c5 = scaled.degree(4) == 0;
    out.derived = project(scaled, 4, c_names());
    out.matches_reference = out.free_of_c5 && out.derived == expected_hankel_polynomial();
    return out;
}

Polynomial build_majorant() {
    const auto names = h_names();
    const auto v = variables(names);
    const auto &p = v[0], &x = v[1], &y = v[2];
    auto k = [&](long n) { return konst(3, R(n), names); };
    const Polynomial four_minus_p2 = k(4) - p.pow(2);
    const Polynomial one_minus_x2 = k(1) - x.pow(2);

    Polynomial h = R(18) * p.pow(6);
    h += R(51) * x * p.pow(4) * four_minus_p2;
    h += x.pow(2) * p.pow(2) * (k(688) - R(368) * p.pow(2) + R(49) * p.pow(4));
    h -= x.pow(3) * (k(-1152) + R(704) * p.pow(2) - R(172) * p.pow(4) + R(17) * p.pow(6));
    h += x.pow(4) * p.pow(2) * (p.pow(2) - k(4)).pow(2);
    h += R(4) * y * one_minus_x2 * p * four_minus_p2 *
         (R(3) * p.pow(2) + x.pow(2) * four_minus_p2 + R(4) * x * (k(5) + p.pow(2)));
    h += R(4) * y.pow(2) * one_minus_x2 * four_minus_p2 *
         (R(8) * one_minus_x2 * four_minus_p2 + R(9) * (p.pow(2) * x + x.pow(2) * four_minus_p2));
    h += R(36) * one_minus_x2 * (k(1) - y.pow(2)) * four_minus_p2 * (p.pow(2) + x * four_minus_p2);
    return h;
}

DeltaFactorization factor_delta(const Polynomial& majorant) {
    const auto names = h_names();
    const auto v = variables(names);
    const auto &p = v[0], &x = v[1];
    auto k = [&](long n) { return konst(3, R(n), names); };

    DeltaFactorization out;
    out.delta = k(1152) - majorant;
    const std::vector<Polynomial> factors = {k(2) - p, k(2) + p, k(1) - x};
    DivisionResult division = divide_by_factors(out.delta, factors);
    out.remainder_zero = division.remainder.is_zero();
    out.phi = std::move(division.quotient);
    return out;
}

Polynomial phi_on_unit_cube(const Polynomial& phi) {
    const auto names = unit_names();
    const Polynomial renamed = phi.with_names(names);
    return renamed.substitute(0, Polynomial::variable(3, 0, names) * R(2));
}

std::vector<MatrixEntryDiff> compare_layers(const BernsteinTensor& tensor,
                                            const std::vector<RationalMatrix>& expected) {
    std::vector<MatrixEntryDiff> out;
    for (unsigned k = 0; k < expected.size(); ++k) {
        for (unsigned i = 0; i < expected[k].size(); ++i) {
            for (unsigned j = 0; j < expected[k][i].size(); ++j) {
                const Rational& b = tensor.at(std::vector<unsigned>{i, j, k});
                if (b != expected[k][i][j]) out.push_back({k, i, j, expected[k][i][j], b});
            }
        }
    }
    return out;
}

MatrixReproduction reproduce_matrices(const Polynomial& phi, Fault fault) {
    const Polynomial unit = phi_on_unit_cube(phi);
    const std::vector<unsigned> degrees = {4, 3, 2};
    MatrixReproduction out{to_bernstein(unit, degrees, Box::unit(3)), {}, {}, {}, false};

    for (unsigned k = 0; k <= 2; ++k) {
        RationalMatrix layer(5, std::vector<Rational>(4));
        for (unsigned i = 0; i <= 4; ++i) {
            for (unsigned j = 0; j <= 3; ++j) {
                layer[i][j] = out.tensor.at(std::vector<unsigned>{i, j, k});
            }
        }
        Rational layer_max = layer[0][0];
        for (const auto& row : layer) {
            for (const auto& b : row) {
                if (layer_max < b) layer_max = b;
            }
        }
        out.layers.push_back(std::move(layer));
        out.maxima.push_back(layer_max);
    }
    out.mismatches = compare_layers(out.tensor, expected_matrices(fault));
    out.maxima_match = out.maxima == expected_maxima();
    return out;
}

Certificate certify_phi(const Polynomial& phi) {
    return certify_nonneg(phi_on_unit_cube(phi), Box::unit(3), CertifyBudget{0, 0});
}

KoebeCheck koebe_extremality() {
    KoebeCheck out;
    const SeriesCoeffs<Rational> koebe({R(2), R(3), R(4), R(5)});
    const auto inv = invert_series(koebe);
    out.inverse_coeffs = inv.tail();
    out.value = hankel_det(3, 1, inv);

    const auto via_c = caratheodory_to_schlicht(std::vector<Rational>{R(2), R(2), R(2), R(2)});
    out.value_via_caratheodory = hankel_det(3, 1, invert_series(via_c));
    return out;
}

ParamDecomposition param_decompose(const ParamPoint& pp) {
    pp.validate();
    const C c1(pp.c1, 0.0);
    const C g = pp.gamma;
    const double g2 = std::norm(g);
    const double e2 = std::norm(pp.eta);
    const C q = c1 * c1 - 4.0;  // -4 + c1^2
    const C c1_2 = c1 * c1;
    const C c1_4 = c1_2 * c1_2;
    const C c1_6 = c1_4 * c1_2;

    ParamDecomposition out;
    out.a = 18.0 * c1_6 + 51.0 * g * c1_4 * q + std::pow(g, 4) * c1_2 * q * q +
            g * g * c1_2 * (688.0 - 368.0 * c1_2 + 49.0 * c1_4) +
            std::pow(g, 3) * (-1152.0 + 704.0 * c1_2 - 172.0 * c1_4 + 17.0 * c1_6);
    out.b = 4.0 * (-1.0 + g2) * c1 * q * (3.0 * c1_2 + g * g * q + 4.0 * g * (5.0 + c1_2));
    out.c = -4.0 * (-1.0 + g2) * q *
            (-8.0 * q + 8.0 * g2 * q - 9.0 * (c1_2 + g * q) * std::conj(g));
    out.d = 36.0 * (-1.0 + g2) * (-1.0 + e2) * q * (c1_2 + g * q);
    return out;
}

std::complex<double> scaled_inverse_hankel(const ParamPoint& pp) {
    const auto c = libera_cs(pp);
    const auto a = caratheodory_to_schlicht(c);
    return 1152.0 * hankel_det(3, 1, invert_series(a));
}

namespace {

C random_in_disk(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> modulus(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const double r = modulus(rng);
    return std::polar(r, angle(rng));
}

}  // namespace

ParamCheck param_crosscheck(std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> c1_dist(0.0, 2.0);
    const Polynomial majorant = build_majorant();

    ParamCheck out;
    out.max_majorant_excess = -std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < samples; ++s) {
        ParamPoint pp;
        pp.c1 = c1_dist(rng);
        pp.gamma = random_in_disk(rng);
        pp.eta = random_in_disk(rng);
        pp.rho = random_in_disk(rng);

        const C lhs = scaled_inverse_hankel(pp);
        const ParamDecomposition d = param_decompose(pp);
        const C rhs = d.a + d.b * pp.eta + d.c * pp.eta * pp.eta + d.d * pp.rho;
        out.max_identity_error = std::max(out.max_identity_error, std::abs(lhs - rhs));

        const double eta_abs = std::abs(pp.eta);
        const double bound_sum = std::abs(d.a) + std::abs(d.b) * eta_abs +
                                 std::abs(d.c) * eta_abs * eta_abs + std::abs(d.d);
        const double point[3] = {pp.c1, std::abs(pp.gamma), eta_abs};
        out.max_majorant_excess =
            std::max(out.max_majorant_excess, bound_sum - majorant.evaluate(std::span<const double>(point)));
    }
    return out;
}

double rotation_crosscheck(std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> theta_dist(0.0, 2.0 * std::numbers::pi);
    double worst = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<C> coeffs;
        // |a_n| <= n is the natural scale for univalent functions.
        for (int n = 2; n <= 5; ++n) coeffs.push_back(static_cast<double>(n) * random_in_disk(rng));
        const ComplexSeries a(coeffs);
        const double theta = theta_dist(rng);
        const C base = hankel_det(3, 1, invert_series(a));
        const C rotated = hankel_det(3, 1, invert_series(rotate_coeffs(a, theta)));
        worst = std::max(worst, std::abs(rotated - std::polar(1.0, 6.0 * theta) * base));
    }
    return worst;
}

std::vector<std::string> ReproReport::failures() const {
    std::vector<std::string> out;
    auto check = [&](bool ok, const char* name) {
        if (!ok) out.emplace_back(name);
    };
    check(inverse_coeffs_match, "inverse_coeffs_match");
    check(starlike_coeffs_match, "starlike_coeffs_match");
    check(eq24_match, "eq24_match");
    check(hankel_free_of_c5, "hankel_free_of_c5");
    check(majorant_built, "majorant_built");
    check(delta_factor_remainder_zero, "delta_factor_remainder_zero");
    check(phi_matches_reference, "phi_matches_reference");
    check(matrices_match, "matrices_match");
    check(maxima_match, "maxima_match");
    check(certificate_ok, "certificate");
    check(sharpness_slices[0], "sharpness_slice_x_eq_1");
    check(sharpness_slices[1], "sharpness_slice_p1_eq_2");
    check(koebe_ok, "koebe_value");
    check(param_check_max_error < numeric_tolerance, "param_check_max_error");
    check(majorization_max_excess <= numeric_tolerance, "majorization_max_excess");
    check(rotation_max_error < numeric_tolerance, "rotation_max_error");
    return out;
}

ReproReport run_full_report(const ReproOptions& options) {
    ReproReport report;
    report.samples = options.samples;
    report.seed = options.seed;

    const HankelDerivation derivation = derive_hankel_polynomial();
    report.inverse_coeffs_match = derivation.inverse_matches_closed_form;
    report.starlike_coeffs_match = derivation.starlike_matches_closed_form;
    report.eq24_match = derivation.matches_reference;
    report.hankel_free_of_c5 = derivation.free_of_c5;

    const Polynomial majorant = build_majorant();
    {
        const Rational origin[3] = {R(0), R(0), R(0)};
        const Rational koebe_corner[3] = {R(2), R(0), R(0)};
        report.majorant_built = !majorant.is_zero() &&
                                majorant.evaluate(std::span<const Rational>(origin)).is_zero() &&
                                majorant.evaluate(std::span<const Rational>(koebe_corner)) == R(1152);
    }

    const DeltaFactorization factored = factor_delta(majorant);
    report.delta_factor_remainder_zero = factored.remainder_zero;
    report.phi_term_count = factored.phi.term_count();
    report.phi_matches_reference = factored.phi == expected_phi(options.fault);

    const MatrixReproduction matrices = reproduce_matrices(factored.phi, options.fault);
    report.matrix_mismatches = matrices.mismatches;
    report.matrices_match = matrices.mismatches.empty();
    report.maxima = matrices.maxima;
    report.maxima_match = matrices.maxima_match;

    report.certificate = certify_phi(factored.phi);
    report.certificate_ok = report.certificate.status == CertificateStatus::nonnegative &&
                            report.certificate.boxes_processed == 1 &&
                            report.certificate.max_depth_used == 0;

    report.sharpness_slices[0] = majorant.substitute(1, R(1)) == konst(3, R(1152), h_names());
    report.sharpness_slices[1] = majorant.substitute(0, R(2)) == konst(3, R(1152), h_names());

    const KoebeCheck koebe = koebe_extremality();
    report.koebe_value = koebe.value;
    report.koebe_ok = koebe.value == R(1) && koebe.value_via_caratheodory == R(1) &&
                      koebe.inverse_coeffs == std::vector<Rational>{R(-2), R(5), R(-14), R(42)};

    const ParamCheck param = param_crosscheck(options.samples, options.seed);
    report.param_check_max_error = param.max_identity_error;
    report.majorization_max_excess = param.max_majorant_excess;
    report.rotation_max_error = rotation_crosscheck(std::min<std::size_t>(options.samples, 1000),
                                                    options.seed);

    report.pass = report.failures().empty();
    return report;
}

nlohmann::ordered_json report_to_json(const ReproReport& r) {
    nlohmann::ordered_json j;
    j["inverse_coeffs_match"] = r.inverse_coeffs_match;
    j["starlike_coeffs_match"] = r.starlike_coeffs_match;
    j["eq24_match"] = r.eq24_match;
    j["hankel_free_of_c5"] = r.hankel_free_of_c5;
    j["majorant_built"] = r.majorant_built;
    j["delta_factor_remainder_zero"] = r.delta_factor_remainder_zero;
    j["phi_matches_reference"] = r.phi_matches_reference;
    j["phi_term_count"] = r.phi_term_count;
    j["matrices_match"] = r.matrices_match;
    auto diffs = nlohmann::ordered_json::array();
    for (const auto& d : r.matrix_mismatches) {
        diffs.push_back({{"layer", d.layer},
                         {"row", d.row},
                         {"col", d.col},
                         {"expected", d.expected.to_string()},
                         {"actual", d.actual.to_string()}});
    }
    j["matrix_mismatches"] = diffs;
    auto maxima = nlohmann::ordered_json::array();
    for (const auto& m : r.maxima) maxima.push_back(m.to_string());
    j["maxima"] = maxima;
    j["maxima_match"] = r.maxima_match;
    j["certificate"] = certificate_to_json(r.certificate);
    j["sharpness_slices"] = {r.sharpness_slices[0], r.sharpness_slices[1]};
    j["koebe_value"] = r.koebe_value.to_string();
    j["param_check_samples"] = r.samples;
    j["seed"] = r.seed;
    j["param_check_max_error"] = r.param_check_max_error;
    j["majorization_max_excess"] = r.majorization_max_excess;
    j["rotation_max_error"] = r.rotation_max_error;
    j["failures"] = r.failures();
    j["pass"] = r.pass;
    return j;
}

std::string report_to_text(const ReproReport& r) {
    std::ostringstream os;
    auto row = [&](const std::string& name, bool ok, const std::string& detail = {}) {
        os << std::left << std::setw(34) << name << (ok ? "ok    " : "FAIL  ") << detail << "\n";
    };
    std::ostringstream maxima;
    for (std::size_t i = 0; i < r.maxima.size(); ++i) maxima << (i ? ", " : "") << r.maxima[i];
    auto sci = [](double v) {
        std::ostringstream s;
        s << std::scientific << std::setprecision(3) << v;
        return s.str();
    };

    row("inverse coefficients A2..A5", r.inverse_coeffs_match);
    row("starlike coefficients a2..a5", r.starlike_coeffs_match);
    row("144 H(3,1)(f^-1) in c1..c4", r.eq24_match);
    row("no c5 dependence", r.hankel_free_of_c5);
    row("majorant H(p1,x,y)", r.majorant_built);
    row("1152 - H divisible", r.delta_factor_remainder_zero);
    row("Phi equals reference form", r.phi_matches_reference,
        std::to_string(r.phi_term_count) + " terms");
    row("Bernstein matrices M0 M1 M2", r.matrices_match,
        std::to_string(r.matrix_mismatches.size()) + " mismatches");
    for (const auto& d : r.matrix_mismatches) {
        os << "    M" << d.layer << "[" << d.row << "][" << d.col << "] expected " << d.expected
           << " got " << d.actual << "\n";
    }
    row("matrix maxima", r.maxima_match, maxima.str());
    row("certificate Phi >= 0", r.certificate_ok,
        to_string(r.certificate.status) + ", boxes " +
            std::to_string(r.certificate.boxes_processed) + ", range [" +
            r.certificate.min_bernstein_coeff.to_string() + ", " +
            r.certificate.max_bernstein_coeff.to_string() + "]");
    row("H(p1,1,y) = 1152", r.sharpness_slices[0]);
    row("H(2,x,y) = 1152", r.sharpness_slices[1]);
    row("Koebe H(3,1)(k^-1)", r.koebe_ok, r.koebe_value.to_string());
    row("parametric identity", r.param_check_max_error < numeric_tolerance,
        "max error " + sci(r.param_check_max_error) + " (" + std::to_string(r.samples) +
            " samples, seed " + std::to_string(r.seed) + ")");
    row("majorization direction", r.majorization_max_excess <= numeric_tolerance,
        "max excess " + sci(r.majorization_max_excess));
    row("rotation covariance", r.rotation_max_error < numeric_tolerance,
        "max error " + sci(r.rotation_max_error));
    os << (r.pass ? "PASS" : "FAIL") << "\n";
    return os.str();
}

Fault parse_fault(const std::string& name) {
    if (name.empty() || name == "none") return Fault::none;
    if (name == "phi-const") return Fault::phi_constant;
    if (name == "matrix-entry") return Fault::matrix_entry;
    throw std::invalid_argument("unknown fault '" + name + "' (expected phi-const or matrix-entry)");
}

}  // namespace invhankel::repro
