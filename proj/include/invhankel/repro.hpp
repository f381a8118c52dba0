#pragma once

// Mechanical replay of the computations behind the bound
// |H(3,1)(f^{-1})| <= 1 for starlike f: the symbolic coefficient chain,
// the majorant and its factorization, the Bernstein certificate, the
// sharpness slices, Koebe extremality and the numeric cross-checks of the
// parametrized form.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "invhankel/bernstein.hpp"
#include "invhankel/polynomial.hpp"
#include "invhankel/rational.hpp"
#include "invhankel/series.hpp"

namespace invhankel::repro {

/// Deliberate corruption of one reference constant, used to show that the
/// report notices it.
enum class Fault { none, phi_constant, matrix_entry };

struct ReproOptions {
    std::size_t samples = 10000;
    std::uint64_t seed = 42;
    Fault fault = Fault::none;
};

// Reference values the pipeline is checked against.

/// 144 H(3,1)(f^{-1}) in (c1, c2, c3, c4), nine terms.
Polynomial expected_hankel_polynomial();
/// a_2..a_5 in (c1..c4) and A_2..A_5 in (a2..a5).
std::vector<Polynomial> expected_starlike_coeffs();
std::vector<Polynomial> expected_inverse_coeffs();
/// Reference form of the quotient Phi(p1, x, y), 26 terms.
Polynomial expected_phi(Fault fault = Fault::none);
/// Bernstein layers M_0, M_1, M_2; layer k is indexed [u-index i][x-index j].
using RationalMatrix = std::vector<std::vector<Rational>>;
std::vector<RationalMatrix> expected_matrices(Fault fault = Fault::none);
std::vector<Rational> expected_maxima();

// Pipeline steps.

struct HankelDerivation {
    Polynomial derived;        // in c1..c4
    bool matches_reference = false;
    bool free_of_c5 = false;   // derived through order 6, c5 must drop out
    bool starlike_matches_closed_form = false;
    bool inverse_matches_closed_form = false;
};

HankelDerivation derive_hankel_polynomial();

/// Majorant H(p1, x, y).
Polynomial build_majorant();

struct DeltaFactorization {
    Polynomial delta;     // 1152 - H
    Polynomial phi;       // quotient after the three linear factors
    bool remainder_zero = false;
};

/// Divides 1152 - H by (2 - p1), (2 + p1), (1 - x) in turn.
DeltaFactorization factor_delta(const Polynomial& majorant);

/// Phi(2u, x, y) over (u, x, y).
Polynomial phi_on_unit_cube(const Polynomial& phi);

struct MatrixEntryDiff {
    std::size_t layer, row, col;
    Rational expected, actual;
};

struct MatrixReproduction {
    BernsteinTensor tensor;
    std::vector<RationalMatrix> layers;
    std::vector<Rational> maxima;
    std::vector<MatrixEntryDiff> mismatches;
    bool maxima_match = false;
};

/// Entry-by-entry comparison of a degree-(4,3,2) tensor with expected
/// layers.
std::vector<MatrixEntryDiff> compare_layers(const BernsteinTensor& tensor,
                                            const std::vector<RationalMatrix>& expected);

MatrixReproduction reproduce_matrices(const Polynomial& phi, Fault fault = Fault::none);

Certificate certify_phi(const Polynomial& phi);

struct KoebeCheck {
    std::vector<Rational> inverse_coeffs;
    Rational value;           // H(3,1) of the inverse, from a = (2,3,4,5)
    Rational value_via_caratheodory;
};

KoebeCheck koebe_extremality();

/// The four coefficient functions of the eta/rho expansion at a point.
struct ParamDecomposition {
    std::complex<double> a, b, c, d;
};

ParamDecomposition param_decompose(const ParamPoint& pp);

/// 1152 H(3,1)(f^{-1}) through libera_cs -> starlike -> inverse -> Hankel.
std::complex<double> scaled_inverse_hankel(const ParamPoint& pp);

struct ParamCheck {
    double max_identity_error = 0.0;   // |LHS - RHS|
    double max_majorant_excess = 0.0;  // sum |terms| - H(c1,|gamma|,|eta|)
};

/// Seeded Monte-Carlo check over `samples` parameter points.
ParamCheck param_crosscheck(std::size_t samples, std::uint64_t seed);

/// Largest |H(3,1)(inv(rotate(a))) - e^{6 i theta} H(3,1)(inv(a))| over
/// random complex coefficient vectors.
double rotation_crosscheck(std::size_t samples, std::uint64_t seed);

inline constexpr double numeric_tolerance = 1e-9;

struct ReproReport {
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    bool inverse_coeffs_match = false;
    bool starlike_coeffs_match = false;
    bool eq24_match = false;
    bool hankel_free_of_c5 = false;
    bool majorant_built = false;
    bool delta_factor_remainder_zero = false;
    bool phi_matches_reference = false;
    std::size_t phi_term_count = 0;
    bool matrices_match = false;
    std::vector<MatrixEntryDiff> matrix_mismatches;
    std::vector<Rational> maxima;
    bool maxima_match = false;
    Certificate certificate;
    bool certificate_ok = false;
    bool sharpness_slices[2] = {false, false};
    Rational koebe_value;
    bool koebe_ok = false;
    double param_check_max_error = 0.0;
    double majorization_max_excess = 0.0;
    double rotation_max_error = 0.0;
    bool pass = false;

    /// Names of the checks that failed, in pipeline order.
    std::vector<std::string> failures() const;
};

ReproReport run_full_report(const ReproOptions& options = {});

nlohmann::ordered_json report_to_json(const ReproReport& report);
std::string report_to_text(const ReproReport& report);

Fault parse_fault(const std::string& name);

}  // namespace invhankel::repro
