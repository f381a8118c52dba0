// Command-line front end: nonnegativity certificates, series tools and the
// full reproduction report.
//
// Exit codes: 0 success / nonnegative, 1 checks failed / negative witness,
// 2 parse or internal error, 3 inconclusive certificate.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "invhankel/bernstein.hpp"
#include "invhankel/repro.hpp"
#include "invhankel/series.hpp"
#include "invhankel/text_format.hpp"

namespace {

using namespace invhankel;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_error = 2;
constexpr int exit_inconclusive = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct ReproduceFlags {
    bool json = false;
    std::size_t samples = 10000;
    std::uint64_t seed = 42;
    std::string fault;
};

int cmd_reproduce(const ReproduceFlags& flags) {
    repro::ReproOptions options;
    options.samples = flags.samples;
    options.seed = flags.seed;
    options.fault = repro::parse_fault(flags.fault);
    const auto report = repro::run_full_report(options);
    if (flags.json) {
        std::cout << repro::report_to_json(report).dump(2) << "\n";
    } else {
        std::cout << repro::report_to_text(report);
    }
    return report.pass ? exit_ok : exit_failed;
}

struct CertifyFlags {
    std::string poly_path;
    std::string box_path;
    unsigned max_depth = 0;
    unsigned max_elevation = 0;
    bool json = false;
};

int cmd_certify(const CertifyFlags& flags) {
    Polynomial p;
    Box box;
    try {
        p = parse_polynomial(read_file(flags.poly_path));
    } catch (const ParseError& e) {
        throw std::runtime_error(flags.poly_path + ": " + e.what());
    }
    try {
        box = parse_box(read_file(flags.box_path));
    } catch (const ParseError& e) {
        throw std::runtime_error(flags.box_path + ": " + e.what());
    }
    const Certificate cert =
        certify_nonneg(p, box, CertifyBudget{flags.max_depth, flags.max_elevation});
    if (flags.json) {
        std::cout << certificate_to_json(cert).dump(2) << "\n";
    } else {
        std::cout << "status          " << to_string(cert.status) << "\n"
                  << "boxes processed " << cert.boxes_processed << "\n"
                  << "max depth used  " << cert.max_depth_used << "\n"
                  << "elevation       " << format_rational_list(std::vector<Rational>(
                                                cert.elevation.begin(), cert.elevation.end()))
                  << "\n"
                  << "coefficients    [" << cert.min_bernstein_coeff << ", "
                  << cert.max_bernstein_coeff << "]\n";
        if (cert.witness) {
            std::cout << "witness         (" << format_rational_list(cert.witness->point)
                      << ") -> " << cert.witness->value << "\n";
        }
    }
    switch (cert.status) {
        case CertificateStatus::nonnegative: return exit_ok;
        case CertificateStatus::negative_witness: return exit_failed;
        case CertificateStatus::inconclusive: return exit_inconclusive;
    }
    return exit_error;
}

int cmd_invert(const std::string& coeffs) {
    const auto a = parse_rational_list(coeffs);
    const auto inv = invert_series(SeriesCoeffs<Rational>(a));
    std::cout << format_rational_list(inv.tail()) << "\n";
    return exit_ok;
}

int cmd_hankel(unsigned q, unsigned n, const std::string& coeffs, bool inverse) {
    SeriesCoeffs<Rational> a(parse_rational_list(coeffs));
    if (inverse) {
        a = invert_series(a);
    }
    std::cout << hankel_det(q, n, a) << "\n";
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bernstein nonnegativity certificates and inverse Hankel determinants"};
    app.require_subcommand(1);

    ReproduceFlags repro_flags;
    auto* reproduce = app.add_subcommand("reproduce", "Replay the full H(3,1)(f^-1) <= 1 proof chain");
    reproduce->add_flag("--json", repro_flags.json, "Emit the report as JSON");
    reproduce->add_option("--samples", repro_flags.samples, "Monte-Carlo sample count")
        ->check(CLI::PositiveNumber);
    reproduce->add_option("--seed", repro_flags.seed, "Monte-Carlo seed");
    reproduce->add_option("--self-test-fault", repro_flags.fault,
                          "Corrupt one reference constant (phi-const, matrix-entry)")
        ->check(CLI::IsMember({"none", "phi-const", "matrix-entry"}));

    CertifyFlags certify_flags;
    auto* certify = app.add_subcommand("certify", "Certify p >= 0 on a box");
    certify->add_option("--poly", certify_flags.poly_path, "Polynomial file")->required();
    certify->add_option("--box", certify_flags.box_path, "Box file")->required();
    certify->add_option("--max-depth", certify_flags.max_depth, "Subdivision depth budget");
    certify->add_option("--max-elevation", certify_flags.max_elevation,
                        "Degree elevation budget");
    certify->add_flag("--json", certify_flags.json, "Emit the certificate as JSON");

    std::string invert_coeffs;
    auto* invert = app.add_subcommand("invert", "Coefficients of the inverse series");
    invert->add_option("--coeffs", invert_coeffs, "a2,a3,... as rational literals")->required();

    unsigned q = 0;
    unsigned n = 0;
    std::string hankel_coeffs;
    bool hankel_inverse = false;
    auto* hankel = app.add_subcommand("hankel", "Hankel determinant H(q,n)");
    hankel->add_option("--q", q, "Matrix size")->required()->check(CLI::PositiveNumber);
    hankel->add_option("--n", n, "Starting index")->required()->check(CLI::PositiveNumber);
    hankel->add_option("--coeffs", hankel_coeffs, "a2,a3,... as rational literals")->required();
    hankel->add_flag("--inverse", hankel_inverse, "Use the inverse series coefficients");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_error;
    }

    try {
        if (*reproduce) return cmd_reproduce(repro_flags);
        if (*certify) return cmd_certify(certify_flags);
        if (*invert) return cmd_invert(invert_coeffs);
        if (*hankel) return cmd_hankel(q, n, hankel_coeffs, hankel_inverse);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}
