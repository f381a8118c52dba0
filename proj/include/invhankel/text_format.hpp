#pragma once

// Text and JSON formats shared by the CLI and the library.
//
// Polynomial file:
//   nvars <k>
//   names <v1> ... <vk>          (optional)
//   term <rational> <e1> ... <ek>  (repeated; duplicates are summed)
// Box file:
//   box <lo1> <hi1> ... <lok> <hik>
// In both, '#' starts a comment and blank lines are ignored.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "invhankel/bernstein.hpp"
#include "invhankel/polynomial.hpp"
#include "invhankel/rational.hpp"

namespace invhankel {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

Polynomial parse_polynomial(std::string_view text);
std::string format_polynomial(const Polynomial& p);

Box parse_box(std::string_view text);
std::string format_box(const Box& box);

/// Comma-separated rational literals, e.g. "2,3,-1/4".
std::vector<Rational> parse_rational_list(std::string_view text);
std::string format_rational_list(const std::vector<Rational>& values);

nlohmann::ordered_json certificate_to_json(const Certificate& cert);

}  // namespace invhankel
