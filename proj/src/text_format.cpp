#include "invhankel/text_format.hpp"

#include <charconv>
#include <sstream>

namespace invhankel {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> words;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(start, end - start);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream is{std::string(raw)};
        Line line{number, {}};
        for (std::string w; is >> w;) line.words.push_back(w);
        if (!line.words.empty()) lines.push_back(std::move(line));
        start = end + 1;
    }
    return lines;
}

Rational rational_at(const Line& line, std::size_t i) {
    try {
        return Rational::parse(line.words[i]);
    } catch (const std::exception& e) {
        throw ParseError(line.number, e.what());
    }
}

unsigned unsigned_at(const Line& line, std::size_t i, const char* what) {
    const std::string& w = line.words[i];
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
    if (ec != std::errc() || ptr != w.data() + w.size()) {
        throw ParseError(line.number, std::string("expected a nonnegative integer ") + what +
                                          ", got '" + w + "'");
    }
    return value;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) {
        throw ParseError(0, "empty polynomial file");
    }
    const Line& header = lines.front();
    if (header.words[0] != "nvars" || header.words.size() != 2) {
        throw ParseError(header.number, "expected 'nvars <k>'");
    }
    const std::size_t nvars = unsigned_at(header, 1, "variable count");

    std::size_t i = 1;
    std::vector<std::string> names;
    if (i < lines.size() && lines[i].words[0] == "names") {
        names.assign(lines[i].words.begin() + 1, lines[i].words.end());
        if (names.size() != nvars) {
            throw ParseError(lines[i].number, "expected " + std::to_string(nvars) +
                                                  " names, got " + std::to_string(names.size()));
        }
        ++i;
    }
    Polynomial p(nvars, names);
    for (; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.words[0] != "term") {
            throw ParseError(line.number, "unknown directive '" + line.words[0] + "'");
        }
        if (line.words.size() != nvars + 2) {
            throw ParseError(line.number, "term needs a coefficient and " +
                                              std::to_string(nvars) + " exponents");
        }
        const Rational coef = rational_at(line, 1);
        Exponents e(nvars);
        for (std::size_t v = 0; v < nvars; ++v) e[v] = unsigned_at(line, v + 2, "exponent");
        p.add_term(e, coef);
    }
    return p;
}

std::string format_polynomial(const Polynomial& p) {
    std::ostringstream os;
    os << "nvars " << p.nvars() << "\n";
    if (!p.names().empty()) {
        os << "names";
        for (const auto& n : p.names()) os << " " << n;
        os << "\n";
    }
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        os << "term " << it->second;
        for (unsigned e : it->first) os << " " << e;
        os << "\n";
    }
    return os.str();
}

Box parse_box(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.size() != 1) {
        throw ParseError(lines.empty() ? 0 : lines[1].number,
                         "box file must contain exactly one 'box' line");
    }
    const Line& line = lines.front();
    if (line.words[0] != "box") {
        throw ParseError(line.number, "expected 'box <lo1> <hi1> ...'");
    }
    if (line.words.size() < 3 || (line.words.size() - 1) % 2 != 0) {
        throw ParseError(line.number, "box needs an even, nonzero number of endpoints");
    }
    std::vector<Interval> sides;
    for (std::size_t i = 1; i < line.words.size(); i += 2) {
        sides.push_back(Interval{rational_at(line, i), rational_at(line, i + 1)});
    }
    try {
        return Box(std::move(sides));
    } catch (const BernsteinError& e) {
        throw ParseError(line.number, e.what());
    }
}

std::string format_box(const Box& box) {
    std::ostringstream os;
    os << "box";
    for (const auto& side : box.sides()) os << " " << side.lo << " " << side.hi;
    os << "\n";
    return os.str();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                               : comma - start);
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::exception& e) {
            throw ParseError(0, "coefficient " + std::to_string(out.size() + 1) + ": " + e.what());
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_rational_list(const std::vector<Rational>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += values[i].to_string();
    }
    return out;
}

nlohmann::ordered_json certificate_to_json(const Certificate& cert) {
    nlohmann::ordered_json j;
    j["status"] = to_string(cert.status);
    j["elevation"] = cert.elevation;
    j["max_depth_used"] = cert.max_depth_used;
    j["boxes_processed"] = cert.boxes_processed;
    j["min_bernstein_coeff"] = cert.min_bernstein_coeff.to_string();
    j["max_bernstein_coeff"] = cert.max_bernstein_coeff.to_string();
    if (cert.witness) {
        nlohmann::ordered_json w;
        w["point"] = nlohmann::ordered_json::array();
        for (const auto& c : cert.witness->point) w["point"].push_back(c.to_string());
        w["value"] = cert.witness->value.to_string();
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

}  // namespace invhankel
