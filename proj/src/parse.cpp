#include "hsbound/parse.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "hsbound/errors.hpp"

namespace hsbound {

std::vector<double> parse_values(std::string_view text) {
    std::vector<double> values;
    std::size_t pos = 0;
    const auto is_separator = [](char c) {
        return c == ',' || std::isspace(static_cast<unsigned char>(c)) != 0;
    };
    while (pos < text.size()) {
        while (pos < text.size() && is_separator(text[pos])) ++pos;
        if (pos >= text.size()) break;
        std::size_t end = pos;
        while (end < text.size() && !is_separator(text[end])) ++end;
        const std::string_view token = text.substr(pos, end - pos);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw ParseError("malformed number: '" + std::string(token) + "'");
        }
        if (!std::isfinite(value)) {
            throw ParseError("non-finite value: '" + std::string(token) + "'");
        }
        values.push_back(value);
        pos = end;
    }
    if (values.empty()) throw ParseError("no numeric values in input");
    return values;
}

std::vector<double> parse_values(std::istream& in) {
    std::string text(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
    return parse_values(text);
}

}  // namespace hsbound
