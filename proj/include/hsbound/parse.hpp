#pragma once

#include <istream>
#include <string_view>
#include <vector>

namespace hsbound {

/// Parse whitespace- or comma-separated real numbers. Blank lines are
/// ignored; parsing is locale-independent (decimal point only). Throws
/// ParseError on malformed tokens, non-finite values, or empty input.
[[nodiscard]] std::vector<double> parse_values(std::string_view text);

/// Drain a stream and parse it.
[[nodiscard]] std::vector<double> parse_values(std::istream& in);

}  // namespace hsbound
