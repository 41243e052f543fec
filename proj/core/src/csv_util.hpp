#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gores/errors.hpp"

namespace gores::detail {

struct CsvRow {
    int line = 0; // 1-based physical line in the source
    std::vector<std::string> fields;
};

// Minimal CSV reader: comma separated, double-quote escaping ("" inside a
// quoted field), LF or CRLF line ends. Blank lines are skipped.
std::vector<CsvRow> parse_csv(std::string_view text);

std::string trim(std::string_view s);

// Strict numeric parsers; throw ParseError carrying `row` on malformed text.
double parse_double_field(const std::string& text, const char* column, int row);
int parse_int_field(const std::string& text, const char* column, int row);

} // namespace gores::detail
