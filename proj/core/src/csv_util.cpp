#include "csv_util.hpp"

#include <cctype>
#include <charconv>

namespace gores::detail {

std::vector<CsvRow> parse_csv(std::string_view text) {
    std::vector<CsvRow> rows;
    std::size_t pos = 0;
    int line = 1;
    while (pos < text.size()) {
        CsvRow row;
        row.line = line;
        std::string field;
        bool quoted = false;
        bool any = false;
        for (;; ++pos) {
            if (pos >= text.size()) {
                if (quoted) {
                    throw ParseError("unterminated quoted field", row.line);
                }
                row.fields.push_back(std::move(field));
                break;
            }
            char c = text[pos];
            if (quoted) {
                if (c == '"') {
                    if (pos + 1 < text.size() && text[pos + 1] == '"') {
                        field.push_back('"');
                        ++pos;
                    } else {
                        quoted = false;
                    }
                } else {
                    field.push_back(c);
                    if (c == '\n') {
                        ++line;
                    }
                }
            } else if (c == '"' && field.empty() && !any) {
                quoted = true;
                any = true;
            } else if (c == ',') {
                row.fields.push_back(std::move(field));
                field.clear();
                any = false;
            } else if (c == '\n' || (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n')) {
                if (c == '\r') {
                    ++pos;
                }
                ++pos;
                ++line;
                row.fields.push_back(std::move(field));
                break;
            } else {
                field.push_back(c);
                any = true;
            }
        }
        bool blank = row.fields.size() == 1 && trim(row.fields[0]).empty();
        if (!blank) {
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

double parse_double_field(const std::string& text, const char* column, int row) {
    const std::string t = trim(text);
    double value = 0.0;
    const char* begin = t.data();
    const char* end = begin + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || t.empty()) {
        throw ParseError(std::string("malformed number in column '") + column + "': '" + t + "'",
                         row);
    }
    return value;
}

int parse_int_field(const std::string& text, const char* column, int row) {
    const std::string t = trim(text);
    int value = 0;
    const char* begin = t.data();
    const char* end = begin + t.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || t.empty()) {
        throw ParseError(std::string("malformed integer in column '") + column + "': '" + t + "'",
                         row);
    }
    return value;
}

} // namespace gores::detail
