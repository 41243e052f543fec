#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gores/errors.hpp"

namespace gores {

struct Column {
    std::string name;
    std::string unit; // empty when dimensionless

    bool operator==(const Column&) const = default;
};

// One table cell: free text, a real number, or an integer. Numbers carry an
// optional display precision used by the human renderer only; machine
// renderers always emit full precision.
class Cell {
public:
    static Cell text(std::string value);
    static Cell number(double value, int display_decimals = -1);
    static Cell integer(long long value);

    bool is_text() const { return std::holds_alternative<std::string>(value_); }
    bool is_number() const { return std::holds_alternative<double>(value_); }
    bool is_integer() const { return std::holds_alternative<long long>(value_); }

    const std::string& text_value() const { return std::get<std::string>(value_); }
    double number_value() const { return std::get<double>(value_); }
    long long integer_value() const { return std::get<long long>(value_); }
    int display_decimals() const { return display_decimals_; }

    bool operator==(const Cell&) const = default;

private:
    std::variant<std::string, double, long long> value_;
    int display_decimals_ = -1; // -1: shortest round-trip form
};

struct ReportDocument {
    std::string title;
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows; // each row has columns.size() cells
    std::vector<std::string> footnotes;

    // Appends a row; throws ValidationError on a cell-count mismatch.
    void add_row(std::vector<Cell> cells);
};

enum class OutputFormat { Table, Json, Csv, Svg };

std::optional<OutputFormat> format_from_token(std::string_view token);

// Human-readable aligned table; ANSI bold header when styled is true.
std::string render_table(const ReportDocument& doc, bool styled = false);

// Machine forms, full numeric precision.
std::string render_json(const ReportDocument& doc);
std::string render_csv(const ReportDocument& doc);

// Dispatches on format (Svg is chart-only and rejected here with
// DomainError).
std::string render(const ReportDocument& doc, OutputFormat format, bool styled = false);

// Shortest round-trip form for decimals < 0 ("350.4"), otherwise fixed
// ("25.40" for decimals = 2).
std::string format_number(double value, int decimals = -1);

// Fraction as a display percentage, one decimal: 0.29068… -> "29.1%".
std::string format_percent(double fraction);

} // namespace gores
