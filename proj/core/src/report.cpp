#include "gores/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

namespace gores {

using ordered_json = nlohmann::ordered_json;

Cell Cell::text(std::string value) {
    Cell c;
    c.value_ = std::move(value);
    return c;
}

Cell Cell::number(double value, int display_decimals) {
    Cell c;
    c.value_ = value;
    c.display_decimals_ = display_decimals;
    return c;
}

Cell Cell::integer(long long value) {
    Cell c;
    c.value_ = value;
    return c;
}

void ReportDocument::add_row(std::vector<Cell> cells) {
    if (cells.size() != columns.size()) {
        throw ValidationError("report row has " + std::to_string(cells.size()) +
                              " cells, expected " + std::to_string(columns.size()));
    }
    rows.push_back(std::move(cells));
}

std::optional<OutputFormat> format_from_token(std::string_view token) {
    if (token == "table") {
        return OutputFormat::Table;
    }
    if (token == "json") {
        return OutputFormat::Json;
    }
    if (token == "csv") {
        return OutputFormat::Csv;
    }
    if (token == "svg") {
        return OutputFormat::Svg;
    }
    return std::nullopt;
}

std::string format_number(double value, int decimals) {
    if (decimals >= 0) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
        return buf;
    }
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string format_percent(double fraction) {
    return format_number(fraction * 100.0, 1) + "%";
}

namespace {

std::string cell_display(const Cell& cell) {
    if (cell.is_text()) {
        return cell.text_value();
    }
    if (cell.is_integer()) {
        return std::to_string(cell.integer_value());
    }
    return format_number(cell.number_value(), cell.display_decimals());
}

std::string cell_machine(const Cell& cell) {
    if (cell.is_text()) {
        return cell.text_value();
    }
    if (cell.is_integer()) {
        return std::to_string(cell.integer_value());
    }
    return format_number(cell.number_value(), -1);
}

std::string header_label(const Column& column) {
    return column.unit.empty() ? column.name : column.name + " (" + column.unit + ")";
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    out += "\"";
    return out;
}

} // namespace

std::string render_table(const ReportDocument& doc, bool styled) {
    std::vector<std::size_t> widths(doc.columns.size(), 0);
    std::vector<std::string> headers;
    headers.reserve(doc.columns.size());
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
        headers.push_back(header_label(doc.columns[i]));
        widths[i] = headers[i].size();
    }
    std::vector<std::vector<std::string>> cells;
    cells.reserve(doc.rows.size());
    for (const auto& row : doc.rows) {
        std::vector<std::string> line;
        line.reserve(row.size());
        for (std::size_t i = 0; i < row.size(); ++i) {
            line.push_back(cell_display(row[i]));
            widths[i] = std::max(widths[i], line.back().size());
        }
        cells.push_back(std::move(line));
    }

    std::ostringstream out;
    if (!doc.title.empty()) {
        out << (styled ? "\x1b[1m" : "") << doc.title << (styled ? "\x1b[0m" : "") << "\n";
    }
    auto emit_row = [&](const std::vector<std::string>& line, const std::vector<Cell>* row,
                        bool bold) {
        std::string text;
        for (std::size_t i = 0; i < line.size(); ++i) {
            const bool numeric = row != nullptr && !(*row)[i].is_text();
            std::string padded = line[i];
            if (padded.size() < widths[i]) {
                const std::string pad(widths[i] - padded.size(), ' ');
                padded = numeric ? pad + padded : padded + pad;
            }
            text += padded;
            if (i + 1 < line.size()) {
                text += "  ";
            }
        }
        while (!text.empty() && text.back() == ' ') {
            text.pop_back();
        }
        if (bold && styled) {
            out << "\x1b[1m" << text << "\x1b[0m\n";
        } else {
            out << text << "\n";
        }
    };
    emit_row(headers, nullptr, true);
    std::size_t rule = 0;
    for (std::size_t i = 0; i < widths.size(); ++i) {
        rule += widths[i] + (i + 1 < widths.size() ? 2 : 0);
    }
    out << std::string(rule, '-') << "\n";
    for (std::size_t r = 0; r < cells.size(); ++r) {
        emit_row(cells[r], &doc.rows[r], false);
    }
    for (const auto& note : doc.footnotes) {
        out << "note: " << note << "\n";
    }
    return out.str();
}

std::string render_json(const ReportDocument& doc) {
    ordered_json j;
    j["title"] = doc.title;
    ordered_json cols = ordered_json::array();
    for (const auto& c : doc.columns) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["unit"] = c.unit;
        cols.push_back(std::move(jc));
    }
    j["columns"] = std::move(cols);
    ordered_json rows = ordered_json::array();
    for (const auto& row : doc.rows) {
        ordered_json jr = ordered_json::array();
        for (const auto& cell : row) {
            if (cell.is_text()) {
                jr.push_back(cell.text_value());
            } else if (cell.is_integer()) {
                jr.push_back(cell.integer_value());
            } else {
                jr.push_back(cell.number_value());
            }
        }
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    j["footnotes"] = doc.footnotes;
    return j.dump(2) + "\n";
}

std::string render_csv(const ReportDocument& doc) {
    std::ostringstream out;
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
        out << csv_escape(header_label(doc.columns[i]));
        if (i + 1 < doc.columns.size()) {
            out << ",";
        }
    }
    out << "\n";
    for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << csv_escape(cell_machine(row[i]));
            if (i + 1 < row.size()) {
                out << ",";
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string render(const ReportDocument& doc, OutputFormat format, bool styled) {
    switch (format) {
    case OutputFormat::Table:
        return render_table(doc, styled);
    case OutputFormat::Json:
        return render_json(doc);
    case OutputFormat::Csv:
        return render_csv(doc);
    case OutputFormat::Svg:
        break;
    }
    throw DomainError("svg output is only available for chart-producing commands");
}

} // namespace gores
