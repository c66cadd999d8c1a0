#include "records.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>

#include "gqss/errors.hpp"

namespace gqss::cli {

namespace {

using nlohmann::json;

// Doubles print with 17 significant digits (enough to round-trip any value)
// and always carry a '.', exponent, or letter so that parsing can tell them
// apart from integer cells.
std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    std::string text(buffer);
    if (text.find_first_of(".eEinfa") == std::string::npos) {
        text += ".0";
    }
    return text;
}

// String cells are always quoted; that is what marks them as strings when
// the table is read back.
std::string csv_quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_cell(const Value& value) {
    struct Visitor {
        std::string operator()(std::int64_t v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(const std::string& v) const { return csv_quote(v); }
    };
    return std::visit(Visitor{}, value);
}

bool looks_integral(const std::string& text) {
    if (text.empty()) return false;
    std::size_t i = text[0] == '-' ? 1 : 0;
    if (i == text.size()) return false;
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') return false;
    }
    return true;
}

Value parse_unquoted_cell(const std::string& text) {
    if (looks_integral(text)) {
        errno = 0;
        char* end = nullptr;
        const long long v = std::strtoll(text.c_str(), &end, 10);
        if (errno == 0 && end == text.c_str() + text.size()) {
            return static_cast<std::int64_t>(v);
        }
    }
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || text.empty()) {
        throw ConfigError("csv cell is neither quoted nor numeric: '" + text + "'");
    }
    return v;
}

// One CSV line into raw cells, honoring quotes. Returns the position just
// past the line's newline.
std::size_t split_csv_line(const std::string& text, std::size_t pos,
                           std::vector<std::pair<std::string, bool>>& cells) {
    cells.clear();
    std::string current;
    bool quoted = false;
    bool in_quotes = false;
    while (pos < text.size()) {
        const char c = text[pos];
        if (in_quotes) {
            if (c == '"') {
                if (pos + 1 < text.size() && text[pos + 1] == '"') {
                    current += '"';
                    ++pos;
                } else {
                    in_quotes = false;
                }
            } else {
                current += c;
            }
        } else if (c == '"' && current.empty()) {
            in_quotes = true;
            quoted = true;
        } else if (c == ',') {
            cells.emplace_back(std::move(current), quoted);
            current.clear();
            quoted = false;
        } else if (c == '\n') {
            ++pos;
            break;
        } else {
            current += c;
        }
        ++pos;
    }
    if (in_quotes) {
        throw ConfigError("csv line ends inside a quoted cell");
    }
    cells.emplace_back(std::move(current), quoted);
    return pos;
}

std::string serialize_csv(const Table& table) {
    std::string out = "# table: " + table.name + "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
        if (c > 0) out += ',';
        out += table.columns[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ',';
            out += csv_cell(row[c]);
        }
        out += '\n';
    }
    return out;
}

Table parse_csv(const std::string& text) {
    Table table;
    std::size_t pos = 0;
    if (text.rfind("# table: ", 0) == 0) {
        const std::size_t eol = text.find('\n');
        table.name = text.substr(9, eol == std::string::npos ? std::string::npos : eol - 9);
        pos = eol == std::string::npos ? text.size() : eol + 1;
    }
    std::vector<std::pair<std::string, bool>> cells;
    if (pos >= text.size()) {
        throw ConfigError("csv input has no header row");
    }
    pos = split_csv_line(text, pos, cells);
    for (auto& cell : cells) {
        table.columns.push_back(std::move(cell.first));
    }
    while (pos < text.size()) {
        pos = split_csv_line(text, pos, cells);
        if (cells.size() == 1 && cells[0].first.empty() && !cells[0].second) {
            continue; // trailing blank line
        }
        if (cells.size() != table.columns.size()) {
            throw ConfigError("csv row has " + std::to_string(cells.size()) +
                              " cells but the header names " +
                              std::to_string(table.columns.size()) + " columns");
        }
        std::vector<Value> row;
        row.reserve(cells.size());
        for (const auto& [cell, quoted] : cells) {
            if (quoted) {
                row.emplace_back(cell);
            } else {
                row.push_back(parse_unquoted_cell(cell));
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

json value_to_json(const Value& value) {
    struct Visitor {
        json operator()(std::int64_t v) const { return v; }
        json operator()(double v) const { return v; }
        json operator()(const std::string& v) const { return v; }
    };
    return std::visit(Visitor{}, value);
}

std::string serialize_structured(const Table& table) {
    json doc;
    doc["table"] = table.name;
    doc["columns"] = table.columns;
    json rows = json::array();
    for (const auto& row : table.rows) {
        json cells = json::array();
        for (const Value& value : row) {
            cells.push_back(value_to_json(value));
        }
        rows.push_back(std::move(cells));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

Table parse_structured(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("structured-text input is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("columns") || !doc.contains("rows")) {
        throw ConfigError("structured-text input needs 'columns' and 'rows'");
    }
    Table table;
    if (doc.contains("table")) table.name = doc["table"].get<std::string>();
    for (const auto& column : doc["columns"]) {
        table.columns.push_back(column.get<std::string>());
    }
    for (const auto& row : doc["rows"]) {
        std::vector<Value> cells;
        for (const auto& cell : row) {
            if (cell.is_number_float()) {
                cells.emplace_back(cell.get<double>());
            } else if (cell.is_number_integer() || cell.is_number_unsigned()) {
                cells.emplace_back(cell.get<std::int64_t>());
            } else if (cell.is_string()) {
                cells.emplace_back(cell.get<std::string>());
            } else {
                throw ConfigError("structured-text cell is not a number or string");
            }
        }
        if (cells.size() != table.columns.size()) {
            throw ConfigError("structured-text row width does not match the columns");
        }
        table.rows.push_back(std::move(cells));
    }
    return table;
}

} // namespace

std::string serialize_table(const Table& table, Format format) {
    return format == Format::Csv ? serialize_csv(table) : serialize_structured(table);
}

Table parse_table(const std::string& text, Format format) {
    return format == Format::Csv ? parse_csv(text) : parse_structured(text);
}

std::string format_name(Format format) {
    return format == Format::Csv ? "csv" : "structured-text";
}

} // namespace gqss::cli
