#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace gqss::cli {

enum class Format { Csv, StructuredText };

/// A single table cell. The three alternatives serialize distinguishably in
/// both formats, so parsing a serialized table recovers the exact cells.
using Value = std::variant<std::int64_t, double, std::string>;

/// Column-named rows, the one output shape every command emits.
struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Value>> rows;

    bool operator==(const Table&) const = default;
};

/// Serializes with 17 significant digits on doubles, so parse(serialize(t))
/// returns t exactly, cell types included.
std::string serialize_table(const Table& table, Format format);
Table parse_table(const std::string& text, Format format);

/// "csv" or "structured-text".
std::string format_name(Format format);

} // namespace gqss::cli
