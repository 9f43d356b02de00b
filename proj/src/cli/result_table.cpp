#include <brylinski/cli/result_table.hpp>
#include <brylinski/errors.hpp>

#include <cmath>
#include <cstdio>

namespace brylinski::cli {

namespace {

std::string cell_text(const Cell& cell)
{
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::monostate>) return "";
            else if constexpr (std::is_same_v<T, std::string>) return v;
            else if constexpr (std::is_same_v<T, double>) return format_number(v);
            else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
            else return std::to_string(v);
        },
        cell);
}

std::string cell_json(const Cell& cell)
{
    if (std::holds_alternative<std::monostate>(cell)) return "null";
    if (const auto* s = std::get_if<std::string>(&cell)) return json_quote(*s);
    if (const auto* d = std::get_if<double>(&cell)) return std::isfinite(*d) ? format_number(*d) : "null";
    return cell_text(cell);
}

} // namespace

TableFormat parse_table_format(const std::string& name)
{
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    throw Error(ErrorCode::usage, "unknown format '" + name + "' (expected csv or json)");
}

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void ResultTable::add_row(std::vector<Cell> row)
{
    if (row.size() != columns_.size()) throw Error(ErrorCode::usage, "row length does not match the column count");
    rows_.push_back(std::move(row));
}

void ResultTable::write_csv(std::ostream& out) const
{
    for (std::size_t i = 0; i < columns_.size(); ++i) out << (i ? "," : "") << csv_quote(columns_[i]);
    out << "\r\n";
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_quote(cell_text(row[i]));
        out << "\r\n";
    }
}

void ResultTable::write_json(std::ostream& out) const
{
    out << "[";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        out << (r ? ",\n  {" : "\n  {");
        for (std::size_t i = 0; i < columns_.size(); ++i)
            out << (i ? ", " : "") << json_quote(columns_[i]) << ": " << cell_json(rows_[r][i]);
        out << "}";
    }
    out << (rows_.empty() ? "]\n" : "\n]\n");
}

void ResultTable::write(std::ostream& out, TableFormat format) const
{
    if (format == TableFormat::csv) write_csv(out);
    else write_json(out);
}

std::string format_number(double value)
{
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string csv_quote(const std::string& field)
{
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string json_quote(const std::string& text)
{
    std::string out = "\"";
    for (unsigned char c : text) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (c < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += static_cast<char>(c);
            }
        }
    }
    return out + "\"";
}

} // namespace brylinski::cli
