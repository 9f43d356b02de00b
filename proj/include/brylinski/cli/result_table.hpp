#pragma once

// Tables of results, serialized as CSV (RFC 4180) or as a JSON array of objects. Floating-point
// cells are printed with 17 significant digits so that output round-trips exactly.

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace brylinski::cli {

/// Empty cells (monostate) print as an empty CSV field and as JSON null.
using Cell = std::variant<std::monostate, std::string, double, std::int64_t, bool>;

enum class TableFormat { csv, json };

TableFormat parse_table_format(const std::string& name);

class ResultTable {
public:
    explicit ResultTable(std::vector<std::string> columns);

    const std::vector<std::string>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

    /// Appends a row; its length must match the column count.
    void add_row(std::vector<Cell> row);

    void write_csv(std::ostream& out) const;
    void write_json(std::ostream& out) const;
    void write(std::ostream& out, TableFormat format) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
};

/// %.17g, with "nan", "inf" and "-inf" for non-finite values.
std::string format_number(double value);

std::string csv_quote(const std::string& field);
std::string json_quote(const std::string& text);

} // namespace brylinski::cli
