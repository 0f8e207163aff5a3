#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace ofb::cli {

/// A CSV cell: number (17 significant digits), text, or empty.
using Cell = std::variant<double, long long, std::string, std::monostate>;

std::string format_double(double v);

class CsvWriter {
public:
    /// Writes "# <comment>" then the header row.
    CsvWriter(std::ostream& out, const std::string& comment, const std::vector<std::string>& header);

    /// Throws std::invalid_argument if the cell count differs from the header.
    void row(const std::vector<Cell>& cells);

private:
    std::ostream& out_;
    std::size_t columns_;
};

inline Cell opt_cell(const std::optional<double>& v) {
    return v ? Cell{*v} : Cell{std::monostate{}};
}

}  // namespace ofb::cli
