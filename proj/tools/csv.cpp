#include "csv.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ofb::cli {

std::string format_double(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + '"';
}

}  // namespace

CsvWriter::CsvWriter(std::ostream& out, const std::string& comment, const std::vector<std::string>& header)
    : out_(out), columns_(header.size()) {
    out_ << "# " << comment << '\n';
    for (std::size_t i = 0; i < header.size(); ++i)
        out_ << (i ? "," : "") << quote(header[i]);
    out_ << '\n';
}

void CsvWriter::row(const std::vector<Cell>& cells) {
    if (cells.size() != columns_)
        throw std::invalid_argument("csv: row has " + std::to_string(cells.size()) + " cells, header has " +
                                    std::to_string(columns_));
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out_ << ',';
        const Cell& c = cells[i];
        if (const auto* d = std::get_if<double>(&c))
            out_ << format_double(*d);
        else if (const auto* n = std::get_if<long long>(&c))
            out_ << *n;
        else if (const auto* s = std::get_if<std::string>(&c))
            out_ << quote(*s);
    }
    out_ << '\n';
}

}  // namespace ofb::cli
