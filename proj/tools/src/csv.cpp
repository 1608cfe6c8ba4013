#include "plncsim/cli/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace plncsim::cli {

std::string format_real(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

std::string format_int(std::int64_t value) { return std::to_string(value); }

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) {
        throw std::logic_error("csv row width does not match header");
    }
    rows_.push_back(std::move(cells));
}

void CsvTable::write(std::ostream& out) const {
    auto write_line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) out << ',';
            out << cells[i];
        }
        out << '\n';
    };
    write_line(header_);
    for (const auto& row : rows_) write_line(row);
}

} // namespace plncsim::cli
