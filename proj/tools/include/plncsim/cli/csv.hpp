#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace plncsim::cli {

/// Formats a real with 9 significant digits so outputs are diffable.
std::string format_real(double value);
std::string format_int(std::int64_t value);

/// Rectangular comma-separated table, comma separator, '\n' rows, no
/// trailing separator. Rows are buffered so nothing is emitted until the
/// whole table exists.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    void write(std::ostream& out) const;

    const std::vector<std::string>& header() const { return header_; }
    std::size_t row_count() const { return rows_.size(); }

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace plncsim::cli
