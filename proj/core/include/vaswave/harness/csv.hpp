#pragma once

#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

#include "vaswave/errors.hpp"

namespace vaswave {

// Formats a double with 17 significant digits, '.' decimal point,
// locale independent. The round trip double -> text -> double is exact.
std::string format_g17(double v);

// Minimal RFC-4180-style CSV writer: one header row, comma separated,
// no quoting needed for numeric payloads, "\n" line ends.
class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);

    void row(const std::vector<double>& values);
    // Mixed row for tables with a leading label column.
    void row(const std::string& label, const std::vector<std::string>& cells);

    const std::string& path() const { return path_; }

  private:
    std::string path_;
    std::ofstream out_;
    size_t n_cols_;
};

}  // namespace vaswave
