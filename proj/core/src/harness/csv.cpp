#include "vaswave/harness/csv.hpp"

#include <cstdio>

namespace vaswave {

std::string format_g17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(const std::string& path,
                     const std::vector<std::string>& header)
    : path_(path), out_(path, std::ios::binary), n_cols_(header.size()) {
    if (!out_) throw IoError("cannot open " + path + " for writing");
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) out_ << ',';
        out_ << header[i];
    }
    out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != n_cols_) {
        throw IoError("column count mismatch in " + path_);
    }
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out_ << ',';
        out_ << format_g17(values[i]);
    }
    out_ << '\n';
    if (!out_) throw IoError("write failure on " + path_);
}

void CsvWriter::row(const std::string& label,
                    const std::vector<std::string>& cells) {
    if (cells.size() + 1 != n_cols_) {
        throw IoError("column count mismatch in " + path_);
    }
    out_ << label;
    for (const auto& c : cells) out_ << ',' << c;
    out_ << '\n';
    if (!out_) throw IoError("write failure on " + path_);
}

}  // namespace vaswave
