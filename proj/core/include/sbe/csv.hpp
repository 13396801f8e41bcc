// Output plumbing: CSV tables with RFC-4180 quoting, locale-independent
// number formatting (shortest round-trip for doubles, so identical inputs
// give byte-identical files), and SHA-256 digests for the run manifest.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sbe {

// Shortest decimal string that round-trips the exact double.
std::string fmt_double(double v);
std::string fmt_int(long long v);

// Quotes a cell per RFC 4180 when it contains a comma, quote, or newline.
std::string csv_quote(const std::string& cell);

class CsvTable {
  public:
    CsvTable(std::string name, std::vector<std::string> columns);

    // Cell count must match the header; throws std::invalid_argument.
    void row(const std::vector<std::string>& cells);

    const std::string& name() const { return name_; }
    size_t rows() const { return rows_; }
    const std::string& render() const { return buf_; }  // header + body

  private:
    std::string name_;
    size_t ncols_;
    size_t rows_ = 0;
    std::string buf_;
};

std::string sha256_hex(std::string_view data);

}  // namespace sbe
