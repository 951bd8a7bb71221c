#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace etfsim::csv {

struct Table {
    std::string path;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers;  // 1-based source line of each row
};

/// Reads a CSV file with a mandatory header row. Lines starting with '#'
/// are skipped (output files carry a provenance comment). Every row must
/// have exactly as many fields as the header; errors name file and line.
Table read(const std::string& path);

/// Same, but additionally requires the header to match `expected` exactly.
Table read(const std::string& path, const std::vector<std::string>& expected_header);

double parse_double(const Table& t, std::size_t row, std::size_t col);
std::int64_t parse_int64(const Table& t, std::size_t row, std::size_t col);

/// Shortest decimal representation that round-trips through double.
std::string format_double(double v);

std::string join_row(const std::vector<std::string>& fields);

}  // namespace etfsim::csv
