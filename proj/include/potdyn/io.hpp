#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace potdyn {

// File could not be opened or written.
struct io_error : std::runtime_error {
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input data; row is 1-based and counts the header as row 1.
struct parse_error : std::runtime_error {
    std::size_t row;
    parse_error(const std::string& msg, std::size_t row_index)
        : std::runtime_error(msg), row(row_index) {}
};

// Shortest decimal string that recovers the exact binary value.
std::string format_number(double v);

// Fixed significant digits, %g style: trailing zeros stripped, locale-free.
std::string format_number(double v, int significant_digits);

// POTDYN_DATA_DIR if set, else the build-time bundled directory, else "data".
std::string default_data_dir();

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;  // each row has header.size() fields
};

// Comma-separated, UTF-8, header required. Fields must not contain commas
// or quotes; every row must match the header width.
CsvTable read_csv(const std::string& path);
CsvTable parse_csv(const std::string& text, const std::string& source_name);

// Strict double parse of one field; the whole field must be consumed.
double parse_field(const std::string& field, std::size_t row, const std::string& column);

}  // namespace potdyn
