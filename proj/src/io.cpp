#include "potdyn/io.hpp"

#include <array>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#ifndef POTDYN_BUNDLED_DATA_DIR
#define POTDYN_BUNDLED_DATA_DIR "data"
#endif

namespace potdyn {

std::string format_number(double v) {
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

std::string format_number(double v, int significant_digits) {
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                             std::chars_format::general, significant_digits);
    return std::string(buf.data(), res.ptr);
}

std::string default_data_dir() {
    if (const char* env = std::getenv("POTDYN_DATA_DIR"); env && *env) return env;
    return POTDYN_BUNDLED_DATA_DIR;
}

static std::vector<std::string> split_row(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

CsvTable parse_csv(const std::string& text, const std::string& source_name) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_row(line);
        if (table.header.empty()) {
            table.header = std::move(fields);
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw parse_error(source_name + ": row " + std::to_string(row) + " has " +
                                  std::to_string(fields.size()) + " fields, expected " +
                                  std::to_string(table.header.size()),
                              row);
        }
        table.rows.push_back(std::move(fields));
    }
    if (table.header.empty())
        throw parse_error(source_name + ": missing header row", 1);
    return table;
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), path);
}

double parse_field(const std::string& field, std::size_t row, const std::string& column) {
    double value = 0.0;
    const char* first = field.data();
    const char* last = first + field.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc{} || res.ptr != last) {
        throw parse_error("row " + std::to_string(row) + ", column " + column +
                              ": not a number: '" + field + "'",
                          row);
    }
    return value;
}

}  // namespace potdyn
