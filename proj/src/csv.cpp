#include "etfsim/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "etfsim/errors.hpp"

namespace etfsim::csv {

namespace {

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

[[noreturn]] void fail(const Table& t, std::size_t row, std::size_t col, const std::string& msg) {
    std::ostringstream os;
    os << t.path << ":" << t.line_numbers[row] << ": column '" << t.header[col] << "': " << msg
       << " (value '" << t.rows[row][col] << "')";
    throw Error(os.str());
}

}  // namespace

Table read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    Table t;
    t.path = path;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        auto fields = split_line(line);
        if (!have_header) {
            t.header = std::move(fields);
            have_header = true;
            continue;
        }
        if (fields.size() != t.header.size()) {
            std::ostringstream os;
            os << path << ":" << line_no << ": expected " << t.header.size() << " fields, got "
               << fields.size();
            throw Error(os.str());
        }
        t.rows.push_back(std::move(fields));
        t.line_numbers.push_back(line_no);
    }
    if (!have_header) {
        throw Error(path + ": missing header row");
    }
    return t;
}

Table read(const std::string& path, const std::vector<std::string>& expected_header) {
    Table t = read(path);
    if (t.header != expected_header) {
        std::ostringstream os;
        os << path << ": bad header '" << join_row(t.header) << "', expected '"
           << join_row(expected_header) << "'";
        throw Error(os.str());
    }
    return t;
}

double parse_double(const Table& t, std::size_t row, std::size_t col) {
    const std::string& s = t.rows[row][col];
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        fail(t, row, col, "not a number");
    }
    return v;
}

std::int64_t parse_int64(const Table& t, std::size_t row, std::size_t col) {
    const std::string& s = t.rows[row][col];
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        fail(t, row, col, "not an integer");
    }
    return v;
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string join_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) {
            out.push_back(',');
        }
        out += fields[i];
    }
    return out;
}

}  // namespace etfsim::csv
