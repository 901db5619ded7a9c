#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace epm {

// Minimal CSV support: comma-separated, no quoting (none of our schemas needs
// it), line numbers tracked for error reporting.

struct CsvError : std::runtime_error {
    CsvError(const std::string& file, int line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what) {}
};

class CsvReader {
public:
    explicit CsvReader(const std::string& path);

    // Reads the next row into `fields`; returns false at end of file.
    bool next(std::vector<std::string_view>& fields);
    int line() const { return line_; }
    const std::string& path() const { return path_; }

    [[noreturn]] void fail(const std::string& what) const { throw CsvError(path_, line_, what); }

private:
    std::string path_;
    std::ifstream in_;
    std::string buf_;
    int line_ = 0;
};

double parse_double(std::string_view s, const CsvReader& ctx, const char* col);
std::int64_t parse_int(std::string_view s, const CsvReader& ctx, const char* col);

// Fixed-precision decimal formatting (never scientific) so that re-serialized
// files are byte-stable.
std::string format_fixed(double v, int decimals);

class CsvWriter {
public:
    explicit CsvWriter(const std::string& path);
    void row(const std::vector<std::string>& fields);
    void raw_line(const std::string& line);

private:
    std::ofstream out_;
};

}  // namespace epm
