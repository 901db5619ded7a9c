#include "epm/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace epm {

CsvReader::CsvReader(const std::string& path) : path_(path), in_(path) {
    if (!in_) throw std::runtime_error("cannot open " + path);
}

bool CsvReader::next(std::vector<std::string_view>& fields) {
    if (!std::getline(in_, buf_)) return false;
    ++line_;
    if (!buf_.empty() && buf_.back() == '\r') buf_.pop_back();
    fields.clear();
    std::string_view row(buf_);
    size_t start = 0;
    while (true) {
        size_t comma = row.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(row.substr(start));
            break;
        }
        fields.push_back(row.substr(start, comma - start));
        start = comma + 1;
    }
    return true;
}

double parse_double(std::string_view s, const CsvReader& ctx, const char* col) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        ctx.fail(std::string("bad numeric value '") + std::string(s) + "' in column " + col);
    if (!std::isfinite(v))
        ctx.fail(std::string("non-finite value in column ") + col);
    return v;
}

std::int64_t parse_int(std::string_view s, const CsvReader& ctx, const char* col) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        ctx.fail(std::string("bad integer value '") + std::string(s) + "' in column " + col);
    return v;
}

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    // Normalize the sign of zero so equal values serialize identically.
    std::string s(buf);
    if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
    return s;
}

CsvWriter::CsvWriter(const std::string& path) : out_(path) {
    if (!out_) throw std::runtime_error("cannot open " + path + " for writing");
}

void CsvWriter::row(const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out_ << ',';
        out_ << fields[i];
    }
    out_ << '\n';
}

void CsvWriter::raw_line(const std::string& line) { out_ << line << '\n'; }

}  // namespace epm
