#include "epm/session.hpp"

#include <array>
#include <cstdio>

namespace epm {

Micros parse_clock(const std::string& hms) {
    int h = 0, m = 0, s = 0;
    if (std::sscanf(hms.c_str(), "%d:%d:%d", &h, &m, &s) != 3 || h < 0 || h > 23 ||
        m < 0 || m > 59 || s < 0 || s > 59)
        throw std::invalid_argument("bad clock time: " + hms);
    return ((static_cast<Micros>(h) * 60 + m) * 60 + s) * kMicrosPerSecond;
}

std::string format_clock(Micros since_midnight) {
    auto total_s = since_midnight / kMicrosPerSecond;
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%02d:%02d:%02d", static_cast<int>(total_s / 3600),
                  static_cast<int>((total_s / 60) % 60), static_cast<int>(total_s % 60));
    return buf;
}

SessionSpec SessionSpec::from_clock(const std::string& open, const std::string& close,
                                    const std::string& analysis_start) {
    SessionSpec s;
    s.open_us = parse_clock(open);
    s.close_us = parse_clock(close);
    s.analysis_start_us = parse_clock(analysis_start);
    s.validate();
    return s;
}

SessionSpec SessionSpec::standard() {
    return from_clock("09:00:00", "17:30:00", "09:30:00");
}

SessionGrid::SessionGrid(const SessionSpec& session, Micros step_us) : step_us_(step_us) {
    if (step_us <= 0) throw std::invalid_argument("grid: step must be positive");
    n_ = static_cast<int>(session.length_us() / step_us);
    if (n_ <= 0) throw std::invalid_argument("grid: step exceeds session length");
}

namespace {

int days_in_month(int y, int m) {
    static constexpr std::array<int, 12> kDays = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
    return m == 2 && leap ? 29 : kDays[m - 1];
}

}  // namespace

bool valid_date(int yyyymmdd) {
    int y = yyyymmdd / 10000, m = (yyyymmdd / 100) % 100, d = yyyymmdd % 100;
    return y >= 1900 && m >= 1 && m <= 12 && d >= 1 && d <= days_in_month(y, m);
}

int next_date(int yyyymmdd) {
    int y = yyyymmdd / 10000, m = (yyyymmdd / 100) % 100, d = yyyymmdd % 100;
    if (++d > days_in_month(y, m)) {
        d = 1;
        if (++m > 12) { m = 1; ++y; }
    }
    return y * 10000 + m * 100 + d;
}

int add_days(int yyyymmdd, int days) {
    int d = yyyymmdd;
    for (int i = 0; i < days; ++i) d = next_date(d);
    return d;
}

}  // namespace epm
