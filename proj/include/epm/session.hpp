#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace epm {

// All intraday timestamps are integer microseconds since the session open.
using Micros = std::int64_t;

constexpr Micros kMicrosPerSecond = 1'000'000;
constexpr Micros kMicrosPerMinute = 60 * kMicrosPerSecond;

inline double to_seconds(Micros t) { return static_cast<double>(t) / kMicrosPerSecond; }
inline Micros seconds_to_micros(double s) { return static_cast<Micros>(s * kMicrosPerSecond + (s >= 0 ? 0.5 : -0.5)); }

// Parses "HH:MM:SS" into microseconds since midnight.
Micros parse_clock(const std::string& hms);
std::string format_clock(Micros since_midnight);

// Trading session. `open_us`/`close_us`/`analysis_start_us` are wall-clock
// microseconds since midnight; event timestamps count from `open_us`.
struct SessionSpec {
    Micros open_us = 0;
    Micros close_us = 0;
    Micros analysis_start_us = 0;

    Micros length_us() const { return close_us - open_us; }
    // Offset of the first detector evaluation relative to the open.
    Micros analysis_offset_us() const { return analysis_start_us - open_us; }

    void validate() const {
        if (!(open_us < analysis_start_us && analysis_start_us < close_us))
            throw std::invalid_argument("session: requires open < analysis_start < close");
    }

    static SessionSpec from_clock(const std::string& open, const std::string& close,
                                  const std::string& analysis_start);
    // Paper-calendar default: 09:00 open, 17:30 close, analysis from 09:30.
    static SessionSpec standard();
};

// Uniform partition of the session into left-open right-closed intervals
// (t - step, t]. A trailing partial interval is dropped.
class SessionGrid {
public:
    SessionGrid(const SessionSpec& session, Micros step_us);

    int size() const { return n_; }
    Micros step_us() const { return step_us_; }
    // Right edge of interval k, as an offset from the session open.
    Micros right_edge(int k) const { return static_cast<Micros>(k + 1) * step_us_; }
    Micros left_edge(int k) const { return static_cast<Micros>(k) * step_us_; }

    // Interval owning timestamp `ts` (offset from open). Events exactly on a
    // boundary belong to the interval they close; an event at the open is
    // folded into the first interval. Returns -1 when `ts` falls beyond the
    // last full interval.
    int interval_of(Micros ts) const {
        if (ts <= 0) return ts == 0 ? 0 : -1;
        Micros k = (ts + step_us_ - 1) / step_us_ - 1;
        return k < n_ ? static_cast<int>(k) : -1;
    }

private:
    Micros step_us_;
    int n_;
};

// Calendar dates travel as packed YYYYMMDD integers.
bool valid_date(int yyyymmdd);
int next_date(int yyyymmdd);
int add_days(int yyyymmdd, int days);

}  // namespace epm
