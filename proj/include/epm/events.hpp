#pragma once

#include <string>
#include <vector>

#include "epm/categories.hpp"
#include "epm/session.hpp"

namespace epm {

struct TradeEvent {
    Micros ts = 0;          // microseconds since session open
    double price = 0;       // > 0
    double quantity = 0;    // shares, > 0
    int side = 0;           // +1 buyer-initiated, -1 seller-initiated
    TraderCategory buyer = TraderCategory::Other;
    TraderCategory seller = TraderCategory::Other;

    double euro_volume() const { return price * quantity; }
    TraderCategory aggressor() const { return side > 0 ? buyer : seller; }
    TraderCategory passive() const { return side > 0 ? seller : buyer; }
    // Signed euro flow from `cat`'s perspective: positive when it buys.
    double signed_volume_for(TraderCategory cat) const {
        double v = 0;
        if (buyer == cat) v += euro_volume();
        if (seller == cat) v -= euro_volume();
        return v;
    }
};

struct QuoteEvent {
    Micros ts = 0;
    double bid = 0;
    double ask = 0;

    double midpoint() const { return 0.5 * (bid + ask); }
    double pct_spread() const { return 100.0 * (ask - bid) / midpoint(); }
};

// All events of one (stock, date), sorted by timestamp.
struct DayTape {
    std::string stock;
    int date = 0;  // YYYYMMDD
    std::vector<TradeEvent> trades;
    std::vector<QuoteEvent> quotes;
    int other_category_warnings = 0;
};

enum class Phase : int { PreEvent = 0, Early, Intermediate, Late, Recovery, None };

constexpr int kNumPhases = 5;
std::string_view phase_name(Phase p);

// One detected downward extreme price movement. The drop [t_start, t_trough]
// splits into three equal stages; the pre-event window spans 2*tau before the
// start and the recovery 3*tau after the trough.
struct EpmEvent {
    std::string stock;
    int date = 0;
    Micros t_pre_event = 0;
    Micros t_start = 0;
    Micros t_trough = 0;
    Micros t_end = 0;
    double trough_stat = 0;
    bool systematic = false;

    Micros tau_us() const { return t_trough - t_start; }
    double tau_s() const { return to_seconds(tau_us()); }

    Micros stage_boundary(int k) const {  // k = 1, 2: early/intermediate and intermediate/late cuts
        return t_start + (tau_us() * k) / 3;
    }

    // Phase owning instant `t` under the right-closed convention; the trough
    // instant belongs to the late drop, t_end to the recovery.
    Phase phase_of(Micros t) const {
        if (t <= t_pre_event || t > t_end) return Phase::None;
        if (t <= t_start) return Phase::PreEvent;
        if (t <= stage_boundary(1)) return Phase::Early;
        if (t <= stage_boundary(2)) return Phase::Intermediate;
        if (t <= t_trough) return Phase::Late;
        return Phase::Recovery;
    }

    bool window_contains(Micros t) const { return t > t_pre_event && t <= t_end; }
};

}  // namespace epm
