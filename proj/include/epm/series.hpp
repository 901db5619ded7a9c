#pragma once

#include <vector>

#include "epm/events.hpp"

namespace epm {

// Log-price observations at strictly increasing instants within one session.
struct PriceSeries {
    std::vector<Micros> ts;
    std::vector<double> logp;
    bool preaveraged = false;

    size_t size() const { return ts.size(); }
    void validate() const;
};

// Transaction log-prices from a tape. Trades sharing a microsecond stamp keep
// file order and the last one prevails, so instants stay strictly increasing.
PriceSeries series_from_trades(const DayTape& tape);

// Local weighted average of `window` consecutive log-prices with triangular
// weights, stamped at the window's final instant. window = 1 is the identity.
PriceSeries preaverage(const PriceSeries& raw, int window);

struct ReturnSeries {
    std::vector<Micros> t_left;   // left endpoint of each return interval
    std::vector<Micros> t_right;  // right endpoint (the return's own instant)
    std::vector<double> r;        // log-return over (t_left, t_right]

    size_t size() const { return r.size(); }
};

ReturnSeries log_returns(const PriceSeries& series);

// Last log-price at or before `t`; throws if the series starts after `t`.
double price_at_or_before(const PriceSeries& series, Micros t);
bool has_price_at_or_before(const PriceSeries& series, Micros t);

}  // namespace epm
