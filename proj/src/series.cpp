#include "epm/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace epm {

void PriceSeries::validate() const {
    if (ts.size() != logp.size()) throw std::logic_error("price series: length mismatch");
    for (size_t i = 0; i < ts.size(); ++i) {
        if (!std::isfinite(logp[i])) throw std::invalid_argument("price series: non-finite log-price");
        if (i > 0 && ts[i] <= ts[i - 1])
            throw std::invalid_argument("price series: instants must be strictly increasing");
    }
}

PriceSeries series_from_trades(const DayTape& tape) {
    PriceSeries s;
    s.ts.reserve(tape.trades.size());
    s.logp.reserve(tape.trades.size());
    // Trades sharing a microsecond stamp keep file order; the last one at each
    // instant is the prevailing transaction price.
    size_t i = 0;
    while (i < tape.trades.size()) {
        size_t j = i;
        while (j + 1 < tape.trades.size() && tape.trades[j + 1].ts == tape.trades[i].ts) ++j;
        s.ts.push_back(tape.trades[j].ts);
        s.logp.push_back(std::log(tape.trades[j].price));
        i = j + 1;
    }
    return s;
}

PriceSeries preaverage(const PriceSeries& raw, int window) {
    if (window < 1) throw std::invalid_argument("preaverage: window must be >= 1");
    const size_t n = raw.size();
    if (n < static_cast<size_t>(window))
        throw std::invalid_argument("preaverage: series shorter than window");
    if (window == 1) {
        PriceSeries out = raw;
        out.preaveraged = true;
        return out;
    }

    // Triangular kernel g(x) = min(x, 1-x) sampled at j/(window+1), j = 1..window,
    // so every price in the window carries positive weight.
    std::vector<double> w(window);
    double wsum = 0;
    for (int j = 1; j <= window; ++j) {
        double x = static_cast<double>(j) / (window + 1);
        w[j - 1] = std::min(x, 1.0 - x);
        wsum += w[j - 1];
    }
    for (auto& v : w) v /= wsum;

    PriceSeries out;
    out.preaveraged = true;
    out.ts.reserve(n - window + 1);
    out.logp.reserve(n - window + 1);
    for (size_t k = 0; k + window <= n; ++k) {
        double acc = 0;
        for (int j = 0; j < window; ++j) acc += w[j] * raw.logp[k + j];
        out.ts.push_back(raw.ts[k + window - 1]);
        out.logp.push_back(acc);
    }
    return out;
}

ReturnSeries log_returns(const PriceSeries& series) {
    if (series.size() < 2) throw std::invalid_argument("log_returns: need at least 2 observations");
    ReturnSeries rs;
    const size_t n = series.size();
    rs.t_left.reserve(n - 1);
    rs.t_right.reserve(n - 1);
    rs.r.reserve(n - 1);
    for (size_t i = 1; i < n; ++i) {
        rs.t_left.push_back(series.ts[i - 1]);
        rs.t_right.push_back(series.ts[i]);
        rs.r.push_back(series.logp[i] - series.logp[i - 1]);
    }
    return rs;
}

bool has_price_at_or_before(const PriceSeries& series, Micros t) {
    return !series.ts.empty() && series.ts.front() <= t;
}

double price_at_or_before(const PriceSeries& series, Micros t) {
    auto it = std::upper_bound(series.ts.begin(), series.ts.end(), t);
    if (it == series.ts.begin()) throw std::out_of_range("no price at or before requested instant");
    return series.logp[static_cast<size_t>(it - series.ts.begin()) - 1];
}

}  // namespace epm
