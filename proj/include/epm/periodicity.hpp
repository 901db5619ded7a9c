#pragma once

#include <map>
#include <string>
#include <vector>

namespace epm {

// Intraday periodicity factor for selling pressure, per (stock, minute-of-day).
// gamma is the signed reciprocal of the across-day mean of the raw values, so
// gamma * mean == 1 for every minute with data. Minutes whose mean is exactly
// zero carry no factor and are excluded downstream.
class PeriodicityProfile {
public:
    bool defined(const std::string& stock, int minute) const;
    double gamma(const std::string& stock, int minute) const;  // throws if undefined

    void set(const std::string& stock, int minute, double gamma);

private:
    std::map<std::pair<std::string, int>, double> gamma_;
};

// raw_by_day: for one stock, raw selling-pressure values per day keyed by
// minute-of-day. Minutes missing from a day simply contribute no observation.
PeriodicityProfile periodicity_profile(
    const std::string& stock,
    const std::vector<std::map<int, double>>& raw_by_day);

// Convenience for multi-stock input.
PeriodicityProfile periodicity_profile_all(
    const std::map<std::string, std::vector<std::map<int, double>>>& raw_by_stock_day);

}  // namespace epm
