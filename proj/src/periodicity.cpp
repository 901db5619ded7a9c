#include "epm/periodicity.hpp"

#include <stdexcept>

namespace epm {

bool PeriodicityProfile::defined(const std::string& stock, int minute) const {
    return gamma_.count({stock, minute}) > 0;
}

double PeriodicityProfile::gamma(const std::string& stock, int minute) const {
    auto it = gamma_.find({stock, minute});
    if (it == gamma_.end())
        throw std::out_of_range("periodicity factor undefined for " + stock + " minute " +
                                std::to_string(minute));
    return it->second;
}

void PeriodicityProfile::set(const std::string& stock, int minute, double g) {
    gamma_[{stock, minute}] = g;
}

PeriodicityProfile periodicity_profile(const std::string& stock,
                                       const std::vector<std::map<int, double>>& raw_by_day) {
    PeriodicityProfile profile;
    std::map<int, std::pair<double, int>> acc;  // minute -> (sum, count)
    for (const auto& day : raw_by_day)
        for (const auto& [minute, value] : day) {
            acc[minute].first += value;
            acc[minute].second += 1;
        }
    for (const auto& [minute, sc] : acc) {
        double mean = sc.first / sc.second;
        if (mean == 0.0) continue;  // sentinel: minute excluded downstream
        profile.set(stock, minute, 1.0 / mean);
    }
    return profile;
}

PeriodicityProfile periodicity_profile_all(
    const std::map<std::string, std::vector<std::map<int, double>>>& raw_by_stock_day) {
    PeriodicityProfile merged;
    for (const auto& [stock, days] : raw_by_stock_day) {
        PeriodicityProfile p = periodicity_profile(stock, days);
        for (const auto& [minute, _] : days.empty() ? std::map<int, double>{} : days.front()) {
            (void)minute;
        }
        // Re-walk all minutes seen for this stock.
        std::map<int, bool> minutes;
        for (const auto& day : days)
            for (const auto& [minute, value] : day) {
                (void)value;
                minutes[minute] = true;
            }
        for (const auto& [minute, _] : minutes)
            if (p.defined(stock, minute)) merged.set(stock, minute, p.gamma(stock, minute));
    }
    return merged;
}

}  // namespace epm
