#pragma once

#include <array>
#include <string>
#include <string_view>

namespace epm {

// Trader taxonomy. The nine named categories are mutually exclusive; records
// with any other label fall into Other, which is kept in market totals but
// excluded from per-category analytics.
enum class TraderCategory : int {
    PureHftMm = 0,
    PureHftOwn,
    PureClient,
    IbHftMm,
    IbHftOwn,
    IbHftParent,
    IbClient,
    NonHftClient,
    NonHftOwn,
    Other,
};

constexpr int kNumCategories = 10;       // including Other
constexpr int kNumNamedCategories = 9;   // excluding Other

// Designated market makers: the two MM categories.
constexpr bool is_dmm(TraderCategory c) {
    return c == TraderCategory::PureHftMm || c == TraderCategory::IbHftMm;
}

constexpr bool is_non_hft(TraderCategory c) {
    return c == TraderCategory::NonHftClient || c == TraderCategory::NonHftOwn;
}

std::string_view category_name(TraderCategory c);
// Unknown labels map to Other.
TraderCategory parse_category(std::string_view name);

inline std::array<TraderCategory, kNumNamedCategories> named_categories() {
    return {TraderCategory::PureHftMm,   TraderCategory::PureHftOwn,
            TraderCategory::PureClient,  TraderCategory::IbHftMm,
            TraderCategory::IbHftOwn,    TraderCategory::IbHftParent,
            TraderCategory::IbClient,    TraderCategory::NonHftClient,
            TraderCategory::NonHftOwn};
}

inline std::array<TraderCategory, kNumCategories> all_categories() {
    return {TraderCategory::PureHftMm,   TraderCategory::PureHftOwn,
            TraderCategory::PureClient,  TraderCategory::IbHftMm,
            TraderCategory::IbHftOwn,    TraderCategory::IbHftParent,
            TraderCategory::IbClient,    TraderCategory::NonHftClient,
            TraderCategory::NonHftOwn,   TraderCategory::Other};
}

// Regression grouping: the nine categories with NON-HFT merged into one.
enum class VarGroup : int {
    PureHftMm = 0,
    PureHftOwn,
    PureClient,
    IbHftMm,
    IbHftOwn,
    IbHftParent,
    IbClient,
    NonHft,
};

constexpr int kNumVarGroups = 8;

// Other has no group; callers must skip it.
constexpr VarGroup var_group(TraderCategory c) {
    switch (c) {
        case TraderCategory::NonHftClient:
        case TraderCategory::NonHftOwn: return VarGroup::NonHft;
        default: return static_cast<VarGroup>(static_cast<int>(c));
    }
}

std::string_view var_group_name(VarGroup g);

}  // namespace epm
