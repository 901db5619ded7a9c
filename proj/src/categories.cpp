#include "epm/categories.hpp"

namespace epm {

namespace {
constexpr std::array<std::string_view, kNumCategories> kNames = {
    "PURE_HFT_MM", "PURE_HFT_OWN", "PURE_CLIENT",    "IB_HFT_MM",   "IB_HFT_OWN",
    "IB_HFT_PARENT", "IB_CLIENT",  "NON_HFT_CLIENT", "NON_HFT_OWN", "OTHER"};

constexpr std::array<std::string_view, kNumVarGroups> kGroupNames = {
    "PURE_HFT_MM", "PURE_HFT_OWN", "PURE_CLIENT", "IB_HFT_MM",
    "IB_HFT_OWN",  "IB_HFT_PARENT", "IB_CLIENT",  "NON_HFT"};
}  // namespace

std::string_view category_name(TraderCategory c) {
    return kNames[static_cast<int>(c)];
}

TraderCategory parse_category(std::string_view name) {
    for (int i = 0; i < kNumNamedCategories; ++i)
        if (name == kNames[i]) return static_cast<TraderCategory>(i);
    return TraderCategory::Other;
}

std::string_view var_group_name(VarGroup g) {
    return kGroupNames[static_cast<int>(g)];
}

}  // namespace epm
