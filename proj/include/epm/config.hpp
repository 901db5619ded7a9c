#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace epm {

// Flat `key = value` configuration file. '#' starts a comment; blank lines
// ignored. Section markers like `[burst]` open a repeated block whose keys are
// collected separately (used by simulation scenarios).
class Config {
public:
    Config() = default;
    static Config load(const std::string& path);
    static Config from_string(const std::string& text);

    bool has(const std::string& key) const { return values_.count(key) > 0; }
    std::string get_str(const std::string& key, const std::string& fallback) const;
    std::string require_str(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    using Block = std::map<std::string, std::string>;
    const std::vector<Block>& blocks(const std::string& section) const;

    void set(const std::string& key, const std::string& value) { values_[key] = value; }

private:
    std::map<std::string, std::string> values_;
    std::map<std::string, std::vector<Block>> sections_;
    static const std::vector<Block> kNoBlocks;
};

}  // namespace epm
