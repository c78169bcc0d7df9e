#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace entrolab {

/// Flat key=value settings. Lines starting with '#' and blank lines are
/// ignored; later keys override earlier ones.
class Config {
public:
    static Config parse(std::string_view text);
    /// Throws ParseError if the file cannot be read or a line is malformed.
    static Config load(const std::string& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    void set(const std::string& key, std::string value) { values_[key] = std::move(value); }
    std::string get(const std::string& key, const std::string& fallback) const;
    std::uint64_t get_uint(const std::string& key, std::uint64_t fallback) const;

    const std::map<std::string, std::string>& values() const noexcept { return values_; }

private:
    std::map<std::string, std::string> values_;
};

}  // namespace entrolab
