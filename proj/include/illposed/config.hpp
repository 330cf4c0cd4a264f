#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "illposed/experiments.hpp"

namespace illposed {

/// Flat `key = value` settings with `[section]` headers, flattened to
/// `section.key`. Comments start with '#' or ';'.
struct ConfigEntry {
  std::string key;
  std::string value;
  std::string origin;  // "file:line" or "--set"
};

std::vector<ConfigEntry> parse_config_text(const std::string& text, const std::string& source = "<config>");
std::vector<ConfigEntry> parse_config_file(const std::filesystem::path& path);
/// "key=value" from the command line.
ConfigEntry parse_override(const std::string& text);

/// Every key accepted by apply_config.
const std::vector<std::string>& known_config_keys();
/// Closest known key by edit distance.
std::string nearest_config_key(const std::string& key);

/// "8..12", "6,8,10" or "7".
std::vector<int> parse_int_list(const std::string& text);

/// Applies entries in order; unknown keys and bad values throw ConfigError.
void apply_config(ScenarioConfig& cfg, const std::vector<ConfigEntry>& entries);

}  // namespace illposed
