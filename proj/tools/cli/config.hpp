#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace consensus_lab::cli {

struct ConfigEntry {
  std::string key;
  std::string value;
  int line = 0;
};

// Flat `key = value` lines; `#` starts a comment, blank lines are ignored.
// Keys are the long option names of the chosen subcommand without dashes.
// Throws consensus_lab::ParseError on a malformed line or repeated key.
std::vector<ConfigEntry> parse_config_text(std::string_view text, const std::string& source = "");

std::vector<ConfigEntry> read_config_file(const std::filesystem::path& path);

}  // namespace consensus_lab::cli
