#include "config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "consensus_lab/graph_io.hpp"

namespace consensus_lab::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<ConfigEntry> parse_config_text(std::string_view text, const std::string& source) {
  std::vector<ConfigEntry> entries;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected key=value", source);
    std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.starts_with("--")) key.remove_prefix(2);
    if (key.empty()) throw ParseError(line_no, "empty key", source);
    if (value.empty()) throw ParseError(line_no, "empty value for '" + std::string(key) + "'", source);
    if (!seen.emplace(key).second) throw ParseError(line_no, "duplicate key '" + std::string(key) + "'", source);
    entries.push_back(ConfigEntry{std::string(key), std::string(value), line_no});
  }
  return entries;
}

std::vector<ConfigEntry> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path.string());
}

}  // namespace consensus_lab::cli
