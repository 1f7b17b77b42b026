#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cfcli {

// Golden expansion file: lines "cfe [...]", "degrees [...]", "leading coefficients [...]".
struct Fixture {
  std::map<std::string, std::string> lines;

  static Fixture load(const std::string& path);
  bool has(const std::string& key) const { return lines.count(key) != 0; }
  const std::string& at(const std::string& key) const;
  std::vector<std::int64_t> integers(const std::string& key) const;
  // Number of top-level entries in a bracketed list.
  std::size_t entries(const std::string& key) const;
};

}  // namespace cfcli
