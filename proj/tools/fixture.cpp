#include "fixture.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cfcli {

namespace {
const char* const kKeys[] = {"cfe", "degrees", "leading coefficients"};
}

Fixture Fixture::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read fixture " + path);
  Fixture fx;
  std::string line;
  while (std::getline(in, line)) {
    for (const char* key : kKeys) {
      const std::string k = std::string(key) + " ";
      if (line.rfind(k, 0) == 0) fx.lines[key] = line.substr(k.size());
    }
  }
  return fx;
}

const std::string& Fixture::at(const std::string& key) const {
  auto it = lines.find(key);
  if (it == lines.end()) throw std::invalid_argument("fixture has no '" + key + "' line");
  return it->second;
}

std::vector<std::int64_t> Fixture::integers(const std::string& key) const {
  std::string s = at(key);
  for (char& c : s) {
    if (c == '[' || c == ']' || c == ',') c = ' ';
  }
  std::istringstream in(s);
  std::vector<std::int64_t> out;
  std::int64_t v;
  while (in >> v) out.push_back(v);
  return out;
}

std::size_t Fixture::entries(const std::string& key) const {
  const std::string& s = at(key);
  std::size_t n = 1;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 1) ++n;
  }
  return s.find_first_not_of("[] ") == std::string::npos ? 0 : n;
}

}  // namespace cfcli
