#include "bshell/subset.hpp"

#include <sstream>

namespace bshell {

std::string subset_key(const GroundSet& g, Subset s) {
  std::string out;
  bool first = true;
  for (int i = 0; i < g.size(); ++i) {
    if (!(s & (Subset{1} << i))) continue;
    if (!first) out += ',';
    out += g.labels[i];
    first = false;
  }
  return out;
}

std::string subset_pretty(const GroundSet& g, Subset s) {
  return "{" + subset_key(g, s) + "}";
}

Subset subset_from_key(const GroundSet& g, const std::string& key) {
  Subset s = 0;
  if (key.empty()) return s;
  std::stringstream ss(key);
  std::string label;
  while (std::getline(ss, label, ',')) {
    int idx = g.index_of(label);
    if (idx < 0) throw InputError("unknown ground element label '" + label + "'");
    s |= Subset{1} << idx;
  }
  return s;
}

}  // namespace bshell
