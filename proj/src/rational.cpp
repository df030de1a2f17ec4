#include "bshell/rational.hpp"

#include <stdexcept>

#include "bshell/errors.hpp"

namespace bshell {

std::string rat_to_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  try {
    Rat r(s, 10);
    if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational literal '" + s + "'");
  }
}

Rat inner_product(const RatVec& a, const RatVec& b) {
  Rat acc = 0;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) acc += a[i] * b[i];
  return acc;
}

int lex_compare(const RatVec& a, const RatVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

}  // namespace bshell
