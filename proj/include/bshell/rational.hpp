#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace bshell {

// Exact rational scalar. No floating point anywhere in the geometry.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

// Canonical "p" / "p/q" form (q > 0, gcd(p,q) = 1).
std::string rat_to_string(const Rat& r);
// Accepts "p" or "p/q"; throws InputError on malformed input.
Rat rat_from_string(const std::string& s);

Rat inner_product(const RatVec& a, const RatVec& b);

// Coordinatewise lexicographic comparison in ground order: -1, 0 or +1.
int lex_compare(const RatVec& a, const RatVec& b);

}  // namespace bshell
