#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bshell/io.hpp"

namespace bshell {

// Bounds for the NL-shelling search. Families select subsets of the
// standard corpus; "broom-all-orders" is the exhaustive broom sweep.
struct SearchSpec {
  std::vector<std::string> families;  // empty = whole corpus
  int max_n = 6;
  int building_all_cap = 14;
  int perm_all_max_n = 4;     // exhaustive ground orders up to this size
  int random_perms_small = 50;  // seeded random orders for n in (perm_all_max_n, 6]
  int random_perms_large = 3;   // seeded random orders beyond n = 6
};

struct SearchResult {
  std::vector<Json> findings;  // one JSON line per counterexample
  long checked = 0;
  long violations = 0;
  bool budget_exceeded = false;
};

// For each (matroid, building set, ground order) in the swept corpus, runs
// check_shelling(nl_order) and records every counterexample with full
// reproduction data. Deterministic given the seed; budget caps the number of
// checks (< 0 means unlimited), and exceeding it stops early with the
// partial log flagged via budget_exceeded.
SearchResult search_nl_shelling(const SearchSpec& spec, std::uint64_t seed, long budget,
                                int threads = 1);

// Rebuilds the instance serialized in a finding and re-runs the check;
// returns true when the logged verdict reproduces.
bool replay_finding(const Json& finding);

}  // namespace bshell
