#pragma once

#include <utility>
#include <vector>

#include "bshell/matroid.hpp"

namespace bshell {

// Free matroid on n elements: every subset is a flat.
Matroid boolean_matroid(int n);

// Uniform matroid U_{r,n} with 1 <= r <= n (r = 0 would have loops).
Matroid uniform_matroid(int r, int n);

// The rank-3 matroid on {0,1,2,3} with flats
// {}, 0, 1, 2, 3, 01, 02, 03, 123, 0123.
Matroid broom_matroid();

// Cycle matroid of a simple graph on vertices 0..num_vertices-1. The ground
// set is the edge list, labeled "u-v" in input order. Flats are the closed
// edge sets, enumerated by iterated closure from the empty flat.
Matroid graphic_matroid(int num_vertices, const std::vector<std::pair<int, int>>& edges);

}  // namespace bshell
