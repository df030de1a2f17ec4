#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bshell/nested.hpp"
#include "bshell/rational.hpp"

namespace bshell {

// One exact rational weight per building-set member (the vector c that
// determines the normal complex). Cubicality is a verified property, never
// assumed at construction.
struct CubicalFunction {
  std::map<Subset, Rat> values;

  const Rat& at(Subset x) const;
  bool total_on(const BuildingSet& b) const;
};

// |N| x |N| matrix with entries |X n Y| for X, Y in the facet, in canonical
// flat order. Invertible exactly when the generators e_X are independent.
std::vector<std::vector<Rat>> gram_matrix(const NestedSet& n);

// Exact solve of A x = rhs by Gaussian elimination; throws SingularGram.
RatVec solve_linear(std::vector<std::vector<Rat>> a, RatVec rhs);

struct VertexSolution {
  NestedSet facet;
  std::vector<Rat> lambda;  // aligned with facet.flats
  RatVec point;             // sum of lambda_X e_X, indexed by ground position
  bool interior = false;    // lambda_X > 0 for every non-maximal X
};

// Solves <v, e_X> = c_X over the cone generators of the facet. Positivity of
// the non-maximal coefficients is exactly relative-interior membership.
VertexSolution vertex(const BuildingSet& b, const NestedSet& n, const CubicalFunction& c);

// Vertices for a whole facet list. threads = 1 runs the serial reference
// loop; threads > 1 uses the OpenMP kernel; 0 resolves BSHELL_THREADS.
std::vector<VertexSolution> facet_vertices(const BuildingSet& b, const CubicalFunction& c,
                                           const std::vector<NestedSet>& fs, int threads = 1);

struct CubicalFailure {
  NestedSet facet;
  Subset flat;
  Rat lambda;
};
struct CubicalReport {
  bool ok = false;
  std::vector<CubicalFailure> failures;
};

CubicalReport is_cubical(const BuildingSet& b, const CubicalFunction& c, int threads = 1);
CubicalReport is_cubical(const BuildingSet& b, const CubicalFunction& c,
                         const std::vector<NestedSet>& fs, int threads = 1);

// Returns a verified cubical c. Candidate families, in order:
//   (i)  c_X = |X| (|E| - |X|)
//   (ii) c_X = a^|E| - a^|X| with a = |E| + 1
//   (iii) seeded small-rational perturbations of (i)
// Every candidate is verified with is_cubical before being returned; throws
// SearchExhausted with the attempt count if none passes.
CubicalFunction default_cubical(const BuildingSet& b, std::uint64_t seed);

// tau_Z(c) on product_building_set(b, Z):
//   value at W is c_{W u Z} - c_Z when W u Z is a member of B, else c_W.
CubicalFunction restrict_cubical(const BuildingSet& b, Subset z, const CubicalFunction& c,
                                 const BuildingSet& product);
CubicalFunction restrict_cubical(const BuildingSet& b, Subset z, const CubicalFunction& c);

struct LexVectorReport {
  bool ok = false;
  std::optional<std::pair<NestedSet, NestedSet>> counterexample;
};

// gamma realizes the coordinatewise lexicographic comparison on facet
// vertices: <v_N, gamma> > <v_N', gamma> iff v_N >_lex v_N'. Throws
// DuplicateVertices when two facets share a point.
LexVectorReport is_lexicographic_vector(const BuildingSet& b, const CubicalFunction& c,
                                        const RatVec& gamma);

}  // namespace bshell
