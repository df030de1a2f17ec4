#pragma once

#include <stdexcept>
#include <string>

namespace bshell {

// Base class for all validation and pipeline errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// matroid validation
struct NotALattice : Error { using Error::Error; };
struct HasLoops : Error { using Error::Error; };
struct CoverPartitionViolation : Error { using Error::Error; };
struct LabelCollision : Error { using Error::Error; };
struct NotAFlat : Error { using Error::Error; };

// building sets
struct XNotInBuildingSet : Error { using Error::Error; };
struct XMaximal : Error { using Error::Error; };
struct CapExceeded : Error { using Error::Error; };

// nested sets and links
struct NotInLink : Error { using Error::Error; };

// geometry
struct SingularGram : Error { using Error::Error; };
struct SearchExhausted : Error { using Error::Error; };
struct NonCubical : Error { using Error::Error; };
struct DuplicateVertices : Error { using Error::Error; };

// orders
struct NotALabeling : Error { using Error::Error; };
struct MismatchedFacetSets : Error { using Error::Error; };
struct ELRequiresMaximal : Error { using Error::Error; };

// shelling
struct NotPure : Error { using Error::Error; };

// cli / io
struct InputError : Error { using Error::Error; };

}  // namespace bshell
