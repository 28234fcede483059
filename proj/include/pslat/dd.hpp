#pragma once

#include <cstddef>
#include <vector>

#include "pslat/rational.hpp"

namespace pslat::dd {

// Cap on intermediate ray counts during double description. Initialized from
// the PSLAT_DD_CAP environment variable when set, otherwise 10^6. Exceeding
// the cap raises ResourceExceededError rather than thrashing.
std::size_t ray_cap();
void set_ray_cap(std::size_t cap);

// A cone split into its lineality space and a pointed part:
//   cone = span(lineality) + conic hull(rays).
// `lineality` is the reduced-echelon basis (primitive integer rows, positive
// pivots, ordered by pivot column); `rays` are the extreme rays of the
// quotient modulo the lineality span, reduced so their pivot coordinates
// vanish, primitive, lexicographically sorted. This pair is a canonical form:
// two cones are equal iff their GeneratorForms are identical.
struct GeneratorForm {
    std::vector<Ray> lineality;
    std::vector<Ray> rays;
};

// Extreme structure of {x : <x,n> >= 0 for every n in normals} by the
// incremental double-description method over exact rationals. Constraints are
// processed in canonical sorted order, so the run is deterministic.
GeneratorForm enumerate_generators(std::vector<Ray> normals);

// Flat canonical generator list: both signs of each lineality basis vector
// plus the pointed-part rays, sorted lexicographically.
std::vector<Ray> flatten(const GeneratorForm& form);

// Canonical irredundant generating set for cone(gens): primitive
// normalization, dedup, lineality extraction, reduction modulo the lineality
// span, and removal of conically redundant members. Empty input stays empty
// (the zero cone).
std::vector<Ray> canonicalize_generators(std::vector<Ray> gens);

// Dimension of the linear span of the given vectors.
std::size_t rank(const std::vector<Ray>& vectors);

}  // namespace pslat::dd
