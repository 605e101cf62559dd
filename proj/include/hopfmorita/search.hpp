#pragma once

#include "hopfmorita/linalg.hpp"

#include <cstdint>
#include <vector>

namespace hm {

// Outcome of a search for an element with a non-linear property (invertible,
// unitary, isometric) inside a computed linear solution space. `none` is only
// reported when the solution space itself rules the element out.
enum class SearchOutcome { found, none, undetermined };
const char* to_string(SearchOutcome o);

// Candidates for a "generic" element of span(basis): the basis vectors
// themselves, then `draws` combinations with small Gaussian-integer
// coefficients from a generator seeded with `seed`. Deterministic.
std::vector<Vec> sample_span(const std::vector<Vec>& basis, std::uint64_t seed, std::size_t draws = 64);

// Combinations of the basis with coefficients in {0, 1, i, -1, -i}, all of
// them for at most `max_exhaustive` vectors (the zero vector excluded),
// followed by sample_span(basis, seed).
std::vector<Vec> unit_root_combinations(const std::vector<Vec>& basis, std::uint64_t seed,
                                        std::size_t max_exhaustive = 4);

}  // namespace hm
