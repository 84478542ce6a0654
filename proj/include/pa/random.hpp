#pragma once

#include <cstdint>
#include <random>

#include <vector>

#include "pa/element.hpp"
#include "pa/tower.hpp"

namespace pa {

// Seeded generators shared by the suites. Small integer coefficients keep
// symbolic arithmetic cheap; float rings get the same integers.

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi);
Scalar rand_scalar(const Ring& ring, Rng& rng);
/// Between 1 and max_terms distinct diagrams with nonzero coefficients.
Element rand_element(const Ring& ring, int n, Rng& rng, int max_terms = 3);
/// Every basis diagram gets a coefficient in [-3, 3].
Element rand_dense(const Ring& ring, int n, Rng& rng);
/// One or two components with colours in [k, max_colour].
GradedElement rand_graded(const Ring& ring, int k, int max_colour, Rng& rng, int max_terms = 2);
/// A sorted `size`-subset of {1..n}.
std::vector<int> rand_subset(int n, int size, Rng& rng);

}  // namespace pa
