#pragma once

#include <vector>

#include "torvan/rational.hpp"

namespace torvan {

// Reduced rational Betti numbers of the abstract simplicial complex whose
// maximal faces are given (vertices are whatever integers appear in them).
// Returns b with b[i] = dim H~_{i-1}; b[0] = 1 exactly for the empty
// complex { {} }. Over Q homology and cohomology ranks agree, which is all
// the graded-piece bookkeeping needs.
std::vector<long> reduced_betti(const std::vector<std::vector<int>>& facets);

bool has_reduced_homology(const std::vector<std::vector<int>>& facets);

}  // namespace torvan
