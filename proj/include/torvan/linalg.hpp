#pragma once

#include <vector>

#include "torvan/rational.hpp"

namespace torvan {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;
using IntVec = std::vector<Int>;
using IntMat = std::vector<std::vector<Int>>;

RatMat to_rat(const IntMat& m);
RatVec to_rat(const IntVec& v);

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);

// Gaussian elimination over Q; pivot choice is first nonzero entry in
// column order, so all outputs are deterministic.
int rank(RatMat m);
Rat det(RatMat m);  // square only

// Solves A x = b for square nonsingular A; throws internal_error if singular.
RatVec solve(RatMat a, RatVec b);

// Basis of { x : A x = 0 }, one vector per free column, in column order.
std::vector<RatVec> kernel_basis(RatMat a, int ncols);

// gcd of all k x k minors of an integer matrix with k = min(rows, cols);
// used for the lattice-basis test on simplicial cone generators.
Int gcd_maximal_minors(const IntMat& m);

}  // namespace torvan
