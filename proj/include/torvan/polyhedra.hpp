#pragma once

#include <vector>

#include "torvan/linalg.hpp"
#include "torvan/rational.hpp"

namespace torvan {

// One linear condition  a . x  (rel)  c  over Q^n.
struct LinCond {
    RatVec a;
    Rat c;
    enum Rel { GE, GT, EQ } rel = GE;
};

// Real feasibility of a mixed weak/strict system, decided by exact
// Fourier-Motzkin elimination. Equalities are split into two weak
// inequalities before elimination.
bool feasible(std::vector<LinCond> conds, int nvars);

// Is { y : rows . y >= 0 } equal to {0}?  Decided exactly: a nontrivial
// pointed cone has an extreme ray cut out by n-1 independent tight rows,
// and a non-pointed cone has a nonzero kernel vector.
bool recession_trivial(const RatMat& rows, int nvars);

// All integer points of { x : a_i . x >= c_i } (weak inequalities only).
// The region must be bounded; an unbounded direction raises internal_error.
// Output is in lexicographic order.
std::vector<IntVec> lattice_points(const std::vector<LinCond>& conds, int nvars);

Int count_lattice_points(const std::vector<LinCond>& conds, int nvars);

}  // namespace torvan
