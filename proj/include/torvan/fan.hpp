#pragma once

#include <string>
#include <vector>

#include "torvan/linalg.hpp"
#include "torvan/rational.hpp"

namespace torvan {

// Combinatorial model of a rational simplicial fan: primitive ray
// generators plus the ray-index sets of the maximal cones. Instances are
// validated on construction and immutable afterwards, so they are safe to
// share across threads.
class Fan {
  public:
    // Throws contract_error on any structural defect: non-primitive or
    // duplicate rays, bad indices, linearly dependent cone generators,
    // duplicate cones, rays not used by any cone.
    static Fan make(int dim, IntMat rays, std::vector<std::vector<int>> max_cones);

    int dim() const { return dim_; }
    int num_rays() const { return static_cast<int>(rays_.size()); }
    const IntMat& rays() const { return rays_; }
    const IntVec& ray(int i) const { return rays_[i]; }
    // sorted index sets, list sorted lexicographically
    const std::vector<std::vector<int>>& max_cones() const { return cones_; }

    bool operator==(const Fan& o) const {
        return dim_ == o.dim_ && rays_ == o.rays_ && cones_ == o.cones_;
    }

  private:
    Fan() = default;
    int dim_ = 0;
    IntMat rays_;
    std::vector<std::vector<int>> cones_;
};

enum class StandardFamily { Pn, PnxPm, Hirzebruch };

// Standard fans with a fixed, documented ray order:
//   Pn(n):          e_1..e_n, then -(e_1+...+e_n); cones = all n-subsets.
//   PnxPm(n1, n2):  the Pn(n1) rays in the first block of coordinates,
//                   then the Pn(n2) rays in the second; cones = products.
//   Hirzebruch(r):  (1,0), (0,1), (-1,r), (0,-1);
//                   cones {0,1}, {1,2}, {2,3}, {0,3}.
Fan build_standard(StandardFamily family, const std::vector<int>& params);

// every maximal cone's generators extend to a lattice basis
bool is_smooth(const Fan& fan);

// ridge-pairing criterion for pure simplicial fans: every (n-1)-face lies
// in exactly two maximal cones and the wall-adjacency graph is connected
bool is_complete(const Fan& fan);

// (f_0, ..., f_n) with f_k = number of k-dimensional cones; f_0 = 1
std::vector<long> f_vector(const Fan& fan);

// pairwise proper-intersection check (cone(S) meet cone(T) must be the
// common face cone(S con T)); throws contract_error on the first violation
void validate_intersections(const Fan& fan);

void require_smooth_complete(const Fan& fan, const std::string& op);

}  // namespace torvan
