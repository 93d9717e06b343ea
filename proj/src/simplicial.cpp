#include "torvan/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "torvan/linalg.hpp"

namespace torvan {

namespace {

using Face = std::vector<int>;  // sorted vertex list

// all subsets of the given facets, grouped by dimension (= size - 1)
std::vector<std::vector<Face>> face_lattice(const std::vector<std::vector<int>>& facets) {
    std::set<Face> seen;
    int maxdim = -1;
    for (const auto& f : facets) {
        Face s = f;
        std::sort(s.begin(), s.end());
        const int k = static_cast<int>(s.size());
        maxdim = std::max(maxdim, k - 1);
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            Face sub;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) sub.push_back(s[i]);
            seen.insert(std::move(sub));
        }
    }
    std::vector<std::vector<Face>> by_dim(maxdim + 2);  // slot i holds faces of size i
    for (const auto& f : seen) by_dim[f.size()].push_back(f);
    return by_dim;
}

}  // namespace

std::vector<long> reduced_betti(const std::vector<std::vector<int>>& facets) {
    if (facets.empty()) return {1};  // only the empty face: H~_{-1} = Q

    auto by_size = face_lattice(facets);
    const int top = static_cast<int>(by_size.size()) - 1;  // largest face size

    // rank of each boundary map d_k : C_k -> C_{k-1}, faces indexed by size
    // (size s faces have simplicial dimension s-1; size 0 is the empty face)
    std::vector<int> bd_rank(top + 2, 0);
    for (int s = 1; s <= top; ++s) {
        const auto& lower = (s == 1) ? std::vector<Face>{Face{}} : by_size[s - 1];
        std::map<Face, int> lower_index;
        for (std::size_t i = 0; i < lower.size(); ++i) lower_index[lower[i]] = static_cast<int>(i);
        RatMat bd(by_size[s].size(), RatVec(lower.size(), Rat(0)));
        for (std::size_t col = 0; col < by_size[s].size(); ++col) {
            const Face& f = by_size[s][col];
            int sign = 1;
            for (int drop = 0; drop < s; ++drop) {
                Face sub;
                for (int i = 0; i < s; ++i)
                    if (i != drop) sub.push_back(f[i]);
                bd[col][lower_index.at(sub)] = sign;
                sign = -sign;
            }
        }
        bd_rank[s] = rank(std::move(bd));
    }

    std::vector<long> betti(top + 1, 0);
    for (int s = 0; s <= top; ++s) {
        const long dim_cs = (s == 0) ? 1 : static_cast<long>(by_size[s].size());
        betti[s] = dim_cs - bd_rank[s] - bd_rank[s + 1];
    }
    return betti;
}

bool has_reduced_homology(const std::vector<std::vector<int>>& facets) {
    for (long b : reduced_betti(facets))
        if (b != 0) return true;
    return false;
}

}  // namespace torvan
