#pragma once

#include <vector>

#include "torvan/fan.hpp"

namespace torvan {

// Torus-invariant Q-divisor: one rational coefficient per ray, in ray order.
struct TDivisor {
    RatVec coeffs;

    bool operator==(const TDivisor& o) const { return coeffs == o.coeffs; }
};

TDivisor zero_divisor(const Fan& fan);
TDivisor ray_divisor(const Fan& fan, int ray);  // the prime divisor D_ray
TDivisor principal_divisor(const Fan& fan, const IntVec& m);  // div(chi^m)
TDivisor add(const TDivisor& a, const TDivisor& b);
TDivisor scale(const Rat& c, const TDivisor& a);

bool is_integral(const TDivisor& d);
bool is_effective(const TDivisor& d);

// coefficient 1 on the support, 0 elsewhere; requires an effective divisor
TDivisor reduce(const TDivisor& d);

// -(D_1 + ... + D_d)
TDivisor canonical_divisor(const Fan& fan);

// Class coordinates live in the basis given by the ray classes [D_j] for j
// outside a fixed smooth maximal cone (see PicardGroup::basis_rays).
struct DivisorClass {
    RatVec coords;

    bool operator==(const DivisorClass& o) const { return coords == o.coords; }
};

DivisorClass class_add(const DivisorClass& a, const DivisorClass& b);
DivisorClass class_scale(const Rat& c, const DivisorClass& a);
bool class_is_integral(const DivisorClass& c);
bool class_is_zero(const DivisorClass& c);

// Presentation of Pic(X) for a smooth complete fan. The coefficient lattice
// Z^d maps onto Pic with kernel the principal divisors; reducing a divisor
// modulo principal ones until it vanishes on the pivot cone sigma_0 (the
// lexicographically first maximal cone) is an exact integer normal form
// because the sigma_0 ray block is unimodular. The surviving coefficients,
// indexed by the rays outside sigma_0, are the class coordinates.
class PicardGroup {
  public:
    explicit PicardGroup(const Fan& fan);  // throws contract_error unless smooth + complete

    int rank() const { return static_cast<int>(basis_rays_.size()); }
    const std::vector<int>& basis_rays() const { return basis_rays_; }
    const std::vector<int>& pivot_cone() const { return pivot_cone_; }

    DivisorClass class_of(const TDivisor& d) const;
    DivisorClass class_of_ray(int ray) const;
    // canonical representative: sum of coords[i] * D_{basis_rays[i]}
    TDivisor representative(const DivisorClass& c) const;

    const Fan& fan() const { return fan_; }

  private:
    Fan fan_;
    std::vector<int> pivot_cone_;
    std::vector<int> basis_rays_;
    RatMat pivot_inverse_;  // inverse of the sigma_0 ray block
};

}  // namespace torvan
