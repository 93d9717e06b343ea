#include "torvan/divisor.hpp"

#include <algorithm>

namespace torvan {

TDivisor zero_divisor(const Fan& fan) { return TDivisor{RatVec(fan.num_rays(), Rat(0))}; }

TDivisor ray_divisor(const Fan& fan, int ray) {
    if (ray < 0 || ray >= fan.num_rays()) throw parameter_error("ray index out of range");
    TDivisor d = zero_divisor(fan);
    d.coeffs[ray] = 1;
    return d;
}

TDivisor principal_divisor(const Fan& fan, const IntVec& m) {
    if (static_cast<int>(m.size()) != fan.dim())
        throw parameter_error("character arity does not match fan dimension");
    TDivisor d = zero_divisor(fan);
    for (int i = 0; i < fan.num_rays(); ++i) d.coeffs[i] = Rat(dot(m, fan.ray(i)));
    return d;
}

TDivisor add(const TDivisor& a, const TDivisor& b) {
    if (a.coeffs.size() != b.coeffs.size()) throw contract_error("divisor arity mismatch");
    TDivisor out = a;
    for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
    return out;
}

TDivisor scale(const Rat& c, const TDivisor& a) {
    TDivisor out = a;
    for (auto& x : out.coeffs) x *= c;
    return out;
}

bool is_integral(const TDivisor& d) {
    return std::all_of(d.coeffs.begin(), d.coeffs.end(),
                       [](const Rat& q) { return is_integer(q); });
}

bool is_effective(const TDivisor& d) {
    return std::all_of(d.coeffs.begin(), d.coeffs.end(), [](const Rat& q) { return q >= 0; });
}

TDivisor reduce(const TDivisor& d) {
    TDivisor out = d;
    for (auto& x : out.coeffs) {
        if (x < 0) throw contract_error("reduce requires an effective divisor");
        x = (x > 0) ? Rat(1) : Rat(0);
    }
    return out;
}

TDivisor canonical_divisor(const Fan& fan) {
    return TDivisor{RatVec(fan.num_rays(), Rat(-1))};
}

DivisorClass class_add(const DivisorClass& a, const DivisorClass& b) {
    if (a.coords.size() != b.coords.size()) throw contract_error("class arity mismatch");
    DivisorClass out = a;
    for (std::size_t i = 0; i < b.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

DivisorClass class_scale(const Rat& c, const DivisorClass& a) {
    DivisorClass out = a;
    for (auto& x : out.coords) x *= c;
    return out;
}

bool class_is_integral(const DivisorClass& c) {
    return std::all_of(c.coords.begin(), c.coords.end(),
                       [](const Rat& q) { return is_integer(q); });
}

bool class_is_zero(const DivisorClass& c) {
    return std::all_of(c.coords.begin(), c.coords.end(), [](const Rat& q) { return q == 0; });
}

PicardGroup::PicardGroup(const Fan& fan) : fan_(fan) {
    require_smooth_complete(fan, "picard_group");
    pivot_cone_ = fan.max_cones().front();  // lexicographically first
    std::vector<bool> in_pivot(fan.num_rays(), false);
    for (int i : pivot_cone_) in_pivot[i] = true;
    for (int i = 0; i < fan.num_rays(); ++i)
        if (!in_pivot[i]) basis_rays_.push_back(i);

    const int n = fan.dim();
    RatMat block(n, RatVec(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) block[r][c] = Rat(fan.ray(pivot_cone_[r])[c]);
    // invert by solving against unit vectors; the block is unimodular for
    // smooth fans so entries stay integral
    pivot_inverse_.assign(n, RatVec(n));
    for (int c = 0; c < n; ++c) {
        RatVec e(n, Rat(0));
        e[c] = 1;
        RatVec col = solve(block, e);
        for (int r = 0; r < n; ++r) pivot_inverse_[r][c] = col[r];
    }
}

DivisorClass PicardGroup::class_of(const TDivisor& d) const {
    if (static_cast<int>(d.coeffs.size()) != fan_.num_rays())
        throw contract_error("divisor arity does not match fan");
    const int n = fan_.dim();
    // m with <m, u_rho> = coeff_rho on the pivot cone
    RatVec m(n, Rat(0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m[r] += pivot_inverse_[r][c] * d.coeffs[pivot_cone_[c]];
    DivisorClass out;
    out.coords.reserve(basis_rays_.size());
    for (int i : basis_rays_) out.coords.push_back(d.coeffs[i] - dot(fan_.ray(i), m));
    return out;
}

DivisorClass PicardGroup::class_of_ray(int ray) const {
    return class_of(ray_divisor(fan_, ray));
}

TDivisor PicardGroup::representative(const DivisorClass& c) const {
    if (static_cast<int>(c.coords.size()) != rank())
        throw contract_error("class arity does not match Picard rank");
    TDivisor d = zero_divisor(fan_);
    for (int i = 0; i < rank(); ++i) d.coeffs[basis_rays_[i]] = c.coords[i];
    return d;
}

}  // namespace torvan
