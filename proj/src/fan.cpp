#include "torvan/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "torvan/polyhedra.hpp"

namespace torvan {

Fan Fan::make(int dim, IntMat rays, std::vector<std::vector<int>> max_cones) {
    if (dim < 1) throw contract_error("fan dimension must be positive");
    const int d = static_cast<int>(rays.size());
    for (const auto& r : rays) {
        if (static_cast<int>(r.size()) != dim)
            throw contract_error("ray arity does not match fan dimension");
        Int g = 0;
        for (const auto& x : r) g = boost::multiprecision::gcd(g, abs(x));
        if (g != 1) throw contract_error("ray generators must be primitive nonzero vectors");
    }
    {
        auto sorted = rays;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw contract_error("duplicate rays");
    }
    std::vector<bool> used(d, false);
    for (auto& c : max_cones) {
        std::sort(c.begin(), c.end());
        if (std::adjacent_find(c.begin(), c.end()) != c.end())
            throw contract_error("repeated ray index in a cone");
        if (c.empty() || c.front() < 0 || c.back() >= d)
            throw contract_error("cone ray index out of range");
        if (static_cast<int>(c.size()) > dim)
            throw contract_error("cone has more generators than the ambient dimension");
        RatMat gen;
        for (int i : c) gen.push_back(to_rat(rays[i]));
        if (rank(gen) != static_cast<int>(c.size()))
            throw contract_error("cone generators are linearly dependent (non-simplicial)");
        for (int i : c) used[i] = true;
    }
    std::sort(max_cones.begin(), max_cones.end());
    if (std::adjacent_find(max_cones.begin(), max_cones.end()) != max_cones.end())
        throw contract_error("duplicate maximal cones");
    if (max_cones.empty()) throw contract_error("fan has no cones");
    for (int i = 0; i < d; ++i)
        if (!used[i]) throw contract_error("ray not contained in any maximal cone");

    Fan f;
    f.dim_ = dim;
    f.rays_ = std::move(rays);
    f.cones_ = std::move(max_cones);
    return f;
}

namespace {

Fan projective_space(int n) {
    if (n < 1) throw parameter_error("Pn requires n >= 1");
    IntMat rays;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        rays.push_back(e);
    }
    rays.push_back(IntVec(n, -1));
    std::vector<std::vector<int>> cones;
    for (int skip = 0; skip <= n; ++skip) {
        std::vector<int> c;
        for (int i = 0; i <= n; ++i)
            if (i != skip) c.push_back(i);
        cones.push_back(c);
    }
    return Fan::make(n, rays, cones);
}

Fan product_of_projective_spaces(int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw parameter_error("PnxPm requires n1, n2 >= 1");
    Fan f1 = projective_space(n1), f2 = projective_space(n2);
    const int n = n1 + n2;
    IntMat rays;
    for (const auto& r : f1.rays()) {
        IntVec v(n, 0);
        std::copy(r.begin(), r.end(), v.begin());
        rays.push_back(v);
    }
    for (const auto& r : f2.rays()) {
        IntVec v(n, 0);
        std::copy(r.begin(), r.end(), v.begin() + n1);
        rays.push_back(v);
    }
    const int off = f1.num_rays();
    std::vector<std::vector<int>> cones;
    for (const auto& c1 : f1.max_cones())
        for (const auto& c2 : f2.max_cones()) {
            std::vector<int> c = c1;
            for (int i : c2) c.push_back(off + i);
            cones.push_back(c);
        }
    return Fan::make(n, rays, cones);
}

Fan hirzebruch(int r) {
    if (r < 0) throw parameter_error("Hirzebruch requires r >= 0");
    IntMat rays = {{1, 0}, {0, 1}, {-1, r}, {0, -1}};
    return Fan::make(2, rays, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

}  // namespace

Fan build_standard(StandardFamily family, const std::vector<int>& params) {
    switch (family) {
        case StandardFamily::Pn:
            if (params.size() != 1) throw parameter_error("Pn takes one parameter");
            return projective_space(params[0]);
        case StandardFamily::PnxPm:
            if (params.size() != 2) throw parameter_error("PnxPm takes two parameters");
            return product_of_projective_spaces(params[0], params[1]);
        case StandardFamily::Hirzebruch:
            if (params.size() != 1) throw parameter_error("Hirzebruch takes one parameter");
            return hirzebruch(params[0]);
    }
    throw parameter_error("unknown standard family");
}

bool is_smooth(const Fan& fan) {
    for (const auto& c : fan.max_cones()) {
        IntMat gen;
        for (int i : c) gen.push_back(fan.ray(i));
        if (gcd_maximal_minors(gen) != 1) return false;
    }
    return true;
}

bool is_complete(const Fan& fan) {
    const int n = fan.dim();
    const auto& cones = fan.max_cones();
    for (const auto& c : cones)
        if (static_cast<int>(c.size()) != n) return false;  // not pure

    // ridge -> incident maximal cones
    std::map<std::vector<int>, std::vector<int>> ridges;
    for (std::size_t ci = 0; ci < cones.size(); ++ci) {
        const auto& c = cones[ci];
        for (int drop = 0; drop < n; ++drop) {
            std::vector<int> ridge;
            for (int i = 0; i < n; ++i)
                if (i != drop) ridge.push_back(c[i]);
            ridges[ridge].push_back(static_cast<int>(ci));
        }
    }
    for (const auto& [ridge, inc] : ridges)
        if (inc.size() != 2) return false;

    // connectivity of the wall graph
    std::vector<std::vector<int>> adj(cones.size());
    for (const auto& [ridge, inc] : ridges) {
        adj[inc[0]].push_back(inc[1]);
        adj[inc[1]].push_back(inc[0]);
    }
    std::vector<bool> seen(cones.size(), false);
    std::vector<int> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<long> f_vector(const Fan& fan) {
    std::set<std::vector<int>> faces;
    for (const auto& c : fan.max_cones()) {
        const int k = static_cast<int>(c.size());
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            std::vector<int> sub;
            for (int i = 0; i < k; ++i)
                if (mask & (1u << i)) sub.push_back(c[i]);
            faces.insert(std::move(sub));
        }
    }
    std::vector<long> f(fan.dim() + 1, 0);
    f[0] = 1;  // the origin
    for (const auto& face : faces) ++f[face.size()];
    return f;
}

void validate_intersections(const Fan& fan) {
    const auto& cones = fan.max_cones();
    const int n = fan.dim();
    for (std::size_t a = 0; a < cones.size(); ++a) {
        for (std::size_t b = a + 1; b < cones.size(); ++b) {
            std::vector<int> common;
            std::set_intersection(cones[a].begin(), cones[a].end(), cones[b].begin(),
                                  cones[b].end(), std::back_inserter(common));
            // a separating functional w with w = 0 on the common rays,
            // > 0 on the rest of cone a and < 0 on the rest of cone b
            // exists iff the two cones meet in the common face
            std::vector<LinCond> sys;
            auto is_common = [&](int i) {
                return std::binary_search(common.begin(), common.end(), i);
            };
            for (int i : cones[a]) {
                LinCond c{to_rat(fan.ray(i)), Rat(0), is_common(i) ? LinCond::EQ : LinCond::GT};
                sys.push_back(std::move(c));
            }
            for (int i : cones[b]) {
                if (is_common(i)) continue;
                RatVec neg = to_rat(fan.ray(i));
                for (auto& x : neg) x = -x;
                sys.push_back(LinCond{std::move(neg), Rat(0), LinCond::GT});
            }
            if (!feasible(std::move(sys), n))
                throw contract_error("maximal cones " + std::to_string(a) + " and " +
                                     std::to_string(b) + " do not intersect in a common face");
        }
    }
}

void require_smooth_complete(const Fan& fan, const std::string& op) {
    if (!is_smooth(fan)) throw contract_error(op + ": fan is not smooth");
    if (!is_complete(fan)) throw contract_error(op + ": fan is not complete");
}

}  // namespace torvan
