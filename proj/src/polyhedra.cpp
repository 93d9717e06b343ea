#include "torvan/polyhedra.hpp"

#include <algorithm>
#include <numeric>

namespace torvan {

namespace {

struct Row {
    RatVec a;   // coefficients for the variables still alive
    Rat c;      // a . x >= c  (or > c when strict)
    bool strict = false;
};

// Eliminate the last variable of the system; standard Fourier-Motzkin
// pairing of lower and upper bounds. Strictness propagates through sums.
std::vector<Row> fm_eliminate(const std::vector<Row>& sys, int var) {
    std::vector<Row> keep, lower, upper;
    for (const auto& r : sys) {
        if (r.a[var] == 0)
            keep.push_back(r);
        else if (r.a[var] > 0)
            lower.push_back(r);
        else
            upper.push_back(r);
    }
    for (const auto& lo : lower) {
        for (const auto& up : upper) {
            Row comb;
            comb.a.assign(lo.a.size(), Rat(0));
            const Rat alpha = lo.a[var];   // > 0
            const Rat beta = -up.a[var];   // > 0
            for (std::size_t j = 0; j < lo.a.size(); ++j)
                comb.a[j] = beta * lo.a[j] + alpha * up.a[j];
            comb.c = beta * lo.c + alpha * up.c;
            comb.strict = lo.strict || up.strict;
            keep.push_back(std::move(comb));
        }
    }
    for (auto& r : keep) r.a[var] = 0;
    return keep;
}

std::vector<Row> to_rows(const std::vector<LinCond>& conds, int nvars) {
    std::vector<Row> rows;
    for (const auto& c : conds) {
        if (static_cast<int>(c.a.size()) != nvars)
            throw internal_error("condition arity mismatch");
        Row r{c.a, c.c, c.rel == LinCond::GT};
        rows.push_back(r);
        if (c.rel == LinCond::EQ) {
            Row s = r;
            for (auto& x : s.a) x = -x;
            s.c = -r.c;
            rows.push_back(std::move(s));
        }
    }
    return rows;
}

bool all_constants_hold(const std::vector<Row>& sys) {
    for (const auto& r : sys) {
        if (r.strict ? !(Rat(0) > r.c) : !(Rat(0) >= r.c)) return false;
    }
    return true;
}

}  // namespace

bool feasible(std::vector<LinCond> conds, int nvars) {
    auto rows = to_rows(conds, nvars);
    for (int v = nvars - 1; v >= 0; --v) rows = fm_eliminate(rows, v);
    return all_constants_hold(rows);
}

bool recession_trivial(const RatMat& rows, int nvars) {
    RatMat b = rows;
    if (rank(b) < nvars) return false;  // nonzero kernel vector lies in the cone
    const int m = static_cast<int>(rows.size());
    auto in_cone = [&](const RatVec& y) {
        for (const auto& r : rows)
            if (dot(r, y) < 0) return false;
        return true;
    };
    // candidate extreme rays: kernels of (nvars-1)-subsets of rows;
    // m >= nvars > nvars-1 is guaranteed by the rank check above
    std::vector<int> idx(nvars - 1);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        RatMat sub;
        for (int i : idx) sub.push_back(rows[i]);
        auto ker = kernel_basis(sub, nvars);
        if (ker.size() == 1) {
            const RatVec& y = ker[0];
            RatVec neg(y.size());
            for (std::size_t i = 0; i < y.size(); ++i) neg[i] = -y[i];
            if (in_cone(y) || in_cone(neg)) return false;
        }
        if (nvars - 1 == 0) break;
        int i = nvars - 2;
        while (i >= 0 && idx[i] == m - (nvars - 1) + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < nvars - 1; ++j) idx[j] = idx[j - 1] + 1;
    }
    return true;
}

std::vector<IntVec> lattice_points(const std::vector<LinCond>& conds, int nvars) {
    for (const auto& c : conds)
        if (c.rel == LinCond::GT) throw internal_error("lattice_points expects weak inequalities");
    // sys[k] constrains variables 0..k
    std::vector<std::vector<Row>> sys(nvars);
    if (nvars == 0) {
        auto rows = to_rows(conds, 0);
        if (all_constants_hold(rows)) return {IntVec{}};
        return {};
    }
    sys[nvars - 1] = to_rows(conds, nvars);
    for (int v = nvars - 1; v >= 1; --v) sys[v - 1] = fm_eliminate(sys[v], v);

    std::vector<IntVec> out;
    IntVec point(nvars, 0);
    // depth-first scan: at level k the system sys[k] gives exact integer
    // bounds for x_k once x_0..x_{k-1} are fixed
    auto scan = [&](auto&& self, int level) -> void {
        bool has_lo = false, has_hi = false;
        Int lo = 0, hi = 0;
        for (const auto& r : sys[level]) {
            Rat s = r.c;
            for (int j = 0; j < level; ++j) s -= r.a[j] * Rat(point[j]);
            if (r.a[level] == 0) {
                if (!(Rat(0) >= s)) return;  // prefix infeasible
                continue;
            }
            if (r.a[level] > 0) {
                Int b = ceil_rat(s / r.a[level]);
                if (!has_lo || b > lo) lo = b;
                has_lo = true;
            } else {
                Int b = floor_rat(s / r.a[level]);
                if (!has_hi || b < hi) hi = b;
                has_hi = true;
            }
        }
        if (!has_lo || !has_hi)
            throw internal_error("lattice_points: unbounded direction in chamber");
        for (Int x = lo; x <= hi; ++x) {
            point[level] = x;
            if (level + 1 == nvars)
                out.push_back(point);
            else
                self(self, level + 1);
        }
    };
    scan(scan, 0);
    return out;
}

Int count_lattice_points(const std::vector<LinCond>& conds, int nvars) {
    return Int(lattice_points(conds, nvars).size());
}

}  // namespace torvan
