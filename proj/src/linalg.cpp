#include "torvan/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace torvan {

RatMat to_rat(const IntMat& m) {
    RatMat out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        out[i].reserve(m[i].size());
        for (const auto& x : m[i]) out[i].emplace_back(x);
    }
    return out;
}

RatVec to_rat(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

namespace {

// Row-echelon reduction in place; returns pivot (row, col) pairs.
std::vector<std::pair<int, int>> echelon(RatMat& m) {
    std::vector<std::pair<int, int>> pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[r], m[pr]);
        const Rat inv = Rat(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(RatMat m) { return static_cast<int>(echelon(m).size()); }

Rat det(RatMat m) {
    const int n = static_cast<int>(m.size());
    Rat d = 1;
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i)
            if (m[i][c] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) return Rat(0);
        if (pr != c) {
            std::swap(m[c], m[pr]);
            d = -d;
        }
        d *= m[c][c];
        const Rat inv = Rat(1) / m[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (m[i][c] == 0) continue;
            const Rat f = m[i][c] * inv;
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

RatVec solve(RatMat a, RatVec b) {
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) a[i].push_back(b[i]);
    auto pivots = echelon(a);
    if (static_cast<int>(pivots.size()) != n || pivots.back().second >= n)
        throw internal_error("solve: singular system");
    RatVec x(n);
    for (auto [r, c] : pivots) x[c] = a[r][n];
    return x;
}

std::vector<RatVec> kernel_basis(RatMat a, int ncols) {
    if (a.empty()) {
        // no constraints: standard basis
        std::vector<RatVec> basis;
        for (int j = 0; j < ncols; ++j) {
            RatVec e(ncols, Rat(0));
            e[j] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    auto pivots = echelon(a);
    std::vector<int> pivot_col(ncols, -1);
    for (auto [r, c] : pivots) pivot_col[c] = r;
    std::vector<RatVec> basis;
    for (int j = 0; j < ncols; ++j) {
        if (pivot_col[j] >= 0) continue;
        RatVec v(ncols, Rat(0));
        v[j] = 1;
        for (auto [r, c] : pivots) v[c] = -a[r][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

Int gcd_maximal_minors(const IntMat& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    const int k = std::min(rows, cols);
    if (k == 0) return 0;
    // enumerate k-subsets of the larger dimension
    const bool wide = cols > rows;
    const int big = wide ? cols : rows;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    Int g = 0;
    while (true) {
        RatMat sub(k, RatVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                sub[i][j] = wide ? Rat(m[i][idx[j]]) : Rat(m[idx[i]][j]);
        Int d = to_integer(det(std::move(sub)));
        g = boost::multiprecision::gcd(g, abs(d));
        if (g == 1) return g;
        // next combination
        int i = k - 1;
        while (i >= 0 && idx[i] == big - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return g;
}

}  // namespace torvan
