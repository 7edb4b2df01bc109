#pragma once

// Deliberately naive reference implementations. Nothing here calls into the
// library's polynomial, linear algebra or canonical-form code, so agreement
// with the library is real evidence.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Mat = std::vector<std::vector<Q>>;
using Tri = std::array<int, 3>;  // 1-based

/// Dense exponent vectors.
struct Poly {
    int nvars = 0;
    std::map<std::vector<int>, Q> terms;

    void add(const std::vector<int>& e, const Q& c) {
        auto& v = terms[e];
        v += c;
        if (v == 0) terms.erase(e);
    }
};

inline Poly cubic(int n, const std::vector<Tri>& tris) {
    Poly p{n, {}};
    for (const auto& t : tris) {
        std::vector<int> e(n, 0);
        for (int v : t) e[v - 1] += 1;
        p.add(e, 1);
    }
    return p;
}

/// x_a * d/dx_i p
inline Poly shift(const Poly& p, int i, int a) {
    Poly out{p.nvars, {}};
    for (const auto& [e, c] : p.terms) {
        if (e[i] == 0) continue;
        auto f = e;
        Q coeff = c * f[i];
        f[i] -= 1;
        f[a] += 1;
        out.add(f, coeff);
    }
    return out;
}

/// Rows indexed by monomial, columns by i*n + a.
inline Mat constraint_matrix(const Poly& p) {
    const int n = p.nvars;
    std::map<std::vector<int>, std::vector<Q>> rows;
    for (int i = 0; i < n; ++i)
        for (int a = 0; a < n; ++a)
            for (const auto& [e, c] : shift(p, i, a).terms) {
                auto& row = rows[e];
                if (row.empty()) row.assign(static_cast<std::size_t>(n * n), Q(0));
                row[static_cast<std::size_t>(i * n + a)] += c;
            }
    Mat m;
    for (auto& [e, r] : rows) m.push_back(r);
    return m;
}

/// Plain Gaussian elimination over Q.
inline int rank(Mat m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t k = r + 1; k < m.size(); ++k) {
            if (m[k][c] == 0) continue;
            Q f = m[k][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[k][j] -= f * m[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

inline Q det(Mat m) {
    const std::size_t n = m.size();
    Q d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t k = c + 1; k < n; ++k) {
            Q f = m[k][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[k][j] -= f * m[c][j];
        }
    }
    return d;
}

inline int dim_g0(int n, const std::vector<Tri>& tris) { return n * n - rank(constraint_matrix(cubic(n, tris))); }

inline Q eval(const Poly& p, const std::vector<Q>& x) {
    Q s = 0;
    for (const auto& [e, c] : p.terms) {
        Q t = c;
        for (int i = 0; i < p.nvars; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[static_cast<std::size_t>(i)];
        s += t;
    }
    return s;
}

/// Sorted triangle list after relabelling i -> perm[i-1].
inline std::vector<Tri> relabel(const std::vector<Tri>& tris, const std::vector<int>& perm) {
    std::vector<Tri> out;
    for (auto t : tris) {
        Tri u{perm[t[0] - 1], perm[t[1] - 1], perm[t[2] - 1]};
        std::sort(u.begin(), u.end());
        out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Exhaustive isomorphism test; fine up to n = 9.
inline bool isomorphic(int n, const std::vector<Tri>& a, const std::vector<Tri>& b) {
    if (a.size() != b.size()) return false;
    std::vector<Tri> target = b;
    for (auto& t : target) std::sort(t.begin(), t.end());
    std::sort(target.begin(), target.end());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (relabel(a, perm) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Triangulations of the polygon v[0..k-1] by choosing the apex over edge (v0, v_{k-1}).
inline void triangulations(const std::vector<int>& v, std::vector<std::vector<Tri>>& out) {
    if (v.size() < 3) {
        out.push_back({});
        return;
    }
    for (std::size_t m = 1; m + 1 < v.size(); ++m) {
        std::vector<std::vector<Tri>> left, right;
        triangulations(std::vector<int>(v.begin(), v.begin() + static_cast<long>(m) + 1), left);
        triangulations(std::vector<int>(v.begin() + static_cast<long>(m), v.end()), right);
        Tri t{v.front(), v[m], v.back()};
        std::sort(t.begin(), t.end());
        for (const auto& l : left)
            for (const auto& r : right) {
                auto all = l;
                all.insert(all.end(), r.begin(), r.end());
                all.push_back(t);
                std::sort(all.begin(), all.end());
                out.push_back(all);
            }
    }
}

inline std::vector<std::vector<Tri>> all_triangulations(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<std::vector<Tri>> out;
    triangulations(v, out);
    return out;
}

/// Orbits under rotations and reflections, by explicit images.
inline std::size_t dihedral_orbits(int n) {
    std::set<std::vector<Tri>> seen;
    std::size_t orbits = 0;
    for (const auto& t : all_triangulations(n)) {
        if (seen.count(t)) continue;
        ++orbits;
        for (int r = 0; r < n; ++r)
            for (int f = 0; f < 2; ++f) {
                std::vector<int> perm(static_cast<std::size_t>(n));
                for (int i = 1; i <= n; ++i) {
                    int j = f ? (n - i + 1) : i;
                    perm[static_cast<std::size_t>(i - 1)] = (j - 1 + r) % n + 1;
                }
                seen.insert(relabel(t, perm));
            }
    }
    return orbits;
}

inline unsigned long catalan(int k) {
    std::vector<unsigned long> c(static_cast<std::size_t>(k) + 1, 0);
    c[0] = 1;
    for (int i = 1; i <= k; ++i)
        for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - 1 - j)];
    return c[static_cast<std::size_t>(k)];
}

/// The chain A(x) display on h (b = c = 0): columns t, a_1..a_{n-1}, t_1..t_{n+1}.
inline Mat chain_display(int n, const std::vector<Q>& x) {
    const int N = 2 * n + 1;
    Mat a(static_cast<std::size_t>(N), std::vector<Q>(static_cast<std::size_t>(N), Q(0)));
    auto X = [&](int i) { return x[static_cast<std::size_t>(i - 1)]; };
    auto set = [&](int r, int c, const Q& v) { a[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] += v; };
    for (int i = 1; i <= n; ++i) set(i, 1, X(i));
    for (int i = 1; i <= n - 1; ++i) {
        set(i, 1 + i, -X(n + i + 2));
        set(i + 1, 1 + i, X(n + i));
    }
    for (int j = 1; j <= n + 1; ++j) {
        const int c = n + j;
        if (j <= n) set(j, c, -X(j));
        if (j >= 2) set(j - 1, c, -X(j - 1));
        set(n + j, c, X(n + j));
    }
    return a;
}

}  // namespace oracle
