#include "tripv/prehomog.hpp"

#include <algorithm>
#include <map>

#include "tripv/errors.hpp"
#include "tripv/linalg.hpp"
#include "tripv/rng.hpp"

namespace tripv {

namespace {

RationalVector random_point(std::size_t n, std::uint64_t bound, SplitMix64& rng) {
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t v = rng.uniform(1, bound);
        x[i] = Rational(Integer(std::to_string(v)));
    }
    return x;
}

Rational integer_rational(std::uint64_t v) { return Rational(Integer(std::to_string(v))); }

// Modular rank first. A full rank mod p is rechecked over Q before it is
// trusted as a witness; a deficient one may be an unlucky prime, so the
// exact rank decides.
std::size_t sampled_rank(const RationalMatrix& a, std::size_t target) {
    try {
        const std::size_t r = rank_mod_p(a, modular::kMersenne61);
        if (r == target) {
            const std::size_t exact = rank(a);
            if (exact != target) throw Error("internal: modular rank exceeds exact rank");
            return exact;
        }
    } catch (const BadPrime&) {
    }
    return rank(a);
}

RankVerdict decide(const MatrixBasis& b, const PVConfig& cfg, bool dual) {
    if (cfg.samples == 0) throw Error("at least one sample is required");
    if (cfg.coord_bound < 1) throw Error("coordinate bound must be positive");
    const std::size_t n = b.n;
    RankVerdict v;
    v.mode = cfg.mode;
    SplitMix64 rng = SplitMix64::stream(cfg.seed, cfg.task_id);

    if (cfg.mode == RankMode::Symbolic && n <= kSymbolicMaxDim) {
        const std::size_t generic = symbolic_generic_rank(dual ? transpose_basis(b) : b);
        v.generic_rank_lower_bound = generic;
        if (generic < n) {
            v.pv = false;
            v.error_bound = 0;
            return v;
        }
        // Nonzero polynomial, so a witness turns up quickly.
        for (std::size_t s = 0;; ++s) {
            RationalVector x = random_point(n, cfg.coord_bound, rng);
            if (rank(dual ? dual_action_matrix(b, x) : action_matrix(b, x)) == n) {
                v.pv = true;
                v.witness = std::move(x);
                v.samples_used = s + 1;
                return v;
            }
        }
    }
    v.mode = RankMode::Randomized;

    for (std::size_t s = 0; s < cfg.samples; ++s) {
        RationalVector x = random_point(n, cfg.coord_bound, rng);
        const RationalMatrix a = dual ? dual_action_matrix(b, x) : action_matrix(b, x);
        const std::size_t r = sampled_rank(a, n);
        v.samples_used = s + 1;
        v.generic_rank_lower_bound = std::max(v.generic_rank_lower_bound, r);
        if (r == n) {
            v.pv = true;
            v.witness = std::move(x);
            v.error_bound = 0;
            return v;
        }
    }
    // Each maximal minor has degree <= n, so a full-rank generic A(x) drops
    // rank at a uniform sample with probability <= n / S.
    Rational per = Rational(static_cast<unsigned long>(n)) / integer_rational(cfg.coord_bound);
    if (per > 1) per = 1;
    Rational bound = 1;
    for (std::size_t s = 0; s < cfg.samples; ++s) bound *= per;
    v.error_bound = bound;
    return v;
}

std::vector<Integer> divisors(Integer a) {
    a = abs(a);
    std::vector<std::pair<Integer, unsigned>> factors;
    Integer p = 2;
    std::uint64_t steps = 0;
    while (p * p <= a && steps < 10'000'000) {
        unsigned e = 0;
        while (a % p == 0) {
            a /= p;
            ++e;
        }
        if (e > 0) factors.emplace_back(p, e);
        p += (p == 2) ? 1 : 2;
        ++steps;
    }
    if (a > 1) factors.emplace_back(a, 1);
    std::vector<Integer> out{1};
    for (const auto& [q, e] : factors) {
        const std::size_t base = out.size();
        Integer mult = 1;
        for (unsigned k = 0; k < e; ++k) {
            mult *= q;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * mult);
        }
    }
    return out;
}

Integer lcm_of_denominators(const RationalMatrix& m) {
    Integer l = 1;
    for (const auto& q : m.data()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    return l;
}

}  // namespace

RationalMatrix action_matrix(const MatrixBasis& b, const RationalVector& x) {
    if (x.size() != b.n) throw DimensionMismatch("point length does not match basis size");
    RationalMatrix a(b.n, b.dim());
    for (std::size_t k = 0; k < b.dim(); ++k) {
        const RationalVector col = b.elements[k] * x;
        for (std::size_t i = 0; i < b.n; ++i) a(i, k) = col[i];
    }
    return a;
}

MatrixBasis transpose_basis(const MatrixBasis& b) {
    MatrixBasis t;
    t.n = b.n;
    t.label = b.label + "^T";
    for (const auto& m : b.elements) t.elements.push_back(m.transpose());
    return t;
}

RationalMatrix dual_action_matrix(const MatrixBasis& b, const RationalVector& x) {
    return action_matrix(transpose_basis(b), x);
}

RankVerdict is_prehomogeneous(const MatrixBasis& b, const PVConfig& cfg) { return decide(b, cfg, false); }

RankVerdict is_dual_prehomogeneous(const MatrixBasis& b, const PVConfig& cfg) { return decide(b, cfg, true); }

std::size_t symbolic_generic_rank(const MatrixBasis& b) {
    const std::size_t n = b.n;
    const std::size_t d = b.dim();
    std::vector<std::vector<SparsePolynomial>> a(n, std::vector<SparsePolynomial>(d, SparsePolynomial(n)));
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            a[i][k] = SparsePolynomial::linear(b.elements[k].row(i).entries());
        }
    }
    SparsePolynomial prev = SparsePolynomial::constant(n, 1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < d && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && a[piv][c].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < d; ++j) {
                SparsePolynomial num = a[i][j] * a[r][c] - a[i][c] * a[r][j];
                auto q = exact_divide(num, prev);
                if (!q) throw Error("internal: fraction-free step was not exact");
                a[i][j] = std::move(*q);
            }
            a[i][c] = SparsePolynomial(n);
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

InvariantReport relative_invariant_character(const SparsePolynomial& q, const MatrixBasis& b) {
    if (q.is_zero()) throw ZeroCandidate("candidate invariant is the zero polynomial");
    if (q.nvars() != b.n) throw DimensionMismatch("candidate lives in a different ring than the basis");
    InvariantReport rep;
    rep.polynomial = q;
    for (const auto& m : b.elements) {
        const Membership mem = verify_membership(m, q);
        if (!mem.relative) {
            rep.character.clear();
            return rep;
        }
        rep.character.push_back(mem.lambda);
    }
    rep.is_relative_invariant = true;
    return rep;
}

std::vector<std::size_t> coordinate_invariants(const MatrixBasis& b) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < b.n; ++i) {
        bool ok = true;
        for (const auto& m : b.elements) {
            for (std::size_t a = 0; a < b.n && ok; ++a) {
                if (a != i && sgn(m(i, a)) != 0) ok = false;
            }
            if (!ok) break;
        }
        if (ok) out.push_back(i + 1);
    }
    return out;
}

std::vector<Rational> characteristic_polynomial(const RationalMatrix& a) {
    if (!a.is_square()) throw NotSquare("characteristic polynomial of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RationalMatrix m(n, n);
    const RationalMatrix id = RationalMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + c[n - k + 1] * id;
        const RationalMatrix am = a * m;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
}

std::vector<Integer> integer_roots(const std::vector<Integer>& coeffs) {
    std::vector<Integer> roots;
    std::size_t low = 0;
    while (low < coeffs.size() && coeffs[low] == 0) ++low;
    if (low == coeffs.size()) return roots;
    if (low > 0) roots.push_back(0);
    if (low + 1 == coeffs.size()) return roots;
    auto value_at = [&](const Integer& t) {
        Integer acc = 0;
        for (std::size_t i = coeffs.size(); i-- > low;) acc = acc * t + coeffs[i];
        return acc;
    };
    for (const Integer& dv : divisors(coeffs[low])) {
        for (const Integer& cand : {dv, Integer(-dv)}) {
            if (value_at(cand) == 0) roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<std::vector<RationalVector>> linear_invariant_spaces(const MatrixBasis& b) {
    const std::size_t n = b.n;
    // Joint eigenspaces, refined one basis element at a time.
    std::vector<std::vector<RationalVector>> spaces;
    {
        std::vector<RationalVector> full;
        for (std::size_t i = 0; i < n; ++i) {
            RationalVector e(n);
            e[i] = 1;
            full.push_back(std::move(e));
        }
        spaces.push_back(std::move(full));
    }
    for (const auto& m : b.elements) {
        const RationalMatrix t = m.transpose();
        const Integer scale = lcm_of_denominators(t);
        const RationalMatrix scaled = Rational(scale) * t;
        std::vector<Integer> coeffs;
        for (const auto& c : characteristic_polynomial(scaled)) coeffs.push_back(c.get_num());
        std::vector<Rational> eigen;
        for (const auto& mu : integer_roots(coeffs)) eigen.push_back(Rational(mu, scale));
        for (auto& e : eigen) e.canonicalize();

        std::vector<std::vector<RationalVector>> next;
        for (const auto& w : spaces) {
            for (const auto& lambda : eigen) {
                // Vectors W c with (tB - lambda) W c = 0.
                RationalMatrix shifted = t - lambda * RationalMatrix::identity(n);
                RationalMatrix img(n, w.size());
                for (std::size_t k = 0; k < w.size(); ++k) {
                    const RationalVector col = shifted * w[k];
                    for (std::size_t i = 0; i < n; ++i) img(i, k) = col[i];
                }
                std::vector<RationalVector> sub;
                for (const auto& c : nullspace(img)) {
                    RationalVector v(n);
                    for (std::size_t k = 0; k < w.size(); ++k) {
                        if (sgn(c[k]) == 0) continue;
                        for (std::size_t i = 0; i < n; ++i) v[i] += c[k] * w[k][i];
                    }
                    sub.push_back(std::move(v));
                }
                if (!sub.empty()) next.push_back(std::move(sub));
            }
        }
        spaces = std::move(next);
        if (spaces.empty()) break;
    }
    // Present each space in reduced echelon form for stable output.
    for (auto& w : spaces) {
        RationalMatrix rows(w.size(), n);
        for (std::size_t k = 0; k < w.size(); ++k)
            for (std::size_t i = 0; i < n; ++i) rows(k, i) = w[k][i];
        const RrefResult red = rref(rows);
        std::vector<RationalVector> clean;
        for (std::size_t k = 0; k < red.pivots.size(); ++k) clean.push_back(red.reduced.row(k));
        w = std::move(clean);
    }
    std::sort(spaces.begin(), spaces.end(), [](const auto& x, const auto& y) {
        return std::lexicographical_compare(x.front().begin(), x.front().end(), y.front().begin(), y.front().end(),
                                            [](const Rational& a, const Rational& b) { return a > b; });
    });
    return spaces;
}

std::vector<SparsePolynomial> linear_invariants(const MatrixBasis& b) {
    std::vector<SparsePolynomial> out;
    for (const auto& w : linear_invariant_spaces(b)) {
        for (const auto& v : w) out.push_back(SparsePolynomial::linear(v.entries()));
    }
    return out;
}

HessianProbe log_hessian_nondegenerate(const SparsePolynomial& f, const PVConfig& cfg) {
    if (f.is_zero()) throw ZeroPolynomial("log-Hessian of the zero polynomial");
    const std::size_t n = f.nvars();
    const PolyVector grad = gradient(f);
    std::vector<PolyVector> hess(n);
    for (std::size_t i = 0; i < n; ++i) hess[i] = gradient(grad[i]);

    SplitMix64 rng = SplitMix64::stream(cfg.seed, cfg.task_id);
    HessianProbe probe;
    for (std::size_t s = 0; s < cfg.samples; ++s) {
        RationalVector x = random_point(n, cfg.coord_bound, rng);
        const Rational fx = eval(f, x);
        std::vector<Rational> gx(n);
        for (std::size_t i = 0; i < n; ++i) gx[i] = eval(grad[i], x);
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = fx * eval(hess[i][j], x) - gx[i] * gx[j];
        probe.samples_used = s + 1;
        if (sgn(det_fraction_free(m)) != 0) {
            probe.nondegenerate = true;
            probe.witness = std::move(x);
            return probe;
        }
    }
    const long d = f.degree();
    Rational per = Rational(static_cast<long>(n) * (2 * d - 2 > 0 ? 2 * d - 2 : 1)) / integer_rational(cfg.coord_bound);
    if (per > 1) per = 1;
    Rational bound = 1;
    for (std::size_t s = 0; s < cfg.samples; ++s) bound *= per;
    probe.error_bound = bound;
    return probe;
}

std::string to_string(RankMode mode) { return mode == RankMode::Symbolic ? "symbolic" : "randomized"; }

}  // namespace tripv
