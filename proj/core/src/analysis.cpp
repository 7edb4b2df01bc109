#include "tripv/analysis.hpp"

#include "tripv/canonical.hpp"
#include "tripv/lie.hpp"
#include "tripv/parallel.hpp"

namespace tripv {

ClassificationRecord analyze_arrangement(const TriangleArrangement& a, const PVConfig& cfg, bool dual,
                                         const std::string& source) {
    ClassificationRecord rec;
    rec.key = canonical_form(a).key();
    rec.arrangement = a;
    rec.source = source;

    const SparsePolynomial p = cubic_of(a);
    MatrixBasis g;
    if (p.is_zero()) {
        // Every matrix fixes the zero polynomial: g = gl(n).
        g.n = a.n();
        g.label = "gl";
        for (std::size_t i = 1; i <= a.n(); ++i)
            for (std::size_t j = 1; j <= a.n(); ++j) g.elements.push_back(RationalMatrix::unit(a.n(), i - 1, j - 1));
    } else {
        g = g_basis(p);
    }
    rec.dim_g = g.dim();

    PVConfig local = cfg;
    local.task_id = stable_hash(rec.key) ^ cfg.task_id;
    const RankVerdict v = is_prehomogeneous(g, local);
    rec.pv = v.pv;
    rec.error_bound = v.error_bound;
    if (v.witness) rec.witness = v.witness->entries();
    if (dual) rec.dual_pv = is_dual_prehomogeneous(g, local).pv;
    rec.coordinate_invariants = coordinate_invariants(g);
    return rec;
}

ClassificationRecord analyze_class(const TriangleArrangement& a, const PVConfig& cfg, bool dual,
                                   const std::string& source) {
    return analyze_arrangement(canonical_form(a).to_arrangement(), cfg, dual, source);
}

}  // namespace tripv
