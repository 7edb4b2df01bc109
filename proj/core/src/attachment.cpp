#include "tripv/attachment.hpp"

#include <sstream>

#include "tripv/analysis.hpp"
#include "tripv/errors.hpp"
#include "tripv/linalg.hpp"
#include "tripv/parallel.hpp"

namespace tripv {

SubalgebraSpec parse_zero_list(const std::string& text) {
    SubalgebraSpec spec;
    std::stringstream all(text);
    std::string item;
    while (std::getline(all, item, ';')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        const auto comma = item.find(',');
        if (comma == std::string::npos) throw ParseError("expected i,j in zero list, got '" + item + "'");
        try {
            const long i = std::stol(item.substr(0, comma));
            const long j = std::stol(item.substr(comma + 1));
            if (i < 1 || j < 1) throw ParseError("zero list indices are 1-based");
            spec.zeros.emplace_back(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        } catch (const std::logic_error&) {
            throw ParseError("bad zero list entry '" + item + "'");
        }
    }
    return spec;
}

std::string to_string(const SubalgebraSpec& spec) {
    std::string s;
    for (const auto& [i, j] : spec.zeros) {
        if (!s.empty()) s += ";";
        s += std::to_string(i) + "," + std::to_string(j);
    }
    return s;
}

MatrixBasis subalgebra_basis(const SparsePolynomial& p, const SubalgebraSpec& spec) {
    MatrixBasis g = g_basis(p);
    if (spec.zeros.empty()) return g;
    // Coefficient vectors c with sum_k c_k (B_k)_{ij} = 0 for each constraint.
    RationalMatrix sys(spec.zeros.size(), g.dim());
    for (std::size_t r = 0; r < spec.zeros.size(); ++r) {
        const auto [i, j] = spec.zeros[r];
        if (i > g.n || j > g.n) throw VertexOutOfRange("constraint entry outside the matrix");
        for (std::size_t k = 0; k < g.dim(); ++k) sys(r, k) = g.elements[k](i - 1, j - 1);
    }
    MatrixBasis h;
    h.n = g.n;
    h.label = "h";
    for (const auto& c : nullspace(sys)) {
        RationalMatrix m(g.n, g.n);
        for (std::size_t k = 0; k < g.dim(); ++k)
            if (!is_zero(c[k])) m = m + c[k] * g.elements[k];
        h.elements.push_back(std::move(m));
    }
    if (!bracket_closure_check(h)) throw NotClosed("constraints " + to_string(spec) + " do not cut out a subalgebra");
    return h;
}

bool row_support_invariant(const MatrixBasis& h, Vertex v) {
    if (v < 1 || v > h.n) throw VertexOutOfRange("row test vertex outside the basis");
    for (const auto& m : h.elements)
        for (std::size_t a = 0; a < h.n; ++a)
            if (a != v - 1 && !is_zero(m(v - 1, a))) return false;
    return true;
}

bool HypothesisReport::conditions_hold() const {
    auto ok = [](const SideReport& s) { return s.cond1 && s.cond2 && s.cond3; };
    return ok(side1) && ok(side2);
}

bool HypothesisReport::theorem_applies() const {
    return conditions_hold() && side1.no_edge_sharing && side2.no_edge_sharing;
}

namespace {

SideReport check_side(const TriangleArrangement& a, Vertex v, const SubalgebraSpec& spec, const PVConfig& cfg,
                      std::uint64_t salt) {
    if (v < 1 || v > a.n()) throw VertexOutOfRange("attachment vertex " + std::to_string(v) + " out of range");
    SideReport s;
    s.no_edge_sharing = !a.has_edge_sharing();
    const SparsePolynomial p = cubic_of(a);
    if (p.is_zero()) return s;
    const MatrixBasis h = subalgebra_basis(p, spec);
    s.h_dim = h.dim();
    PVConfig local = cfg;
    local.task_id = cfg.task_id ^ salt;
    const RankVerdict verdict = is_prehomogeneous(h, local);
    s.cond1 = verdict.pv;
    s.error_bound = verdict.error_bound;
    s.cond2 = row_support_invariant(h, v);
    for (const auto& t : a.star(v)) {
        Vertex others[2];
        std::size_t k = 0;
        for (Vertex u : t)
            if (u != v) others[k++] = u;
        for (int flip = 0; flip < 2; ++flip) {
            const Vertex iso = others[flip];
            const Vertex bar = others[1 - flip];
            if (a.degree(iso) == 1 && row_support_invariant(h, bar)) {
                s.qualifying.push_back(t);
                break;
            }
        }
    }
    s.cond3 = !s.qualifying.empty();
    return s;
}

}  // namespace

HypothesisReport check_hypotheses(const TriangleArrangement& a1, Vertex v1, const SubalgebraSpec& spec1,
                                  const TriangleArrangement& a2, Vertex v2, const SubalgebraSpec& spec2,
                                  const PVConfig& cfg) {
    HypothesisReport r;
    r.side1 = check_side(a1, v1, spec1, cfg, stable_hash("side1:" + to_string(a1)));
    r.side2 = check_side(a2, v2, spec2, cfg, stable_hash("side2:" + to_string(a2)));
    return r;
}

bool AttachmentResult::consistent() const { return !hypotheses.theorem_applies() || record.pv; }

Vertex attached_label(std::size_t n1, const TriangleArrangement& a2, Vertex v1, Vertex v2, Vertex u) {
    if (u < 1 || u > a2.n()) throw VertexOutOfRange("vertex outside second arrangement");
    if (u == v2) return v1;
    return static_cast<Vertex>(n1 + (u < v2 ? u : u - 1));
}

AttachmentResult attach_and_verify(const TriangleArrangement& a1, Vertex v1, const SubalgebraSpec& spec1,
                                   const TriangleArrangement& a2, Vertex v2, const SubalgebraSpec& spec2,
                                   const PVConfig& cfg) {
    AttachmentResult out;
    out.hypotheses = check_hypotheses(a1, v1, spec1, a2, v2, spec2, cfg);
    const TriangleArrangement t = attach(a1, v1, a2, v2);
    out.record = analyze_arrangement(t, cfg, false, "attach");

    const std::size_t n1 = a1.n();
    const std::size_t n = t.n();
    const MatrixBasis g = g_basis(cubic_of(t));

    // Stars at the junction, in attached labels.
    std::vector<std::pair<Vertex, Vertex>> star1, star2;
    for (const auto& tri : a1.star(v1)) {
        std::vector<Vertex> o;
        for (Vertex u : tri)
            if (u != v1) o.push_back(u);
        star1.emplace_back(o[0], o[1]);
        star1.emplace_back(o[1], o[0]);
    }
    for (const auto& tri : a2.star(v2)) {
        std::vector<Vertex> o;
        for (Vertex u : tri)
            if (u != v2) o.push_back(attached_label(n1, a2, v1, v2, u));
        star2.emplace_back(o[0], o[1]);
        star2.emplace_back(o[1], o[0]);
    }
    out.pairing_holds = true;
    for (const auto& m : g.elements)
        for (const auto& [i, ibar] : star1)
            for (const auto& [a, abar] : star2)
                if (m(i - 1, abar - 1) + m(a - 1, ibar - 1) != 0) out.pairing_holds = false;

    // Cross entries between the two sides away from the junction.
    const auto dist = t.distance_matrix();
    auto side = [&](std::size_t idx) { return idx + 1 == v1 ? 0 : (idx < n1 ? 1 : 2); };
    for (std::size_t e = 0; e < g.dim(); ++e) {
        const auto& m = g.elements[e];
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                if (is_zero(m(r, c))) continue;
                const int sr = side(r), sc = side(c);
                if (sr == 0 || sc == 0 || sr == sc) continue;
                if (dist[v1 - 1][r] != 1 || dist[v1 - 1][c] != 1) {
                    std::ostringstream msg;
                    msg << "element " << e << " has entry (" << r + 1 << "," << c + 1 << ") across the junction";
                    out.cross_violations.push_back(msg.str());
                }
            }
    }
    return out;
}

}  // namespace tripv
