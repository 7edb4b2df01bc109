#include "tripv/triangulation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tripv/analysis.hpp"
#include "tripv/canonical.hpp"
#include "tripv/errors.hpp"
#include "tripv/lie.hpp"
#include "tripv/parallel.hpp"
#include "tripv/polynomial.hpp"

namespace tripv {

namespace {

using Edge = std::pair<Vertex, Vertex>;

bool polygon_edge(std::size_t n, Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return b == a + 1 || (a == 1 && b == n);
}

bool crossing(const Edge& d, const Edge& e) {
    return (d.first < e.first && e.first < d.second && d.second < e.second) ||
           (e.first < d.first && d.first < e.second && e.second < d.second);
}

Triangle sorted(Vertex a, Vertex b, Vertex c) {
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace

PolygonTriangulation::PolygonTriangulation(std::size_t n, std::vector<Triangle> triangles) : n_(n) {
    if (n < 3) throw SizeOutOfRange("a polygon needs at least 3 vertices");
    triangles_ = TriangleArrangement(n, std::move(triangles)).triangles();
    if (triangles_.size() != n - 2) throw Error("a triangulation of an n-gon has n-2 triangles");
    std::map<Edge, int> uses;
    for (const auto& t : triangles_) {
        for (auto e : {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}}) ++uses[e];
    }
    std::vector<Edge> diags;
    for (const auto& [e, k] : uses) {
        if (polygon_edge(n, e.first, e.second)) {
            if (k != 1) throw Error("polygon edge used by more than one triangle");
        } else {
            if (k != 2) throw Error("diagonal not shared by exactly two triangles");
            diags.push_back(e);
        }
    }
    for (Vertex v = 1; v <= n; ++v) {
        const Vertex w = v == n ? 1 : v + 1;
        if (!uses.count(Edge{std::min(v, w), std::max(v, w)})) throw Error("polygon edge not covered");
    }
    for (std::size_t i = 0; i < diags.size(); ++i)
        for (std::size_t j = i + 1; j < diags.size(); ++j)
            if (crossing(diags[i], diags[j])) throw Error("crossing diagonals");
}

std::vector<Edge> PolygonTriangulation::diagonals() const {
    std::set<Edge> out;
    for (const auto& t : triangles_) {
        for (auto e : {Edge{t[0], t[1]}, Edge{t[0], t[2]}, Edge{t[1], t[2]}}) {
            if (!polygon_edge(n_, e.first, e.second)) out.insert(e);
        }
    }
    return {out.begin(), out.end()};
}

PolygonTriangulation PolygonTriangulation::from_diagonals(std::size_t n, const std::vector<Edge>& diagonals) {
    std::set<Edge> edges;
    for (auto [a, b] : diagonals) edges.insert({std::min(a, b), std::max(a, b)});
    for (Vertex v = 1; v < n; ++v) edges.insert({v, v + 1});
    edges.insert({1, static_cast<Vertex>(n)});
    std::vector<Triangle> tris;
    for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = a + 1; b <= n; ++b)
            if (edges.count({a, b}))
                for (Vertex c = b + 1; c <= n; ++c)
                    if (edges.count({a, c}) && edges.count({b, c})) tris.push_back({a, b, c});
    return PolygonTriangulation(n, std::move(tris));
}

PolygonTriangulation PolygonTriangulation::fan(std::size_t n) {
    std::vector<Triangle> tris;
    for (Vertex k = 2; k + 1 <= n; ++k) tris.push_back({1, k, k + 1});
    return PolygonTriangulation(n, std::move(tris));
}

Integer catalan(unsigned k) {
    Integer c = 1;
    for (unsigned i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

void enumerate_triangulations(std::size_t n, const std::function<void(const PolygonTriangulation&)>& visit) {
    if (n < 3) throw SizeOutOfRange("a polygon needs at least 3 vertices");
    // Pending sub-polygons [a, b] (contiguous ranges with base edge ab).
    std::vector<Triangle> chosen;
    auto rec = [&](auto&& self, std::vector<Edge> pending) -> void {
        while (!pending.empty() && pending.back().second - pending.back().first < 2) pending.pop_back();
        if (pending.empty()) {
            visit(PolygonTriangulation(n, chosen));
            return;
        }
        const auto [a, b] = pending.back();
        pending.pop_back();
        for (Vertex k = a + 1; k < b; ++k) {
            chosen.push_back(sorted(a, k, b));
            auto next = pending;
            next.push_back({k, b});
            next.push_back({a, k});
            self(self, std::move(next));
            chosen.pop_back();
        }
    };
    rec(rec, {{1, static_cast<Vertex>(n)}});
}

std::vector<PolygonTriangulation> all_triangulations(std::size_t n) {
    std::vector<PolygonTriangulation> out;
    enumerate_triangulations(n, [&](const PolygonTriangulation& t) { out.push_back(t); });
    return out;
}

std::vector<Edge> dihedral_key(const PolygonTriangulation& t) {
    const std::size_t n = t.n();
    const auto diags = t.diagonals();
    std::vector<Edge> best;
    bool have = false;
    for (int reflect = 0; reflect < 2; ++reflect) {
        for (std::size_t r = 0; r < n; ++r) {
            std::vector<Edge> img;
            img.reserve(diags.size());
            for (auto [a, b] : diags) {
                auto map = [&](Vertex v) -> Vertex {
                    std::size_t z = v - 1;
                    if (reflect) z = (n - z) % n;
                    return static_cast<Vertex>((z + r) % n + 1);
                };
                Vertex x = map(a);
                Vertex y = map(b);
                img.push_back({std::min(x, y), std::max(x, y)});
            }
            std::sort(img.begin(), img.end());
            if (!have || img < best) {
                best = std::move(img);
                have = true;
            }
        }
    }
    return best;
}

std::vector<PolygonTriangulation> dihedral_classes(std::size_t n) {
    std::set<std::vector<Edge>> keys;
    enumerate_triangulations(n, [&](const PolygonTriangulation& t) { keys.insert(dihedral_key(t)); });
    std::vector<PolygonTriangulation> out;
    out.reserve(keys.size());
    for (const auto& k : keys) out.push_back(PolygonTriangulation::from_diagonals(n, k));
    return out;
}

Reduction reduce(const TriangleArrangement& t) {
    const std::size_t n = t.n();
    Reduction red;
    red.shear = RationalMatrix::identity(n);
    std::vector<Triangle> tris = t.triangles();
    for (;;) {
        std::vector<std::size_t> deg(n + 1, 0);
        for (const auto& tri : tris)
            for (Vertex v : tri) ++deg[v];
        std::optional<std::tuple<Triangle, Triangle, Vertex, Vertex>> best;
        for (const auto& t1 : tris) {
            for (Vertex k : t1) {
                if (deg[k] != 1) continue;
                Vertex i = 0;
                Vertex j = 0;
                for (Vertex v : t1) {
                    if (v == k) continue;
                    (i == 0 ? i : j) = v;
                }
                for (const auto& t2 : tris) {
                    if (t2 == t1) continue;
                    const bool has_i = std::find(t2.begin(), t2.end(), i) != t2.end();
                    const bool has_j = std::find(t2.begin(), t2.end(), j) != t2.end();
                    if (!has_i || !has_j) continue;
                    Vertex l = 0;
                    for (Vertex v : t2) {
                        if (v != i && v != j) l = v;
                    }
                    auto cand = std::make_tuple(t2, t1, k, l);
                    if (!best || cand < *best) best = cand;
                }
            }
        }
        if (!best) break;
        const auto& [t2, t1, k, l] = *best;
        red.steps.push_back({t1, t2, k, l});
        // x = S z with x_k = z_k - z_l absorbs the monomial of T2.
        RationalMatrix step = RationalMatrix::identity(n);
        step(k - 1, l - 1) = -1;
        red.shear = red.shear * step;
        tris.erase(std::find(tris.begin(), tris.end(), t2));
    }
    red.result = TriangleArrangement(n, std::move(tris));
    return red;
}

bool reduction_soundness_check(const TriangleArrangement& t) {
    const Reduction red = reduce(t);
    return cubic_of(red.result) == substitute_linear(cubic_of(t), red.shear);
}

ClassifyResult classify(std::size_t n, const ClassifyConfig& cfg) {
    if (n < 3) throw SizeOutOfRange("classification needs n >= 3");
    const auto reps = dihedral_classes(n);

    struct Reduced {
        CanonicalForm form;
        bool sound = true;
    };
    const auto reduced = parallel_map(reps.size(), cfg.jobs, [&](std::size_t i) {
        Reduced r;
        const TriangleArrangement a = reps[i].arrangement();
        const Reduction red = reduce(a);
        if (cfg.check_soundness) r.sound = cubic_of(red.result) == substitute_linear(cubic_of(a), red.shear);
        r.form = canonical_form(red.result);
        return r;
    });

    ClassifyResult res;
    std::map<CanonicalForm, std::size_t> counts;
    for (const auto& r : reduced) {
        ++counts[r.form];
        if (!r.sound) ++res.soundness_failures;
    }
    std::vector<CanonicalForm> forms;
    for (const auto& [f, c] : counts) {
        forms.push_back(f);
        res.multiplicity.push_back(c);
    }
    res.classes = parallel_map(forms.size(), cfg.jobs, [&](std::size_t i) {
        return analyze_arrangement(forms[i].to_arrangement(), cfg.pv, cfg.dual, "triangulation:n=" + std::to_string(n));
    });
    // Sort by key; keep multiplicities aligned.
    std::vector<std::size_t> order(forms.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return res.classes[x].key < res.classes[y].key; });
    std::vector<ClassificationRecord> classes;
    std::vector<std::size_t> mult;
    for (auto i : order) {
        classes.push_back(std::move(res.classes[i]));
        mult.push_back(res.multiplicity[i]);
    }
    res.classes = std::move(classes);
    res.multiplicity = std::move(mult);

    res.row.n = n;
    res.row.count_a = reps.size();
    res.row.count_b = res.classes.size();
    res.row.count_c = static_cast<std::size_t>(
        std::count_if(res.classes.begin(), res.classes.end(), [](const ClassificationRecord& r) { return r.pv; }));
    return res;
}

std::optional<TableRow> reference_row(std::size_t n) {
    static const std::map<std::size_t, TableRow> table = {
        {6, {6, 3, 3, 2}},          {7, {7, 4, 2, 2}},           {8, {8, 12, 7, 4}},
        {9, {9, 27, 7, 3}},         {10, {10, 82, 26, 9}},       {11, {11, 228, 37, 7}},
        {12, {12, 733, 137, 23}},   {13, {13, 2282, 298, 18}},   {14, {14, 7528, 993, 61}},
        {15, {15, 24834, 2726, 56}}, {16, {16, 83898, 8749, 174}}, {17, {17, 285357, 26446, 186}},
    };
    auto it = table.find(n);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

std::string discrepancy_report(const ClassifyResult& result) {
    const auto ref = reference_row(result.row.n);
    if (!ref || *ref == result.row) return {};
    std::ostringstream out;
    out << "discrepancy at n=" << result.row.n << ": computed (A,B,C) = (" << result.row.count_a << ","
        << result.row.count_b << "," << result.row.count_c << "), published (" << ref->count_a << "," << ref->count_b
        << "," << ref->count_c << ")\n";
    out << "reduced classes (key, dihedral multiplicity, dim g, pv, black circles):\n";
    for (std::size_t i = 0; i < result.classes.size(); ++i) {
        const auto& c = result.classes[i];
        out << "  " << c.key << "  x" << result.multiplicity[i] << "  dim=" << c.dim_g << "  pv=" << (c.pv ? "yes" : "no")
            << "  black=" << c.black_circle_count() << "\n";
    }
    return out.str();
}

std::string to_csv(const TableRow& row) {
    return std::to_string(row.n) + "," + std::to_string(row.count_a) + "," + std::to_string(row.count_b) + "," +
           std::to_string(row.count_c);
}

}  // namespace tripv
