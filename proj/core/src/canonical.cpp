#include "tripv/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "tripv/errors.hpp"

namespace tripv {

namespace {

using Coloring = std::vector<std::uint32_t>;

struct Search {
    std::size_t m = 0;
    std::vector<std::array<std::uint32_t, 3>> tris;        // 0-based, non-black only
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> partners;  // per vertex: other two
    std::uint64_t cap = 0;
    std::uint64_t nodes = 0;
    std::optional<std::vector<Triangle>> best;

    // Re-rank vertices by signature until the number of cells is stable.
    // The old colour leads every signature, so existing cell order is kept.
    Coloring refine(Coloring c) const {
        std::size_t cells = count_cells(c);
        for (;;) {
            std::vector<std::pair<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>>> sig(m);
            for (std::size_t v = 0; v < m; ++v) {
                sig[v].first = c[v];
                auto& s = sig[v].second;
                for (auto [a, b] : partners[v]) s.emplace_back(std::min(c[a], c[b]), std::max(c[a], c[b]));
                std::sort(s.begin(), s.end());
            }
            auto sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            Coloring next(m);
            for (std::size_t v = 0; v < m; ++v) {
                next[v] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
            }
            const std::size_t now = sorted.size();
            c = std::move(next);
            if (now == cells) return c;
            cells = now;
        }
    }

    static std::size_t count_cells(const Coloring& c) {
        std::vector<std::uint32_t> s(c);
        std::sort(s.begin(), s.end());
        return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
    }

    void visit(const Coloring& c) {
        if (++nodes > cap) throw TooLarge("canonical form search exceeded " + std::to_string(cap) + " nodes");
        // First (lowest colour) non-singleton cell.
        std::vector<std::uint32_t> size(m, 0);
        for (auto col : c) ++size[col];
        std::optional<std::uint32_t> target;
        for (std::uint32_t col = 0; col < m; ++col) {
            if (size[col] > 1) {
                target = col;
                break;
            }
        }
        if (!target) {
            leaf(c);
            return;
        }
        for (std::size_t v = 0; v < m; ++v) {
            if (c[v] != *target) continue;
            // Individualise v ahead of the rest of its cell.
            Coloring split(m);
            for (std::size_t u = 0; u < m; ++u) split[u] = 2 * c[u] + ((c[u] == *target && u != v) ? 1U : 0U);
            std::vector<std::uint32_t> s(split);
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            for (auto& x : split) x = static_cast<std::uint32_t>(std::lower_bound(s.begin(), s.end(), x) - s.begin());
            visit(refine(std::move(split)));
        }
    }

    void leaf(const Coloring& c) {
        std::vector<Triangle> relabeled;
        relabeled.reserve(tris.size());
        for (const auto& t : tris) {
            Triangle u{c[t[0]] + 1, c[t[1]] + 1, c[t[2]] + 1};
            std::sort(u.begin(), u.end());
            relabeled.push_back(u);
        }
        std::sort(relabeled.begin(), relabeled.end());
        if (!best || relabeled < *best) best = std::move(relabeled);
    }
};

}  // namespace

std::string CanonicalForm::key() const {
    std::string s = std::to_string(vertices) + "+" + std::to_string(black_circles) + ":";
    bool first = true;
    for (const auto& t : triangles) {
        if (!first) s += ";";
        first = false;
        s += std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
    }
    return s;
}

TriangleArrangement CanonicalForm::to_arrangement() const {
    return TriangleArrangement(vertices + black_circles, triangles);
}

CanonicalForm canonical_form(const TriangleArrangement& a, std::uint64_t node_cap) {
    const auto black = a.black_circles();
    std::vector<bool> is_black(a.n() + 1, false);
    for (Vertex v : black) is_black[v] = true;
    std::vector<std::uint32_t> index(a.n() + 1, 0);
    std::uint32_t m = 0;
    for (Vertex v = 1; v <= a.n(); ++v) {
        if (!is_black[v]) index[v] = m++;
    }

    Search s;
    s.m = m;
    s.cap = node_cap;
    s.partners.resize(m);
    for (const auto& t : a.triangles()) {
        std::array<std::uint32_t, 3> u{index[t[0]], index[t[1]], index[t[2]]};
        s.tris.push_back(u);
        s.partners[u[0]].emplace_back(u[1], u[2]);
        s.partners[u[1]].emplace_back(u[0], u[2]);
        s.partners[u[2]].emplace_back(u[0], u[1]);
    }

    CanonicalForm form;
    form.vertices = m;
    form.black_circles = black.size();
    if (m > 0) {
        s.visit(s.refine(Coloring(m, 0)));
        form.triangles = std::move(*s.best);
    }
    return form;
}

}  // namespace tripv
