#include "tripv/arrangement.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "tripv/errors.hpp"

namespace tripv {

namespace {

std::vector<Triangle> normalise(std::size_t n, std::vector<Triangle> tris) {
    for (auto& t : tris) {
        for (Vertex v : t) {
            if (v < 1 || v > n) {
                throw VertexOutOfRange("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
            }
        }
        std::sort(t.begin(), t.end());
        if (t[0] == t[1] || t[1] == t[2]) {
            throw DegenerateTriangle("triangle repeats vertex " + std::to_string(t[1]));
        }
    }
    std::sort(tris.begin(), tris.end());
    tris.erase(std::unique(tris.begin(), tris.end()), tris.end());
    return tris;
}

}  // namespace

TriangleArrangement::TriangleArrangement(std::size_t n, const std::vector<std::array<long, 3>>& triangles) : n_(n) {
    if (n == 0) throw SizeOutOfRange("an arrangement needs at least one vertex");
    std::vector<Triangle> tris;
    tris.reserve(triangles.size());
    for (const auto& t : triangles) {
        Triangle u{};
        for (int k = 0; k < 3; ++k) {
            if (t[k] < 1 || static_cast<unsigned long>(t[k]) > n) {
                throw VertexOutOfRange("vertex " + std::to_string(t[k]) + " outside 1.." + std::to_string(n));
            }
            u[k] = static_cast<Vertex>(t[k]);
        }
        tris.push_back(u);
    }
    triangles_ = normalise(n, std::move(tris));
}

TriangleArrangement::TriangleArrangement(std::size_t n, std::vector<Triangle> triangles)
    : n_(n), triangles_(normalise(n, std::move(triangles))) {
    if (n == 0) throw SizeOutOfRange("an arrangement needs at least one vertex");
}

void TriangleArrangement::check_vertex(Vertex i) const {
    if (i < 1 || i > n_) throw VertexOutOfRange("vertex " + std::to_string(i) + " outside 1.." + std::to_string(n_));
}

std::vector<Triangle> TriangleArrangement::star(Vertex i) const {
    check_vertex(i);
    std::vector<Triangle> out;
    for (const auto& t : triangles_) {
        if (t[0] == i || t[1] == i || t[2] == i) out.push_back(t);
    }
    return out;
}

std::size_t TriangleArrangement::degree(Vertex i) const { return star(i).size(); }

std::vector<Vertex> TriangleArrangement::isolated_vertices() const {
    std::vector<std::size_t> deg(n_ + 1, 0);
    for (const auto& t : triangles_)
        for (Vertex v : t) ++deg[v];
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= n_; ++v) {
        if (deg[v] == 1) out.push_back(v);
    }
    return out;
}

std::vector<Vertex> TriangleArrangement::black_circles() const {
    std::vector<bool> used(n_ + 1, false);
    for (const auto& t : triangles_)
        for (Vertex v : t) used[v] = true;
    std::vector<Vertex> out;
    for (Vertex v = 1; v <= n_; ++v) {
        if (!used[v]) out.push_back(v);
    }
    return out;
}

bool TriangleArrangement::has_edge_sharing() const {
    std::set<std::pair<Vertex, Vertex>> edges;
    for (const auto& t : triangles_) {
        for (auto e : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]}, std::pair{t[1], t[2]}}) {
            if (!edges.insert(e).second) return true;
        }
    }
    return false;
}

std::vector<std::vector<std::size_t>> TriangleArrangement::distance_matrix() const {
    constexpr auto kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::vector<Vertex>> adj(n_);
    for (const auto& t : triangles_) {
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (a != b) adj[t[a] - 1].push_back(t[b] - 1);
    }
    std::vector<std::vector<std::size_t>> dist(n_, std::vector<std::size_t>(n_, kInf));
    for (std::size_t s = 0; s < n_; ++s) {
        auto& d = dist[s];
        d[s] = 0;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (Vertex w : adj[u]) {
                if (d[w] == kInf) {
                    d[w] = d[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    return dist;
}

std::optional<std::size_t> TriangleArrangement::graph_distance(Vertex i, Vertex j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j) return 0;
    auto d = distance_matrix()[i - 1][j - 1];
    if (d == std::numeric_limits<std::size_t>::max()) return std::nullopt;
    return d;
}

std::vector<TriangleArrangement::Component> TriangleArrangement::connected_components() const {
    std::vector<Vertex> parent(n_ + 1);
    for (Vertex v = 0; v <= n_; ++v) parent[v] = v;
    auto find = [&](Vertex v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& t : triangles_) {
        parent[find(t[1])] = find(t[0]);
        parent[find(t[2])] = find(t[0]);
    }
    const auto black = black_circles();
    std::vector<bool> is_black(n_ + 1, false);
    for (Vertex v : black) is_black[v] = true;

    std::vector<Component> out;
    std::vector<int> slot(n_ + 1, -1);
    for (Vertex v = 1; v <= n_; ++v) {
        if (is_black[v]) continue;
        Vertex r = find(v);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.size());
            out.push_back({});
        }
        out[static_cast<std::size_t>(slot[r])].vertices.push_back(v);
    }
    for (Vertex v : black) out.push_back({{v}, true});
    return out;
}

TriangleArrangement TriangleArrangement::relabel(const std::vector<Vertex>& perm) const {
    if (perm.size() != n_) throw DimensionMismatch("relabelling has wrong length");
    std::vector<bool> seen(n_ + 1, false);
    for (Vertex v : perm) {
        check_vertex(v);
        if (seen[v]) throw DimensionMismatch("relabelling is not a permutation");
        seen[v] = true;
    }
    std::vector<Triangle> tris;
    tris.reserve(triangles_.size());
    for (const auto& t : triangles_) tris.push_back({perm[t[0] - 1], perm[t[1] - 1], perm[t[2] - 1]});
    return TriangleArrangement(n_, std::move(tris));
}

TriangleArrangement TriangleArrangement::remove_black_circle(Vertex v) const {
    check_vertex(v);
    if (degree(v) != 0) throw NoBlackCircle("vertex " + std::to_string(v) + " is not a black circle");
    if (n_ == 1) throw SizeOutOfRange("cannot remove the only vertex");
    std::vector<Triangle> tris;
    for (auto t : triangles_) {
        for (auto& u : t) {
            if (u > v) --u;
        }
        tris.push_back(t);
    }
    return TriangleArrangement(n_ - 1, std::move(tris));
}

TriangleArrangement attach(const TriangleArrangement& a1, Vertex v1, const TriangleArrangement& a2, Vertex v2) {
    if (v1 < 1 || v1 > a1.n()) throw VertexOutOfRange("attachment vertex " + std::to_string(v1) + " outside first arrangement");
    if (v2 < 1 || v2 > a2.n()) throw VertexOutOfRange("attachment vertex " + std::to_string(v2) + " outside second arrangement");
    const std::size_t n1 = a1.n();
    std::vector<Vertex> image(a2.n() + 1);
    Vertex next = static_cast<Vertex>(n1 + 1);
    for (Vertex u = 1; u <= a2.n(); ++u) image[u] = (u == v2) ? v1 : next++;
    std::vector<Triangle> tris = a1.triangles();
    for (const auto& t : a2.triangles()) tris.push_back({image[t[0]], image[t[1]], image[t[2]]});
    return TriangleArrangement(n1 + a2.n() - 1, std::move(tris));
}

TriangleArrangement disjoint_union(const TriangleArrangement& a1, const TriangleArrangement& a2) {
    const auto shift = static_cast<Vertex>(a1.n());
    std::vector<Triangle> tris = a1.triangles();
    for (const auto& t : a2.triangles()) tris.push_back({t[0] + shift, t[1] + shift, t[2] + shift});
    return TriangleArrangement(a1.n() + a2.n(), std::move(tris));
}

std::string to_string(const TriangleArrangement& a) {
    std::string s = "n=" + std::to_string(a.n()) + " {";
    bool first = true;
    for (const auto& t : a.triangles()) {
        if (!first) s += ",";
        first = false;
        s += "{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) + "}";
    }
    return s + "}";
}

}  // namespace tripv
