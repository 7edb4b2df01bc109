#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tripv {

using Vertex = std::uint32_t;          ///< 1-based vertex label
using Triangle = std::array<Vertex, 3>; ///< always sorted increasing

/// A 3-uniform hypergraph on vertices 1..n. Vertices in no triangle are
/// black circles; they still carry a coordinate.
class TriangleArrangement {
public:
    TriangleArrangement() = default;
    /// Validates and normalises (sorts each triple, sorts and dedups the list).
    TriangleArrangement(std::size_t n, const std::vector<std::array<long, 3>>& triangles);
    TriangleArrangement(std::size_t n, std::vector<Triangle> triangles);

    std::size_t n() const { return n_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }

    /// Triangles containing i.
    std::vector<Triangle> star(Vertex i) const;
    std::size_t degree(Vertex i) const;
    /// Vertices lying in exactly one triangle.
    std::vector<Vertex> isolated_vertices() const;
    std::vector<Vertex> black_circles() const;
    bool has_edge_sharing() const;

    /// BFS distance along triangle edges; nullopt when unreachable.
    std::optional<std::size_t> graph_distance(Vertex i, Vertex j) const;
    /// All-pairs distances, 0-based indices, SIZE_MAX for unreachable.
    std::vector<std::vector<std::size_t>> distance_matrix() const;

    struct Component {
        std::vector<Vertex> vertices;
        bool black = false;
    };
    /// Non-black components first (ordered by smallest vertex), then one
    /// singleton per black circle.
    std::vector<Component> connected_components() const;

    /// Image under the relabelling i -> perm[i-1] (perm is a permutation of 1..n).
    TriangleArrangement relabel(const std::vector<Vertex>& perm) const;
    /// Deletes vertex v (which must be a black circle) and shifts labels above it down.
    TriangleArrangement remove_black_circle(Vertex v) const;

    friend bool operator==(const TriangleArrangement&, const TriangleArrangement&) = default;

private:
    void check_vertex(Vertex i) const;

    std::size_t n_ = 0;
    std::vector<Triangle> triangles_;
};

/// Glue a2 onto a1 by identifying v2 with v1. a1 keeps its labels; the other
/// vertices of a2 become n1+1, n1+2, ... in increasing original order.
TriangleArrangement attach(const TriangleArrangement& a1, Vertex v1, const TriangleArrangement& a2, Vertex v2);

/// a1 followed by a2 shifted by n1.
TriangleArrangement disjoint_union(const TriangleArrangement& a1, const TriangleArrangement& a2);

std::string to_string(const TriangleArrangement& a);

}  // namespace tripv
