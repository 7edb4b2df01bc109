#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tripv/arrangement.hpp"
#include "tripv/matrix.hpp"
#include "tripv/prehomog.hpp"
#include "tripv/records.hpp"

namespace tripv {

/// Triangulation of the convex n-gon with vertices 1..n in cyclic order.
class PolygonTriangulation {
public:
    /// Validates: n-2 triangles, pairwise non-crossing diagonals, every
    /// polygon edge used.
    PolygonTriangulation(std::size_t n, std::vector<Triangle> triangles);

    std::size_t n() const { return n_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }
    /// Sorted (a, b) pairs with a < b, polygon edges excluded.
    std::vector<std::pair<Vertex, Vertex>> diagonals() const;
    TriangleArrangement arrangement() const { return TriangleArrangement(n_, triangles_); }

    static PolygonTriangulation from_diagonals(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& diagonals);
    /// All triangles through vertex 1.
    static PolygonTriangulation fan(std::size_t n);

private:
    std::size_t n_;
    std::vector<Triangle> triangles_;
};

Integer catalan(unsigned k);

/// Streams every triangulation (Catalan(n-2) of them) to the callback.
void enumerate_triangulations(std::size_t n, const std::function<void(const PolygonTriangulation&)>& visit);
std::vector<PolygonTriangulation> all_triangulations(std::size_t n);

/// Smallest diagonal list over the 2n rotations and reflections.
std::vector<std::pair<Vertex, Vertex>> dihedral_key(const PolygonTriangulation& t);
/// One representative per dihedral orbit (the decoded minimal key), sorted by key.
std::vector<PolygonTriangulation> dihedral_classes(std::size_t n);

struct ReductionStep {
    Triangle kept;     ///< T1 = {i, j, k}
    Triangle removed;  ///< T2 = {i, j, l}
    Vertex apex;       ///< k, isolated, only in T1
    Vertex other;      ///< l
};

struct Reduction {
    TriangleArrangement result;
    RationalMatrix shear;  ///< x = S z turns cubic_of(t) into cubic_of(result)
    std::vector<ReductionStep> steps;
};

/// Deletes the edge-sharing partner T2 of a triangle T1 whose apex k lies only
/// in T1, via x_k = z_k - z_l; lexicographically least (T2, T1, k) first,
/// repeated to a fixed point.
Reduction reduce(const TriangleArrangement& t);
inline Reduction reduce(const PolygonTriangulation& t) { return reduce(t.arrangement()); }

/// cubic_of(reduce(t).result) == substitute_linear(cubic_of(t), S).
bool reduction_soundness_check(const TriangleArrangement& t);

struct TableRow {
    std::size_t n = 0;
    std::size_t count_a = 0;
    std::size_t count_b = 0;
    std::size_t count_c = 0;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct ClassifyConfig {
    PVConfig pv;
    std::size_t jobs = 1;
    bool dual = true;           ///< also run the dual test per class
    bool check_soundness = true;
};

struct ClassifyResult {
    TableRow row;
    std::vector<ClassificationRecord> classes;  ///< one per reduced class, sorted by key
    std::vector<std::size_t> multiplicity;      ///< dihedral classes reducing to each
    std::size_t soundness_failures = 0;
};

ClassifyResult classify(std::size_t n, const ClassifyConfig& cfg = {});

/// Published counts (A, B, C) for 6 <= n <= 17.
std::optional<TableRow> reference_row(std::size_t n);

/// Human-readable comparison against reference_row; empty when all match.
std::string discrepancy_report(const ClassifyResult& result);

std::string to_csv(const TableRow& row);

}  // namespace tripv
