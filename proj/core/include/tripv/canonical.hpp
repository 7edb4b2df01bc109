#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "tripv/arrangement.hpp"

namespace tripv {

/// Relabelling-invariant key of an arrangement. Non-black vertices are
/// relabelled 1..m; black circles are interchangeable and kept as a count.
struct CanonicalForm {
    std::size_t vertices = 0;  ///< non-black vertex count m
    std::vector<Triangle> triangles;
    std::size_t black_circles = 0;

    /// Compact text key, stable across runs; used as the records key.
    std::string key() const;
    /// The canonical representative, black circles labelled m+1..m+b.
    TriangleArrangement to_arrangement() const;

    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr std::uint64_t kDefaultCanonicalNodeCap = 10'000'000;

/// Individualisation-refinement search for the lexicographically least
/// relabelled triangle set. Throws TooLarge past node_cap search nodes.
CanonicalForm canonical_form(const TriangleArrangement& a, std::uint64_t node_cap = kDefaultCanonicalNodeCap);

}  // namespace tripv
