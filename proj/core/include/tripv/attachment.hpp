#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tripv/arrangement.hpp"
#include "tripv/lie.hpp"
#include "tripv/prehomog.hpp"
#include "tripv/records.hpp"

namespace tripv {

/// Subalgebra h of g[p] cut out by forcing entries M_{ij} (1-based) to zero.
/// No constraints means h = g[p].
struct SubalgebraSpec {
    std::vector<std::pair<std::size_t, std::size_t>> zeros;
};

/// "2,4;2,5" -> {(2,4), (2,5)}. Throws ParseError.
SubalgebraSpec parse_zero_list(const std::string& text);
std::string to_string(const SubalgebraSpec& spec);

/// Basis of {M in g[p] : M_ij = 0 for every listed (i, j)}. Throws NotClosed
/// when that subspace is not a Lie subalgebra.
MatrixBasis subalgebra_basis(const SparsePolynomial& p, const SubalgebraSpec& spec);

/// x_v is a relative invariant of h iff row v of every element vanishes off the diagonal.
bool row_support_invariant(const MatrixBasis& h, Vertex v);

struct SideReport {
    std::size_t h_dim = 0;
    bool cond1 = false;  ///< h is PV
    bool cond2 = false;  ///< x_v relatively invariant under h
    std::vector<Triangle> qualifying;  ///< triangles {v, a, abar}, a isolated, x_abar invariant
    bool cond3 = false;
    bool no_edge_sharing = false;
    Rational error_bound = 0;
};

struct HypothesisReport {
    SideReport side1;
    SideReport side2;

    /// Every condition on both sides, edge sharing excluded.
    bool conditions_hold() const;
    /// conditions_hold() and neither side has edge sharing: the theorem applies.
    bool theorem_applies() const;
};

HypothesisReport check_hypotheses(const TriangleArrangement& a1, Vertex v1, const SubalgebraSpec& spec1,
                                  const TriangleArrangement& a2, Vertex v2, const SubalgebraSpec& spec2,
                                  const PVConfig& cfg = {});

struct AttachmentResult {
    HypothesisReport hypotheses;
    ClassificationRecord record;  ///< for the attached arrangement
    bool pairing_holds = false;   ///< M_{a ibar} = -M_{i abar} across the junction
    std::vector<std::string> cross_violations;  ///< cross-block entries outside d(0,i) = d(0,a) = 1
    /// theorem_applies() implies PV; false flags a contradiction.
    bool consistent() const;
};

/// Label of vertex u of a2 inside attach(a1, v1, a2, v2).
Vertex attached_label(std::size_t n1, const TriangleArrangement& a2, Vertex v1, Vertex v2, Vertex u);

AttachmentResult attach_and_verify(const TriangleArrangement& a1, Vertex v1, const SubalgebraSpec& spec1,
                                   const TriangleArrangement& a2, Vertex v2, const SubalgebraSpec& spec2,
                                   const PVConfig& cfg = {});

}  // namespace tripv
