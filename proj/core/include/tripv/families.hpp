#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tripv/arrangement.hpp"
#include "tripv/lie.hpp"
#include "tripv/matrix.hpp"
#include "tripv/polynomial.hpp"
#include "tripv/prehomog.hpp"

namespace tripv {

enum class Family { Daisy, Chain, Circular, EdgeGluing };

struct FamilyKind {
    Family family = Family::Daisy;
    std::size_t n = 2;

    friend bool operator==(const FamilyKind&, const FamilyKind&) = default;
};

std::string to_string(Family f);
/// Accepts "daisy", "chain", "circular", "edge_gluing" (or "edge-gluing").
Family parse_family(const std::string& name);
/// e.g. "chain(4)"; also the source tag of family records.
std::string to_string(const FamilyKind& k);

/// Smallest admissible size: 3 for circular, 2 otherwise.
std::size_t min_size(Family f);

TriangleArrangement make(const FamilyKind& kind);

/// Closed-form dim g[p]. Circular 3 and 4 and chain 2 fall outside the
/// general formulas and return the values the nullspace computation gives.
std::size_t expected_dimension(const FamilyKind& kind);

struct ExpectedInvariant {
    std::string name;
    SparsePolynomial polynomial;
    bool dual = false;  ///< relative invariant of the contragredient action
};

std::vector<ExpectedInvariant> expected_invariants(const FamilyKind& kind);

/// One generator per free parameter of the displayed general element.
struct BasisPattern {
    std::size_t n = 0;
    std::vector<std::string> parameters;
    std::vector<RationalMatrix> generators;

    /// Entries that may be nonzero.
    std::vector<std::vector<bool>> support() const;
    /// m obeys the support mask and the linear relations among entries.
    bool allows(const RationalMatrix& m) const;
};

/// nullopt where no closed pattern is known (chain 2, circular 3 and 4).
std::optional<BasisPattern> expected_basis_pattern(const FamilyKind& kind);

/// det[B_1 x | ... | B_m x] over a square selection of pattern generators,
/// against a closed-form factorization.
struct DeterminantIdentity {
    std::vector<RationalMatrix> columns;
    SparsePolynomial expected;
    bool up_to_sign = false;
    std::string description;
};

std::optional<DeterminantIdentity> determinant_identity(const FamilyKind& kind);

struct DeterminantCheck {
    bool holds = false;
    std::size_t points = 0;
    bool sign_flipped = false;  ///< det = -expected at every point (only tolerated when up_to_sign)
};

/// Evaluates both sides at `points` seeded rational points.
DeterminantCheck check_determinant_identity(const DeterminantIdentity& id, std::size_t points, std::uint64_t seed);

struct FamilyCheck {
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

struct FamilyReport {
    FamilyKind kind;
    std::size_t dim_g = 0;
    std::size_t expected_dim = 0;
    bool pv = false;
    std::optional<bool> dual_pv;
    std::optional<bool> expected_dual_pv;
    std::vector<FamilyCheck> checks;

    bool all_passed() const;
};

/// Expected dual verdict where one is known in closed form.
std::optional<bool> expected_dual_pv(const FamilyKind& kind);

/// Dimension, PV verdict, primal and dual invariants, dual parity rule,
/// pattern span equality, solvability and the determinant identity at
/// cfg.samples random points.
FamilyReport verify_family(const FamilyKind& kind, const PVConfig& cfg = {});

}  // namespace tripv
