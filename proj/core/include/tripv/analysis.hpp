#pragma once

#include <string>

#include "tripv/arrangement.hpp"
#include "tripv/prehomog.hpp"
#include "tripv/records.hpp"

namespace tripv {

/// dim g, PV verdict, optional dual verdict and coordinate invariants of one
/// arrangement. The RNG stream is derived from the canonical key, so the
/// verdict does not depend on where the task sits in a batch.
ClassificationRecord analyze_arrangement(const TriangleArrangement& a, const PVConfig& cfg, bool dual,
                                         const std::string& source);

/// Record for the canonical representative of a's class.
ClassificationRecord analyze_class(const TriangleArrangement& a, const PVConfig& cfg, bool dual,
                                   const std::string& source);

}  // namespace tripv
