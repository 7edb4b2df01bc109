#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "tripv/attachment.hpp"
#include "tripv/families.hpp"
#include "tripv/prehomog.hpp"

namespace tripv::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNotPV = 2;

struct RunConfig {
    PVConfig pv;
    std::size_t jobs = 1;
    std::string out;  ///< optional output file (records for enumerate, JSON otherwise)
    bool dual = true;
};

/// Warnings for settings the rank test cannot honour (empty when fine).
std::string validate(const RunConfig& cfg, std::size_t largest_dim);

int cmd_analyze(const std::string& file, const RunConfig& cfg, std::ostream& out,
                const std::optional<std::string>& invariants_file = std::nullopt);
int cmd_enumerate(std::size_t n, const RunConfig& cfg, std::ostream& out, std::ostream& log);
int cmd_family(const FamilyKind& kind, const RunConfig& cfg, std::ostream& out);
int cmd_attach(const std::string& file1, Vertex v1, const SubalgebraSpec& spec1, const std::string& file2, Vertex v2,
               const SubalgebraSpec& spec2, const RunConfig& cfg, std::ostream& out);
int cmd_reduce(const std::string& file, std::ostream& out);

}  // namespace tripv::cli
