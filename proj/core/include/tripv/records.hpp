#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tripv/arrangement.hpp"
#include "tripv/rational.hpp"

namespace tripv {

inline constexpr int kRecordSchemaVersion = 1;

/// Per-arrangement classification result, one JSON line in a record store.
struct ClassificationRecord {
    std::string key;  ///< canonical form key
    TriangleArrangement arrangement;  ///< the representative that was analysed
    std::size_t dim_g = 0;
    bool pv = false;
    Rational error_bound = 0;
    std::optional<bool> dual_pv;
    std::vector<std::size_t> coordinate_invariants;
    std::vector<Rational> witness;  ///< empty unless pv
    std::string source;             ///< family tag or triangulation provenance

    std::size_t n() const { return arrangement.n(); }
    std::size_t triangle_count() const { return arrangement.triangles().size(); }
    std::size_t black_circle_count() const { return arrangement.black_circles().size(); }

    friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

std::string record_to_json_line(const ClassificationRecord& r);
/// Throws SchemaMismatch on a different schema version, CorruptRecord on bad
/// content, including a stored PV witness that fails the rank recheck.
ClassificationRecord record_from_json_line(const std::string& line);

/// Appends to a JSON-lines file.
void store_records(const std::string& path, const std::vector<ClassificationRecord>& records);
std::vector<ClassificationRecord> load_records(const std::string& path);

struct RecordChange {
    std::string key;
    std::string field;  ///< "added", "removed", "dim_g", "pv", "dual_pv"
    std::string before;
    std::string after;
};

/// Verdict and dimension changes keyed by canonical form; witnesses, error
/// bounds and sources are ignored since they legitimately vary with the seed.
std::vector<RecordChange> diff_records(const std::vector<ClassificationRecord>& baseline,
                                       const std::vector<ClassificationRecord>& current);

}  // namespace tripv
