#include "tripv/records.hpp"

#include <fstream>
#include <map>

#include "tripv/errors.hpp"
#include "tripv/lie.hpp"
#include "tripv/linalg.hpp"
#include "tripv/prehomog.hpp"
#include "tripv/serialize.hpp"

namespace tripv {

std::string record_to_json_line(const ClassificationRecord& r) {
    Json w = Json::array();
    for (const auto& q : r.witness) w.push_back(to_json(q));
    Json j{{"schema", kRecordSchemaVersion},
           {"key", r.key},
           {"n", r.n()},
           {"triangles", to_json(r.arrangement).at("triangles")},
           {"triangle_count", r.triangle_count()},
           {"black_circles", r.black_circle_count()},
           {"dim_g", r.dim_g},
           {"pv", r.pv},
           {"error_bound", to_json(r.error_bound)},
           {"dual_pv", r.dual_pv ? Json(*r.dual_pv) : Json(nullptr)},
           {"coordinate_invariants", r.coordinate_invariants},
           {"witness", w},
           {"source", r.source}};
    return j.dump();
}

ClassificationRecord record_from_json_line(const std::string& line) {
    Json j;
    try {
        j = Json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw CorruptRecord(std::string("unparsable record: ") + e.what());
    }
    if (!j.is_object() || !j.contains("schema")) throw CorruptRecord("record without schema version");
    if (j.at("schema") != kRecordSchemaVersion)
        throw SchemaMismatch("record schema " + j.at("schema").dump() + ", expected " + std::to_string(kRecordSchemaVersion));
    ClassificationRecord r;
    try {
        r.key = j.at("key").get<std::string>();
        r.arrangement = arrangement_from_json(Json{{"n", j.at("n")}, {"triangles", j.at("triangles")}});
        r.dim_g = j.at("dim_g").get<std::size_t>();
        r.pv = j.at("pv").get<bool>();
        r.error_bound = rational_from_json(j.at("error_bound"));
        if (!j.at("dual_pv").is_null()) r.dual_pv = j.at("dual_pv").get<bool>();
        r.coordinate_invariants = j.at("coordinate_invariants").get<std::vector<std::size_t>>();
        for (const auto& q : j.at("witness")) r.witness.push_back(rational_from_json(q));
        r.source = j.at("source").get<std::string>();
        if (j.at("triangle_count").get<std::size_t>() != r.triangle_count() ||
            j.at("black_circles").get<std::size_t>() != r.black_circle_count())
            throw CorruptRecord("counts disagree with the stored arrangement");
    } catch (const nlohmann::json::exception& e) {
        throw CorruptRecord(std::string("malformed record: ") + e.what());
    } catch (const ParseError& e) {
        throw CorruptRecord(std::string("malformed record: ") + e.what());
    }
    if (r.dim_g < 1) throw CorruptRecord("dim_g must be positive");
    if (r.pv) {
        if (r.witness.size() != r.n()) throw CorruptRecord("PV record without a full witness");
        const SparsePolynomial p = cubic_of(r.arrangement);
        if (p.is_zero()) throw CorruptRecord("PV claimed for an arrangement without triangles");
        const MatrixBasis g = g_basis(p);
        if (rank(action_matrix(g, RationalVector(r.witness))) != r.n())
            throw CorruptRecord("stored witness fails the rank recheck for " + r.key);
    }
    return r;
}

void store_records(const std::string& path, const std::vector<ClassificationRecord>& records) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw CorruptRecord("cannot open " + path + " for appending");
    for (const auto& r : records) out << record_to_json_line(r) << '\n';
}

std::vector<ClassificationRecord> load_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CorruptRecord("cannot open " + path);
    std::vector<ClassificationRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(record_from_json_line(line));
    }
    return out;
}

std::vector<RecordChange> diff_records(const std::vector<ClassificationRecord>& baseline,
                                       const std::vector<ClassificationRecord>& current) {
    // Later records for a key supersede earlier ones (append-only store).
    std::map<std::string, const ClassificationRecord*> before, after;
    for (const auto& r : baseline) before[r.key] = &r;
    for (const auto& r : current) after[r.key] = &r;
    auto dual = [](const std::optional<bool>& d) { return d ? (*d ? "true" : "false") : "null"; };
    std::vector<RecordChange> out;
    for (const auto& [key, b] : before) {
        auto it = after.find(key);
        if (it == after.end()) {
            out.push_back({key, "removed", "", ""});
            continue;
        }
        const auto* a = it->second;
        if (b->dim_g != a->dim_g) out.push_back({key, "dim_g", std::to_string(b->dim_g), std::to_string(a->dim_g)});
        if (b->pv != a->pv) out.push_back({key, "pv", b->pv ? "true" : "false", a->pv ? "true" : "false"});
        if (b->dual_pv != a->dual_pv) out.push_back({key, "dual_pv", dual(b->dual_pv), dual(a->dual_pv)});
    }
    for (const auto& [key, a] : after)
        if (!before.count(key)) out.push_back({key, "added", "", ""});
    return out;
}

}  // namespace tripv
