#include "tripv/serialize.hpp"

#include <fstream>
#include <sstream>

#include "tripv/errors.hpp"

namespace tripv {

namespace {

std::size_t positive_index(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    const auto v = j.get<long long>();
    if (v < 1) throw ParseError(std::string(what) + " must be positive");
    return static_cast<std::size_t>(v);
}

}  // namespace

Json to_json(const TriangleArrangement& a) {
    Json tris = Json::array();
    for (const auto& t : a.triangles()) tris.push_back({t[0], t[1], t[2]});
    return Json{{"n", a.n()}, {"triangles", tris}};
}

TriangleArrangement arrangement_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("triangles"))
        throw ParseError("arrangement needs \"n\" and \"triangles\"");
    const std::size_t n = positive_index(j.at("n"), "n");
    const Json& list = j.at("triangles");
    if (!list.is_array()) throw ParseError("\"triangles\" must be an array");
    std::vector<std::array<long, 3>> tris;
    for (const auto& t : list) {
        if (!t.is_array() || t.size() != 3) throw ParseError("each triangle is a list of three vertices");
        std::array<long, 3> v{};
        for (std::size_t k = 0; k < 3; ++k) {
            if (!t[k].is_number_integer()) throw ParseError("vertex labels must be integers");
            v[k] = t[k].get<long>();
        }
        tris.push_back(v);
    }
    return TriangleArrangement(n, tris);
}

TriangleArrangement parse_arrangement(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return arrangement_from_json(j);
}

TriangleArrangement load_arrangement(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_arrangement(ss.str());
}

Json to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("rational must be a \"num/den\" string");
}

Json to_json(const RationalMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const MatrixBasis& b) {
    Json elems = Json::array();
    for (const auto& m : b.elements) {
        Json entries = Json::array();
        for (std::size_t i = 0; i < b.n; ++i)
            for (std::size_t k = 0; k < b.n; ++k)
                if (!is_zero(m(i, k))) entries.push_back({i + 1, k + 1, to_string(m(i, k))});
        elems.push_back(Json{{"entries", entries}});
    }
    return Json{{"dim", b.n}, {"elements", elems}};
}

MatrixBasis basis_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("elements")) throw ParseError("basis needs \"dim\" and \"elements\"");
    MatrixBasis b;
    b.n = positive_index(j.at("dim"), "dim");
    for (const auto& e : j.at("elements")) {
        if (!e.contains("entries") || !e.at("entries").is_array()) throw ParseError("element without entries");
        RationalMatrix m(b.n, b.n);
        for (const auto& t : e.at("entries")) {
            if (!t.is_array() || t.size() != 3) throw ParseError("entry must be [i, j, value]");
            const std::size_t i = positive_index(t[0], "row"), k = positive_index(t[1], "column");
            if (i > b.n || k > b.n) throw ParseError("entry outside the matrix");
            m(i - 1, k - 1) = rational_from_json(t[2]);
        }
        b.elements.push_back(std::move(m));
    }
    return b;
}

Json verdict_json(std::size_t dim_g, const RankVerdict& v, const std::optional<bool>& dual_pv,
                  const std::vector<std::size_t>& coordinate_invariants) {
    Json w = Json::array();
    if (v.witness)
        for (const auto& q : *v.witness) w.push_back(to_json(q));
    return Json{{"dim_g", dim_g},
                {"pv", v.pv},
                {"dual_pv", dual_pv ? Json(*dual_pv) : Json(nullptr)},
                {"witness", w},
                {"error_bound", to_json(v.error_bound)},
                {"coordinate_invariants", coordinate_invariants}};
}

Json to_json(const PVConfig& cfg) {
    return Json{{"mode", to_string(cfg.mode)},
                {"samples", cfg.samples},
                {"coord_bound", cfg.coord_bound},
                {"seed", cfg.seed}};
}

}  // namespace tripv
