#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tripv/analysis.hpp"
#include "tripv/canonical.hpp"
#include "tripv/errors.hpp"
#include "tripv/parallel.hpp"
#include "tripv/serialize.hpp"
#include "tripv/triangulation.hpp"

namespace tripv::cli {

namespace {

Json config_header(const RunConfig& cfg) {
    Json j = to_json(cfg.pv);
    j["jobs"] = cfg.jobs;
    return j;
}

void emit(const Json& j, const RunConfig& cfg, std::ostream& out) {
    const std::string text = j.dump(2);
    out << text << '\n';
    if (!cfg.out.empty()) {
        std::ofstream f(cfg.out);
        if (!f) throw ParseError("cannot write " + cfg.out);
        f << text << '\n';
    }
}

Json record_json(const ClassificationRecord& r) { return Json::parse(record_to_json_line(r)); }

MatrixBasis algebra_of(const TriangleArrangement& a) {
    const SparsePolynomial p = cubic_of(a);
    if (!p.is_zero()) return g_basis(p);
    MatrixBasis g;
    g.n = a.n();
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) g.elements.push_back(RationalMatrix::unit(a.n(), i, j));
    return g;
}

}  // namespace

std::string validate(const RunConfig& cfg, std::size_t largest_dim) {
    if (cfg.pv.samples < 1) throw ParseError("--samples must be at least 1");
    if (cfg.pv.coord_bound < 2) throw ParseError("--coord-bound must be at least 2");
    if (cfg.pv.coord_bound < largest_dim)
        return "warning: coord bound " + std::to_string(cfg.pv.coord_bound) + " is below dim V = " +
               std::to_string(largest_dim) + "; the NotPV error bound is vacuous";
    return {};
}

int cmd_analyze(const std::string& file, const RunConfig& cfg, std::ostream& out,
                const std::optional<std::string>& invariants_file) {
    const TriangleArrangement a = load_arrangement(file);
    if (auto w = validate(cfg, a.n()); !w.empty()) std::cerr << w << '\n';
    const std::string key = canonical_form(a).key();
    const MatrixBasis g = algebra_of(a);
    PVConfig local = cfg.pv;
    local.task_id = stable_hash(key) ^ cfg.pv.task_id;
    const RankVerdict v = is_prehomogeneous(g, local);
    std::optional<bool> dual;
    if (cfg.dual) dual = is_dual_prehomogeneous(g, local).pv;

    Json j{{"config", config_header(cfg)}, {"arrangement", to_json(a)}, {"key", key}};
    j.update(verdict_json(g.dim(), v, dual, coordinate_invariants(g)));
    if (invariants_file) {
        std::ifstream in(*invariants_file);
        if (!in) throw ParseError("cannot open " + *invariants_file);
        const MatrixBasis gt = transpose_basis(g);
        Json checks = Json::array();
        std::string line;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
            bool is_dual = false;
            if (line.rfind("dual:", 0) == 0) {
                is_dual = true;
                line = line.substr(5);
            }
            const SparsePolynomial q = parse_polynomial(line, a.n());
            const InvariantReport r = relative_invariant_character(q, is_dual ? gt : g);
            Json character = Json::array();
            for (const auto& c : r.character) character.push_back(to_json(c));
            checks.push_back(Json{{"polynomial", to_string(q)},
                                  {"dual", is_dual},
                                  {"relative_invariant", r.is_relative_invariant},
                                  {"character", character}});
        }
        j["invariant_checks"] = checks;
    }
    emit(j, cfg, out);
    return v.pv ? kExitOk : kExitNotPV;
}

int cmd_enumerate(std::size_t n, const RunConfig& cfg, std::ostream& out, std::ostream& log) {
    if (n < 6) throw SizeOutOfRange("enumerate needs n >= 6");
    if (auto w = validate(cfg, n); !w.empty()) log << w << '\n';
    ClassifyConfig cc;
    cc.pv = cfg.pv;
    cc.jobs = cfg.jobs;
    cc.dual = cfg.dual;
    log << "enumerating " << catalan(static_cast<unsigned>(n - 2)).get_str() << " triangulations of the " << n
        << "-gon\n";
    const ClassifyResult res = classify(n, cc);
    log << res.row.count_a << " dihedral classes reduced to " << res.row.count_b << " arrangements\n";
    out << "# seed=" << cfg.pv.seed << " samples=" << cfg.pv.samples << " coord_bound=" << cfg.pv.coord_bound
        << " mode=" << to_string(cfg.pv.mode) << " jobs=" << cfg.jobs << '\n';
    out << "n,count_a,count_b,count_c\n" << to_csv(res.row) << '\n';
    if (res.soundness_failures) out << "# soundness failures: " << res.soundness_failures << '\n';
    const std::string report = discrepancy_report(res);
    if (!report.empty()) {
        std::istringstream lines(report);
        std::string line;
        while (std::getline(lines, line)) out << "# " << line << '\n';
    }
    if (!cfg.out.empty()) {
        std::remove(cfg.out.c_str());
        store_records(cfg.out, res.classes);
    }
    return res.soundness_failures ? kExitError : kExitOk;
}

int cmd_family(const FamilyKind& kind, const RunConfig& cfg, std::ostream& out) {
    const TriangleArrangement a = make(kind);
    if (auto w = validate(cfg, a.n()); !w.empty()) std::cerr << w << '\n';
    const FamilyReport rep = verify_family(kind, cfg.pv);
    Json oracle = Json::array();
    for (const auto& inv : expected_invariants(kind))
        oracle.push_back(Json{{"name", inv.name},
                              {"dual", inv.dual},
                              {"degree", inv.polynomial.degree()},
                              {"polynomial", to_string(inv.polynomial)}});
    Json checks = Json::array();
    for (const auto& c : rep.checks)
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"skipped", c.skipped}, {"detail", c.detail}});
    Json j{{"config", config_header(cfg)},
           {"family", to_string(kind.family)},
           {"n", kind.n},
           {"arrangement", to_json(a)},
           {"oracle", oracle},
           {"report",
            Json{{"dim_g", rep.dim_g},
                 {"expected_dim", rep.expected_dim},
                 {"pv", rep.pv},
                 {"dual_pv", rep.dual_pv ? Json(*rep.dual_pv) : Json(nullptr)},
                 {"expected_dual_pv", rep.expected_dual_pv ? Json(*rep.expected_dual_pv) : Json(nullptr)},
                 {"all_passed", rep.all_passed()},
                 {"checks", checks}}}};
    emit(j, cfg, out);
    if (!rep.pv) return kExitNotPV;
    return rep.all_passed() ? kExitOk : kExitError;
}

int cmd_attach(const std::string& file1, Vertex v1, const SubalgebraSpec& spec1, const std::string& file2, Vertex v2,
               const SubalgebraSpec& spec2, const RunConfig& cfg, std::ostream& out) {
    const TriangleArrangement a1 = load_arrangement(file1);
    const TriangleArrangement a2 = load_arrangement(file2);
    const AttachmentResult r = attach_and_verify(a1, v1, spec1, a2, v2, spec2, cfg.pv);
    auto side = [](const SideReport& s, const SubalgebraSpec& spec) {
        Json q = Json::array();
        for (const auto& t : s.qualifying) q.push_back({t[0], t[1], t[2]});
        return Json{{"zeros", to_string(spec)},
                    {"h_dim", s.h_dim},
                    {"cond1", s.cond1},
                    {"cond2", s.cond2},
                    {"cond3", s.cond3},
                    {"qualifying", q},
                    {"no_edge_sharing", s.no_edge_sharing}};
    };
    Json j{{"config", config_header(cfg)},
           {"hypotheses",
            Json{{"side1", side(r.hypotheses.side1, spec1)},
                 {"side2", side(r.hypotheses.side2, spec2)},
                 {"conditions_hold", r.hypotheses.conditions_hold()},
                 {"theorem_applies", r.hypotheses.theorem_applies()}}},
           {"record", record_json(r.record)},
           {"pairing_holds", r.pairing_holds},
           {"cross_violations", r.cross_violations},
           {"consistent", r.consistent()}};
    emit(j, cfg, out);
    if (!r.consistent()) return kExitError;
    return r.record.pv ? kExitOk : kExitNotPV;
}

int cmd_reduce(const std::string& file, std::ostream& out) {
    const TriangleArrangement a = load_arrangement(file);
    const Reduction red = reduce(a);
    Json steps = Json::array();
    for (const auto& s : red.steps)
        steps.push_back(Json{{"kept", {s.kept[0], s.kept[1], s.kept[2]}},
                             {"removed", {s.removed[0], s.removed[1], s.removed[2]}},
                             {"apex", s.apex},
                             {"other", s.other}});
    Json j{{"input", to_json(a)},
           {"result", to_json(red.result)},
           {"black_circles", red.result.black_circles()},
           {"key", canonical_form(red.result).key()},
           {"steps", steps},
           {"shear", to_json(red.shear)},
           {"soundness", cubic_of(red.result) == substitute_linear(cubic_of(a), red.shear)}};
    out << j.dump(2) << '\n';
    return kExitOk;
}

}  // namespace tripv::cli
