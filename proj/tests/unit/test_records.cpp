#include "doctest.h"
#include "fixtures.hpp"
#include "tripv/analysis.hpp"
#include "tripv/errors.hpp"
#include "tripv/records.hpp"
#include "tripv/serialize.hpp"
#include "tripv/triangulation.hpp"

#include <cstdio>
#include <fstream>

using namespace tripv;

namespace {

std::string tmp(const std::string& name) {
    const std::string path = std::string(TRIPV_TEST_TMP) + "/" + name;
    std::remove(path.c_str());
    return path;
}

ClassificationRecord sample() { return analyze_arrangement(fx::TA(), PVConfig{}, true, "test"); }

}  // namespace

TEST_CASE("a record survives a JSON line round trip") {
    const auto r = sample();
    CHECK(r.pv);
    CHECK(r.dim_g == 9);
    CHECK(r.dual_pv.has_value());
    CHECK(record_from_json_line(record_to_json_line(r)) == r);

    const auto nr = analyze_arrangement(disjoint_union(fx::TA(), fx::TB()), PVConfig{}, false, "union");
    CHECK_FALSE(nr.pv);
    CHECK(nr.witness.empty());
    CHECK_FALSE(nr.dual_pv.has_value());
    CHECK(record_from_json_line(record_to_json_line(nr)) == nr);
}

TEST_CASE("store then load") {
    const auto path = tmp("roundtrip.jsonl");
    const auto res = classify(8);
    store_records(path, res.classes);
    CHECK(load_records(path) == res.classes);
    // appends
    store_records(path, {sample()});
    CHECK(load_records(path).size() == res.classes.size() + 1);
}

TEST_CASE("schema and corruption errors") {
    auto j = Json::parse(record_to_json_line(sample()));
    j["schema"] = 99;
    CHECK_THROWS_AS(record_from_json_line(j.dump()), SchemaMismatch);

    j = Json::parse(record_to_json_line(sample()));
    j["dim_g"] = 0;
    CHECK_THROWS_AS(record_from_json_line(j.dump()), CorruptRecord);

    // a witness that is not a witness
    j = Json::parse(record_to_json_line(sample()));
    j["witness"] = Json::array({"0", "0", "0", "0", "0", "0", "0"});
    CHECK_THROWS_AS(record_from_json_line(j.dump()), CorruptRecord);

    j = Json::parse(record_to_json_line(sample()));
    j["triangle_count"] = 4;
    CHECK_THROWS_AS(record_from_json_line(j.dump()), CorruptRecord);

    CHECK_THROWS_AS(record_from_json_line("{not json"), CorruptRecord);
}

TEST_CASE("diffs") {
    const auto base = classify(8).classes;
    CHECK(diff_records(base, base).empty());

    auto changed = base;
    changed[0].pv = !changed[0].pv;
    changed.pop_back();
    const auto d = diff_records(base, changed);
    REQUIRE(d.size() == 2);
    bool saw_pv = false, saw_removed = false;
    for (const auto& c : d) {
        saw_pv |= c.field == "pv" && c.key == base[0].key;
        saw_removed |= c.field == "removed" && c.key == base.back().key;
    }
    CHECK(saw_pv);
    CHECK(saw_removed);
}

TEST_CASE("a different seed changes witnesses but not verdicts") {
    ClassifyConfig a, b;
    b.pv.seed = 0xdeadbeef;
    const auto ra = classify(9, a).classes, rb = classify(9, b).classes;
    CHECK(diff_records(ra, rb).empty());
    bool witness_differs = false;
    for (std::size_t i = 0; i < ra.size(); ++i) witness_differs |= ra[i].witness != rb[i].witness;
    CHECK(witness_differs);
}
