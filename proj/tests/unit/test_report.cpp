#include <doctest.h>

#include "sqfree/report.hpp"

using namespace sqfree;

TEST_CASE("json report shape") {
    ReportDocument doc;
    doc.config = Json{{"command", "ghw"}, {"q", 2}};
    doc.rows.push_back({1, "exact-subspace", "4", true, Json()});
    doc.rows.push_back({2, "footprint", "6", true, Json{{"monomials", Json::array({"x1", "x2"})}}});
    doc.checks.push_back({"methods_agree", true, ""});

    auto j = to_json(doc);
    CHECK(j["schema_version"] == 1);
    CHECK(j["config"]["q"] == 2);
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["value"] == "4");
    CHECK_FALSE(j["rows"][0].contains("witness"));
    CHECK(j["rows"][1]["witness"]["monomials"][0] == "x1");
    CHECK(j["checks"][0]["pass"] == true);
    CHECK_FALSE(j.contains("millis"));

    doc.total_millis = 12.5;
    CHECK(to_json(doc).contains("millis"));
}

TEST_CASE("csv projections") {
    ReportDocument doc;
    doc.rows.push_back({1, "formula", "12", true, Json()});
    CHECK(to_csv(doc) == "r,method,value,exact\n1,formula,12,true\n");

    ReportDocument sweep;
    sweep.table_columns = {"q", "m", "agree"};
    sweep.table.push_back({"2", "3", "true"});
    CHECK(to_csv(sweep) == "q,m,agree\n2,3,true\n");

    ReportDocument empty_sweep;
    empty_sweep.table_columns = {"q", "m", "agree"};
    CHECK(to_csv(empty_sweep) == "q,m,agree\n");
}

TEST_CASE("identical documents render to identical bytes") {
    auto make_doc = [] {
        ReportDocument doc;
        doc.config = Json{{"command", "verify"}, {"seed", 7}};
        doc.checks.push_back({"duality", true, "50/50 trials"});
        doc.rows.push_back({1, "exact-support", "3", true, Json()});
        return doc;
    };
    const auto a = make_doc();
    const auto b = make_doc();
    CHECK(to_json(a).dump(2) == to_json(b).dump(2));
    CHECK(to_csv(a) == to_csv(b));
    CHECK(to_table(a) == to_table(b));
}

TEST_CASE("witness rendering") {
    auto f2 = Field::make(2);
    SubcodeWitness w;
    w.coefficients = GfMatrix::from_rows(f2, {{1, 0}, {0, 1}});
    w.support = {0, 2, 3};
    auto j = witness_json(w);
    CHECK(j["support"] == Json::array({0, 2, 3}));
    CHECK(j["coefficients"][0] == Json::array({1, 0}));

    std::vector<SquareFreeExponent> monos{SquareFreeExponent(0b11, 3),
                                          SquareFreeExponent(0b101, 3)};
    auto mj = witness_json(monos);
    CHECK(mj["monomials"] == Json::array({"x1*x2", "x1*x3"}));
}
