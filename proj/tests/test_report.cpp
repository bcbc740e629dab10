#include <catch2/catch_amalgamated.hpp>

#include "tmf4d/report.hpp"

using namespace tmf4d;

TEST_CASE("reproduce accepts table ids in both spellings") {
    CHECK(reproduce("T1").table_id == "T1");
    CHECK(reproduce("1").table_id == "T1");
    CHECK(reproduce("counterexample").table_id == "counterexample");
    CHECK(reproduce("degree-consistency").table_id == "degree-consistency");
    CHECK_THROWS_AS(reproduce("T9"), ParseError);
    CHECK_THROWS_AS(reproduce("bogus"), ParseError);
}

TEST_CASE("every reproduced table is clean") {
    for (const TableReport& t : reproduce_all()) {
        CAPTURE(t.table_id);
        CHECK(t.failed == 0);
        CHECK(t.passed > 0);
        CHECK(t.passed == static_cast<long long>(t.rows.size()));
    }
}

TEST_CASE("renderers") {
    std::vector<TableReport> reports = {reproduce("T2")};
    std::string text = render_text(reports);
    CHECK(text.find("== T2") != std::string::npos);
    CHECK(text.find("[PASS]") != std::string::npos);
    CHECK(text.find("[FAIL]") == std::string::npos);

    std::string csv = render_csv(reports);
    CHECK(csv.rfind("table,input,expected,computed,verdict,note", 0) == 0);
    CHECK(csv.find("\nT2,") != std::string::npos);

    std::string j1 = render_json(reports);
    std::string j2 = render_json({reproduce("T2")});
    CHECK(j1 == j2); // deterministic bytes
    auto parsed = nlohmann::json::parse(j1);
    CHECK(parsed["summary"]["failed"] == 0);
    CHECK(parsed["tables"][0]["table_id"] == "T2");
    CHECK(parsed["tables"][0]["rows"].size() == parsed["summary"]["passed"]);

    CHECK(total_failures(reports) == 0);
}
