#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulersum/table.hpp"
#include "eulersum/verify.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

using eulersum::verify::identity_labels;
using eulersum::verify::is_identity_label;
using eulersum::verify::reports_to_json;
using eulersum::verify::run_identities;
using eulersum::verify::run_identity;
using eulersum::verify::SweepConfig;
using eulersum::verify::VerificationReport;

TEST_CASE("identity labels") {
    CHECK(identity_labels().size() == 12);
    CHECK(is_identity_label("theorem-1"));
    CHECK(is_identity_label("pf-def-1"));
    CHECK_FALSE(is_identity_label("theorem-3"));
    CHECK_THROWS_AS(run_identity("theorem-3", SweepConfig{}), std::invalid_argument);
}

TEST_CASE("b_max follows a_max unless set") {
    SweepConfig cfg;
    cfg.a_max = 11;
    CHECK(cfg.effective_b_max() == 11);
    cfg.b_max = 5;
    CHECK(cfg.effective_b_max() == 5);
}

TEST_CASE("every identity passes on a small config") {
    SweepConfig cfg;
    cfg.p_max = 4;
    cfg.a_max = 9;
    cfg.q_max = 5;
    cfg.fourier_terms = 2000;
    for (const auto& label : identity_labels()) {
        const VerificationReport rep = run_identity(label, cfg);
        CAPTURE(label);
        CHECK(rep.instances > 0);
        CHECK(rep.ok());
    }
}

TEST_CASE("reports are byte-identical across parallelism levels") {
    SweepConfig serial;
    serial.p_max = 4;
    serial.a_max = 9;
    serial.q_max = 5;
    serial.fourier_terms = 1000;
    serial.parallelism = 1;

    SweepConfig threaded = serial;
    threaded.parallelism = 4;

    const auto labels = identity_labels();
    const std::string lhs = reports_to_json(run_identities(labels, serial));
    const std::string rhs = reports_to_json(run_identities(labels, threaded));
    CHECK(lhs == rhs);

    // and across repeated runs with the same seed
    const std::string again = reports_to_json(run_identities(labels, serial));
    CHECK(lhs == again);
}

TEST_CASE("report JSON shape") {
    SweepConfig cfg;
    cfg.p_max = 2;
    cfg.a_max = 5;
    const auto reports = run_identities({"rho", "x-int"}, cfg);
    const auto parsed = nlohmann::json::parse(reports_to_json(reports));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0]["identity"] == "rho");
    CHECK(parsed[0]["instances"].get<int>() > 0);
    CHECK(parsed[0]["failures"].is_array());
    CHECK(parsed[0]["failures"].empty());
    CHECK(parsed[1]["identity"] == "x-int");
}

TEST_CASE("table rows") {
    const auto rows = eulersum::make_table_rows({1, 2}, {{5, 3}, {3, 5}});
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].p == 1);
    CHECK(rows[0].a == 5);
    CHECK(rows[0].t_value.str() == "1/2");
    REQUIRE(rows[0].holds.has_value());
    CHECK(*rows[0].holds);
    CHECK(rows[2].t_value.str() == "4/27");
    CHECK(rows[3].t_value.str() == "-44/125");

    // p = 0 rows carry no Bernoulli sum and no reciprocity columns
    const auto zero_rows = eulersum::make_table_rows({0}, {{5, 3}});
    REQUIRE(zero_rows.size() == 1);
    CHECK_FALSE(zero_rows[0].s_value.has_value());
    CHECK_FALSE(zero_rows[0].holds.has_value());

    // non-coprime pairs skip the reciprocity columns but keep both sums
    const auto skewed = eulersum::make_table_rows({2}, {{3, 9}});
    CHECK(skewed[0].s_value.has_value());
    CHECK_FALSE(skewed[0].holds.has_value());
}

TEST_CASE("CSV writer") {
    const auto rows = eulersum::make_table_rows({1}, {{7, 11}, {11, 7}});
    std::ostringstream out;
    eulersum::write_table_csv(out, rows);
    const std::string expected =
        "p,a,b,T,S,lhs,rhs,holds\n"
        "1,7,11,\"1/2\",\"-3/22\",\"2\",\"2\",true\n"
        "1,11,7,\"1/2\",\"1/14\",\"-2\",\"-2\",true\n";
    CHECK(out.str() == expected);

    std::ostringstream empty;
    eulersum::write_table_csv(empty, {});
    CHECK(empty.str() == "p,a,b,T,S,lhs,rhs,holds\n");
}

TEST_CASE("JSON writer") {
    const auto rows = eulersum::make_table_rows({0, 1}, {{5, 3}});
    std::ostringstream out;
    eulersum::write_table_json(out, rows);
    const auto parsed = nlohmann::json::parse(out.str());
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0]["p"] == 0);
    CHECK(parsed[0]["T"].is_string());
    CHECK(parsed[0]["S"].is_null());
    CHECK(parsed[0]["holds"].is_null());
    CHECK(parsed[1]["T"] == "1/2");
    CHECK(parsed[1]["holds"] == true);

    std::ostringstream empty;
    eulersum::write_table_json(empty, {});
    CHECK(nlohmann::json::parse(empty.str()).empty());
}

TEST_CASE("list parsing") {
    CHECK(eulersum::parse_p_list("1,3..5") == std::vector<unsigned>{1, 3, 4, 5});
    CHECK(eulersum::parse_p_list("").empty());
    CHECK_THROWS_AS(eulersum::parse_p_list("2..1"), std::invalid_argument);
    CHECK_THROWS_AS(eulersum::parse_p_list("x"), std::invalid_argument);

    const auto pairs = eulersum::parse_pair_list("5:3,3:5");
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0] == std::pair<std::int64_t, std::int64_t>{5, 3});
    CHECK(pairs[1] == std::pair<std::int64_t, std::int64_t>{3, 5});
    CHECK(eulersum::parse_pair_list("").empty());
    CHECK_THROWS_AS(eulersum::parse_pair_list("5-3"), std::invalid_argument);
}
