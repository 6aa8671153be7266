#include <doctest.h>

#include <sstream>

#include "bmoll/boros_moll.hpp"
#include "bmoll/io.hpp"
#include "bmoll/symdecomp.hpp"

using namespace bmoll;
using nlohmann::json;

namespace {

// every machine format must survive parse -> dump byte-identically
void check_roundtrip(const json& j) {
    const std::string s = j.dump();
    CHECK(json::parse(s).dump() == s);
}

} // namespace

TEST_CASE("polynomial JSON uses p/q strings exclusively") {
    const json j = compute_json('p', 5, p_poly(5));
    CHECK(j["coeffs"][0] == "4389/256");
    CHECK(j["coeffs"][5] == "63/8");
    check_roundtrip(j);

    const json q = compute_json('q', 3, q_poly(3));
    CHECK(q["coeffs"][0] == "120/1");
    for (const auto& c : q["coeffs"]) CHECK(c.is_string());
    check_roundtrip(q);
}

TEST_CASE("decomposition and gamma JSON") {
    const SymDecomp d = decompose(q_poly(4), 4);
    const json dj = decomp_json(4, d);
    CHECK(dj["a"][0] == "1680/1");
    CHECK(dj["b"][0] == "1785/1");
    check_roundtrip(dj);

    const TriangleRow row = triangle_row(4);
    const json gj = gamma_rows_json(4, row.alpha, row.beta);
    CHECK(gj["alpha"] == json::array({"1680", "-945", "105"}));
    CHECK(gj["alpha_signed"] == json::array({"1680", "945", "105"}));
    CHECK(gj["beta"] == json::array({"1785", "-510"}));
    CHECK(gj["beta_signed"] == json::array({"1785", "510"}));
    check_roundtrip(gj);
}

TEST_CASE("triangle exports") {
    const AlphaBetaTriangle tri = build_triangle(4);
    const json tj = triangle_json(tri);
    CHECK(tj["max_m"] == 4);
    CHECK(tj["rows"][2]["alpha"] == json::array({"12", "-3"}));
    check_roundtrip(tj);

    const std::string csv = triangle_csv(tri);
    CHECK(csv.find("m,k,alpha,beta\n") == 0);
    CHECK(csv.find("2,1,-3,\n") != std::string::npos);
    CHECK(csv.find("4,0,1680,1785\n") != std::string::npos);

    std::ostringstream streamed;
    triangle_csv_stream(4, streamed);
    CHECK(streamed.str() == csv);
}

TEST_CASE("scan record serialization") {
    const ClassificationRecord rec = classify_point(2, Rat(5, 2), Rat(-5, 2), Transform::Reversed);
    const json rj = record_json(rec);
    CHECK(rj["m"] == 2);
    CHECK(rj["alpha"] == "5/2");
    CHECK(rj["transform"] == "reversed");
    CHECK(rj["degenerate"] == false);
    check_roundtrip(rj);

    const std::string csv = record_csv_row(rec);
    CHECK(csv.find("2,5/2,-5/2,reversed,") == 0);

    const ClassificationRecord m0 = classify_point(0, Rat(1), Rat(1), Transform::Raw);
    CHECK(record_json(m0)["b_class"].is_null());
}

TEST_CASE("report JSON") {
    const Report r = run_suite(3);
    const json j = report_json(r);
    CHECK(j["all_pass"] == true);
    CHECK(j["checks"].is_array());
    check_roundtrip(j);
}

TEST_CASE("factored displays expand to the computed decompositions") {
    for (unsigned long m = 1; m <= 5; ++m) {
        CHECK(factored_display_consistent(m));
        CHECK_FALSE(factored_decomp_display(m).empty());
    }
    CHECK(factored_decomp_display(0).empty());
    CHECK(factored_decomp_display(6).empty());
    CHECK(factored_decomp_display(2) == "Q_2(x) = 3*(4 + 7*x + 4*x^2) + 9*x*(1 + x)");
}
