#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "zrk/builtins.hpp"
#include "zrk/errors.hpp"
#include "zrk/io.hpp"

using namespace zrk;

namespace {

std::string golden(const std::string& name) { return read_file(std::string(ZRK_GOLDEN_DIR) + "/" + name); }

}  // namespace

TEST_CASE("golden graphs match the builtins") {
    CHECK(parse_graph(golden("g53.json")) == builtin_graph(BuiltinId::G53));
    CHECK(parse_graph(golden("g55.json")) == builtin_graph(BuiltinId::G55));
    CHECK(parse_graph(golden("g64.json")) == builtin_graph(BuiltinId::G64));
    CHECK(parse_graph(golden("q55_base.json")) == builtin_graph(BuiltinId::Q55));
}

TEST_CASE("golden decomposition of Q") {
    auto j = parse_json(golden("q55_decomposition.json"));
    CHECK(is_decomposition_json(j));
    auto d = decomposition_from_json(j);
    CHECK(d.size() == 15);
    CHECK(expand(d) == q55_data().q);
    CHECK(decomposition_from_json(decomposition_to_json(d)).stacked() == d.stacked());
}

TEST_CASE("graph serialization round-trips") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
        auto g = oracle::random_simple_graph(rng);
        auto text = serialize_graph(g);
        CHECK(parse_graph(text) == g);
        CHECK(serialize_graph(parse_graph(text)) == text);
    }
    // input order does not matter
    CHECK(serialize_graph(parse_graph(golden("g55.json"))) == serialize_graph(builtin_graph(BuiltinId::G55)));
    CHECK(serialize_graph(AugmentedGraph(2, 3, {{0, 1}})) == R"({"m":2,"n":3,"e1":[[1,2]],"e2":[],"e3":[]})");
    // missing edge lists default to empty
    CHECK(parse_graph(R"({"m":2,"n":2})") == AugmentedGraph(2, 2));
}

TEST_CASE("malformed input") {
    try {
        parse_json(R"({"m": 5,, })");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.position == 9);
        CHECK(std::string(e.what()).find("byte 9") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_graph("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"n":2})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"m":"2","n":2})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"m":2,"n":2,"e1":[[1]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"m":2,"n":2,"e1":[[1,"a"]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"m":2,"n":2,"e2":[[[1,1]]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"m":2,"n":2,"e1":{}})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"m":2,"n":2,"e1":[[3,1]]})"), RangeError);
    CHECK_THROWS_AS(parse_graph(R"({"m":3,"n":3,"e3":[[[1,1],[1,2],[3,3]]]})"), DegenerateEdgeError);
    CHECK_THROWS_AS(read_file("/nonexistent/graph.json"), ParseError);
}

TEST_CASE("decomposition formats") {
    SUBCASE("bare list infers dimensions") {
        auto d = decomposition_from_json(parse_json(R"([[{"cell":[1,1],"coeff":1}],[{"cell":[3,2],"coeff":-2}]])"));
        CHECK(d.rows() == 3);
        CHECK(d.cols() == 2);
        CHECK(d.forms()[1].at({2, 1}) == -2);
    }
    SUBCASE("object form keeps its dimensions") {
        auto d = decomposition_from_json(parse_json(R"({"m":4,"n":4,"forms":[[{"cell":[1,1],"coeff":3}]]})"));
        CHECK(d.rows() == 4);
        CHECK(d.cols() == 4);
    }
    SUBCASE("big coefficients travel as strings") {
        Integer big("123456789012345678901234567890");
        CHECK(integer_to_json(big) == Json("123456789012345678901234567890"));
        CHECK(integer_from_json(integer_to_json(big)) == big);
        CHECK(integer_to_json(Integer(-7)) == Json(-7));
        CHECK_THROWS_AS(integer_from_json(Json("12x")), ParseError);
        CHECK_THROWS_AS(integer_from_json(Json(1.5)), ParseError);

        auto d = decomposition_from_json(
            parse_json(R"({"m":1,"n":1,"forms":[[{"cell":[1,1],"coeff":"100000000000000000000"}]]})"));
        CHECK(expand(d).coefficient(0, 0, 0, 0) == Integer("10000000000000000000000000000000000000000"));
    }
    CHECK_FALSE(is_decomposition_json(parse_json(golden("g53.json"))));
    CHECK_THROWS_AS(decomposition_from_json(parse_json(R"({"forms":[[{"cell":[1,1]}]]})")), ParseError);
}

TEST_CASE("form rendering") {
    auto j = form_to_json(build_form(AugmentedGraph(2, 2, {}, {Edge2({0, 0}, {1, 1})})));
    REQUIRE(j.size() == 3);
    CHECK(j[0]["cells"] == Json::array({Json::array({1, 1})}));
    CHECK(j[0]["coefficient"] == 1);
    CHECK(j[1]["coefficient"] == 2);
}

TEST_CASE("reports round-trip") {
    Report r;
    r.kind = ReportKind::Certify;
    r.payload = to_json(certify_sos_rank(builtin_graph(BuiltinId::G53)));
    r.hypotheses = {"rank-equals-edge-count"};
    auto back = report_from_json(parse_json(to_json(r).dump()));
    CHECK(back == r);
    CHECK(to_json(r)["kind"] == "certify");

    Report s;
    s.kind = ReportKind::Search;
    s.payload = to_json(compute(Statistic::Z3L, 5, 3));
    CHECK(report_from_json(to_json(s)) == s);
    CHECK(s.payload["value"] == 10);
    CHECK_FALSE(s.payload["witnesses"].empty());

    CHECK_THROWS_AS(report_from_json(parse_json(R"({"kind":"nope","payload":{}})")), ParseError);
}

TEST_CASE("code_hex is stable under relabelling") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 50; ++t) {
        auto g = oracle::random_simple_graph(rng, 5);
        CHECK(code_hex(g) == code_hex(oracle::permuted(g, rng)));
    }
}
