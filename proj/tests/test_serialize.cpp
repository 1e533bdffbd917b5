#include <ivc/error.hpp>
#include <ivc/forbidden.hpp>
#include <ivc/serialize.hpp>

#include <doctest.h>

using namespace ivc;

TEST_CASE("labelings and interval systems round-trip")
{
    Labeling l({2, 3, 1});
    CHECK(to_json(l) == json::parse("[2,3,1]"));
    CHECK(labeling_from_json(to_json(l)) == l);
    CHECK_THROWS_AS(labeling_from_json(json::parse("[1,1]")), InputError);
    CHECK_THROWS_AS(labeling_from_json(json::parse("{\"a\":1}")), InputError);

    IntervalSystem r({{0, Rational(1, 2)}, {Rational(-1, 3), 2}});
    auto j = to_json(r);
    CHECK(j[0][1] == "1/2");
    CHECK(j[1][0] == "-1/3");
    CHECK(interval_system_from_json(j) == r);
    CHECK(interval_system_from_json(json::parse("[[0,1],[\"1\",\"3/2\"]]")).at(2).right == Rational(3, 2));
    CHECK_THROWS_AS(interval_system_from_json(json::parse("[[1,0]]")), InputError);
    CHECK_THROWS_AS(interval_system_from_json(json::parse("[[0]]")), InputError);
}

TEST_CASE("recognition results become certificates")
{
    RecognitionResult r;
    r.found = true;
    r.labeling = Labeling({1, 2});
    r.representation = IntervalSystem({{0, 1}, {1, 2}});
    auto j = to_json(r);
    CHECK(j["found"] == true);
    CHECK(j["search_exhaustive"] == true);
    j["class"] = "strong_unit";
    auto cert = certificate_from_json(j);
    CHECK(cert.graph_class == "strong_unit");
    CHECK(cert.labeling == r.labeling);
    CHECK(cert.representation == r.representation);
    CHECK_THROWS_AS(certificate_from_json(json::object()), InputError);
}

TEST_CASE("witness JSON")
{
    auto w = *find_d_claw(star_graph(3), 1);
    auto j = to_json(w);
    CHECK(j["kind"] == "claw");
    CHECK(j["center"] == 1);
    CHECK(j["parts"].size() == 3);
    CHECK(j["vertices"] == json::parse("[1,2,3,4]"));
}
