#include "bridge.hpp"

#include <ivc/enumerate.hpp>
#include <ivc/error.hpp>
#include <ivc/forbidden.hpp>

#include <doctest.h>

using namespace ivc;

TEST_CASE("pattern detectors agree with brute force")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto & g : isomorphism_classes(n, false)) {
            auto a = bridge::adj(g);
            CHECK(is_chordal_graph(g) == oracle::is_chordal(a));
            for (int len = 3; len <= 7; ++len) {
                auto w = find_induced_cycle_geq(g, len);
                REQUIRE(w.has_value() == oracle::has_induced_cycle_geq(a, len));
                if (w) {
                    CHECK(w->kind == PatternKind::cycle);
                    CHECK(w->vertices.size() >= len);
                    CHECK(oracle::induces_cycle(a, w->vertices.to_vector()));
                    CHECK(validate_witness(g, 0, *w));
                }
            }
            for (int d = 1; d <= 3; ++d) {
                auto claw = find_d_claw(g, d);
                REQUIRE(claw.has_value() == oracle::has_d_claw(a, d));
                if (claw) {
                    CHECK(validate_witness(g, d, *claw));
                    CHECK(claw->vertices == (claw->parts[0] | claw->parts[1] | claw->parts[2]));
                }
                auto paw = find_d_paw(g, d);
                REQUIRE(paw.has_value() == oracle::has_d_paw(a, d));
                if (paw) {
                    CHECK(validate_witness(g, d, *paw));
                    CHECK(paw->vertices.size() == d + 2);
                }
            }
        }
}

TEST_CASE("the first cycle is the smallest, then lexicographically least")
{
    Graph g(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {5, 6}, {6, 7}, {7, 4}});
    auto w = find_induced_cycle_geq(g, 4);
    REQUIRE(w);
    CHECK(w->vertices == VertexSet{4, 5, 6, 7});
    CHECK_FALSE(find_induced_cycle_geq(g, 6));
    CHECK(find_induced_cycle_geq(g, 5)->vertices == VertexSet{1, 2, 3, 4, 5});
    CHECK_THROWS_AS(find_induced_cycle_geq(g, 2), InputError);
}

TEST_CASE("claw and paw examples")
{
    auto k13 = star_graph(3);
    auto claw = find_d_claw(k13, 1);
    REQUIRE(claw);
    CHECK(claw->center == 1);
    CHECK(claw->parts[0] == VertexSet{1, 2});
    CHECK(claw->parts[1] == VertexSet{1, 3});
    CHECK(claw->parts[2] == VertexSet{1, 4});
    CHECK(find_d_claw(k13, 2));
    CHECK_FALSE(find_d_claw(k13, 3));
    auto paw = find_d_paw(k13, 2);
    REQUIRE(paw);
    CHECK(paw->vertices == VertexSet{1, 2, 3, 4});
    CHECK_FALSE(find_d_paw(k13, 1));
    CHECK_FALSE(find_d_paw(k13, 3));
    CHECK_FALSE(find_d_claw(path_graph(6), 2));
    CHECK(is_chordal_graph(complete_graph(5)));
    CHECK_FALSE(is_chordal_graph(cycle_graph(4)));
}

TEST_CASE("tampered witnesses are rejected")
{
    auto k13 = star_graph(3);
    auto claw = *find_d_claw(k13, 1);
    auto broken = claw;
    broken.parts[2] = VertexSet{1, 2};
    CHECK_FALSE(validate_witness(k13, 1, broken));
    broken = claw;
    broken.center = 2;
    CHECK_FALSE(validate_witness(k13, 1, broken));
    auto cyc = *find_induced_cycle_geq(cycle_graph(5), 4);
    cyc.vertices = VertexSet{1, 2, 3, 4};
    CHECK_FALSE(validate_witness(cycle_graph(5), 0, cyc));
    auto paw = *find_d_paw(k13, 2);
    CHECK_FALSE(validate_witness(k13, 3, paw));
    CHECK(pattern_kind_name(PatternKind::paw) == "paw");
}
