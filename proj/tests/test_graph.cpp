#include "bridge.hpp"

#include <ivc/enumerate.hpp>
#include <ivc/error.hpp>

#include <doctest.h>

#include <random>

using namespace ivc;

TEST_CASE("vertex sets iterate in ascending order")
{
    VertexSet s{5, 1, 32, 3};
    CHECK(s.to_vector() == std::vector<int>{1, 3, 5, 32});
    CHECK(s.min() == 1);
    CHECK(s.max() == 32);
    CHECK(VertexSet{1, 3, 4}.to_string() == "134");
    CHECK(VertexSet::interval(3, 2).empty());
    CHECK(subsets_of_size(VertexSet::range(5), 3).size() == 10);
    CHECK(VertexSet{1, 2} < VertexSet{1, 3});
    CHECK(VertexSet{1, 2} < VertexSet{1, 2, 3});
    CHECK(shortlex_less(VertexSet{4}, VertexSet{1, 2}));
}

TEST_CASE("graph text format round-trips and rejects malformed input")
{
    Graph g(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(parse_graph(format_graph(g)) == g);
    CHECK(parse_graph("# comment\n\nn 3\n1 2\n") == Graph(3, {{1, 2}}));
    CHECK_THROWS_AS(parse_graph(""), InputError);
    CHECK_THROWS_AS(parse_graph("n 3\n2 1\n"), InputError);
    CHECK_THROWS_AS(parse_graph("n 3\n1 4\n"), InputError);
    CHECK_THROWS_AS(parse_graph("n 3\n1 2\n1 2\n"), InputError);
    CHECK_THROWS_AS(parse_graph("n 33\n"), InputError);
    CHECK_THROWS_AS(parse_graph("n x\n"), InputError);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::exception);
}

TEST_CASE("connectivity agrees with flooding on every subset")
{
    for (int n = 1; n <= 5; ++n)
        for (const auto & g : enumerate_graphs(n, false)) {
            auto a = bridge::adj(g);
            CHECK_THROWS_AS(is_connected_subset(g, VertexSet{}), InputError);
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                auto u = VertexSet::from_bits(mask);
                REQUIRE(is_connected_subset(g, u) == oracle::connected(a, u.to_vector()));
                for (int d = 1; d <= n; ++d)
                    REQUIRE(is_d_independent(g, u, d) == oracle::d_independent(a, u.to_vector(), d));
            }
            CHECK(components(g).size() == oracle::components(a, g.vertices().to_vector()).size());
        }
}

TEST_CASE("d-independence is monotone in the set and in d")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 7;
        auto g = graph_from_edge_mask(n, rng() & ((1u << edge_slot_count(n)) - 1));
        auto u = VertexSet::from_bits(rng() & 0x7f);
        for (int d = 1; d <= n; ++d) {
            if (! is_d_independent(g, u, d))
                continue;
            CHECK(is_d_independent(g, u, d + 1));
            for (int v : u)
                CHECK(is_d_independent(g, without(u, v), d));
        }
    }
}

TEST_CASE("maximal cliques are exactly the inclusion-maximal cliques")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto & g : isomorphism_classes(n, false)) {
            auto cliques = maximal_cliques(g);
            for (auto c : cliques) {
                CHECK(is_clique(g, c));
                for (auto other : cliques)
                    CHECK((c == other || ! c.is_subset_of(other)));
            }
            for (unsigned mask = 1; mask < (1u << n); ++mask) {
                auto u = VertexSet::from_bits(mask);
                if (! is_clique(g, u))
                    continue;
                bool covered = false;
                for (auto c : cliques)
                    covered = covered || u.is_subset_of(c);
                CHECK(covered);
            }
        }
}

TEST_CASE("enumeration counts")
{
    // Labeled graphs, connected labeled graphs, isomorphism classes.
    const int connected[] = {0, 1, 1, 4, 38, 728};
    const int classes[] = {0, 1, 2, 4, 11, 34, 156};
    const int connected_classes[] = {0, 1, 1, 2, 6, 21, 112};
    for (int n = 1; n <= 5; ++n) {
        int all = 0, conn = 0;
        for (const auto & g : enumerate_graphs(n, false)) {
            ++all;
            conn += is_connected(g);
        }
        CHECK(all == 1 << edge_slot_count(n));
        CHECK(conn == connected[n]);
        int conn_only = 0;
        for ([[maybe_unused]] const auto & g : enumerate_graphs(n, true))
            ++conn_only;
        CHECK(conn_only == connected[n]);
    }
    for (int n = 1; n <= 6; ++n) {
        CHECK(static_cast<int>(isomorphism_classes(n, false).size()) == classes[n]);
        CHECK(static_cast<int>(isomorphism_classes(n, true).size()) == connected_classes[n]);
    }
}

TEST_CASE("edge masks round-trip")
{
    for (std::uint64_t mask = 0; mask < 64; ++mask)
        CHECK(edge_mask(graph_from_edge_mask(4, mask)) == mask);
    CHECK(edge_slot(4, 1, 2) == 0);
    CHECK(edge_slot(4, 3, 4) == 5);
}

TEST_CASE("corona vertex and edge counts")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + rng() % 4;
        auto g = graph_from_edge_mask(n, rng() % (1u << edge_slot_count(n)));
        std::vector<Graph> family;
        int vertices = n, edges = g.edge_count();
        for (int x = 1; x <= n; ++x) {
            const int m = rng() % 4;
            auto h = graph_from_edge_mask(m, m ? rng() % (1u << edge_slot_count(m)) : 0);
            vertices += m;
            edges += h.edge_count() + m;
            family.push_back(h);
        }
        auto c = corona(g, family);
        CHECK(c.graph.order() == vertices);
        CHECK(c.graph.edge_count() == edges);
        CHECK(static_cast<int>(c.origin.size()) == vertices);
    }
}

TEST_CASE("named graphs")
{
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(is_path_graph(path_graph(4)));
    CHECK_FALSE(is_path_graph(star_graph(3)));
    CHECK(is_tree(star_graph(3)));
    CHECK(is_forest(Graph(4, {{1, 2}, {3, 4}})));
    CHECK_FALSE(is_forest(cycle_graph(3)));
    CHECK(has_isolated_vertex(Graph(3, {{1, 2}})));
    CHECK(complete_graph(4).edge_count() == 6);
}

TEST_CASE("labelings")
{
    auto l = parse_labeling("3 1 2");
    CHECK(l.label_of(1) == 3);
    CHECK(l.vertex_with(1) == 2);
    CHECK(Labeling::from_order(l.order()) == l);
    CHECK(l.inverse().after(l).is_identity());
    CHECK(relabel(Graph(3, {{1, 2}}), l) == Graph(3, {{1, 3}}));
    CHECK_THROWS_AS(parse_labeling("1 1 2"), InputError);
    CHECK_THROWS_AS(parse_labeling("1 4 2"), InputError);
}
