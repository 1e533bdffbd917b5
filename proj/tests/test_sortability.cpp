#include "bridge.hpp"

#include <ivc/enumerate.hpp>
#include <ivc/error.hpp>
#include <ivc/sortability.hpp>

#include <doctest.h>

#include <random>

using namespace ivc;

namespace {

auto random_set(std::mt19937 & rng, int n, int k) -> VertexSet
{
    auto all = subsets_of_size(VertexSet::range(n), k);
    return all[rng() % all.size()];
}

} // namespace

TEST_CASE("sort_pair")
{
    auto [a, b] = sort_pair({VertexSet{1, 4, 5}}, {VertexSet{2, 3, 6}});
    CHECK(a.support == VertexSet{1, 3, 5});
    CHECK(b.support == VertexSet{2, 4, 6});
    auto [c, e] = sort_pair({VertexSet{1, 2}}, {VertexSet{1, 3}});
    CHECK(c.support == VertexSet{1, 2});
    CHECK(e.support == VertexSet{1, 3});
    CHECK_THROWS_AS(sort_pair({VertexSet{1}}, {VertexSet{2, 3}}), InputError);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 2 + rng() % 8;
        const int k = 1 + rng() % n;
        auto u = random_set(rng, n, k), v = random_set(rng, n, k);
        auto [x, y] = sort_pair({u}, {v});
        auto [ox, oy] = oracle::sort_pair(u.to_vector(), v.to_vector());
        CHECK(x.support.to_vector() == ox);
        CHECK(y.support.to_vector() == oy);
        CHECK(x.degree() == k);
        // Idempotent, and the merged multiset is preserved.
        auto again = sort_pair(x, y);
        CHECK(again.first == x);
        CHECK(again.second == y);
        CHECK((u & v) == (x.support & y.support));
        CHECK((u | v) == (x.support | y.support));
    }
}

TEST_CASE("sort closure agrees with brute force")
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 3 + rng() % 4;
        const int k = 1 + rng() % (n - 1);
        auto all = subsets_of_size(VertexSet::range(n), k);
        std::vector<VertexSet> set;
        for (auto s : all)
            if (rng() % 3)
                set.push_back(s);
        auto failure = find_sort_failure(set, k);
        CHECK(failure.has_value() == ! oracle::sortable(bridge::family(set)));
        CHECK(is_sortable_set(set, k) == ! failure.has_value());
        if (failure) {
            auto [x, y] = sort_pair({failure->u}, {failure->v});
            CHECK(x.support == failure->sorted_u);
            CHECK(y.support == failure->sorted_v);
            auto in = [&](VertexSet s) { return std::find(set.begin(), set.end(), s) != set.end(); };
            CHECK(in(failure->u));
            CHECK(in(failure->v));
            CHECK_FALSE((in(x.support) && in(y.support)));
        }
    }
    CHECK_THROWS_AS(find_sort_failure({VertexSet{1, 2}, VertexSet{3}}, 2), InputError);
}

TEST_CASE("Ind_d sortability agrees with brute force")
{
    for (int n = 1; n <= 6; ++n)
        for (const auto & g : isomorphism_classes(n, false))
            for (int d = 1; d <= 3; ++d) {
                bool expected = oracle::sortable(oracle::ind_complex(bridge::adj(g), d));
                CHECK(is_ind_sortable(g, d) == expected);
                CHECK(is_sortable_complex(ind_face_sets(g, d)) == expected);
            }
    CHECK_THROWS_AS(is_sortable_complex({FaceSetByCardinality{2, {VertexSet{1, 2}}}}), InputError);
}

TEST_CASE("sortable labeling search")
{
    for (int n = 2; n <= 5; ++n)
        for (const auto & g : isomorphism_classes(n, false))
            for (int d = 1; d <= 2; ++d) {
                auto l = find_sortable_labeling(g, d);
                bool any = false;
                std::optional<std::vector<int>> first;
                for (const auto & order : oracle::permutations(n)) {
                    auto candidate = Labeling::from_order(order);
                    if (oracle::sortable(oracle::ind_complex(bridge::adj(relabel(g, candidate)), d))) {
                        any = true;
                        first = order;
                        break;
                    }
                }
                REQUIRE(l.has_value() == any);
                if (l) {
                    CHECK(l->order() == *first);
                    CHECK(is_ind_sortable(relabel(g, *l), d));
                }
            }
    CHECK_THROWS_AS(find_sortable_labeling(path_graph(9), 2), GuardRefusal);
}

TEST_CASE("sortability examples")
{
    // Ind_1 of the claw: every face is a subset of the leaves or the center.
    auto k13 = star_graph(3);
    CHECK(is_ind_sortable(k13, 1));
    CHECK(is_ind_sortable(path_graph(4), 2));
    CHECK_FALSE(is_ind_sortable(Graph(4, {{1, 3}, {2, 4}}), 1));
    CHECK(is_ind_sortable(Graph(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}}), 2));
    CHECK(is_ind_sortable(empty_graph(5), 1));

    auto [a, b] = sort_pair({VertexSet{1, 4}}, {VertexSet{2, 3}});
    CHECK(a.support == VertexSet{1, 3});
    CHECK(b.support == VertexSet{2, 4});
    CHECK(sort_pair({VertexSet{1, 2}}, {VertexSet{2, 3}}).second.support == VertexSet{2, 3});
    CHECK(is_sortable_set(subsets_of_size(VertexSet::range(5), 2), 2));
    CHECK_FALSE(is_sortable_set({VertexSet{1, 4}, VertexSet{2, 3}}, 2));
    CHECK(is_sortable_set({VertexSet{1, 3, 4}}, 3));
}
