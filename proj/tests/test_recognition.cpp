#include "bridge.hpp"

#include <ivc/enumerate.hpp>
#include <ivc/error.hpp>
#include <ivc/interval.hpp>
#include <ivc/predicates.hpp>
#include <ivc/recognition.hpp>

#include <doctest.h>

using namespace ivc;

namespace {

auto example_graph() -> Graph
{
    return Graph(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

/// First order (vertex with label 1, label 2, ...) in lexicographic order
/// whose relabeled family passes pred.
template <typename Pred>
auto least_order(const oracle::Family & f, int n, Pred pred) -> std::optional<std::vector<int>>
{
    for (const auto & order : oracle::permutations(n)) {
        std::vector<int> images(n);
        for (int k = 1; k <= n; ++k)
            images[order[k - 1] - 1] = k;
        if (pred(oracle::relabel(f, images)))
            return order;
    }
    return std::nullopt;
}

/// Interval graphs are the graphs with a vertex order in which u < v < w and
/// uw an edge force uv to be an edge.
auto interval_graph_oracle(const Graph & g) -> bool
{
    auto a = bridge::adj(g);
    for (const auto & p : oracle::permutations(g.order())) {
        bool ok = true;
        for (int i = 0; i < g.order() && ok; ++i)
            for (int j = i + 1; j < g.order() && ok; ++j)
                for (int k = j + 1; k < g.order() && ok; ++k)
                    ok = ! (a.m[p[i]][p[k]] && ! a.m[p[i]][p[j]]);
        if (ok)
            return true;
    }
    return false;
}

void check_certificate(const PureComplex & c, const RecognitionResult & r, LabelingPredicate p)
{
    REQUIRE(r.labeling);
    CHECK(r.search_exhaustive);
    CHECK(holds(relabel(c, *r.labeling), p));
}

} // namespace

TEST_CASE("labeling searches find the least valid labeling")
{
    for (int n = 2; n <= 5; ++n)
        for (const auto & g : enumerate_graphs(n, true))
            for (int d = 1; d < n && d <= 3; ++d) {
                auto c = delta_d(g, d);
                auto f = bridge::family(c);

                auto uc = find_under_closed_labeling(c);
                auto uc_oracle = least_order(f, n, oracle::under_closed_local);
                REQUIRE(uc.found == uc_oracle.has_value());
                if (uc.found) {
                    check_certificate(c, uc, LabelingPredicate::under_closed_local);
                    CHECK(uc.labeling->order() == *uc_oracle);
                }

                auto unit = find_unit_interval_labeling(c);
                auto unit_oracle = least_order(f, n, [n](const oracle::Family & x) {
                    return oracle::unit_interval_def(x, n);
                });
                REQUIRE(unit.found == unit_oracle.has_value());
                if (unit.found) {
                    check_certificate(c, unit, LabelingPredicate::unit_interval);
                    CHECK(unit.labeling->order() == *unit_oracle);
                }

                auto star = find_condition_star_labeling(c);
                auto star_oracle = least_order(f, n, oracle::condition_star);
                REQUIRE(star.found == star_oracle.has_value());
                if (star.found) {
                    check_certificate(c, star, LabelingPredicate::condition_star);
                    CHECK(star.labeling->order() == *star_oracle);
                }
            }
}

TEST_CASE("searches on arbitrary small complexes")
{
    for (int n = 3; n <= 4; ++n)
        for (int dim = 1; dim < n; ++dim)
            bridge::for_each_complex(n, dim, [&](const PureComplex & c, const oracle::Family & f) {
                CHECK(find_under_closed_labeling(c).found
                    == oracle::exists_labeling(f, n, oracle::under_closed_local));
                CHECK(find_unit_interval_labeling(c).found == oracle::exists_labeling(f, n, [n](const auto & x) {
                    return oracle::unit_interval_def(x, n);
                }));
                CHECK(find_condition_star_labeling(c).found == oracle::exists_labeling(f, n, oracle::condition_star));
            });
}

TEST_CASE("valid labelings are enumerated completely")
{
    for (int n = 2; n <= 5; ++n)
        for (const auto & g : isomorphism_classes(n, true))
            for (int d = 1; d < n && d <= 2; ++d) {
                auto c = delta_d(g, d);
                auto f = bridge::family(c);
                std::set<std::vector<int>> expected;
                for (const auto & p : oracle::permutations(n))
                    if (oracle::under_closed_local(oracle::relabel(f, p)))
                        expected.insert(p);
                std::set<std::vector<int>> seen;
                for_each_valid_labeling(c, SearchablePredicate::under_closed, [&](const Labeling & l) {
                    seen.insert(l.images());
                    return true;
                });
                CHECK(seen == expected);
                int visits = 0;
                for_each_valid_labeling(c, SearchablePredicate::under_closed, [&](const Labeling &) {
                    ++visits;
                    return false;
                });
                CHECK(visits == (expected.empty() ? 0 : 1));
            }
}

TEST_CASE("closed labelings")
{
    for (int n = 2; n <= 5; ++n)
        for (const auto & g : enumerate_graphs(n, false)) {
            auto r = find_closed_labeling(g);
            bool any = false;
            for (const auto & p : oracle::permutations(n))
                any = any || oracle::closed_graph(bridge::adj(relabel(g, Labeling(p))));
            REQUIRE(r.found == any);
            if (r.found)
                CHECK(is_closed_graph(relabel(g, *r.labeling)));
        }
}

TEST_CASE("strong representations match an integer grid search")
{
    for (int n = 2; n <= 3; ++n)
        for (int dim = 1; dim < n; ++dim)
            bridge::for_each_complex(n, dim, [&](const PureComplex & c, const oracle::Family & f) {
                auto r = find_strong_interval_representation(c, StrongMode::general);
                CHECK(r.found == oracle::has_grid_representation(f, n, dim, 2 * n));
            });
    for (const auto & g : isomorphism_classes(4, false))
        for (int d = 1; d <= 2; ++d) {
            auto c = delta_d(g, d);
            auto r = find_strong_interval_representation(c, StrongMode::general);
            CHECK(r.found == oracle::has_grid_representation(bridge::family(c), 4, d, 8));
        }
}

TEST_CASE("strong representations validate and respect their mode")
{
    for (int n = 2; n <= 5; ++n)
        for (const auto & g : isomorphism_classes(n, false))
            for (int d = 1; d < n && d <= 3; ++d) {
                auto c = delta_d(g, d);
                bool found[3] = {};
                for (auto mode : {StrongMode::general, StrongMode::unit, StrongMode::proper}) {
                    auto r = find_strong_interval_representation(c, mode);
                    CHECK(r.search_exhaustive);
                    found[static_cast<int>(mode)] = r.found;
                    if (! r.found)
                        continue;
                    REQUIRE(r.labeling);
                    REQUIRE(r.representation);
                    auto labeled = relabel(c, *r.labeling);
                    CHECK(validate_interval_representation(labeled, *r.representation));
                    auto flags = representation_flags(*r.representation);
                    if (mode == StrongMode::unit)
                        CHECK(flags.unit);
                    if (mode == StrongMode::proper)
                        CHECK(flags.proper);
                    // Sorting by (left, right) gives an under-closed labeling.
                    CHECK(left_endpoint_order(*r.representation).is_identity());
                    CHECK(is_under_closed_local(labeled));
                }
                CHECK(found[1] == found[2]);
                if (found[1])
                    CHECK(found[0]);
            }
}

TEST_CASE("interval graphs: clique construction, models and under-closed labelings")
{
    for (int n = 2; n <= 5; ++n)
        for (const auto & g : enumerate_graphs(n, false)) {
            if (! g.edge_count())
                continue;
            bool interval = interval_graph_oracle(g);
            auto model = find_interval_model(g);
            REQUIRE(model.has_value() == interval);
            if (model)
                for (int u = 1; u <= n; ++u)
                    for (int v = u + 1; v <= n; ++v)
                        CHECK(model->at(u).intersects(model->at(v)) == g.adjacent(u, v));
            auto c = delta_d(g, 1);
            CHECK(find_under_closed_labeling(c).found == interval);
            if (is_under_closed_local(c)) {
                auto r = build_clique_interval_representation(g);
                REQUIRE(r.found);
                REQUIRE(r.representation);
                CHECK(validate_interval_representation(c, *r.representation));
            }
            else
                CHECK_THROWS_AS(build_clique_interval_representation(g), InputError);
        }
}

TEST_CASE("recognition examples")
{
    auto ex = example_graph();
    auto c = delta_d(ex, 2);
    // 123, 124, 234 has no unit-interval labeling: whichever vertex takes
    // label 4 leaves a facet whose span holds a missing triple.
    CHECK_FALSE(find_unit_interval_labeling(c).found);
    CHECK_FALSE(recognize_graph_class(ex, 2, GraphClass::unit_interval).found);
    CHECK(find_under_closed_labeling(c).found);
    CHECK(recognize_graph_class(ex, 2, GraphClass::strong_unit).found);

    CHECK(find_under_closed_labeling(delta_d(cycle_graph(4), 3)).found);
    CHECK_FALSE(find_under_closed_labeling(delta_d(cycle_graph(4), 1)).found);
    CHECK_FALSE(find_unit_interval_labeling(delta_d(star_graph(3), 1)).found);

    CHECK_FALSE(recognize_graph_class(cycle_graph(5), 2, GraphClass::unit_interval).found);
    CHECK(recognize_graph_class(cycle_graph(5), 3, GraphClass::unit_interval).found);
    auto two_edges = recognize_graph_class(Graph(4, {{1, 2}, {3, 4}}), 1, GraphClass::unit_interval);
    CHECK(two_edges.found);
    REQUIRE(two_edges.labeling);
    CHECK(two_edges.labeling->images() == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("class recognition composes components")
{
    const GraphClass classes[] = {GraphClass::under_closed, GraphClass::unit_interval, GraphClass::condition_star,
        GraphClass::strong_interval, GraphClass::strong_unit, GraphClass::strong_proper};
    for (int n = 2; n <= 6; ++n)
        for (const auto & g : isomorphism_classes(n, false))
            for (int d = 1; d < n && d <= 2; ++d)
                for (auto cls : classes) {
                    bool strong = cls == GraphClass::strong_interval || cls == GraphClass::strong_unit
                        || cls == GraphClass::strong_proper;
                    if (strong && n > 5)
                        continue;
                    auto r = recognize_graph_class(g, d, cls);
                    bool each = true;
                    for (auto comp : components(g)) {
                        if (comp.size() < d + 1)
                            continue;
                        auto part = compact_subgraph(g, comp).graph;
                        each = each && recognize_graph_class(part, d, cls).found;
                    }
                    CHECK(r.found == each);
                    if (! r.found)
                        continue;
                    REQUIRE(r.labeling);
                    auto labeled = relabel(delta_d(g, d), *r.labeling);
                    if (strong) {
                        REQUIRE(r.representation);
                        CHECK(validate_interval_representation(labeled, *r.representation));
                        auto flags = representation_flags(*r.representation);
                        if (cls == GraphClass::strong_unit)
                            CHECK(flags.unit);
                        if (cls == GraphClass::strong_proper)
                            CHECK(flags.proper);
                    }
                    else
                        CHECK(holds(labeled,
                            cls == GraphClass::under_closed    ? LabelingPredicate::under_closed_local
                                : cls == GraphClass::unit_interval ? LabelingPredicate::unit_interval
                                                                   : LabelingPredicate::condition_star));
                }
}

TEST_CASE("guards and names")
{
    SearchGuards tight{4, 3};
    auto c = delta_d(path_graph(5), 1);
    CHECK_THROWS_AS(find_unit_interval_labeling(c, tight), GuardRefusal);
    CHECK_THROWS_AS(find_strong_interval_representation(c, StrongMode::general, tight), GuardRefusal);
    // The guard applies to each component, not to the whole graph.
    Graph two_paths(6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}});
    CHECK(recognize_graph_class(two_paths, 1, GraphClass::strong_unit, tight).found);
    CHECK_THROWS_AS(recognize_graph_class(path_graph(5), 1, GraphClass::unit_interval, tight), GuardRefusal);

    for (auto cls : {GraphClass::under_closed, GraphClass::unit_interval, GraphClass::strong_interval,
             GraphClass::strong_unit, GraphClass::strong_proper, GraphClass::condition_star})
        CHECK(parse_graph_class(graph_class_name(cls)) == cls);
    CHECK_THROWS_AS(parse_graph_class("interval"), InputError);
}
