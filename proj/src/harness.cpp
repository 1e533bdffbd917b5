#include <ivc/complex.hpp>
#include <ivc/enumerate.hpp>
#include <ivc/error.hpp>
#include <ivc/forbidden.hpp>
#include <ivc/harness.hpp>
#include <ivc/labeling.hpp>
#include <ivc/predicates.hpp>
#include <ivc/recognition.hpp>
#include <ivc/sortability.hpp>

#include "facet_rules.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cctype>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace ivc {

namespace {
    constexpr std::array<std::pair<SuiteId, std::string_view>, 14> suite_names{{
        {SuiteId::under_closed_equiv, "UNDER_CLOSED_EQUIV"},
        {SuiteId::unit_equiv_123, "UNIT_EQUIV_123"},
        {SuiteId::star_theorem, "STAR_THEOREM"},
        {SuiteId::closed_is_proper, "CLOSED_IS_PROPER"},
        {SuiteId::strong_implies_uc, "STRONG_IMPLIES_UC"},
        {SuiteId::monotone, "MONOTONE"},
        {SuiteId::sortable_equiv, "SORTABLE_EQUIV"},
        {SuiteId::interval_theorem_a, "INTERVAL_THEOREM_A"},
        {SuiteId::forbidden, "FORBIDDEN"},
        {SuiteId::unit_implies_chordal_complex, "UNIT_IMPLIES_CHORDAL_COMPLEX"},
        {SuiteId::cycles, "CYCLES"},
        {SuiteId::forests, "FORESTS"},
        {SuiteId::corona, "CORONA"},
        {SuiteId::sortable_forbidden, "SORTABLE_FORBIDDEN"},
    }};

    constexpr int strong_max_n = SearchGuards{}.strong_max_n;
    constexpr std::array<StrongMode, 3> strong_modes{StrongMode::general, StrongMode::unit, StrongMode::proper};

    auto mode_label(StrongMode m) -> std::string
    {
        switch (m) {
        case StrongMode::general: return "general";
        case StrongMode::unit: return "unit";
        case StrongMode::proper: return "proper";
        }
        return "?";
    }

    auto yes_no(bool b) -> std::string { return b ? "true" : "false"; }

    // Per-task output, merged in task order.
    struct Outcome {
        std::uint64_t instances = 0;
        std::vector<SuiteFailure> failures;
        std::map<std::string, std::uint64_t> tallies;
    };

    class Checker {
    public:
        Checker(SuiteId suite, const Graph & g, int d, Outcome & out) : _suite(suite), _g(g), _d(d), _out(out) {}

        auto graph() const -> const Graph & { return _g; }
        auto d() const -> int { return _d; }
        void count(std::uint64_t k = 1) { _out.instances += k; }
        void tally(const std::string & key, std::uint64_t k = 1) { _out.tallies[key] += k; }

        void fail(const std::string & expected, const std::string & actual, const std::string & context = {},
            const Labeling * labeling = nullptr)
        {
            std::ostringstream s;
            s << "# suite " << suite_name(_suite) << "\n# d " << _d << "\n";
            if (labeling)
                s << "# labeling " << format_labeling(*labeling) << "\n";
            if (! context.empty())
                s << "# context " << context << "\n";
            s << format_graph(_g);
            _out.failures.push_back(SuiteFailure{s.str(), expected, actual});
        }

        void expect_equal(bool expected, bool actual, const std::string & what, const Labeling * labeling = nullptr)
        {
            if (expected != actual)
                fail(what + " = " + yes_no(expected), what + " = " + yes_no(actual), {}, labeling);
        }

    private:
        SuiteId _suite;
        const Graph & _g;
        int _d;
        Outcome & _out;
    };

    struct Task {
        Graph g;
        int d;
        std::function<void(Checker &)> check;
    };

    auto run_tasks(SuiteId suite, const std::vector<Task> & tasks, int jobs) -> Outcome
    {
        std::vector<Outcome> outs(tasks.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next++) < tasks.size();) {
                Checker checker(suite, tasks[i].g, tasks[i].d, outs[i]);
                try {
                    tasks[i].check(checker);
                }
                catch (const std::exception & e) {
                    checker.fail("no error", e.what());
                }
            }
        };
        std::vector<std::thread> pool;
        for (int j = 1; j < jobs; ++j)
            pool.emplace_back(worker);
        worker();
        for (auto & t : pool)
            t.join();

        Outcome merged;
        for (auto & o : outs) {
            merged.instances += o.instances;
            merged.failures.insert(merged.failures.end(), o.failures.begin(), o.failures.end());
            for (const auto & [k, v] : o.tallies)
                merged.tallies[k] += v;
        }
        return merged;
    }

    auto graphs_of_order(int n, bool connected_only, const SuiteParams & p) -> std::vector<Graph>
    {
        if (p.iso_reduced || n > p.labeled_max_n) {
            if (n > max_canonical_order)
                throw GuardRefusal("enumeration at " + std::to_string(n) + " vertices: isomorphism reduction stops at "
                    + std::to_string(max_canonical_order) + " and labeled enumeration is too large");
            return isomorphism_classes(n, connected_only);
        }
        std::vector<Graph> out;
        for (const auto & g : enumerate_graphs(n, connected_only))
            out.push_back(g);
        return out;
    }

    template <typename F>
    void for_each_labeling(int n, F && f)
    {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 1);
        do
            f(Labeling::from_order(order));
        while (std::next_permutation(order.begin(), order.end()));
    }

    // Unit-interval evaluation, optionally through the broken rule.
    struct Unit {
        bool mutate;

        auto rule() const -> FacetRule
        {
            bool m = mutate;
            return [m](VertexSet f, const LabelView & view) {
                return ! rules::unit_interval(f, [&](VertexSet s) { return view.contains(s); }, m);
            };
        }

        auto holds(const PureComplex & c) const -> bool
        {
            if (! mutate)
                return is_unit_interval_def(c);
            auto contains = [&](VertexSet s) { return c.contains(s); };
            return std::none_of(c.facets().begin(), c.facets().end(),
                [&](VertexSet f) { return rules::unit_interval(f, contains, true).has_value(); });
        }

        auto on_complex(const PureComplex & c) const -> bool
        {
            return mutate ? find_labeling(c, rule()).found : find_unit_interval_labeling(c).found;
        }

        auto on_graph(const Graph & g, int d) const -> bool
        {
            if (! mutate)
                return recognize_graph_class(g, d, GraphClass::unit_interval).found;
            for (auto part : components(g))
                if (part.size() >= d + 1 && ! on_complex(delta_d(compact_subgraph(g, part).graph, d)))
                    return false;
            return true;
        }

        void each_valid(const PureComplex & c, const std::function<void(const Labeling &)> & f) const
        {
            for_each_valid_labeling(c, rule(), [&](const Labeling & l) {
                f(l);
                return true;
            });
        }
    };

    void each_valid(const PureComplex & c, SearchablePredicate p, const std::function<void(const Labeling &)> & f)
    {
        for_each_valid_labeling(c, p, [&](const Labeling & l) {
            f(l);
            return true;
        });
    }

    auto d_values(const SuiteParams & p, int n, int extra = 0) -> std::vector<int>
    {
        std::vector<int> ds;
        for (int d = p.d_min; d <= p.d_max && d + 1 + extra <= n; ++d)
            ds.push_back(d);
        return ds;
    }

    // Representation indexed by original vertex.
    auto by_vertex(const RecognitionResult & r) -> IntervalSystem
    {
        return relabel(*r.representation, r.labeling->inverse());
    }

    // ---- suites ------------------------------------------------------------

    void under_closed_equiv(Checker & ck)
    {
        const auto c = delta_d(ck.graph(), ck.d());
        for_each_labeling(c.order(), [&](const Labeling & l) {
            auto rc = relabel(c, l);
            ck.count();
            bool def = is_under_closed_def(rc), local = is_under_closed_local(rc);
            if (def != local)
                ck.fail("definition form = local form", "definition " + yes_no(def) + ", local " + yes_no(local),
                    {}, &l);
        });
    }

    void unit_equiv_123(Checker & ck, Unit unit)
    {
        const auto c = delta_d(ck.graph(), ck.d());
        for_each_labeling(c.order(), [&](const Labeling & l) {
            auto rc = relabel(c, l);
            ck.count();
            bool u = unit.holds(rc);
            bool c2 = satisfies_equiv_condition(rc, EquivVariant::cond2);
            bool c3 = satisfies_equiv_condition(rc, EquivVariant::cond3);
            if (u != c2 || u != c3)
                ck.fail("unit, cond2, cond3 agree",
                    "unit " + yes_no(u) + ", cond2 " + yes_no(c2) + ", cond3 " + yes_no(c3), {}, &l);
        });
    }

    void star_theorem(Checker & ck, Unit unit)
    {
        const auto c = delta_d(ck.graph(), ck.d());
        ck.count();
        bool u = unit.on_complex(c);
        bool star = find_condition_star_labeling(c).found;
        ck.expect_equal(u, star, "condition-star labeling exists");
        if (ck.d() == 1)
            ck.expect_equal(u, find_closed_labeling(ck.graph()).found, "closed labeling exists");
    }

    void closed_is_proper(Checker & ck, Unit unit)
    {
        const auto & g = ck.graph();
        const auto c = delta_d(g, 1);
        ck.count();
        bool closed = find_closed_labeling(g).found;
        ck.expect_equal(closed, unit.on_complex(c), "unit-interval labeling of Delta_1 exists");
        if (g.order() <= strong_max_n) {
            ck.expect_equal(closed, find_strong_interval_representation(c, StrongMode::proper).found,
                "proper interval representation exists");
            ck.expect_equal(closed, find_strong_interval_representation(c, StrongMode::unit).found,
                "unit interval representation exists");
        }
    }

    void strong_implies_uc(Checker & ck)
    {
        const auto c = delta_d(ck.graph(), ck.d());
        for (auto mode : strong_modes) {
            auto r = find_strong_interval_representation(c, mode);
            if (! r.found)
                continue;
            ck.count();
            auto sorted = left_endpoint_order(by_vertex(r));
            if (! is_under_closed_local(relabel(c, sorted)))
                ck.fail("sorted labeling is under closed", "it is not (mode " + mode_label(mode) + ")", {}, &sorted);
            if (! find_under_closed_labeling(c).found)
                ck.fail("under-closed labeling exists", "search found none (mode " + mode_label(mode) + ")");
        }
    }

    void monotone(Checker & ck, Unit unit)
    {
        const auto & g = ck.graph();
        const int d = ck.d();
        const auto low = delta_d(g, d), high = delta_d(g, d + 1);

        each_valid(low, SearchablePredicate::under_closed, [&](const Labeling & l) {
            ck.count();
            if (! is_under_closed_local(relabel(high, l)))
                ck.fail("labeling stays under closed at d + 1", "it does not", "under-closed lift", &l);
        });

        unit.each_valid(low, [&](const Labeling & l) {
            bool lifts = unit.holds(relabel(high, l));
            if (d == 1) {
                ck.tally("d=1 unit-interval labelings checked (not asserted)");
                if (! lifts)
                    ck.tally("d=1 unit-interval labelings not unit interval at d=2 (not asserted)");
                return;
            }
            ck.count();
            if (! lifts)
                ck.fail("labeling stays unit interval at d + 1", "it does not", "unit-interval lift", &l);
        });

        if (g.order() > strong_max_n)
            return;
        for (auto mode : strong_modes) {
            auto r = find_strong_interval_representation(low, mode);
            if (! r.found)
                continue;
            ck.count();
            if (! validate_interval_representation(relabel(high, *r.labeling), *r.representation))
                ck.fail("representation also represents Delta_{d+1}", "it does not (mode " + mode_label(mode) + ")",
                    "representation " + format_interval_system(*r.representation), &*r.labeling);
        }
    }

    void sortable_equiv(Checker & ck, Unit unit)
    {
        const auto & g = ck.graph();
        ck.count();
        auto sortable = find_sortable_labeling(g, ck.d());
        bool u = unit.on_graph(g, ck.d());
        if (sortable.has_value() != u)
            ck.fail("sortable labeling exists = " + yes_no(u), "sortable labeling exists = " + yes_no(sortable.has_value()),
                "unit-interval recognition " + yes_no(u), sortable ? &*sortable : nullptr);
    }

    void interval_theorem_a(Checker & ck)
    {
        const auto & g = ck.graph();
        const int n = g.order();
        const auto c = delta_d(g, 1);
        ck.count();
        auto uc = find_under_closed_labeling(c);
        bool interval = find_interval_model(g).has_value();
        ck.expect_equal(interval, uc.found, "1-under-closed labeling exists");

        each_valid(c, SearchablePredicate::under_closed, [&](const Labeling & l) {
            ck.count();
            auto relabeled = relabel(g, l);
            auto built = build_clique_interval_representation(relabeled);
            if (! validate_interval_representation(relabel(c, l), *built.representation))
                ck.fail("clique construction represents Delta_1", "it does not", {}, &l);
        });

        if (uc.found)
            for (int k = 2; k + 1 <= n; ++k) {
                ck.count();
                if (! is_under_closed_local(relabel(delta_d(g, k), *uc.labeling)))
                    ck.fail("1-under-closed labeling is k-under closed", "fails at k = " + std::to_string(k), {},
                        &*uc.labeling);
            }

        if (n <= strong_max_n) {
            auto strong = find_strong_interval_representation(c, StrongMode::general);
            ck.expect_equal(interval, strong.found, "interval representation of Delta_1 exists");
            if (strong.found)
                for (int k = 2; k + 1 <= n; ++k) {
                    ck.count();
                    if (! validate_interval_representation(relabel(delta_d(g, k), *strong.labeling), *strong.representation))
                        ck.fail("representation of Delta_1 also represents Delta_k", "fails at k = " + std::to_string(k),
                            "representation " + format_interval_system(*strong.representation), &*strong.labeling);
                }
        }
    }

    void forbidden_implications(Checker & ck, Unit unit)
    {
        const auto & g = ck.graph();
        const int d = ck.d();
        ck.count();
        bool u = unit.on_graph(g, d);
        bool uc = recognize_graph_class(g, d, GraphClass::under_closed).found;
        auto cycle = find_induced_cycle_geq(g, d + 3);
        if ((u || uc) && cycle)
            ck.fail("no induced cycle of length >= d + 3",
                "cycle " + cycle->vertices.to_string() + (u ? " in a unit-interval graph" : " in an under-closed graph"));
        if (u) {
            if (auto claw = find_d_claw(g, d))
                ck.fail("no d-claw", "claw " + claw->parts[0].to_string() + " " + claw->parts[1].to_string() + " "
                        + claw->parts[2].to_string() + " at " + std::to_string(claw->center));
            if (auto paw = find_d_paw(g, d))
                ck.fail("no d-paw", "paw " + paw->vertices.to_string());
        }
    }

    void unit_implies_chordal(Checker & ck, Unit unit)
    {
        const auto c = delta_d(ck.graph(), ck.d());
        unit.each_valid(c, [&](const Labeling & l) {
            ck.count();
            if (! is_chordal_complex(relabel(c, l)))
                ck.fail("chordal complex", "not chordal", {}, &l);
        });
    }

    void cycles(Checker & ck, Unit unit)
    {
        const auto & g = ck.graph();
        const int n = g.order(), d = ck.d();
        const bool expected = d >= n - 2;
        ck.count();
        ck.expect_equal(expected, unit.on_graph(g, d), "unit interval");
        ck.expect_equal(expected, recognize_graph_class(g, d, GraphClass::under_closed).found, "under closed");
    }

    void forests(Checker & ck, Unit unit)
    {
        const auto & g = ck.graph();
        const int d = ck.d();
        bool expected = true;
        for (auto part : components(g))
            if (part.size() > d + 1 && ! is_path_graph(compact_subgraph(g, part).graph))
                expected = false;
        ck.count();
        ck.expect_equal(expected, unit.on_graph(g, d), "unit interval");
    }

    void corona_check(Checker & ck, Unit unit)
    {
        ck.count();
        if (unit.on_graph(ck.graph(), ck.d()))
            ck.fail("not unit interval", "unit interval");
    }

    void sortable_forbidden(Checker & ck)
    {
        const auto & g = ck.graph();
        const int d = ck.d();
        auto sortable = find_sortable_labeling(g, d);
        if (! sortable)
            return;
        ck.count();
        const Labeling * l = &*sortable;
        if (auto cycle = find_induced_cycle_geq(g, d + 3))
            ck.fail("no induced cycle of length >= d + 3", "cycle " + cycle->vertices.to_string(), "sortable", l);
        for (int k = d; k <= d + 1; ++k) {
            if (auto claw = find_d_claw(g, k))
                ck.fail("no " + std::to_string(k) + "-claw",
                    "claw " + claw->parts[0].to_string() + " " + claw->parts[1].to_string() + " "
                        + claw->parts[2].to_string() + " at " + std::to_string(claw->center),
                    "sortable", l);
            if (auto paw = find_d_paw(g, k))
                ck.fail("no " + std::to_string(k) + "-paw", "paw " + paw->vertices.to_string(), "sortable", l);
        }
    }

    // ---- corona sampling ---------------------------------------------------

    struct CoronaSample {
        Graph graph;
        int d;
    };

    auto random_graph(std::mt19937_64 & rng, int n, bool connected) -> Graph
    {
        std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << edge_slot_count(n)) - 1);
        for (;;) {
            auto g = graph_from_edge_mask(n, pick(rng));
            if (! connected || n == 0 || is_connected(g))
                return g;
        }
    }

    // Base graph G, connected G' = first d - 1 vertices reached by a search
    // from vertex 1, and attached graphs whose vertices over G' hold three
    // pairwise non-adjacent vertices.
    auto sample_coronas(const SuiteParams & p) -> std::vector<CoronaSample>
    {
        std::mt19937_64 rng(p.seed);
        std::vector<CoronaSample> out;
        const int d_lo = std::max(2, p.d_min);
        if (d_lo > p.d_max)
            return out;
        std::uniform_int_distribution<int> pick_d(d_lo, p.d_max);
        while (static_cast<int>(out.size()) < p.samples) {
            const int d = pick_d(rng);
            const int base_max = p.n_max - 3;
            if (base_max < d - 1)
                throw InputError("CORONA needs n_max >= d + 2 for every d in range");
            std::uniform_int_distribution<int> pick_m(d - 1, base_max);
            const int m = pick_m(rng);
            auto base = random_graph(rng, m, true);

            std::vector<int> core{1};
            for (std::size_t i = 0; i < core.size() && static_cast<int>(core.size()) < d - 1; ++i)
                for (int w : base.neighbors(core[i]))
                    if (std::find(core.begin(), core.end(), w) == core.end() && static_cast<int>(core.size()) < d - 1)
                        core.push_back(w);

            int budget = p.n_max - m;
            std::vector<Graph> family;
            for (int x = 1; x <= m; ++x) {
                std::uniform_int_distribution<int> pick_size(0, budget);
                int size = pick_size(rng);
                budget -= size;
                family.push_back(random_graph(rng, size, false));
            }
            auto built = corona(base, family);
            const int total = built.graph.order();
            if (total < d + 1)
                continue;

            // Attached vertices follow the base, grouped by anchor.
            VertexSet attached;
            int next = m + 1;
            for (int x = 1; x <= m; ++x) {
                const bool in_core = std::find(core.begin(), core.end(), x) != core.end();
                for (int i = 0; i < family[x - 1].order(); ++i, ++next)
                    if (in_core)
                        attached.insert(next);
            }
            bool hypothesis = false;
            for_each_subset(attached, 3, [&](VertexSet s) {
                hypothesis = is_d_independent(built.graph, s, 1);
                return ! hypothesis;
            });
            if (hypothesis)
                out.push_back({built.graph, d});
        }
        return out;
    }

    auto build_tasks(SuiteId id, const SuiteParams & p) -> std::vector<Task>
    {
        const Unit unit{p.mutate};
        std::vector<Task> tasks;
        auto add_graphs = [&](bool connected_only, int n_floor, int extra, auto check, auto keep) {
            for (int n = std::max(p.n_min, n_floor); n <= p.n_max; ++n)
                for (auto & g : graphs_of_order(n, connected_only, p)) {
                    if (! keep(g))
                        continue;
                    for (int d : d_values(p, n, extra))
                        tasks.push_back({g, d, check});
                }
        };
        auto all = [](const Graph &) { return true; };

        switch (id) {
        case SuiteId::under_closed_equiv: add_graphs(true, 2, 0, under_closed_equiv, all); break;
        case SuiteId::unit_equiv_123:
            add_graphs(true, 2, 0, [unit](Checker & ck) { unit_equiv_123(ck, unit); }, all);
            break;
        case SuiteId::star_theorem: add_graphs(true, 2, 0, [unit](Checker & ck) { star_theorem(ck, unit); }, all); break;
        case SuiteId::closed_is_proper:
            for (int n = std::max(p.n_min, 2); n <= p.n_max; ++n)
                for (auto & g : graphs_of_order(n, false, p))
                    tasks.push_back({g, 1, [unit](Checker & ck) { closed_is_proper(ck, unit); }});
            break;
        case SuiteId::strong_implies_uc:
            if (p.n_max > strong_max_n)
                throw GuardRefusal("STRONG_IMPLIES_UC searches interval systems, limited to "
                    + std::to_string(strong_max_n) + " vertices");
            add_graphs(false, 2, 0, strong_implies_uc, all);
            break;
        case SuiteId::monotone:
            add_graphs(false, 3, 1, [unit](Checker & ck) { monotone(ck, unit); },
                [](const Graph & g) { return ! has_isolated_vertex(g); });
            break;
        case SuiteId::sortable_equiv:
            add_graphs(false, 2, 0, [unit](Checker & ck) { sortable_equiv(ck, unit); }, all);
            break;
        case SuiteId::interval_theorem_a:
            for (int n = std::max(p.n_min, 2); n <= p.n_max; ++n)
                for (auto & g : graphs_of_order(n, false, p))
                    tasks.push_back({g, 1, interval_theorem_a});
            break;
        case SuiteId::forbidden:
            add_graphs(false, 2, 0, [unit](Checker & ck) { forbidden_implications(ck, unit); }, all);
            break;
        case SuiteId::unit_implies_chordal_complex:
            add_graphs(false, 2, 0, [unit](Checker & ck) { unit_implies_chordal(ck, unit); }, all);
            break;
        case SuiteId::cycles:
            for (int n = std::max(p.n_min, 3); n <= p.n_max; ++n)
                for (int d : d_values(p, n))
                    tasks.push_back({cycle_graph(n), d, [unit](Checker & ck) { cycles(ck, unit); }});
            break;
        case SuiteId::forests:
            add_graphs(false, 2, 0, [unit](Checker & ck) { forests(ck, unit); }, is_forest);
            break;
        case SuiteId::corona:
            for (auto & s : sample_coronas(p))
                tasks.push_back({s.graph, s.d, [unit](Checker & ck) { corona_check(ck, unit); }});
            break;
        case SuiteId::sortable_forbidden: add_graphs(false, 2, 0, sortable_forbidden, all); break;
        }
        return tasks;
    }

    auto standing_notes(SuiteId id, const SuiteParams & p) -> std::vector<std::string>
    {
        std::vector<std::string> notes;
        const bool has_d1 = p.d_min <= 1;
        switch (id) {
        case SuiteId::cycles:
        case SuiteId::forests:
            if (has_d1)
                notes.push_back("d=1: only the d-level statements (sortable, unit interval, under closed, the graph "
                                "condition) are asserted; their all-k counterparts are not claimed at d=1 and not asserted");
            break;
        case SuiteId::sortable_equiv:
            if (has_d1)
                notes.push_back("d=1: unit interval <=> sortable asserted; the all-k forms are not claimed at d=1 and not asserted");
            break;
        case SuiteId::monotone:
            if (has_d1)
                notes.push_back("d=1: unit-interval lift recorded, not asserted (only claimed for d > 1)");
            break;
        case SuiteId::corona:
            notes.push_back("instances sampled with seed " + std::to_string(p.seed));
            break;
        default: break;
        }
        return notes;
    }
}

auto all_suites() -> std::vector<SuiteId>
{
    std::vector<SuiteId> out;
    for (auto [id, name] : suite_names)
        out.push_back(id);
    return out;
}

auto suite_name(SuiteId id) -> std::string_view
{
    for (auto [value, name] : suite_names)
        if (value == id)
            return name;
    return "?";
}

auto parse_suite_id(std::string_view name) -> SuiteId
{
    std::string upper(name);
    for (auto & ch : upper)
        ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (auto [value, n] : suite_names)
        if (n == upper)
            return value;
    throw InputError("unknown suite '" + std::string(name) + "'");
}

auto default_params(SuiteId id) -> SuiteParams
{
    SuiteParams p;
    switch (id) {
    case SuiteId::under_closed_equiv:
    case SuiteId::unit_equiv_123:
    case SuiteId::strong_implies_uc: p.n_max = 5; break;
    case SuiteId::star_theorem:
    case SuiteId::closed_is_proper:
    case SuiteId::interval_theorem_a: p.n_max = 6; break;
    case SuiteId::monotone:
        p.n_max = 6;
        p.d_max = 4;
        break;
    case SuiteId::sortable_equiv:
        p.n_max = 6;
        p.iso_reduced = true;
        break;
    case SuiteId::forbidden:
    case SuiteId::unit_implies_chordal_complex: p.n_max = 7; break;
    case SuiteId::cycles:
        p.n_min = 3;
        p.n_max = 7;
        p.d_max = 6;
        break;
    case SuiteId::forests:
        p.n_max = 7;
        p.d_min = 2;
        break;
    case SuiteId::corona:
        p.n_max = 8;
        p.d_min = 2;
        break;
    case SuiteId::sortable_forbidden:
        p.n_max = 6;
        p.d_min = 2;
        p.iso_reduced = true;
        break;
    }
    if (id == SuiteId::closed_is_proper || id == SuiteId::interval_theorem_a)
        p.d_min = p.d_max = 1;
    return p;
}

auto run_suite(SuiteId id, const SuiteParams & params) -> SuiteReport
{
    if (params.n_max > max_enumeration_order || params.n_min < 1 || params.n_min > params.n_max)
        throw InputError("vertex range must satisfy 1 <= n_min <= n_max <= " + std::to_string(max_enumeration_order));
    if (params.d_min < 1 || params.d_min > params.d_max)
        throw InputError("d range must satisfy 1 <= d_min <= d_max");
    if (params.jobs < 1)
        throw InputError("jobs must be positive");
    if (params.samples < 0)
        throw InputError("samples must be non-negative");

    const auto start = std::chrono::steady_clock::now();
    auto outcome = run_tasks(id, build_tasks(id, params), params.jobs);

    SuiteReport report;
    report.suite = id;
    report.params = params;
    report.instances = outcome.instances;
    report.failures = std::move(outcome.failures);
    std::stable_sort(report.failures.begin(), report.failures.end(),
        [](const SuiteFailure & a, const SuiteFailure & b) { return a.instance < b.instance; });
    report.notes = standing_notes(id, params);
    for (const auto & [key, count] : outcome.tallies)
        report.notes.push_back(key + ": " + std::to_string(count));
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace ivc
