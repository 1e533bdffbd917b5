#include <ivc/enumerate.hpp>
#include <ivc/error.hpp>
#include <ivc/predicates.hpp>
#include <ivc/recognition.hpp>

#include "facet_rules.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>

namespace ivc {

namespace {
    auto check_labeling_guard(int n, const SearchGuards & guards)
    {
        if (n > guards.labeling_max_n)
            throw GuardRefusal("labeling search on " + std::to_string(n) + " vertices exceeds the limit of "
                + std::to_string(guards.labeling_max_n));
    }

    class LabelingSearch {
    public:
        LabelingSearch(const PureComplex & c, const FacetRule & rule, const std::function<bool(const Labeling &)> & visit) :
            _c(c), _rule(rule), _visit(visit), _n(c.order()), _vertex_at(_n + 1, 0), _label_of(_n + 1, 0),
            _cover(_n), _through(_n)
        {
            for (auto f : c.facets())
                for (int v : f) {
                    _cover[v - 1] = _cover[v - 1] | f;
                    _through[v - 1].push_back(f);
                }
        }

        // Returns false once the visitor asks to stop.
        auto run(int m) -> bool
        {
            if (m > _n) {
                std::vector<int> order(_vertex_at.begin() + 1, _vertex_at.end());
                return _visit(Labeling::from_order(order));
            }
            LabelView view(_c, _vertex_at, _cover);
            for (int v = 1; v <= _n; ++v) {
                if (_label_of[v])
                    continue;
                ++nodes;
                _vertex_at[m] = v;
                _label_of[v] = m;
                if (facets_completed_ok(v, view) && ! run(m + 1)) {
                    _label_of[v] = 0;
                    return false;
                }
                _label_of[v] = 0;
            }
            _vertex_at[m] = 0;
            return true;
        }

        std::uint64_t nodes = 0;

    private:
        // Facets through v whose other vertices are already labeled now have
        // v as their largest label.
        auto facets_completed_ok(int v, const LabelView & view) const -> bool
        {
            for (auto f : _through[v - 1]) {
                VertexSet labels;
                bool complete = true;
                for (int u : f) {
                    if (! _label_of[u]) {
                        complete = false;
                        break;
                    }
                    labels.insert(_label_of[u]);
                }
                if (complete && ! _rule(labels, view))
                    return false;
            }
            return true;
        }

        const PureComplex & _c;
        const FacetRule & _rule;
        const std::function<bool(const Labeling &)> & _visit;
        int _n;
        std::vector<int> _vertex_at, _label_of;
        std::vector<VertexSet> _cover;
        std::vector<std::vector<VertexSet>> _through;
    };

    auto search_all(const PureComplex & c, const FacetRule & rule, const std::function<bool(const Labeling &)> & visit,
        const SearchGuards & guards) -> std::uint64_t
    {
        check_labeling_guard(c.order(), guards);
        LabelingSearch search(c, rule, visit);
        search.run(1);
        return search.nodes;
    }

    auto rule_for(SearchablePredicate p) -> FacetRule
    {
        switch (p) {
        case SearchablePredicate::under_closed:
            return [](VertexSet f, const LabelView & view) {
                return ! rules::under_closed_local(f, [&](VertexSet s) { return view.contains(s); });
            };
        case SearchablePredicate::unit_interval:
            return [](VertexSet f, const LabelView & view) {
                return ! rules::unit_interval(f, [&](VertexSet s) { return view.contains(s); });
            };
        case SearchablePredicate::condition_star:
            return [](VertexSet f, const LabelView & view) {
                return ! rules::condition_star(
                    f, [&](VertexSet s) { return view.contains(s); }, [&](int a, int b) { return view.cofacet(a, b); });
            };
        }
        return {};
    }

    auto predicate_for(SearchablePredicate p) -> LabelingPredicate
    {
        switch (p) {
        case SearchablePredicate::under_closed: return LabelingPredicate::under_closed_local;
        case SearchablePredicate::unit_interval: return LabelingPredicate::unit_interval;
        case SearchablePredicate::condition_star: return LabelingPredicate::condition_star;
        }
        return LabelingPredicate::under_closed_local;
    }

    auto find_checked(const PureComplex & c, SearchablePredicate p, const SearchGuards & guards) -> RecognitionResult
    {
        auto result = find_labeling(c, rule_for(p), guards);
        if (result.found) {
            auto pred = predicate_for(p);
            if (auto v = find_violation(relabel(c, *result.labeling), pred))
                throw TheoremViolation("search certificate fails " + std::string(predicate_name(pred)) + ": "
                    + describe(*v, pred));
        }
        return result;
    }

    auto graph_complex(const Graph & g) -> PureComplex
    {
        std::vector<VertexSet> edges;
        for (auto [u, v] : g.edges())
            edges.push_back(VertexSet{u, v});
        return PureComplex(g.order(), 1, std::move(edges));
    }

    // Umbrella ordering: u < v < w with uw an edge forces uv and vw. Returns
    // the vertex order (vertex at position 1, 2, ...).
    auto umbrella_order(const Graph & h) -> std::optional<std::vector<int>>
    {
        if (h.order() < 2)
            return std::vector<int>(h.order(), 1);
        FacetRule rule = [](VertexSet edge, const LabelView & view) {
            const int a = edge.min(), m = edge.max();
            for (int b = a + 1; b < m; ++b)
                if (! view.contains(VertexSet{a, b}) || ! view.contains(VertexSet{b, m}))
                    return false;
            return true;
        };
        auto result = find_labeling(graph_complex(h), rule, SearchGuards{h.order(), 0});
        if (! result.found)
            return std::nullopt;
        return result.labeling->order();
    }

    auto integer_system(const std::vector<std::pair<std::int64_t, std::int64_t>> & ends) -> IntervalSystem
    {
        std::vector<Interval> intervals;
        for (auto [l, r] : ends)
            intervals.push_back(Interval{Rational(l), Rational(r)});
        return IntervalSystem(std::move(intervals));
    }

    auto clique_order_model(const Graph & h) -> std::optional<IntervalSystem>
    {
        const int n = h.order();
        auto cliques = maximal_cliques(h);
        // Interval graphs are chordal, and chordal graphs have at most n maximal cliques.
        if (static_cast<int>(cliques.size()) > n)
            return std::nullopt;
        const int k = static_cast<int>(cliques.size());
        std::vector<int> sequence, state(n + 1, 0); // 0 unseen, 1 open, 2 closed
        std::vector<bool> used(k, false);

        std::function<bool()> place = [&]() -> bool {
            if (static_cast<int>(sequence.size()) == k)
                return true;
            for (int q = 0; q < k; ++q) {
                if (used[q])
                    continue;
                bool ok = true;
                for (int v : cliques[q])
                    if (state[v] == 2)
                        ok = false;
                if (! ok)
                    continue;
                auto saved = state;
                for (int v = 1; v <= n; ++v)
                    if (state[v] == 1 && ! cliques[q].contains(v))
                        state[v] = 2;
                for (int v : cliques[q])
                    state[v] = 1;
                used[q] = true;
                sequence.push_back(q);
                if (place())
                    return true;
                sequence.pop_back();
                used[q] = false;
                state = saved;
            }
            return false;
        };
        if (! place())
            return std::nullopt;

        std::vector<std::pair<std::int64_t, std::int64_t>> ends(n, {0, 0});
        std::vector<bool> seen(n, false);
        for (int pos = 0; pos < k; ++pos)
            for (int v : cliques[sequence[pos]]) {
                if (! seen[v - 1])
                    ends[v - 1].first = pos + 1;
                seen[v - 1] = true;
                ends[v - 1].second = pos + 1;
            }
        return integer_system(ends);
    }

    auto proper_model(const Graph & h) -> std::optional<IntervalSystem>
    {
        auto order = umbrella_order(h);
        if (! order)
            return std::nullopt;
        const int n = h.order();
        std::vector<std::pair<std::int64_t, std::int64_t>> ends(n);
        for (int p = 1; p <= n; ++p) {
            int reach = p;
            for (int q = p + 1; q <= n; ++q)
                if (h.adjacent((*order)[p - 1], (*order)[q - 1]))
                    reach = q;
            // Scaling by n + 1 leaves room to break right-end ties by
            // position, so no interval contains another.
            ends[(*order)[p - 1] - 1] = {2 * p * (n + 1), (2 * reach + 1) * (n + 1) + p};
        }
        return integer_system(ends);
    }

    // Unit model along an umbrella ordering. Positions i < j need
    // x_j - x_i <= 1 when adjacent and x_j - x_i > 1 otherwise, plus
    // x_i <= x_{i+1}. Weights are (integer, epsilon-count) pairs compared
    // lexicographically; with epsilon = 1 / (2n + 2) scaled away the
    // intervals become integer with common length 2n + 2.
    auto unit_model(const Graph & h) -> std::optional<IntervalSystem>
    {
        auto order = umbrella_order(h);
        if (! order)
            return std::nullopt;
        const int n = h.order();
        using Weight = std::array<std::int64_t, 2>;
        struct Arc {
            int from, to;
            Weight w;
        };
        std::vector<Arc> arcs;
        for (int p = 1; p < n; ++p)
            arcs.push_back({p + 1, p, {0, 0}});
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                if (h.adjacent((*order)[i - 1], (*order)[j - 1]))
                    arcs.push_back({i, j, {1, 0}});
                else
                    arcs.push_back({j, i, {-1, -1}});
            }

        std::vector<Weight> dist(n + 1, Weight{0, 0});
        bool changed = true;
        for (int round = 0; round <= n && changed; ++round) {
            changed = false;
            for (const auto & a : arcs) {
                Weight via{dist[a.from][0] + a.w[0], dist[a.from][1] + a.w[1]};
                if (via < dist[a.to]) {
                    dist[a.to] = via;
                    changed = true;
                }
            }
        }
        if (changed)
            return std::nullopt;

        const std::int64_t scale = 2 * n + 2;
        std::vector<std::int64_t> left(n + 1);
        for (int p = 1; p <= n; ++p)
            left[p] = dist[p][0] * scale + dist[p][1];
        const auto lowest = *std::min_element(left.begin() + 1, left.end());
        std::vector<std::pair<std::int64_t, std::int64_t>> ends(n);
        for (int p = 1; p <= n; ++p)
            ends[(*order)[p - 1] - 1] = {left[p] - lowest, left[p] - lowest + scale};
        return integer_system(ends);
    }

    // Facet pattern of a complex over all (dim+1)-subsets in lex order.
    auto signature(int n, int size, const std::function<bool(VertexSet)> & member) -> std::vector<bool>
    {
        std::vector<bool> bits;
        for_each_subset(VertexSet::range(n), size, [&](VertexSet s) {
            bits.push_back(member(s));
            return true;
        });
        return bits;
    }

    // For each (n, size): edge masks of every graph on n vertices, grouped by
    // the pattern of connected size-subsets, ascending within each group.
    auto candidate_graphs(const PureComplex & c) -> std::vector<std::uint64_t>
    {
        using Table = std::map<std::vector<bool>, std::vector<std::uint64_t>>;
        static std::mutex lock;
        static std::map<std::pair<int, int>, Table> tables;

        const int n = c.order(), size = c.dim() + 1;
        const auto key = signature(n, size, [&](VertexSet s) { return c.contains(s); });
        std::lock_guard guard(lock);
        auto [it, fresh] = tables.try_emplace({n, size});
        if (fresh) {
            const std::uint64_t masks = std::uint64_t{1} << edge_slot_count(n);
            for (std::uint64_t mask = 0; mask < masks; ++mask) {
                auto h = graph_from_edge_mask(n, mask);
                it->second[signature(n, size, [&](VertexSet s) { return is_connected_subset(h, s); })].push_back(mask);
            }
        }
        auto found = it->second.find(key);
        return found == it->second.end() ? std::vector<std::uint64_t>{} : found->second;
    }

    auto mode_flags_ok(const IntervalSystem & r, StrongMode mode) -> bool
    {
        auto flags = representation_flags(r);
        switch (mode) {
        case StrongMode::general: return true;
        case StrongMode::unit: return flags.unit;
        case StrongMode::proper: return flags.proper;
        }
        return false;
    }

    auto mode_name(StrongMode mode) -> std::string
    {
        switch (mode) {
        case StrongMode::general: return "general";
        case StrongMode::unit: return "unit";
        case StrongMode::proper: return "proper";
        }
        return "?";
    }

    constexpr std::array<std::pair<GraphClass, std::string_view>, 6> class_names{{
        {GraphClass::under_closed, "under_closed"},
        {GraphClass::unit_interval, "unit_interval"},
        {GraphClass::strong_interval, "strong_interval"},
        {GraphClass::strong_unit, "strong_unit"},
        {GraphClass::strong_proper, "strong_proper"},
        {GraphClass::condition_star, "condition_star"},
    }};

    auto strong_mode_of(GraphClass cls) -> std::optional<StrongMode>
    {
        switch (cls) {
        case GraphClass::strong_interval: return StrongMode::general;
        case GraphClass::strong_unit: return StrongMode::unit;
        case GraphClass::strong_proper: return StrongMode::proper;
        default: return std::nullopt;
        }
    }

    auto recognize_complex(const PureComplex & c, GraphClass cls, const SearchGuards & guards) -> RecognitionResult
    {
        if (auto mode = strong_mode_of(cls))
            return find_strong_interval_representation(c, *mode, guards);
        switch (cls) {
        case GraphClass::under_closed: return find_under_closed_labeling(c, guards);
        case GraphClass::unit_interval: return find_unit_interval_labeling(c, guards);
        default: return find_condition_star_labeling(c, guards);
        }
    }
}

auto find_interval_model(const Graph & g) -> std::optional<IntervalSystem>
{
    return clique_order_model(g);
}

auto find_labeling(const PureComplex & c, const FacetRule & rule, const SearchGuards & guards) -> RecognitionResult
{
    RecognitionResult result;
    result.nodes_explored = search_all(
        c, rule,
        [&](const Labeling & l) {
            result.found = true;
            result.labeling = l;
            return false;
        },
        guards);
    return result;
}

auto find_under_closed_labeling(const PureComplex & c, const SearchGuards & guards) -> RecognitionResult
{
    return find_checked(c, SearchablePredicate::under_closed, guards);
}

auto find_unit_interval_labeling(const PureComplex & c, const SearchGuards & guards) -> RecognitionResult
{
    return find_checked(c, SearchablePredicate::unit_interval, guards);
}

auto find_condition_star_labeling(const PureComplex & c, const SearchGuards & guards) -> RecognitionResult
{
    return find_checked(c, SearchablePredicate::condition_star, guards);
}

auto find_closed_labeling(const Graph & g, const SearchGuards & guards) -> RecognitionResult
{
    check_labeling_guard(g.order(), guards);
    if (g.order() < 2) {
        RecognitionResult result;
        result.found = true;
        result.labeling = Labeling::identity(g.order());
        return result;
    }
    FacetRule rule = [](VertexSet edge, const LabelView & view) {
        return ! rules::closed_edge(edge, [&](VertexSet s) { return view.contains(s); });
    };
    auto result = find_labeling(graph_complex(g), rule, guards);
    if (result.found && ! is_closed_graph(relabel(g, *result.labeling)))
        throw TheoremViolation("closed-labeling certificate does not validate");
    return result;
}

auto for_each_valid_labeling(const PureComplex & c, SearchablePredicate p,
    const std::function<bool(const Labeling &)> & visit, const SearchGuards & guards) -> std::uint64_t
{
    return search_all(c, rule_for(p), visit, guards);
}

auto for_each_valid_labeling(const PureComplex & c, const FacetRule & rule,
    const std::function<bool(const Labeling &)> & visit, const SearchGuards & guards) -> std::uint64_t
{
    return search_all(c, rule, visit, guards);
}

auto find_strong_interval_representation(const PureComplex & c, StrongMode mode, const SearchGuards & guards)
    -> RecognitionResult
{
    const int n = c.order();
    if (n > guards.strong_max_n)
        throw GuardRefusal("interval-system search on " + std::to_string(n) + " vertices exceeds the limit of "
            + std::to_string(guards.strong_max_n));

    RecognitionResult result;
    for (auto mask : candidate_graphs(c)) {
        ++result.nodes_explored;
        auto h = graph_from_edge_mask(n, mask);
        std::optional<IntervalSystem> model;
        switch (mode) {
        case StrongMode::general: model = find_interval_model(h); break;
        case StrongMode::proper: model = proper_model(h); break;
        case StrongMode::unit: model = unit_model(h); break;
        }
        if (! model)
            continue;

        auto labeling = left_endpoint_order(*model);
        auto representation = relabel(*model, labeling);
        if (! validate_interval_representation(relabel(c, labeling), representation)
            || ! mode_flags_ok(representation, mode))
            throw TheoremViolation("interval model in mode " + mode_name(mode) + " does not represent the complex");
        if (! is_under_closed_local(relabel(c, labeling)))
            throw TheoremViolation("left-endpoint order of an interval representation is not under closed");
        result.found = true;
        result.labeling = labeling;
        result.representation = representation;
        return result;
    }
    return result;
}

auto build_clique_interval_representation(const Graph & g) -> RecognitionResult
{
    const int n = g.order();
    if (n >= 2) {
        if (auto v = find_violation(graph_complex(g), LabelingPredicate::under_closed_local))
            throw InputError("labeling is not under closed: " + describe(*v, LabelingPredicate::under_closed_local));
    }

    auto cliques = maximal_cliques(g);
    std::sort(cliques.begin(), cliques.end(), [](VertexSet a, VertexSet b) {
        return std::pair{a.min(), a.max()} < std::pair{b.min(), b.max()};
    });
    for (std::size_t i = 1; i < cliques.size(); ++i)
        if (cliques[i].min() == cliques[i - 1].min() && cliques[i].max() == cliques[i - 1].max())
            throw TheoremViolation("maximal cliques " + cliques[i - 1].to_string() + " and " + cliques[i].to_string()
                + " share their minimum and maximum");

    std::vector<std::pair<std::int64_t, std::int64_t>> ends(n, {0, 0});
    for (int v = 1; v <= n; ++v) {
        int first = 0, last = 0;
        for (std::size_t pos = 0; pos < cliques.size(); ++pos)
            if (cliques[pos].contains(v)) {
                if (! first)
                    first = static_cast<int>(pos) + 1;
                last = static_cast<int>(pos) + 1;
            }
        for (int pos = first; pos <= last; ++pos)
            if (! cliques[pos - 1].contains(v))
                throw TheoremViolation("vertex " + std::to_string(v) + " is missing from clique "
                    + cliques[pos - 1].to_string() + " between its first and last cliques");
        ends[v - 1] = {first, last};
    }
    auto representation = integer_system(ends);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (g.adjacent(u, v) != representation.at(u).intersects(representation.at(v)))
                throw TheoremViolation("clique construction fails on the pair " + std::to_string(u) + ", "
                    + std::to_string(v));

    RecognitionResult result;
    result.found = true;
    result.labeling = Labeling::identity(n);
    result.representation = std::move(representation);
    result.nodes_explored = cliques.size();
    return result;
}

auto graph_class_name(GraphClass c) -> std::string_view
{
    for (auto [value, name] : class_names)
        if (value == c)
            return name;
    return "?";
}

auto parse_graph_class(std::string_view name) -> GraphClass
{
    for (auto [value, n] : class_names)
        if (n == name)
            return value;
    std::string known;
    for (auto [value, n] : class_names)
        known += (known.empty() ? "" : ", ") + std::string(n);
    throw InputError("unknown class '" + std::string(name) + "' (expected one of " + known + ")");
}

auto recognize_graph_class(const Graph & g, int d, GraphClass cls, const SearchGuards & guards) -> RecognitionResult
{
    const auto whole = delta_d(g, d);
    const int n = g.order();
    const auto mode = strong_mode_of(cls);

    RecognitionResult result;
    std::vector<int> images(n, 0);
    std::vector<Interval> by_label(n);
    int next_label = 1;
    Rational cursor = 0;

    for (auto part : components(g)) {
        auto sub = compact_subgraph(g, part);
        const int k = part.size();
        std::optional<RecognitionResult> local;
        if (k >= d + 1) {
            local = recognize_complex(delta_d(sub.graph, d), cls, guards);
            result.nodes_explored += local->nodes_explored;
            result.search_exhaustive = result.search_exhaustive && local->search_exhaustive;
            if (! local->found)
                return result;
        }
        for (int i = 1; i <= k; ++i) {
            const int label = local ? local->labeling->label_of(i) : i;
            images[sub.original[i - 1] - 1] = next_label + label - 1;
        }
        if (mode) {
            // Blocks sit left to right with a unit gap, so no union across
            // components is ever an interval.
            std::vector<Interval> block(k, Interval{0, 1});
            if (local) {
                block = local->representation->intervals();
                Rational len = block.front().length();
                if (*mode == StrongMode::unit && len > 0)
                    for (auto & iv : block)
                        iv = Interval{iv.left / len, iv.right / len};
            }
            Rational lo = block.front().left, hi = block.front().right;
            for (const auto & iv : block) {
                lo = std::min(lo, iv.left);
                hi = std::max(hi, iv.right);
            }
            for (int label = 1; label <= k; ++label) {
                const auto & iv = block[label - 1];
                by_label[next_label + label - 2] = Interval{iv.left - lo + cursor, iv.right - lo + cursor};
            }
            cursor += hi - lo + 1;
        }
        next_label += k;
    }

    result.found = true;
    result.labeling = Labeling(images);
    const auto relabeled = relabel(whole, *result.labeling);
    if (mode) {
        result.representation = IntervalSystem(by_label);
        if (! validate_interval_representation(relabeled, *result.representation)
            || ! mode_flags_ok(*result.representation, *mode))
            throw TheoremViolation("composed interval representation does not validate");
    } else {
        auto pred = cls == GraphClass::under_closed ? LabelingPredicate::under_closed_local
            : cls == GraphClass::unit_interval     ? LabelingPredicate::unit_interval
                                                   : LabelingPredicate::condition_star;
        if (auto v = find_violation(relabeled, pred))
            throw TheoremViolation("composed labeling fails " + std::string(predicate_name(pred)) + ": "
                + describe(*v, pred));
    }
    return result;
}

} // namespace ivc
