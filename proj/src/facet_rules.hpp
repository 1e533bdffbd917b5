#pragma once

// Per-facet checks shared by the predicates and the labeling search.
//
// Every rule inspects one facet F (as labels) and may query only label sets
// inside [1, max F]; that is what lets the search run a rule as soon as the
// facet's largest label is placed. `contains(S)` answers facet membership of
// a label set; `cofacet(a, b)` says whether some facet holds both labels.

#include <ivc/predicates.hpp>

#include <optional>

namespace ivc::rules {

template <typename Contains>
auto under_closed_local(VertexSet f, Contains && contains) -> std::optional<Violation>
{
    const int top = f.max();
    const auto base = without(f, top);
    for (int j : VertexSet::interval(f.min(), top) - f) {
        auto s = with(base, j);
        if (! contains(s))
            return Violation{f, s, j, {}};
    }
    return std::nullopt;
}

namespace detail {
    template <typename Contains>
    auto pushed_down(const std::vector<int> & bound, std::vector<int> & tuple, std::size_t k, VertexSet f,
        Contains & contains) -> std::optional<Violation>
    {
        if (k == bound.size()) {
            auto s = VertexSet::from_vector(tuple);
            if (! contains(s))
                return Violation{f, s, 0, {}};
            return std::nullopt;
        }
        for (int j = tuple[k - 1] + 1; j <= bound[k]; ++j) {
            tuple[k] = j;
            if (auto v = pushed_down(bound, tuple, k + 1, f, contains))
                return v;
        }
        return std::nullopt;
    }
}

/// Tuples with j_1 = i_1 and j_k <= i_k for every k.
template <typename Contains>
auto under_closed_def(VertexSet f, Contains && contains) -> std::optional<Violation>
{
    auto bound = f.to_vector();
    std::vector<int> tuple(bound.size());
    tuple[0] = bound[0];
    return detail::pushed_down(bound, tuple, 1, f, contains);
}

/// When `mutated`, subsets that miss either end of the span are skipped.
/// That deliberately broken variant exists only for the harness self-test.
template <typename Contains>
auto unit_interval(VertexSet f, Contains && contains, bool mutated = false) -> std::optional<Violation>
{
    std::optional<Violation> found;
    const int lo = f.min(), hi = f.max();
    for_each_subset(VertexSet::interval(lo, hi), f.size(), [&](VertexSet s) {
        if (mutated && ! (s.contains(lo) && s.contains(hi)))
            return true;
        if (! contains(s)) {
            found = Violation{f, s, 0, {}};
            return false;
        }
        return true;
    });
    return found;
}

template <typename Contains, typename Cofacet>
auto equiv_condition(VertexSet f, EquivVariant variant, Contains && contains, Cofacet && cofacet)
    -> std::optional<Violation>
{
    for (int j : VertexSet::interval(f.min(), f.max()) - f) {
        bool some = false;
        for (int i : f) {
            if (! cofacet(j, i)) {
                if (variant == EquivVariant::cond2)
                    return Violation{f, {}, j, {}};
                continue;
            }
            some = true;
            auto s = with(without(f, i), j);
            if (! contains(s))
                return Violation{f, s, j, {}};
        }
        if (! some)
            return Violation{f, {}, j, {}};
    }
    return std::nullopt;
}

template <typename Contains, typename Cofacet>
auto condition_star(VertexSet f, Contains && contains, Cofacet && cofacet) -> std::optional<Violation>
{
    for (int j : VertexSet::interval(f.min(), f.max()) - f)
        for (int i : f)
            if (cofacet(j, i)) {
                auto s = with(without(f, i), j);
                if (! contains(s))
                    return Violation{f, s, j, {}};
            }
    return std::nullopt;
}

/// Closed-graph condition for the edge {i, m}, m the larger end: for every
/// i < j < m, ij is an edge exactly when jm is.
template <typename Contains>
auto closed_edge(VertexSet edge, Contains && contains) -> std::optional<Violation>
{
    const int i = edge.min(), m = edge.max();
    for (int j = i + 1; j < m; ++j) {
        bool low = contains(VertexSet{i, j}), high = contains(VertexSet{j, m});
        if (low != high)
            return Violation{VertexSet{i, j, m}, low ? VertexSet{j, m} : VertexSet{i, j}, j, {}};
    }
    return std::nullopt;
}

} // namespace ivc::rules
