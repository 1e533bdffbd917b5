#include <ivc/error.hpp>
#include <ivc/predicates.hpp>

#include "facet_rules.hpp"

#include <array>
#include <map>
#include <sstream>

namespace ivc {

namespace {
    constexpr std::array<std::pair<LabelingPredicate, std::string_view>, 7> names{{
        {LabelingPredicate::under_closed_def, "under-closed-def"},
        {LabelingPredicate::under_closed_local, "under-closed"},
        {LabelingPredicate::unit_interval, "unit-interval"},
        {LabelingPredicate::equiv_cond2, "cond2"},
        {LabelingPredicate::equiv_cond3, "cond3"},
        {LabelingPredicate::condition_star, "condition-star"},
        {LabelingPredicate::chordal_complex, "chordal-complex"},
    }};

    // cover[v - 1]: union of the facets through v.
    auto cofacet_cover(const PureComplex & c) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> cover(c.order());
        for (auto f : c.facets())
            for (int v : f)
                cover[v - 1] = cover[v - 1] | f;
        return cover;
    }

    auto chordal_violation(const PureComplex & c) -> std::optional<Violation>
    {
        std::map<int, std::vector<VertexSet>> by_top;
        for (auto f : c.facets())
            by_top[f.max()].push_back(f);
        for (const auto & [top, group] : by_top)
            for (std::size_t a = 0; a < group.size(); ++a)
                for (std::size_t b = a + 1; b < group.size(); ++b) {
                    std::optional<Violation> found;
                    for_each_subset(group[a] | group[b], c.dim() + 1, [&](VertexSet s) {
                        if (! c.contains(s)) {
                            found = Violation{group[a], s, 0, group[b]};
                            return false;
                        }
                        return true;
                    });
                    if (found)
                        return found;
                }
        return std::nullopt;
    }
}

auto predicate_name(LabelingPredicate p) -> std::string_view
{
    for (auto [value, name] : names)
        if (value == p)
            return name;
    return "?";
}

auto parse_predicate(std::string_view name) -> LabelingPredicate
{
    for (auto [value, n] : names)
        if (n == name)
            return value;
    std::string known;
    for (auto [value, n] : names)
        known += (known.empty() ? "" : ", ") + std::string(n);
    throw InputError("unknown predicate '" + std::string(name) + "' (expected one of " + known + ")");
}

auto describe(const Violation & v, LabelingPredicate p) -> std::string
{
    std::ostringstream s;
    s << "facet " << v.facet.to_string();
    if (p == LabelingPredicate::chordal_complex) {
        s << " and facet " << v.other.to_string() << " share their largest vertex but "
          << v.missing.to_string() << " is not a facet";
        return s.str();
    }
    if (v.outsider)
        s << ", j = " << v.outsider;
    if (v.missing.empty())
        s << ": j shares no facet with the required facet vertices";
    else
        s << ": required tuple " << v.missing.to_string() << " is not a facet";
    return s.str();
}

auto find_violation(const PureComplex & c, LabelingPredicate p) -> std::optional<Violation>
{
    if (p == LabelingPredicate::chordal_complex)
        return chordal_violation(c);

    auto contains = [&](VertexSet s) { return c.contains(s); };
    const auto cover = cofacet_cover(c);
    auto cofacet = [&](int a, int b) { return cover[a - 1].contains(b); };

    for (auto f : c.facets()) {
        std::optional<Violation> v;
        switch (p) {
        case LabelingPredicate::under_closed_def: v = rules::under_closed_def(f, contains); break;
        case LabelingPredicate::under_closed_local: v = rules::under_closed_local(f, contains); break;
        case LabelingPredicate::unit_interval: v = rules::unit_interval(f, contains); break;
        case LabelingPredicate::equiv_cond2: v = rules::equiv_condition(f, EquivVariant::cond2, contains, cofacet); break;
        case LabelingPredicate::equiv_cond3: v = rules::equiv_condition(f, EquivVariant::cond3, contains, cofacet); break;
        case LabelingPredicate::condition_star: v = rules::condition_star(f, contains, cofacet); break;
        case LabelingPredicate::chordal_complex: break;
        }
        if (v)
            return v;
    }
    return std::nullopt;
}

auto holds(const PureComplex & c, LabelingPredicate p) -> bool
{
    return ! find_violation(c, p).has_value();
}

auto is_under_closed_def(const PureComplex & c) -> bool
{
    return holds(c, LabelingPredicate::under_closed_def);
}

auto is_under_closed_local(const PureComplex & c) -> bool
{
    return holds(c, LabelingPredicate::under_closed_local);
}

auto is_unit_interval_def(const PureComplex & c) -> bool
{
    return holds(c, LabelingPredicate::unit_interval);
}

auto satisfies_equiv_condition(const PureComplex & c, EquivVariant variant) -> bool
{
    return holds(c, variant == EquivVariant::cond2 ? LabelingPredicate::equiv_cond2 : LabelingPredicate::equiv_cond3);
}

auto satisfies_condition_star(const PureComplex & c) -> bool
{
    return holds(c, LabelingPredicate::condition_star);
}

auto is_chordal_complex(const PureComplex & c) -> bool
{
    return holds(c, LabelingPredicate::chordal_complex);
}

auto closed_graph_violation(const Graph & g) -> std::optional<Violation>
{
    const int n = g.order();
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) {
                bool ab = g.adjacent(a, b), ac = g.adjacent(a, c), bc = g.adjacent(b, c);
                if (ab && ac && ! bc)
                    return Violation{VertexSet{a, b, c}, VertexSet{b, c}, b, {}};
                if (ac && bc && ! ab)
                    return Violation{VertexSet{a, b, c}, VertexSet{a, b}, b, {}};
            }
    return std::nullopt;
}

auto is_closed_graph(const Graph & g) -> bool
{
    return ! closed_graph_violation(g).has_value();
}

} // namespace ivc
