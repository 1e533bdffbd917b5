#include <ivc/error.hpp>
#include <ivc/forbidden.hpp>

#include <algorithm>
#include <vector>

namespace ivc {

namespace {
    auto induces_cycle(const Graph & g, VertexSet s) -> bool
    {
        if (s.size() < 3)
            return false;
        for (int v : s)
            if ((g.neighbors(v) & s).size() != 2)
                return false;
        return is_connected_subset(g, s);
    }

    auto leaf_count(const Graph & g, VertexSet s) -> int
    {
        int leaves = 0;
        for (int v : s)
            if ((g.neighbors(v) & s).size() == 1)
                ++leaves;
        return leaves;
    }

    auto valid_claw(const Graph & g, int d, const std::array<VertexSet, 3> & parts, int c) -> bool
    {
        for (auto p : parts)
            if (p.size() < 2 || p.size() > d + 1 || ! p.contains(c) || ! is_connected_subset(g, p))
                return false;
        const VertexSet centre{c};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                if ((parts[i] & parts[j]) != centre || (parts[i] | parts[j]).size() < d + 1)
                    return false;
                for (int u : parts[i] - centre)
                    if (! (g.neighbors(u) & (parts[j] - centre)).empty())
                        return false;
            }
        return true;
    }
}

auto pattern_kind_name(PatternKind k) -> std::string_view
{
    switch (k) {
    case PatternKind::cycle: return "cycle";
    case PatternKind::claw: return "claw";
    case PatternKind::paw: return "paw";
    }
    return "?";
}

auto find_induced_cycle_geq(const Graph & g, int length) -> std::optional<PatternWitness>
{
    if (length < 3)
        throw InputError("induced cycle length must be at least 3, got " + std::to_string(length));
    for (int k = length; k <= g.order(); ++k) {
        std::optional<PatternWitness> found;
        for_each_subset(g.vertices(), k, [&](VertexSet s) {
            if (induces_cycle(g, s)) {
                found = PatternWitness{PatternKind::cycle, s, {}, 0};
                return false;
            }
            return true;
        });
        if (found)
            return found;
    }
    return std::nullopt;
}

auto is_chordal_graph(const Graph & g) -> bool
{
    return ! find_induced_cycle_geq(g, 4).has_value();
}

auto find_d_claw(const Graph & g, int d) -> std::optional<PatternWitness>
{
    if (d < 1)
        throw InputError("d must be positive, got " + std::to_string(d));
    for (int c = 1; c <= g.order(); ++c) {
        // Candidate parts: connected sets through c, in shortlex order.
        const auto others = without(g.vertices(), c);
        std::vector<VertexSet> parts;
        for (int k = 1; k <= d && k <= others.size(); ++k)
            for_each_subset(others, k, [&](VertexSet rest) {
                auto p = with(rest, c);
                if (is_connected_subset(g, p))
                    parts.push_back(p);
                return true;
            });
        const VertexSet centre{c};
        auto compatible = [&](VertexSet a, VertexSet b) {
            if ((a & b) != centre || (a | b).size() < d + 1)
                return false;
            for (int u : a - centre)
                if (! (g.neighbors(u) & (b - centre)).empty())
                    return false;
            return true;
        };
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                if (! compatible(parts[i], parts[j]))
                    continue;
                for (std::size_t k = j + 1; k < parts.size(); ++k)
                    if (compatible(parts[i], parts[k]) && compatible(parts[j], parts[k]))
                        return PatternWitness{
                            PatternKind::claw, parts[i] | parts[j] | parts[k], {parts[i], parts[j], parts[k]}, c};
            }
    }
    return std::nullopt;
}

auto find_d_paw(const Graph & g, int d) -> std::optional<PatternWitness>
{
    if (d < 1)
        throw InputError("d must be positive, got " + std::to_string(d));
    if (d == 1 || d + 2 > g.order())
        return std::nullopt;
    std::optional<PatternWitness> found;
    for_each_subset(g.vertices(), d + 2, [&](VertexSet s) {
        if (leaf_count(g, s) == 3 && is_connected_subset(g, s)) {
            found = PatternWitness{PatternKind::paw, s, {}, 0};
            return false;
        }
        return true;
    });
    return found;
}

auto validate_witness(const Graph & g, int d, const PatternWitness & w) -> bool
{
    if (! w.vertices.is_subset_of(g.vertices()))
        return false;
    switch (w.kind) {
    case PatternKind::cycle: return induces_cycle(g, w.vertices);
    case PatternKind::paw:
        return d >= 2 && w.vertices.size() == d + 2 && leaf_count(g, w.vertices) == 3
            && is_connected_subset(g, w.vertices);
    case PatternKind::claw:
        return valid_claw(g, d, w.parts, w.center) && (w.parts[0] | w.parts[1] | w.parts[2]) == w.vertices;
    }
    return false;
}

} // namespace ivc
