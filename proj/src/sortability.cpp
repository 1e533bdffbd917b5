#include <ivc/error.hpp>
#include <ivc/sortability.hpp>

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace ivc {

auto sort_pair(SquarefreeMonomial u, SquarefreeMonomial v) -> std::pair<SquarefreeMonomial, SquarefreeMonomial>
{
    if (u.degree() != v.degree())
        throw InputError("sort_pair needs equal degrees, got " + std::to_string(u.degree()) + " and "
            + std::to_string(v.degree()));
    std::vector<int> merged = u.support.to_vector();
    auto rest = v.support.to_vector();
    merged.insert(merged.end(), rest.begin(), rest.end());
    std::sort(merged.begin(), merged.end());
    SquarefreeMonomial a, b;
    for (std::size_t i = 0; i < merged.size(); ++i)
        (i % 2 == 0 ? a : b).support.insert(merged[i]);
    return {a, b};
}

auto find_sort_failure(const std::vector<VertexSet> & set, int t) -> std::optional<SortFailure>
{
    std::unordered_set<VertexSet::bits_type> members;
    for (auto s : set) {
        if (s.size() != t)
            throw InputError("monomial " + s.to_string() + " does not have degree " + std::to_string(t));
        members.insert(s.bits());
    }
    for (auto u : set)
        for (auto v : set) {
            auto [a, b] = sort_pair({u}, {v});
            if (! members.count(a.support.bits()) || ! members.count(b.support.bits()))
                return SortFailure{u, v, a.support, b.support};
        }
    return std::nullopt;
}

auto is_sortable_set(const std::vector<VertexSet> & set, int t) -> bool
{
    return ! find_sort_failure(set, t).has_value();
}

auto is_sortable_complex(const std::vector<FaceSetByCardinality> & faces_by_t) -> bool
{
    for (std::size_t i = 0; i < faces_by_t.size(); ++i)
        if (faces_by_t[i].t != static_cast<int>(i) + 1)
            throw InputError("face sets must cover cardinalities 1, 2, ... without gaps; position "
                + std::to_string(i + 1) + " holds t = " + std::to_string(faces_by_t[i].t));
    return std::all_of(faces_by_t.begin(), faces_by_t.end(),
        [](const FaceSetByCardinality & f) { return is_sortable_set(f.faces, f.t); });
}

auto is_ind_sortable(const Graph & g, int d) -> bool
{
    return is_sortable_complex(ind_face_sets(g, d));
}

auto find_sortable_labeling(const Graph & g, int d, int max_n) -> std::optional<Labeling>
{
    const int n = g.order();
    if (n > max_n)
        throw GuardRefusal("sortability search on " + std::to_string(n) + " vertices exceeds the limit of "
            + std::to_string(max_n));
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 1);
    do {
        auto l = Labeling::from_order(order);
        if (is_ind_sortable(relabel(g, l), d))
            return l;
    } while (std::next_permutation(order.begin(), order.end()));
    return std::nullopt;
}

} // namespace ivc
