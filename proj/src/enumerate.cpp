#include <ivc/enumerate.hpp>
#include <ivc/error.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace ivc {

auto edge_slot_count(int n) -> int
{
    return n * (n - 1) / 2;
}

auto edge_slot(int n, int u, int v) -> int
{
    if (u > v)
        std::swap(u, v);
    // pairs (a, *) for a < u come first: sum_{a < u} (n - a)
    return (u - 1) * n - (u - 1) * u / 2 + (v - u - 1);
}

auto edge_mask(const Graph & g) -> std::uint64_t
{
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges())
        mask |= std::uint64_t{1} << edge_slot(g.order(), u, v);
    return mask;
}

auto graph_from_edge_mask(int n, std::uint64_t mask) -> Graph
{
    Graph g(n);
    int slot = 0;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v, ++slot)
            if ((mask >> slot) & 1u)
                g.add_edge(u, v);
    return g;
}

LabeledGraphs::LabeledGraphs(int n, bool connected_only) :
    LabeledGraphs(n, connected_only, 0, 0)
{
    _last = std::uint64_t{1} << edge_slot_count(n);
}

LabeledGraphs::LabeledGraphs(int n, bool connected_only, std::uint64_t first, std::uint64_t last) :
    _n(n), _connected_only(connected_only), _first(first), _last(last)
{
    if (n < 1 || n > max_enumeration_order)
        throw InputError("graph enumeration supports 1 <= n <= " + std::to_string(max_enumeration_order));
    const auto total = std::uint64_t{1} << edge_slot_count(n);
    if (_first > _last || _last > total)
        throw InputError("edge-mask window out of range");
}

LabeledGraphs::iterator::iterator(const LabeledGraphs * owner, std::uint64_t mask) :
    _owner(owner), _mask(mask)
{
    settle();
}

auto LabeledGraphs::iterator::operator++() -> iterator &
{
    ++_mask;
    settle();
    return *this;
}

void LabeledGraphs::iterator::settle()
{
    for (; _mask < _owner->_last; ++_mask) {
        _current = graph_from_edge_mask(_owner->_n, _mask);
        if (! _owner->_connected_only || is_connected(_current))
            return;
    }
}

auto enumerate_graphs(int n, bool connected_only) -> LabeledGraphs
{
    return LabeledGraphs(n, connected_only);
}

namespace {
    // For every permutation of 1..n, where each edge slot goes.
    auto slot_permutations(int n) -> const std::vector<std::vector<std::uint8_t>> &
    {
        static std::mutex lock;
        static std::map<int, std::vector<std::vector<std::uint8_t>>> cache;
        std::lock_guard guard(lock);
        auto [it, fresh] = cache.try_emplace(n);
        if (fresh) {
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 1);
            do {
                std::vector<std::uint8_t> image(edge_slot_count(n));
                for (int u = 1; u <= n; ++u)
                    for (int v = u + 1; v <= n; ++v)
                        image[edge_slot(n, u, v)] = static_cast<std::uint8_t>(edge_slot(n, perm[u - 1], perm[v - 1]));
                it->second.push_back(std::move(image));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return it->second;
    }

    auto canonical_mask(int n, std::uint64_t mask) -> std::uint64_t
    {
        std::uint64_t best = mask;
        for (const auto & image : slot_permutations(n)) {
            std::uint64_t m = 0;
            for (auto rest = mask; rest; rest &= rest - 1)
                m |= std::uint64_t{1} << image[std::countr_zero(rest)];
            best = std::min(best, m);
        }
        return best;
    }
}

auto canonical_edge_mask(const Graph & g) -> std::uint64_t
{
    if (g.order() > max_canonical_order)
        throw InputError("canonical forms support n <= " + std::to_string(max_canonical_order));
    if (g.order() <= 1)
        return 0;
    return canonical_mask(g.order(), edge_mask(g));
}

auto isomorphism_classes(int n, bool connected_only) -> std::vector<Graph>
{
    if (n < 1 || n > max_canonical_order)
        throw InputError("isomorphism classes support 1 <= n <= " + std::to_string(max_canonical_order));

    // Grow classes one vertex at a time: every graph on k vertices is a graph
    // on k - 1 vertices plus a vertex k joined to some subset.
    std::set<std::uint64_t> classes{0};
    for (int k = 2; k <= n; ++k) {
        std::set<std::uint64_t> next;
        for (auto base : classes) {
            auto g = graph_from_edge_mask(k - 1, base);
            auto lifted = edge_mask([&] {
                Graph h(k);
                for (auto [u, v] : g.edges())
                    h.add_edge(u, v);
                return h;
            }());
            for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
                auto m = lifted;
                for (int u = 1; u < k; ++u)
                    if ((nb >> (u - 1)) & 1u)
                        m |= std::uint64_t{1} << edge_slot(k, u, k);
                next.insert(canonical_mask(k, m));
            }
        }
        classes = std::move(next);
    }

    std::vector<Graph> out;
    for (auto m : classes) {
        auto g = graph_from_edge_mask(n, m);
        if (! connected_only || is_connected(g))
            out.push_back(std::move(g));
    }
    return out;
}

} // namespace ivc
