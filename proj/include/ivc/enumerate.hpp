#pragma once

#include <ivc/graph.hpp>

#include <cstdint>
#include <vector>

namespace ivc {

/// Largest order accepted by labeled enumeration.
inline constexpr int max_enumeration_order = 8;
/// Largest order accepted by brute-force canonical forms (n! permutations).
inline constexpr int max_canonical_order = 7;

/// Edge slots on 1..n are the pairs u < v in lexicographic order; slot k of
/// a mask is bit k.
auto edge_slot_count(int n) -> int;
auto edge_slot(int n, int u, int v) -> int;
auto edge_mask(const Graph & g) -> std::uint64_t;
auto graph_from_edge_mask(int n, std::uint64_t mask) -> Graph;

/// All labeled graphs on 1..n in ascending edge-mask order, optionally only
/// the connected ones. The range is restartable and can be split into
/// disjoint mask windows for parallel consumption.
class LabeledGraphs {
public:
    class iterator {
    public:
        using value_type = Graph;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(const LabeledGraphs * owner, std::uint64_t mask);

        auto operator*() const -> const Graph & { return _current; }
        auto operator++() -> iterator &;
        auto operator==(const iterator & other) const -> bool { return _mask == other._mask; }
        auto mask() const -> std::uint64_t { return _mask; }

    private:
        void settle();

        const LabeledGraphs * _owner = nullptr;
        std::uint64_t _mask = 0;
        Graph _current;
    };

    LabeledGraphs(int n, bool connected_only);
    /// Masks in [first, last).
    LabeledGraphs(int n, bool connected_only, std::uint64_t first, std::uint64_t last);

    auto begin() const -> iterator { return iterator{this, _first}; }
    auto end() const -> iterator { return iterator{this, _last}; }

    auto order() const -> int { return _n; }
    auto connected_only() const -> bool { return _connected_only; }
    auto mask_count() const -> std::uint64_t { return _last - _first; }

private:
    int _n;
    bool _connected_only;
    std::uint64_t _first, _last;
};

auto enumerate_graphs(int n, bool connected_only) -> LabeledGraphs;

/// Minimum edge mask over all relabelings.
auto canonical_edge_mask(const Graph & g) -> std::uint64_t;

/// One representative per isomorphism class (the canonical relabeling),
/// sorted by canonical mask.
auto isomorphism_classes(int n, bool connected_only) -> std::vector<Graph>;

} // namespace ivc
