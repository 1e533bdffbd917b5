#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace ivc {

/// Largest vertex label a VertexSet can hold. Vertices are 1-based.
inline constexpr int max_vertex = 32;

/// A set of vertices drawn from 1..32, stored as a bitmask (vertex v is bit
/// v-1). Iteration is ascending, so a VertexSet doubles as the sorted tuple
/// i_1 < ... < i_r used throughout.
class VertexSet {
public:
    using bits_type = std::uint32_t;

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(bits_type rest) : _rest(rest) {}

        auto operator*() const -> int { return std::countr_zero(_rest) + 1; }
        auto operator++() -> iterator &
        {
            _rest &= _rest - 1;
            return *this;
        }
        auto operator++(int) -> iterator
        {
            auto old = *this;
            ++*this;
            return old;
        }
        auto operator==(const iterator &) const -> bool = default;

    private:
        bits_type _rest = 0;
    };

    constexpr VertexSet() = default;
    VertexSet(std::initializer_list<int> members);

    static constexpr auto from_bits(bits_type bits) -> VertexSet
    {
        VertexSet s;
        s._bits = bits;
        return s;
    }

    /// {1, ..., n}
    static auto range(int n) -> VertexSet;
    /// {lo, ..., hi}; empty when lo > hi.
    static auto interval(int lo, int hi) -> VertexSet;
    static auto from_vector(const std::vector<int> & members) -> VertexSet;

    constexpr auto bits() const -> bits_type { return _bits; }
    constexpr auto empty() const -> bool { return _bits == 0; }
    constexpr auto size() const -> int { return std::popcount(_bits); }
    constexpr auto contains(int v) const -> bool
    {
        return v >= 1 && v <= max_vertex && ((_bits >> (v - 1)) & 1u);
    }

    void insert(int v);
    void erase(int v);

    /// Smallest / largest member; 0 when empty.
    auto min() const -> int { return _bits ? std::countr_zero(_bits) + 1 : 0; }
    auto max() const -> int { return _bits ? max_vertex - std::countl_zero(_bits) : 0; }

    auto begin() const -> iterator { return iterator{_bits}; }
    auto end() const -> iterator { return iterator{0}; }

    auto to_vector() const -> std::vector<int>;
    /// Compact form used in diagnostics: "134" for small labels, "{1,3,14}" otherwise.
    auto to_string() const -> std::string;

    auto is_subset_of(VertexSet other) const -> bool { return (_bits & ~other._bits) == 0; }

    friend constexpr auto operator|(VertexSet a, VertexSet b) -> VertexSet { return from_bits(a._bits | b._bits); }
    friend constexpr auto operator&(VertexSet a, VertexSet b) -> VertexSet { return from_bits(a._bits & b._bits); }
    friend constexpr auto operator-(VertexSet a, VertexSet b) -> VertexSet { return from_bits(a._bits & ~b._bits); }

    friend constexpr auto operator==(VertexSet a, VertexSet b) -> bool { return a._bits == b._bits; }

    /// Lexicographic order of the sorted member lists (a proper prefix sorts first).
    friend auto operator<=>(VertexSet a, VertexSet b) -> std::strong_ordering;

private:
    bits_type _bits = 0;
};

/// Size first, then lexicographic.
auto shortlex_less(VertexSet a, VertexSet b) -> bool;

auto with(VertexSet s, int v) -> VertexSet;
auto without(VertexSet s, int v) -> VertexSet;

/// Calls f(subset) for every k-subset of universe in lexicographic order of
/// sorted member lists. Stops early when f returns false; returns false iff
/// it stopped early.
template <typename F>
auto for_each_subset(VertexSet universe, int k, F && f) -> bool
{
    if (k < 0 || k > universe.size())
        return true;
    auto members = universe.to_vector();
    const int m = static_cast<int>(members.size());
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        VertexSet s;
        for (int i : idx)
            s.insert(members[i]);
        if (! f(s))
            return false;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i)
            --i;
        if (i < 0)
            return true;
        ++idx[i];
        for (int j = i + 1; j < k; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

auto subsets_of_size(VertexSet universe, int k) -> std::vector<VertexSet>;

} // namespace ivc
