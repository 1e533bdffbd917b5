#pragma once

#include <ivc/complex.hpp>

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ivc {

using Rational = boost::rational<std::int64_t>;

/// "p/q" (always with a denominator).
auto format_rational(const Rational & r) -> std::string;
/// Accepts "p/q" or a plain integer.
auto parse_rational(std::string_view text) -> Rational;

/// Closed interval [left, right].
struct Interval {
    Rational left, right;

    auto length() const -> Rational { return right - left; }
    auto intersects(const Interval & other) const -> bool
    {
        return left <= other.right && other.left <= right;
    }
    auto properly_contains(const Interval & other) const -> bool
    {
        return left <= other.left && other.right <= right && ! (left == other.left && right == other.right);
    }
    auto operator==(const Interval &) const -> bool = default;
};

/// One interval per vertex 1..n.
class IntervalSystem {
public:
    IntervalSystem() = default;
    /// Throws InputError if some left endpoint exceeds its right endpoint.
    explicit IntervalSystem(std::vector<Interval> intervals);

    auto size() const -> int { return static_cast<int>(_intervals.size()); }
    auto at(int v) const -> const Interval & { return _intervals.at(v - 1); }
    auto intervals() const -> const std::vector<Interval> & { return _intervals; }

    auto operator==(const IntervalSystem &) const -> bool = default;

private:
    std::vector<Interval> _intervals;
};

struct RepresentationFlags {
    bool unit = true;
    bool proper = true;
};

/// unit: all lengths equal. proper: no interval properly contains another.
auto representation_flags(const IntervalSystem & r) -> RepresentationFlags;

/// Sort by left endpoint and sweep the running right end; touching closed
/// intervals overlap. The empty union counts as an interval.
auto union_is_interval(std::span<const Interval> intervals) -> bool;

/// For every (d+1)-subset S of 1..n: S is a facet iff the intervals of S
/// union to a single interval.
auto validate_interval_representation(const PureComplex & c, const IntervalSystem & r) -> bool;

/// The (d+1)-subset on which the biconditional first fails, if any.
auto interval_representation_mismatch(const PureComplex & c, const IntervalSystem & r) -> std::optional<VertexSet>;

/// Labeling that sorts vertices by (left, right), ties broken by vertex.
class Labeling;
auto left_endpoint_order(const IntervalSystem & r) -> Labeling;

/// Re-index a system: result.at(l(v)) == r.at(v).
auto relabel(const IntervalSystem & r, const Labeling & l) -> IntervalSystem;

/// "[0,1] [1,2] [1/2,3]" (whitespace separated, one per vertex).
auto parse_interval_system(std::string_view text) -> IntervalSystem;
auto format_interval_system(const IntervalSystem & r) -> std::string;

} // namespace ivc
