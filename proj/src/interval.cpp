#include <ivc/error.hpp>
#include <ivc/interval.hpp>
#include <ivc/labeling.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace ivc {

auto format_rational(const Rational & r) -> std::string
{
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {
    auto parse_int64(std::string_view token, std::string_view whole) -> std::int64_t
    {
        std::int64_t value = 0;
        auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || p != token.data() + token.size())
            throw InputError("'" + std::string(whole) + "' is not a rational number");
        return value;
    }
}

auto parse_rational(std::string_view text) -> Rational
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int64(text, text));
    auto num = parse_int64(text.substr(0, slash), text);
    auto den = parse_int64(text.substr(slash + 1), text);
    if (den == 0)
        throw InputError("'" + std::string(text) + "' has a zero denominator");
    return Rational(num, den);
}

IntervalSystem::IntervalSystem(std::vector<Interval> intervals) :
    _intervals(std::move(intervals))
{
    for (std::size_t i = 0; i < _intervals.size(); ++i)
        if (_intervals[i].left > _intervals[i].right)
            throw InputError("interval of vertex " + std::to_string(i + 1) + " has left endpoint "
                + format_rational(_intervals[i].left) + " > right endpoint " + format_rational(_intervals[i].right));
}

auto representation_flags(const IntervalSystem & r) -> RepresentationFlags
{
    RepresentationFlags flags;
    const auto & iv = r.intervals();
    for (std::size_t i = 0; i < iv.size(); ++i) {
        if (iv[i].length() != iv.front().length())
            flags.unit = false;
        for (std::size_t j = 0; j < iv.size(); ++j)
            if (i != j && iv[i].properly_contains(iv[j]))
                flags.proper = false;
    }
    return flags;
}

auto union_is_interval(std::span<const Interval> intervals) -> bool
{
    if (intervals.empty())
        return true;
    std::vector<Interval> sorted(intervals.begin(), intervals.end());
    std::sort(sorted.begin(), sorted.end(), [](const Interval & a, const Interval & b) { return a.left < b.left; });
    Rational reach = sorted.front().right;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].left > reach)
            return false;
        reach = std::max(reach, sorted[i].right);
    }
    return true;
}

auto interval_representation_mismatch(const PureComplex & c, const IntervalSystem & r) -> std::optional<VertexSet>
{
    if (r.size() != c.order())
        throw InputError("interval system has " + std::to_string(r.size()) + " intervals for "
            + std::to_string(c.order()) + " vertices");
    std::optional<VertexSet> mismatch;
    std::vector<Interval> chosen;
    for_each_subset(VertexSet::range(c.order()), c.dim() + 1, [&](VertexSet s) {
        chosen.clear();
        for (int v : s)
            chosen.push_back(r.at(v));
        if (c.contains(s) != union_is_interval(chosen)) {
            mismatch = s;
            return false;
        }
        return true;
    });
    return mismatch;
}

auto validate_interval_representation(const PureComplex & c, const IntervalSystem & r) -> bool
{
    return ! interval_representation_mismatch(c, r).has_value();
}

auto left_endpoint_order(const IntervalSystem & r) -> Labeling
{
    std::vector<int> order(r.size());
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const auto &x = r.at(a), &y = r.at(b);
        if (x.left != y.left)
            return x.left < y.left;
        return x.right < y.right;
    });
    return Labeling::from_order(order);
}

auto relabel(const IntervalSystem & r, const Labeling & l) -> IntervalSystem
{
    if (l.size() != r.size())
        throw InputError("labeling size does not match the interval system");
    std::vector<Interval> out(r.size());
    for (int v = 1; v <= r.size(); ++v)
        out[l.label_of(v) - 1] = r.at(v);
    return IntervalSystem(std::move(out));
}

auto parse_interval_system(std::string_view text) -> IntervalSystem
{
    std::vector<Interval> out;
    std::size_t pos = 0;
    while (true) {
        pos = text.find('[', pos);
        if (pos == std::string_view::npos)
            break;
        auto close = text.find(']', pos);
        if (close == std::string_view::npos)
            throw InputError("unterminated interval in '" + std::string(text) + "'");
        auto body = text.substr(pos + 1, close - pos - 1);
        auto comma = body.find(',');
        if (comma == std::string_view::npos)
            throw InputError("interval '[" + std::string(body) + "]' needs two endpoints");
        auto trim = [](std::string_view s) {
            auto a = s.find_first_not_of(" \t");
            auto b = s.find_last_not_of(" \t");
            return a == std::string_view::npos ? std::string_view{} : s.substr(a, b - a + 1);
        };
        out.push_back({parse_rational(trim(body.substr(0, comma))), parse_rational(trim(body.substr(comma + 1)))});
        pos = close + 1;
    }
    return IntervalSystem(std::move(out));
}

auto format_interval_system(const IntervalSystem & r) -> std::string
{
    std::ostringstream s;
    for (int v = 1; v <= r.size(); ++v) {
        const auto & i = r.at(v);
        auto show = [](const Rational & x) {
            return x.denominator() == 1 ? std::to_string(x.numerator()) : format_rational(x);
        };
        s << (v > 1 ? " " : "") << '[' << show(i.left) << ',' << show(i.right) << ']';
    }
    return s.str();
}

} // namespace ivc
