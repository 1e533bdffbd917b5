#include <ivc/error.hpp>
#include <ivc/vertex_set.hpp>

#include <sstream>

namespace ivc {

VertexSet::VertexSet(std::initializer_list<int> members)
{
    for (int v : members)
        insert(v);
}

auto VertexSet::range(int n) -> VertexSet
{
    return interval(1, n);
}

auto VertexSet::interval(int lo, int hi) -> VertexSet
{
    VertexSet s;
    for (int v = std::max(lo, 1); v <= hi; ++v)
        s.insert(v);
    return s;
}

auto VertexSet::from_vector(const std::vector<int> & members) -> VertexSet
{
    VertexSet s;
    for (int v : members)
        s.insert(v);
    return s;
}

void VertexSet::insert(int v)
{
    if (v < 1 || v > max_vertex)
        throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(max_vertex));
    _bits |= bits_type{1} << (v - 1);
}

void VertexSet::erase(int v)
{
    if (v >= 1 && v <= max_vertex)
        _bits &= ~(bits_type{1} << (v - 1));
}

auto VertexSet::to_vector() const -> std::vector<int>
{
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this)
        out.push_back(v);
    return out;
}

auto VertexSet::to_string() const -> std::string
{
    if (empty())
        return "{}";
    std::ostringstream s;
    if (max() <= 9) {
        for (int v : *this)
            s << v;
        return s.str();
    }
    s << '{';
    bool first = true;
    for (int v : *this) {
        if (! first)
            s << ',';
        first = false;
        s << v;
    }
    s << '}';
    return s.str();
}

auto operator<=>(VertexSet a, VertexSet b) -> std::strong_ordering
{
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
        if (*ia != *ib)
            return *ia <=> *ib;
    return a.size() <=> b.size();
}

auto shortlex_less(VertexSet a, VertexSet b) -> bool
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

auto with(VertexSet s, int v) -> VertexSet
{
    s.insert(v);
    return s;
}

auto without(VertexSet s, int v) -> VertexSet
{
    s.erase(v);
    return s;
}

auto subsets_of_size(VertexSet universe, int k) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    for_each_subset(universe, k, [&](VertexSet s) {
        out.push_back(s);
        return true;
    });
    return out;
}

} // namespace ivc
