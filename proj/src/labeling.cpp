#include <ivc/error.hpp>
#include <ivc/labeling.hpp>

#include <charconv>
#include <sstream>

namespace ivc {

Labeling::Labeling(std::vector<int> images) :
    _images(std::move(images)), _order(_images.size(), 0)
{
    const int n = size();
    for (int v = 1; v <= n; ++v) {
        int label = _images[v - 1];
        if (label < 1 || label > n)
            throw InputError("label " + std::to_string(label) + " outside 1.." + std::to_string(n));
        if (_order[label - 1] != 0)
            throw InputError("label " + std::to_string(label) + " used twice: not a permutation");
        _order[label - 1] = v;
    }
}

auto Labeling::identity(int n) -> Labeling
{
    std::vector<int> images(n);
    for (int v = 1; v <= n; ++v)
        images[v - 1] = v;
    return Labeling(std::move(images));
}

auto Labeling::from_order(const std::vector<int> & order) -> Labeling
{
    return Labeling(order).inverse();
}

auto Labeling::apply(VertexSet s) const -> VertexSet
{
    VertexSet out;
    for (int v : s)
        out.insert(label_of(v));
    return out;
}

auto Labeling::after(const Labeling & first) const -> Labeling
{
    if (first.size() != size())
        throw InputError("composing labelings of different sizes");
    std::vector<int> images(size());
    for (int v = 1; v <= size(); ++v)
        images[v - 1] = label_of(first.label_of(v));
    return Labeling(std::move(images));
}

auto Labeling::is_identity() const -> bool
{
    for (int v = 1; v <= size(); ++v)
        if (_images[v - 1] != v)
            return false;
    return true;
}

auto relabel(const PureComplex & c, const Labeling & l) -> PureComplex
{
    if (l.size() != c.order())
        throw InputError("labeling has " + std::to_string(l.size()) + " entries for " + std::to_string(c.order()) + " vertices");
    std::vector<VertexSet> facets;
    facets.reserve(c.facets().size());
    for (auto f : c.facets())
        facets.push_back(l.apply(f));
    return PureComplex(c.order(), c.dim(), std::move(facets));
}

auto relabel(const Graph & g, const Labeling & l) -> Graph
{
    if (l.size() != g.order())
        throw InputError("labeling has " + std::to_string(l.size()) + " entries for " + std::to_string(g.order()) + " vertices");
    Graph out(g.order());
    for (auto [u, v] : g.edges())
        out.add_edge(l.label_of(u), l.label_of(v));
    return out;
}

auto parse_labeling(std::string_view text) -> Labeling
{
    std::vector<int> images;
    std::size_t pos = 0;
    while (pos < text.size()) {
        pos = text.find_first_not_of(" ,\t\r\n[]", pos);
        if (pos == std::string_view::npos)
            break;
        auto end = text.find_first_of(" ,\t\r\n[]", pos);
        auto token = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
        int value = 0;
        auto [p, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || p != token.data() + token.size())
            throw InputError("labeling entry '" + std::string(token) + "' is not an integer");
        images.push_back(value);
        pos = end;
    }
    return Labeling(std::move(images));
}

auto format_labeling(const Labeling & l) -> std::string
{
    std::ostringstream s;
    for (int v = 1; v <= l.size(); ++v)
        s << (v > 1 ? " " : "") << l.label_of(v);
    return s.str();
}

} // namespace ivc
