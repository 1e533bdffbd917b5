#include <ivc/complex.hpp>
#include <ivc/error.hpp>

#include "text_format.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ivc {

PureComplex::PureComplex(int n, int dim, std::vector<VertexSet> facets) :
    _n(n), _dim(dim), _facets(std::move(facets))
{
    if (n < 0 || n > max_complex_order)
        throw InputError("complex order " + std::to_string(n) + " outside 0.." + std::to_string(max_complex_order));
    if (dim < 0 || dim + 1 > n)
        throw InputError("dimension " + std::to_string(dim) + " needs 0 <= d and d + 1 <= n = " + std::to_string(n));
    const auto all = VertexSet::range(n);
    for (auto f : _facets) {
        if (f.size() != dim + 1)
            throw InputError("facet " + f.to_string() + " does not have " + std::to_string(dim + 1) + " vertices");
        if (! f.is_subset_of(all))
            throw InputError("facet " + f.to_string() + " not contained in 1.." + std::to_string(n));
    }
    std::sort(_facets.begin(), _facets.end());
    _facets.erase(std::unique(_facets.begin(), _facets.end()), _facets.end());
    _lookup.assign(std::size_t{1} << n, false);
    for (auto f : _facets)
        _lookup[f.bits()] = true;
}

auto PureComplex::covered_vertices() const -> VertexSet
{
    VertexSet s;
    for (auto f : _facets)
        s = s | f;
    return s;
}

auto delta_d(const Graph & g, int d) -> PureComplex
{
    if (d < 1)
        throw InputError("d must be a positive integer");
    if (d + 1 > g.order())
        throw InputError("d + 1 = " + std::to_string(d + 1) + " exceeds n = " + std::to_string(g.order()));
    std::vector<VertexSet> facets;
    for_each_subset(g.vertices(), d + 1, [&](VertexSet u) {
        if (is_connected_subset(g, u))
            facets.push_back(u);
        return true;
    });
    return PureComplex(g.order(), d, std::move(facets));
}

auto ind_faces(const Graph & g, int d, int t) -> FaceSetByCardinality
{
    if (d < 1)
        throw InputError("d must be a positive integer");
    if (t < 0 || t > g.order())
        throw InputError("face cardinality " + std::to_string(t) + " outside 0.." + std::to_string(g.order()));
    FaceSetByCardinality out{t, {}};
    for_each_subset(g.vertices(), t, [&](VertexSet u) {
        if (is_d_independent(g, u, d))
            out.faces.push_back(u);
        return true;
    });
    return out;
}

auto ind_face_sets(const Graph & g, int d) -> std::vector<FaceSetByCardinality>
{
    std::vector<FaceSetByCardinality> out;
    for (int t = 1; t <= g.order(); ++t) {
        auto faces = ind_faces(g, d, t);
        if (faces.faces.empty())
            break; // d-independence is hereditary
        out.push_back(std::move(faces));
    }
    return out;
}

auto ind_facets(const Graph & g, int d) -> std::vector<VertexSet>
{
    if (d < 1)
        throw InputError("d must be a positive integer");
    if (g.order() > max_complex_order)
        throw InputError("maximal d-independent sets are enumerated for n <= " + std::to_string(max_complex_order));
    const auto all = g.vertices();
    std::vector<VertexSet> out;
    for (VertexSet::bits_type bits = 0; bits < (VertexSet::bits_type{1} << g.order()); ++bits) {
        auto u = VertexSet::from_bits(bits);
        if (! is_d_independent(g, u, d))
            continue;
        bool maximal = true;
        for (int v : all - u)
            if (is_d_independent(g, with(u, v), d)) {
                maximal = false;
                break;
            }
        if (maximal)
            out.push_back(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

auto k_skeleton(const PureComplex & c, int k) -> PureComplex
{
    if (k < 0 || k > c.dim())
        throw InputError("skeleton dimension " + std::to_string(k) + " outside 0.." + std::to_string(c.dim()));
    std::vector<VertexSet> faces;
    for (auto f : c.facets())
        for_each_subset(f, k + 1, [&](VertexSet s) {
            faces.push_back(s);
            return true;
        });
    return PureComplex(c.order(), k, std::move(faces));
}

auto is_connected_complex(const PureComplex & c) -> bool
{
    if (c.empty())
        throw InputError("connectivity of a complex without facets is undefined");
    // Facets sharing a vertex merge; start from the first facet and absorb.
    VertexSet reached = c.facets().front();
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto f : c.facets())
            if (! (f & reached).empty() && ! f.is_subset_of(reached)) {
                reached = reached | f;
                grew = true;
            }
    }
    return reached == c.covered_vertices();
}

auto parse_complex(std::string_view text) -> PureComplex
{
    auto lines = text::content_lines(text);
    if (lines.empty())
        throw InputError("empty complex file: expected 'n <count> d <dim>'");
    const auto & head = lines.front();
    if (head.tokens.size() != 4 || head.tokens[0] != "n" || head.tokens[2] != "d")
        throw text::line_error(head.number, "expected 'n <count> d <dim>'");
    int n = text::to_int(head.tokens[1], head.number);
    int dim = text::to_int(head.tokens[3], head.number);
    if (n < 0 || n > max_complex_order)
        throw text::line_error(head.number, "vertex count must lie in 0.." + std::to_string(max_complex_order));
    if (dim < 0 || dim + 1 > n)
        throw text::line_error(head.number, "dimension must satisfy 0 <= d and d + 1 <= n");

    std::vector<VertexSet> facets;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto & l = lines[i];
        if (static_cast<int>(l.tokens.size()) != dim + 1)
            throw text::line_error(l.number, "facet must list " + std::to_string(dim + 1) + " vertices");
        VertexSet f;
        int previous = 0;
        for (auto tok : l.tokens) {
            int v = text::to_int(tok, l.number);
            if (v <= previous || v > n)
                throw text::line_error(l.number, "facet vertices must increase within 1.." + std::to_string(n));
            previous = v;
            f.insert(v);
        }
        if (std::find(facets.begin(), facets.end(), f) != facets.end())
            throw text::line_error(l.number, "duplicate facet " + f.to_string());
        facets.push_back(f);
    }
    return PureComplex(n, dim, std::move(facets));
}

auto read_complex_file(const std::string & path) -> PureComplex
{
    return parse_complex(text::read_file(path));
}

namespace {
    void write_face(std::ostringstream & s, VertexSet f)
    {
        if (f.empty()) {
            s << "{}\n";
            return;
        }
        bool first = true;
        for (int v : f) {
            if (! first)
                s << ' ';
            first = false;
            s << v;
        }
        s << '\n';
    }
}

auto format_complex(const PureComplex & c) -> std::string
{
    std::ostringstream s;
    s << "n " << c.order() << " d " << c.dim() << '\n';
    for (auto f : c.facets())
        write_face(s, f);
    return s.str();
}

auto format_face_set(int n, const FaceSetByCardinality & faces) -> std::string
{
    std::ostringstream s;
    s << "n " << n << " t " << faces.t << '\n';
    for (auto f : faces.faces)
        write_face(s, f);
    return s.str();
}

auto format_face_list(int n, const std::vector<VertexSet> & faces) -> std::string
{
    std::ostringstream s;
    s << "n " << n << '\n';
    for (auto f : faces)
        write_face(s, f);
    return s.str();
}

} // namespace ivc
