#include <ivc/error.hpp>
#include <ivc/graph.hpp>

#include <algorithm>
#include <set>

namespace ivc {

Graph::Graph(int n) : _n(n)
{
    if (n < 0 || n > max_vertex)
        throw InputError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(max_vertex));
    _adj.resize(n);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n)
{
    for (auto [u, v] : edges)
        add_edge(u, v);
}

void Graph::check_vertex(int v) const
{
    if (v < 1 || v > _n)
        throw InputError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(_n));
}

auto Graph::edge_count() const -> int
{
    int twice = 0;
    for (auto s : _adj)
        twice += s.size();
    return twice / 2;
}

void Graph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw InputError("self-loop at vertex " + std::to_string(u));
    _adj[u - 1].insert(v);
    _adj[v - 1].insert(u);
}

auto Graph::adjacent(int u, int v) const -> bool
{
    if (u < 1 || u > _n)
        return false;
    return _adj[u - 1].contains(v);
}

auto Graph::neighbors(int v) const -> VertexSet
{
    check_vertex(v);
    return _adj[v - 1];
}

auto Graph::edges() const -> std::vector<std::pair<int, int>>
{
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= _n; ++u)
        for (int v : _adj[u - 1])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

namespace {
    void check_subset(const Graph & g, VertexSet u)
    {
        if (! u.is_subset_of(g.vertices()))
            throw InputError("vertex set " + u.to_string() + " not contained in 1.." + std::to_string(g.order()));
    }
}

auto induced_subgraph(const Graph & g, VertexSet u) -> InducedSubgraph
{
    check_subset(g, u);
    InducedSubgraph out{u, Graph(g.order())};
    for (auto [a, b] : g.edges())
        if (u.contains(a) && u.contains(b))
            out.graph.add_edge(a, b);
    return out;
}

auto compact_subgraph(const Graph & g, VertexSet u) -> CompactSubgraph
{
    check_subset(g, u);
    CompactSubgraph out{Graph(u.size()), u.to_vector()};
    std::vector<int> index(g.order() + 1, 0);
    for (std::size_t i = 0; i < out.original.size(); ++i)
        index[out.original[i]] = static_cast<int>(i) + 1;
    for (auto [a, b] : g.edges())
        if (u.contains(a) && u.contains(b))
            out.graph.add_edge(index[a], index[b]);
    return out;
}

auto reach_within(const Graph & g, VertexSet u, int start) -> VertexSet
{
    VertexSet seen{start}, frontier{start};
    while (! frontier.empty()) {
        VertexSet next;
        for (int v : frontier)
            next = next | (g.neighbors(v) & u);
        frontier = next - seen;
        seen = seen | frontier;
    }
    return seen;
}

auto components(const Graph & g, VertexSet u) -> std::vector<VertexSet>
{
    check_subset(g, u);
    std::vector<VertexSet> out;
    VertexSet rest = u;
    while (! rest.empty()) {
        auto c = reach_within(g, rest, rest.min());
        out.push_back(c);
        rest = rest - c;
    }
    return out;
}

auto components(const Graph & g) -> std::vector<VertexSet>
{
    return components(g, g.vertices());
}

auto is_connected_subset(const Graph & g, VertexSet u) -> bool
{
    if (u.empty())
        throw InputError("connectivity of the empty vertex set is undefined");
    check_subset(g, u);
    return reach_within(g, u, u.min()) == u;
}

auto is_connected(const Graph & g) -> bool
{
    return g.order() == 0 || is_connected_subset(g, g.vertices());
}

auto is_d_independent(const Graph & g, VertexSet u, int d) -> bool
{
    check_subset(g, u);
    VertexSet rest = u;
    while (! rest.empty()) {
        auto c = reach_within(g, rest, rest.min());
        if (c.size() > d)
            return false;
        rest = rest - c;
    }
    return true;
}

auto is_clique(const Graph & g, VertexSet u) -> bool
{
    for (int v : u)
        if (! (u - VertexSet{v}).is_subset_of(g.neighbors(v)))
            return false;
    return true;
}

namespace {
    // Tomita-style pivoting: branch only on candidates outside the pivot's
    // neighbourhood.
    void expand(const Graph & g, VertexSet r, VertexSet p, VertexSet x, std::vector<VertexSet> & out)
    {
        if (p.empty() && x.empty()) {
            out.push_back(r);
            return;
        }
        int pivot = 0, best = -1;
        for (int u : p | x) {
            int c = (p & g.neighbors(u)).size();
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        for (int v : p - g.neighbors(pivot)) {
            auto nv = g.neighbors(v);
            expand(g, with(r, v), p & nv, x & nv, out);
            p.erase(v);
            x.insert(v);
        }
    }
}

auto maximal_cliques(const Graph & g) -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    if (g.order() == 0)
        return out;
    expand(g, {}, g.vertices(), {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

auto has_isolated_vertex(const Graph & g) -> bool
{
    for (int v = 1; v <= g.order(); ++v)
        if (g.neighbors(v).empty())
            return true;
    return false;
}

auto is_forest(const Graph & g) -> bool
{
    return g.edge_count() == g.order() - static_cast<int>(components(g).size());
}

auto is_tree(const Graph & g) -> bool
{
    return g.order() >= 1 && is_connected(g) && g.edge_count() == g.order() - 1;
}

auto is_path_graph(const Graph & g) -> bool
{
    if (! is_tree(g))
        return false;
    for (int v = 1; v <= g.order(); ++v)
        if (g.degree(v) > 2)
            return false;
    return true;
}

auto empty_graph(int n) -> Graph
{
    return Graph(n);
}

auto complete_graph(int n) -> Graph
{
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            g.add_edge(u, v);
    return g;
}

auto path_graph(int n) -> Graph
{
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, v + 1);
    return g;
}

auto cycle_graph(int n) -> Graph
{
    if (n < 3)
        throw InputError("a cycle needs at least 3 vertices");
    auto g = path_graph(n);
    g.add_edge(1, n);
    return g;
}

auto star_graph(int leaves) -> Graph
{
    Graph g(leaves + 1);
    for (int v = 2; v <= leaves + 1; ++v)
        g.add_edge(1, v);
    return g;
}

auto corona(const Graph & g, const std::vector<CoronaPart> & parts) -> CoronaResult
{
    std::set<int> used;
    for (int v = 1; v <= g.order(); ++v)
        used.insert(v);
    std::set<int> anchors;
    int total = g.order();
    for (const auto & part : parts) {
        if (part.anchor < 1 || part.anchor > g.order())
            throw InputError("corona anchor " + std::to_string(part.anchor) + " is not a base vertex");
        if (! anchors.insert(part.anchor).second)
            throw InputError("corona anchor " + std::to_string(part.anchor) + " has two attached graphs");
        if (static_cast<int>(part.names.size()) != part.graph.order())
            throw InputError("corona part at anchor " + std::to_string(part.anchor) + " names "
                + std::to_string(part.names.size()) + " of " + std::to_string(part.graph.order()) + " vertices");
        for (int name : part.names)
            if (! used.insert(name).second)
                throw InputError("corona vertex namespaces overlap at identifier " + std::to_string(name));
        total += part.graph.order();
    }

    std::vector<const CoronaPart *> ordered;
    for (const auto & part : parts)
        ordered.push_back(&part);
    std::sort(ordered.begin(), ordered.end(), [](auto a, auto b) { return a->anchor < b->anchor; });

    CoronaResult out{Graph(total), {}};
    for (int v = 1; v <= g.order(); ++v)
        out.origin.push_back(v);
    for (auto [u, v] : g.edges())
        out.graph.add_edge(u, v);

    int offset = g.order();
    for (auto part : ordered) {
        for (auto [u, v] : part->graph.edges())
            out.graph.add_edge(offset + u, offset + v);
        for (int w = 1; w <= part->graph.order(); ++w) {
            out.graph.add_edge(part->anchor, offset + w);
            out.origin.push_back(part->names[w - 1]);
        }
        offset += part->graph.order();
    }
    return out;
}

auto corona(const Graph & g, const std::vector<Graph> & family) -> CoronaResult
{
    if (static_cast<int>(family.size()) != g.order())
        throw InputError("corona family must index every base vertex");
    std::vector<CoronaPart> parts;
    int next = g.order() + 1;
    for (int x = 1; x <= g.order(); ++x) {
        CoronaPart part{x, family[x - 1], {}};
        for (int w = 0; w < part.graph.order(); ++w)
            part.names.push_back(next++);
        parts.push_back(std::move(part));
    }
    return corona(g, parts);
}

} // namespace ivc
