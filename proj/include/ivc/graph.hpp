#pragma once

#include <ivc/vertex_set.hpp>

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ivc {

/// Simple undirected graph on the vertices 1..n.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    auto order() const -> int { return _n; }
    auto edge_count() const -> int;
    auto vertices() const -> VertexSet { return VertexSet::range(_n); }

    /// Adding an existing edge is a no-op; loops and out-of-range endpoints throw.
    void add_edge(int u, int v);
    auto adjacent(int u, int v) const -> bool;
    auto neighbors(int v) const -> VertexSet;
    auto degree(int v) const -> int { return neighbors(v).size(); }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    auto edges() const -> std::vector<std::pair<int, int>>;

    auto operator==(const Graph &) const -> bool = default;

private:
    void check_vertex(int v) const;

    int _n = 0;
    std::vector<VertexSet> _adj; // _adj[v - 1]
};

/// G[U], keeping the original labels: the graph still lives on 1..n but only
/// edges with both ends in U survive, and `vertices` records U.
struct InducedSubgraph {
    VertexSet vertices;
    Graph graph;

    auto contains(int v) const -> bool { return vertices.contains(v); }
    auto adjacent(int u, int v) const -> bool { return contains(u) && contains(v) && graph.adjacent(u, v); }
};

auto induced_subgraph(const Graph & g, VertexSet u) -> InducedSubgraph;

/// G[U] re-indexed onto 1..|U| in increasing order of original label;
/// `original[i - 1]` is the original label of new vertex i.
struct CompactSubgraph {
    Graph graph;
    std::vector<int> original;
};

auto compact_subgraph(const Graph & g, VertexSet u) -> CompactSubgraph;

/// Vertices reachable from `start` inside U (start must be in U).
auto reach_within(const Graph & g, VertexSet u, int start) -> VertexSet;

/// Connected components of G[U], ordered by smallest member.
auto components(const Graph & g, VertexSet u) -> std::vector<VertexSet>;
auto components(const Graph & g) -> std::vector<VertexSet>;

/// Whether G[U] is connected. Throws InputError on an empty U.
auto is_connected_subset(const Graph & g, VertexSet u) -> bool;
auto is_connected(const Graph & g) -> bool;

/// Every component of G[U] has at most d vertices.
auto is_d_independent(const Graph & g, VertexSet u, int d) -> bool;

auto is_clique(const Graph & g, VertexSet u) -> bool;

/// Inclusion-maximal cliques in lexicographic order.
auto maximal_cliques(const Graph & g) -> std::vector<VertexSet>;

auto has_isolated_vertex(const Graph & g) -> bool;
auto is_forest(const Graph & g) -> bool;
auto is_tree(const Graph & g) -> bool;
auto is_path_graph(const Graph & g) -> bool;

// Named families. Paths and cycles follow 1-2-...-n; stars put the centre at 1.
auto empty_graph(int n) -> Graph;
auto complete_graph(int n) -> Graph;
auto path_graph(int n) -> Graph;
auto cycle_graph(int n) -> Graph;
auto star_graph(int leaves) -> Graph;

/// One attached graph H_x of a corona. `names` gives its vertices (in order
/// 1..|V(H_x)|) identifiers in a shared namespace; they must not collide with
/// each other, with other parts, or with the base graph's labels 1..n.
struct CoronaPart {
    int anchor = 0;
    Graph graph;
    std::vector<int> names;
};

struct CoronaResult {
    Graph graph;
    /// origin[i - 1] is the namespace identifier of new vertex i; base
    /// vertices keep their labels, attached vertices follow in anchor order.
    std::vector<int> origin;
};

auto corona(const Graph & g, const std::vector<CoronaPart> & parts) -> CoronaResult;
/// Convenience form: family[x - 1] is H_x, names are assigned automatically.
auto corona(const Graph & g, const std::vector<Graph> & family) -> CoronaResult;

// Text format: "n <count>" then one "u v" line per edge with u < v.
// Blank lines and lines starting with '#' are ignored.
auto parse_graph(std::string_view text) -> Graph;
auto read_graph_file(const std::string & path) -> Graph;
auto format_graph(const Graph & g) -> std::string;

} // namespace ivc
