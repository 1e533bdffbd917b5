#include <ivc/graph.hpp>

#include "text_format.hpp"

#include <sstream>

namespace ivc {

auto parse_graph(std::string_view text) -> Graph
{
    auto lines = text::content_lines(text);
    if (lines.empty())
        throw InputError("empty graph file: expected 'n <count>'");
    const auto & head = lines.front();
    if (head.tokens.size() != 2 || head.tokens[0] != "n")
        throw text::line_error(head.number, "expected 'n <count>'");
    int n = text::to_int(head.tokens[1], head.number);
    if (n < 0 || n > max_vertex)
        throw text::line_error(head.number, "vertex count must lie in 0.." + std::to_string(max_vertex));

    Graph g(n);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto & l = lines[i];
        if (l.tokens.size() != 2)
            throw text::line_error(l.number, "expected 'u v'");
        int u = text::to_int(l.tokens[0], l.number), v = text::to_int(l.tokens[1], l.number);
        if (! (1 <= u && u < v && v <= n))
            throw text::line_error(l.number, "edge must satisfy 1 <= u < v <= " + std::to_string(n));
        if (g.adjacent(u, v))
            throw text::line_error(l.number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(u, v);
    }
    return g;
}

auto read_graph_file(const std::string & path) -> Graph
{
    return parse_graph(text::read_file(path));
}

auto format_graph(const Graph & g) -> std::string
{
    std::ostringstream s;
    s << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges())
        s << u << ' ' << v << '\n';
    return s.str();
}

} // namespace ivc
