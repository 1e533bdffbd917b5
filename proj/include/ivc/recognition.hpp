#pragma once

#include <ivc/complex.hpp>
#include <ivc/graph.hpp>
#include <ivc/interval.hpp>
#include <ivc/labeling.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace ivc {

struct SearchGuards {
    /// Largest vertex count for labeling searches.
    int labeling_max_n = 9;
    /// Largest vertex count for interval-system searches.
    int strong_max_n = 5;
};

/// Outcome of an existential search.
///
/// `labeling` maps original vertices to labels. `representation`, when
/// present, is indexed by label, so it pairs with relabel(complex, *labeling).
/// A negative answer is definitive unless `search_exhaustive` is false.
struct RecognitionResult {
    bool found = false;
    std::optional<Labeling> labeling;
    std::optional<IntervalSystem> representation;
    std::uint64_t nodes_explored = 0;
    bool search_exhaustive = true;
};

/// Read-only view of a complex through a partial labeling, handed to facet
/// rules during the search. Only labels already placed may be queried.
class LabelView {
public:
    LabelView(const PureComplex & complex, const std::vector<int> & vertex_at, const std::vector<VertexSet> & cover) :
        _complex(complex), _vertex_at(vertex_at), _cover(cover)
    {
    }

    /// Whether the vertices carrying these labels form a facet.
    auto contains(VertexSet labels) const -> bool
    {
        VertexSet::bits_type bits = 0;
        for (int l : labels)
            bits |= VertexSet::bits_type{1} << (_vertex_at[l] - 1);
        return _complex.contains(VertexSet::from_bits(bits));
    }

    /// Whether some facet holds both labelled vertices.
    auto cofacet(int a, int b) const -> bool { return _cover[_vertex_at[a] - 1].contains(_vertex_at[b]); }

private:
    const PureComplex & _complex;
    const std::vector<int> & _vertex_at;
    const std::vector<VertexSet> & _cover;
};

/// Condition checked once per facet (given as labels) when its largest label
/// is placed. It must only query label sets within [1, max facet label].
using FacetRule = std::function<bool(VertexSet facet_labels, const LabelView & view)>;

/// Depth-first search over labelings, placing labels 1, 2, ... in turn and
/// trying vertices in increasing order; returns the first valid labeling,
/// i.e. the one whose vertex sequence (vertex labelled 1, vertex labelled 2,
/// ...) is lexicographically least.
auto find_labeling(const PureComplex & c, const FacetRule & rule, const SearchGuards & guards = {})
    -> RecognitionResult;

auto find_under_closed_labeling(const PureComplex & c, const SearchGuards & guards = {}) -> RecognitionResult;
auto find_unit_interval_labeling(const PureComplex & c, const SearchGuards & guards = {}) -> RecognitionResult;
auto find_condition_star_labeling(const PureComplex & c, const SearchGuards & guards = {}) -> RecognitionResult;
/// Labeling making G a closed graph.
auto find_closed_labeling(const Graph & g, const SearchGuards & guards = {}) -> RecognitionResult;

enum class SearchablePredicate { under_closed, unit_interval, condition_star };

/// Calls visit(labeling) for every labeling satisfying the predicate, in
/// search order, until visit returns false. Returns the number of nodes.
auto for_each_valid_labeling(const PureComplex & c, SearchablePredicate p,
    const std::function<bool(const Labeling &)> & visit, const SearchGuards & guards = {}) -> std::uint64_t;
auto for_each_valid_labeling(const PureComplex & c, const FacetRule & rule,
    const std::function<bool(const Labeling &)> & visit, const SearchGuards & guards = {}) -> std::uint64_t;

enum class StrongMode { general, unit, proper };

/// Interval representation search. The union of closed intervals is a
/// single interval exactly when their intersection graph is connected, so a
/// representation of the complex is the same thing as an interval model of a
/// graph H with Delta_d(H) equal to the complex. Candidate graphs H are tried
/// in edge-mask order and each is realised exactly:
///   general: a consecutive ordering of the maximal cliques, found by search;
///   proper:  an umbrella vertex ordering v_1..v_n, with v_p reaching
///            forward to v_b, gets [2p(n+1), (2b+1)(n+1) + p];
///   unit:    the same ordering, left endpoints from a difference-constraint
///            system (solved by Bellman-Ford with a symbolic epsilon).
/// Every branch is complete, so `search_exhaustive` is always true here.
/// The certificate labeling sorts vertices by (left, right).
auto find_strong_interval_representation(const PureComplex & c, StrongMode mode, const SearchGuards & guards = {})
    -> RecognitionResult;

/// Maximal-clique construction of an interval model for a labeled graph
/// whose Delta_1 is under closed in its current labeling. Cliques are ordered
/// by (min, max) and vertex v gets [first, last] clique position. Throws
/// InputError when the labeling is not under closed and TheoremViolation if
/// the construction does not verify.
auto build_clique_interval_representation(const Graph & g) -> RecognitionResult;

/// Interval model of a graph from a consecutive ordering of its maximal
/// cliques (v gets [first, last] position), independent of any labeling.
/// Absent exactly when G is not an interval graph.
auto find_interval_model(const Graph & g) -> std::optional<IntervalSystem>;

enum class GraphClass { under_closed, unit_interval, strong_interval, strong_unit, strong_proper, condition_star };

auto graph_class_name(GraphClass c) -> std::string_view;
auto parse_graph_class(std::string_view name) -> GraphClass;

/// Recognise Delta_d(G). Components are handled independently (components
/// smaller than d + 1 carry no facets and impose nothing) and composed with
/// block labels in order of smallest vertex; interval models are rescaled to
/// unit length and laid out left to right with gaps.
auto recognize_graph_class(const Graph & g, int d, GraphClass cls, const SearchGuards & guards = {})
    -> RecognitionResult;

} // namespace ivc
