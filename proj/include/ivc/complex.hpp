#pragma once

#include <ivc/graph.hpp>
#include <ivc/vertex_set.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace ivc {

/// Largest vertex count for a PureComplex (facet lookup is a 2^n bitmap).
inline constexpr int max_complex_order = 20;

/// Pure complex of dimension `dim` on 1..n given by its facets, each a
/// (dim+1)-subset. Facets are kept deduplicated and lexicographically sorted.
/// Vertices in no facet are allowed.
class PureComplex {
public:
    PureComplex() = default;
    PureComplex(int n, int dim, std::vector<VertexSet> facets);

    auto order() const -> int { return _n; }
    auto dim() const -> int { return _dim; }
    auto facets() const -> const std::vector<VertexSet> & { return _facets; }
    auto facet_count() const -> int { return static_cast<int>(_facets.size()); }
    auto empty() const -> bool { return _facets.empty(); }

    /// Facet membership (sets of the wrong size or range are never facets).
    auto contains(VertexSet s) const -> bool
    {
        return s.bits() < _lookup.size() && _lookup[s.bits()];
    }

    auto covered_vertices() const -> VertexSet;
    auto has_uncovered_vertices() const -> bool { return covered_vertices() != VertexSet::range(_n); }

    auto operator==(const PureComplex & other) const -> bool
    {
        return _n == other._n && _dim == other._dim && _facets == other._facets;
    }

private:
    int _n = 0, _dim = 0;
    std::vector<VertexSet> _facets;
    std::vector<bool> _lookup;
};

/// All faces of one cardinality.
struct FaceSetByCardinality {
    int t = 0;
    std::vector<VertexSet> faces;
};

/// Facets are the (d+1)-subsets inducing a connected subgraph. Requires d >= 1
/// and d + 1 <= n.
auto delta_d(const Graph & g, int d) -> PureComplex;

/// t-subsets of V(G) that are d-independent.
auto ind_faces(const Graph & g, int d, int t) -> FaceSetByCardinality;
/// Face sets of Ind_d(G) for t = 1 .. largest nonempty cardinality.
auto ind_face_sets(const Graph & g, int d) -> std::vector<FaceSetByCardinality>;
/// Inclusion-maximal d-independent sets.
auto ind_facets(const Graph & g, int d) -> std::vector<VertexSet>;

auto k_skeleton(const PureComplex & c, int k) -> PureComplex;

/// Whether the facet-overlap walk connects every pair of covered vertices.
/// Uncovered vertices are ignored (see has_uncovered_vertices).
auto is_connected_complex(const PureComplex & c) -> bool;

// Text format: "n <count> d <dim>" then one facet per line as increasing
// vertices. '#' lines and blank lines are ignored.
auto parse_complex(std::string_view text) -> PureComplex;
auto read_complex_file(const std::string & path) -> PureComplex;
auto format_complex(const PureComplex & c) -> std::string;

/// "n <count> t <t>" then one face per line; the empty face prints as "{}".
auto format_face_set(int n, const FaceSetByCardinality & faces) -> std::string;
/// "n <count>" then one face per line (faces of mixed sizes).
auto format_face_list(int n, const std::vector<VertexSet> & faces) -> std::string;

} // namespace ivc
