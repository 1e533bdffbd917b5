#pragma once

#include <ivc/complex.hpp>
#include <ivc/labeling.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace ivc {

/// x^F for a vertex set F.
struct SquarefreeMonomial {
    VertexSet support;

    auto degree() const -> int { return support.size(); }
    auto operator==(const SquarefreeMonomial &) const -> bool = default;
};

/// Merge both supports, sort, and deal the sequence out alternately:
/// odd positions to the first result, even positions to the second.
/// Throws InputError on unequal degrees.
auto sort_pair(SquarefreeMonomial u, SquarefreeMonomial v) -> std::pair<SquarefreeMonomial, SquarefreeMonomial>;

/// A pair whose sorted image leaves the set.
struct SortFailure {
    VertexSet u, v, sorted_u, sorted_v;
};

/// Throws InputError if some member does not have degree t.
auto find_sort_failure(const std::vector<VertexSet> & set, int t) -> std::optional<SortFailure>;
auto is_sortable_set(const std::vector<VertexSet> & set, int t) -> bool;

/// Sort-closed at every cardinality. The list must hold t = 1, 2, ...
/// consecutively (InputError otherwise).
auto is_sortable_complex(const std::vector<FaceSetByCardinality> & faces_by_t) -> bool;

/// Ind_d(G) under the current labeling.
auto is_ind_sortable(const Graph & g, int d) -> bool;

/// Least labeling (by the vertex order it induces) making Ind_d(G)
/// sortable. Throws GuardRefusal above max_n vertices.
auto find_sortable_labeling(const Graph & g, int d, int max_n = 8) -> std::optional<Labeling>;

} // namespace ivc
