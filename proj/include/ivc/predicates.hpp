#pragma once

#include <ivc/complex.hpp>
#include <ivc/graph.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace ivc {

// Every predicate here reads the complex's vertex numbers as the labeling:
// relabel first (see labeling.hpp) to test a different ordering.

enum class LabelingPredicate {
    under_closed_def,
    under_closed_local,
    unit_interval,
    equiv_cond2,
    equiv_cond3,
    condition_star,
    chordal_complex,
};

auto predicate_name(LabelingPredicate p) -> std::string_view;
auto parse_predicate(std::string_view name) -> LabelingPredicate;

/// First failure of a per-labeling predicate.
struct Violation {
    VertexSet facet;
    /// Set required to be a facet but absent; empty when the failure is a
    /// missing co-facet witness.
    VertexSet missing;
    /// The in-span vertex j, when the condition involves one.
    int outsider = 0;
    /// Second facet (chordal complex: facet sharing the maximum).
    VertexSet other;

    auto operator==(const Violation &) const -> bool = default;
};

auto describe(const Violation & v, LabelingPredicate p) -> std::string;

auto find_violation(const PureComplex & c, LabelingPredicate p) -> std::optional<Violation>;
auto holds(const PureComplex & c, LabelingPredicate p) -> bool;

/// Every tuple j_1 = i_1 < j_2 < ... < j_{d+1} with j_k <= i_k is a facet.
auto is_under_closed_def(const PureComplex & c) -> bool;
/// For each facet and each j in its span outside it, {i_1..i_d, j} is a facet.
auto is_under_closed_local(const PureComplex & c) -> bool;
/// Every (d+1)-subset of a facet's span is a facet.
auto is_unit_interval_def(const PureComplex & c) -> bool;

enum class EquivVariant { cond2, cond3 };
auto satisfies_equiv_condition(const PureComplex & c, EquivVariant variant) -> bool;

/// Exchange property conditioned on j sharing a facet with i_k.
auto satisfies_condition_star(const PureComplex & c) -> bool;

/// Facets with the same largest vertex carry the full d-skeleton of their union.
auto is_chordal_complex(const PureComplex & c) -> bool;

/// For a < b < c: ab, ac edges force bc, and ac, bc edges force ab.
/// A violation reports the triple as `facet` and the absent edge as `missing`.
auto closed_graph_violation(const Graph & g) -> std::optional<Violation>;
auto is_closed_graph(const Graph & g) -> bool;

} // namespace ivc
