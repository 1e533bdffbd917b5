#pragma once

#include <ivc/graph.hpp>

#include <array>
#include <optional>
#include <string_view>

namespace ivc {

enum class PatternKind { cycle, claw, paw };

auto pattern_kind_name(PatternKind k) -> std::string_view;

struct PatternWitness {
    PatternKind kind = PatternKind::cycle;
    /// All vertices of the pattern.
    VertexSet vertices;
    /// Claws only: the three parts, each containing `center`.
    std::array<VertexSet, 3> parts{};
    int center = 0;

    auto operator==(const PatternWitness &) const -> bool = default;
};

/// First vertex set (by size, then lexicographically) of size >= length
/// inducing a chordless cycle. Throws InputError when length < 3.
auto find_induced_cycle_geq(const Graph & g, int length) -> std::optional<PatternWitness>;

/// No induced cycle of length 4 or more.
auto is_chordal_graph(const Graph & g) -> bool;

/// Three connected vertex sets G_1, G_2, G_3 of 2..d+1 vertices with
/// pairwise intersections exactly {c}, pairwise unions of at least d + 1
/// vertices, and no edge between G_i - c and G_j - c (so the union induces
/// exactly the parts and every path between parts passes through c).
/// Scan: centers ascending, parts in shortlex order, triples lexicographic.
auto find_d_claw(const Graph & g, int d) -> std::optional<PatternWitness>;

/// First (d + 2)-subset inducing a connected graph with exactly three
/// degree-1 vertices. Always absent for d = 1.
auto find_d_paw(const Graph & g, int d) -> std::optional<PatternWitness>;

/// Re-check a witness against its definition (d is ignored for cycles).
auto validate_witness(const Graph & g, int d, const PatternWitness & w) -> bool;

} // namespace ivc
