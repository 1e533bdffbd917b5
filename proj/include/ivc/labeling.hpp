#pragma once

#include <ivc/complex.hpp>
#include <ivc/graph.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace ivc {

/// A bijection from vertices 1..n to labels 1..n.
class Labeling {
public:
    Labeling() = default;
    /// images[v - 1] is the label of vertex v.
    explicit Labeling(std::vector<int> images);

    static auto identity(int n) -> Labeling;
    /// order[k - 1] is the vertex that receives label k.
    static auto from_order(const std::vector<int> & order) -> Labeling;

    auto size() const -> int { return static_cast<int>(_images.size()); }
    auto label_of(int v) const -> int { return _images.at(v - 1); }
    auto vertex_with(int label) const -> int { return _order.at(label - 1); }
    auto images() const -> const std::vector<int> & { return _images; }
    /// Vertices listed by increasing label.
    auto order() const -> const std::vector<int> & { return _order; }

    auto apply(VertexSet s) const -> VertexSet;
    auto inverse() const -> Labeling { return Labeling(_order); }
    /// (this after first)(v) = this(first(v)).
    auto after(const Labeling & first) const -> Labeling;
    auto is_identity() const -> bool;

    auto operator==(const Labeling &) const -> bool = default;

private:
    std::vector<int> _images, _order;
};

auto relabel(const PureComplex & c, const Labeling & l) -> PureComplex;
auto relabel(const Graph & g, const Labeling & l) -> Graph;

/// "2 1 3 4" or "2,1,3,4" (the images of vertices 1, 2, ...).
auto parse_labeling(std::string_view text) -> Labeling;
auto format_labeling(const Labeling & l) -> std::string;

} // namespace ivc
