#pragma once

#include "crystalcheck/graph.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace crystalcheck {

/// Vertex label. The enumerator order fixes the label order 0 < c < 1.
enum class Label : std::uint8_t { zero = 0, central = 1, one = 2 };

inline constexpr Label all_labels[] = {Label::zero, Label::central, Label::one};

auto label_char(Label l) -> char;
auto parse_label(std::string_view text) -> std::optional<Label>;

/// Total map vertex -> label, indexed by declared vertex order.
struct Labeling {
    std::vector<Label> labels;

    [[nodiscard]] auto operator[](Vertex v) const -> Label { return labels[v]; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return labels.size(); }
    /// Labels as a word over {0,c,1}, e.g. "c1c0c".
    [[nodiscard]] auto word() const -> std::string;

    friend auto operator<=>(const Labeling &, const Labeling &) = default;
    friend auto operator==(const Labeling &, const Labeling &) -> bool = default;
};

/// Builds a labeling from a word like "c1c0c" (test and fixture helper).
auto labeling_from_word(std::string_view word) -> Labeling;

/// Central vertices plus central 1-edges, the latter as (tail, head).
struct CentralMarking {
    std::set<Vertex> central_vertices;
    std::set<std::pair<Vertex, Vertex>> central_1_edges;

    friend auto operator==(const CentralMarking &, const CentralMarking &) -> bool = default;
};

enum class VertexClass : std::uint8_t { left, central, right };
enum class EdgeClass : std::uint8_t { left, central, right };

auto to_string(VertexClass c) -> std::string_view;
auto to_string(EdgeClass c) -> std::string_view;

/// Labels as they appear in a document, by vertex name.
using NamedLabels = std::vector<std::pair<std::string, Label>>;

/// Centers as they appear in a document, by vertex name.
struct NamedCenters {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges_1;

    friend auto operator==(const NamedCenters &, const NamedCenters &) -> bool = default;
};

/// Resolves document labels against g. Throws unknown_vertex or
/// labeling_not_total.
auto resolve_labels(const ColoredDigraph & g, const NamedLabels & named) -> Labeling;

/// Resolves document centers against g. Throws unknown_vertex, or
/// unknown_edge when a listed pair is not a 1-edge of g.
auto resolve_centers(const ColoredDigraph & g, const NamedCenters & named) -> CentralMarking;

auto name_labels(const ColoredDigraph & g, const Labeling & lab) -> NamedLabels;
auto name_centers(const ColoredDigraph & g, const CentralMarking & marking) -> NamedCenters;

}
