#pragma once

#include "crystalcheck/graph.hpp"
#include "crystalcheck/labels.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace crystalcheck {

/// A parsed JSON graph document:
///
///     {"vertices": ["a", "b"],
///      "edges": [{"from": "a", "to": "b", "color": 1}],
///      "labels": {"a": "0", "b": "c"},                      (optional)
///      "centers": {"vertices": ["b"], "edges_1": [["a","b"]]}}  (optional)
///
/// Unknown keys are rejected at every level. Label and center names are
/// resolved against the graph later, by resolve_labels / resolve_centers.
struct Document {
    ColoredDigraph graph;
    std::optional<NamedLabels> labels;
    std::optional<NamedCenters> centers;
};

/// Throws Error with one of: syntax, schema, unknown_color,
/// dangling_endpoint, duplicate_edge, duplicate_vertex, self_loop,
/// empty_vertex_set, invalid_label.
auto parse_document(std::string_view text) -> Document;

inline auto parse_graph(std::string_view text) -> ColoredDigraph { return parse_document(text).graph; }

/// Compact single-line JSON; keys in the fixed order vertices, edges,
/// labels, centers.
auto serialize_document(const Document & doc) -> std::string;
auto serialize_graph(const ColoredDigraph & g) -> std::string;

}
