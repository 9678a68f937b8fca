#pragma once

#include "crystalcheck/graph.hpp"
#include "crystalcheck/report.hpp"

#include <vector>

namespace crystalcheck {

/// Per-vertex in/out degree bound: at most one entering and one leaving edge
/// of each color. One "B0" entry per (vertex, color, direction) excess.
auto check_degree_axiom(const ColoredDigraph & g) -> ViolationReport;

/// Partition of the vertices into maximal directed paths of one color.
struct StringDecomposition {
    Color color;
    std::vector<std::vector<Vertex>> strings;
    /// string_of[v] = index into strings; position_of[v] = offset inside it.
    std::vector<std::size_t> string_of;
    std::vector<std::size_t> position_of;
};

/// Strings are listed in declared order of their first vertex. Throws
/// degree_axiom_violated, or monochromatic_cycle with the cycle in the
/// message, when the color class is not a union of paths.
auto decompose_strings(const ColoredDigraph & g, Color color) -> StringDecomposition;

}
