#pragma once

#include "crystalcheck/graph.hpp"
#include "crystalcheck/labels.hpp"
#include "crystalcheck/report.hpp"
#include "crystalcheck/strings.hpp"

#include <vector>

namespace crystalcheck {

// Global axioms, over a central marking.
//
//   B1  each 1-string has exactly one central element, a vertex or a 1-edge;
//   B2  each 2-string has exactly one central vertex, every vertex before it
//       is right and every vertex after it is left.
//
// Left/right come from the vertex's position on its 1-string relative to the
// central element.

/// Requires the degree axiom and acyclicity (throws otherwise). Throws
/// unknown_vertex / unknown_edge if the marking names something not in g.
auto check_global(const ColoredDigraph & g, const CentralMarking & marking) -> ViolationReport;

/// Same check with precomputed decompositions (hot path for brute force).
auto check_global(const ColoredDigraph & g, const StringDecomposition & strings_1,
    const StringDecomposition & strings_2, const CentralMarking & marking) -> ViolationReport;

/// Throws precondition naming the first 1-string without exactly one
/// central element.
auto classify_vertices(const StringDecomposition & strings_1, const CentralMarking & marking)
    -> std::vector<VertexClass>;

// Local axioms, over a {0,c,1} labeling.
//
//   B1(i)   1-edge label pairs lie in {(0,0),(0,c),(0,1),(c,1),(1,1)}
//   B1(ii)  no entering 1-edge => label != 1; no leaving 1-edge => label != 0
//   B2(i)   2-edge label pairs lie in {(1,1),(1,c),(c,0),(0,0)}
//   B2(ii)  no entering 2-edge => label != 0; no leaving 2-edge => label != 1

auto allowed_pair(Color color, Label tail, Label head) -> bool;

/// One entry per violated clause instance. Throws labeling_not_total.
auto check_local(const ColoredDigraph & g, const Labeling & lab) -> ViolationReport;

/// Cheap yes/no form of check_local for search loops.
auto satisfies_local(const ColoredDigraph & g, const Labeling & lab) -> bool;

/// Indexed by edge. Throws precondition on a pair outside the allowed lists.
auto classify_edges(const ColoredDigraph & g, const Labeling & lab) -> std::vector<EdgeClass>;

/// left -> 0, central -> c, right -> 1. Requires check_global empty.
auto labels_from_marking(const ColoredDigraph & g, const CentralMarking & marking) -> Labeling;

/// c-labeled vertices and (0,1)-labeled 1-edges. Requires check_local empty.
auto marking_from_labels(const ColoredDigraph & g, const Labeling & lab) -> CentralMarking;

}
