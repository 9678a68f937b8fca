#pragma once

#include "crystalcheck/graph.hpp"
#include "crystalcheck/labels.hpp"

#include <vector>

namespace crystalcheck {

/// Every labeling accepted by check_local, in lexicographic order of label
/// vectors (declared vertex order, 0 < c < 1).
///
/// Search is by propagation: each string of either color constrains its
/// label word to a regular language, and domains are filtered to the labels
/// supported by some accepted word. Branching, when propagation stalls, is
/// on the earliest undecided vertex.
///
/// Requires the degree axiom and acyclicity; throws otherwise.
auto infer_labelings(const ColoredDigraph & g) -> std::vector<Labeling>;

/// Brute force over all 3^|V| labelings, parallel over index blocks.
/// Throws out_of_range above 20 vertices.
auto infer_labelings_exhaustive(const ColoredDigraph & g) -> std::vector<Labeling>;

/// Single-threaded reference for infer_labelings_exhaustive.
auto infer_labelings_exhaustive_serial(const ColoredDigraph & g) -> std::vector<Labeling>;

}
