#pragma once

#include "crystalcheck/graph.hpp"

#include <variant>
#include <vector>

namespace crystalcheck {

/// Integer vertex function strictly increasing along every edge.
struct Potential {
    std::vector<long> values;
};

/// A directed cycle as a closed vertex walk, first == last, rotated to start
/// at its earliest declared vertex.
struct CycleCertificate {
    std::vector<Vertex> cycle;
};

/// Longest-path depth from the sources if g is acyclic (values in
/// [0, |V|-1]); otherwise a directed cycle.
auto find_potential(const ColoredDigraph & g) -> std::variant<Potential, CycleCertificate>;

/// Weakly connected components ordered by first vertex, each in declared order.
auto weak_components(const ColoredDigraph & g) -> std::vector<std::vector<Vertex>>;

}
