#pragma once

#include "crystalcheck/graph.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace crystalcheck {

inline constexpr int max_enumeration_vertices = 8;
/// Without the degree filter the generator walks every adjacency bitmask.
inline constexpr int max_unrestricted_vertices = 4;

struct GraphFilters {
    bool degree_axiom = true;
    bool acyclic = true;
    bool connected = true;
};

struct GraphStream {
    int max_vertices = 1;
    GraphFilters filters;
    bool canonical = true;
};

/// Dense graph on at most 8 vertices named v1..vn. Bit 8*tail+head of
/// adjacency[c] is set when tail -> head is an edge of color c+1.
struct SmallGraph {
    int n = 0;
    std::array<std::uint64_t, 2> adjacency{};

    [[nodiscard]] auto has_edge(int tail, int head, Color c) const -> bool
    {
        return (adjacency[color_index(c)] >> (8 * tail + head)) & 1U;
    }
    void add_edge(int tail, int head, Color c)
    {
        adjacency[color_index(c)] |= std::uint64_t{1} << (8 * tail + head);
    }

    friend auto operator==(const SmallGraph &, const SmallGraph &) -> bool = default;
};

/// The fixed adjacency encoding: color-1 matrix then color-2 matrix, each
/// row-major over ordered pairs (i, j), i != j, one bit per pair, packed
/// most significant bit first so integer order is lexicographic order.
using EncodingKey = unsigned __int128;

auto encoding_key(const SmallGraph & g) -> EncodingKey;

/// Minimum of encoding_key over all n! relabelings.
auto canonical_key(const SmallGraph & g) -> EncodingKey;

/// The graph that realizes canonical_key.
auto canonical_form(const SmallGraph & g) -> SmallGraph;

/// Relabels vertex i as perm[i].
auto relabel(const SmallGraph & g, const std::vector<int> & perm) -> SmallGraph;

auto passes(const SmallGraph & g, const GraphFilters & filters) -> bool;
auto is_acyclic(const SmallGraph & g) -> bool;
auto is_weakly_connected(const SmallGraph & g) -> bool;
auto satisfies_degree_axiom(const SmallGraph & g) -> bool;

/// Vertices v1..vn, edges ordered by (tail, color, head).
auto to_digraph(const SmallGraph & g) -> ColoredDigraph;

/// All graphs on exactly n vertices passing the filters, in increasing
/// encoding order. With canonical set, exactly the graphs equal to their own
/// canonical form. Throws out_of_range.
auto enumerate_order(int n, const GraphFilters & filters, bool canonical) -> std::vector<SmallGraph>;
auto enumerate_order_serial(int n, const GraphFilters & filters, bool canonical) -> std::vector<SmallGraph>;

/// Orders 1..max_vertices concatenated.
auto enumerate_graphs(const GraphStream & stream) -> std::vector<SmallGraph>;
auto enumerate_graphs_serial(const GraphStream & stream) -> std::vector<SmallGraph>;

}
