#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace crystalcheck {

/// Index of a vertex in declared order.
using Vertex = std::size_t;

enum class Color : std::uint8_t { one = 1, two = 2 };

inline constexpr Color all_colors[] = {Color::one, Color::two};

constexpr auto color_index(Color c) noexcept -> std::size_t { return c == Color::one ? 0 : 1; }
constexpr auto color_number(Color c) noexcept -> int { return static_cast<int>(c); }

struct Edge {
    Vertex tail;
    Vertex head;
    Color color;

    friend auto operator==(const Edge &, const Edge &) -> bool = default;
};

/// A finite directed graph whose edges carry color 1 or 2.
///
/// Vertices are opaque string identifiers kept in declared order; edges keep
/// declared order too. Construction enforces: unique identifiers, a nonempty
/// vertex set, known endpoints, no self-loops and no repeated
/// (tail, head, color) triple. Edges of different colors may join the same
/// ordered pair. Degree bounds are not enforced here; they are checked as
/// axiom violations.
class ColoredDigraph {
public:
    struct NamedEdge {
        std::string from;
        std::string to;
        int color;
    };

    /// Throws Error on any invariant breach.
    static auto build(std::vector<std::string> vertex_names, const std::vector<NamedEdge> & edges)
        -> ColoredDigraph;

    /// Index-based builder used by generators; same invariants.
    static auto from_edges(std::vector<std::string> vertex_names, std::vector<Edge> edges)
        -> ColoredDigraph;

    [[nodiscard]] auto vertex_count() const noexcept -> std::size_t { return names_.size(); }
    [[nodiscard]] auto edge_count() const noexcept -> std::size_t { return edges_.size(); }
    [[nodiscard]] auto name(Vertex v) const -> const std::string & { return names_.at(v); }
    [[nodiscard]] auto names() const noexcept -> std::span<const std::string> { return names_; }
    [[nodiscard]] auto edges() const noexcept -> std::span<const Edge> { return edges_; }
    [[nodiscard]] auto edge(std::size_t index) const -> const Edge & { return edges_.at(index); }

    /// Declared-order vertex index, or npos.
    [[nodiscard]] auto find_vertex(const std::string & name) const -> std::size_t;
    /// Declared-order edge index for the triple, or npos.
    [[nodiscard]] auto find_edge(Vertex tail, Vertex head, Color color) const -> std::size_t;

    /// Edge indices leaving / entering v in color c, in declared edge order.
    [[nodiscard]] auto out_edges(Vertex v, Color c) const -> std::span<const std::size_t>
    {
        return out_[color_index(c)][v];
    }
    [[nodiscard]] auto in_edges(Vertex v, Color c) const -> std::span<const std::size_t>
    {
        return in_[color_index(c)][v];
    }

    /// Unique successor / predecessor in color c, or npos. Only meaningful
    /// when v has at most one such edge.
    [[nodiscard]] auto successor(Vertex v, Color c) const -> std::size_t;
    [[nodiscard]] auto predecessor(Vertex v, Color c) const -> std::size_t;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    friend auto operator==(const ColoredDigraph & a, const ColoredDigraph & b) -> bool
    {
        return a.names_ == b.names_ && a.edges_ == b.edges_;
    }

private:
    ColoredDigraph() = default;

    std::vector<std::string> names_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> out_[2];
    std::vector<std::vector<std::size_t>> in_[2];
};

}
