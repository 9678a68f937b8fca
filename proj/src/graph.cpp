#include "crystalcheck/graph.hpp"
#include "crystalcheck/error.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace crystalcheck {

auto to_string(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::syntax: return "syntax";
        case ErrorKind::schema: return "schema";
        case ErrorKind::unknown_color: return "unknown_color";
        case ErrorKind::dangling_endpoint: return "dangling_endpoint";
        case ErrorKind::duplicate_edge: return "duplicate_edge";
        case ErrorKind::duplicate_vertex: return "duplicate_vertex";
        case ErrorKind::self_loop: return "self_loop";
        case ErrorKind::empty_vertex_set: return "empty_vertex_set";
        case ErrorKind::invalid_label: return "invalid_label";
        case ErrorKind::unknown_vertex: return "unknown_vertex";
        case ErrorKind::unknown_edge: return "unknown_edge";
        case ErrorKind::labeling_not_total: return "labeling_not_total";
        case ErrorKind::degree_axiom_violated: return "degree_axiom_violated";
        case ErrorKind::monochromatic_cycle: return "monochromatic_cycle";
        case ErrorKind::graph_cyclic: return "graph_cyclic";
        case ErrorKind::precondition: return "precondition";
        case ErrorKind::out_of_range: return "out_of_range";
        case ErrorKind::budget_exceeded: return "budget_exceeded";
        case ErrorKind::usage: return "usage";
        case ErrorKind::io: return "io";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, std::string location, const std::string & message) :
    std::runtime_error(message),
    kind_(kind),
    location_(std::move(location))
{
}

auto ColoredDigraph::build(std::vector<std::string> vertex_names, const std::vector<NamedEdge> & named)
    -> ColoredDigraph
{
    if (vertex_names.empty())
        throw Error(ErrorKind::empty_vertex_set, "vertices", "graph has no vertices");

    std::unordered_map<std::string, Vertex> index;
    for (Vertex v = 0; v < vertex_names.size(); ++v)
        if (! index.emplace(vertex_names[v], v).second)
            throw Error(ErrorKind::duplicate_vertex, "vertices[" + std::to_string(v) + "]",
                "vertex '" + vertex_names[v] + "' declared twice");

    std::vector<Edge> edges;
    edges.reserve(named.size());
    for (std::size_t i = 0; i < named.size(); ++i) {
        const auto & e = named[i];
        auto where = "edges[" + std::to_string(i) + "]";
        if (e.color != 1 && e.color != 2)
            throw Error(ErrorKind::unknown_color, where, "color must be 1 or 2, got " + std::to_string(e.color));
        auto t = index.find(e.from), h = index.find(e.to);
        if (t == index.end())
            throw Error(ErrorKind::dangling_endpoint, where, "unknown tail vertex '" + e.from + "'");
        if (h == index.end())
            throw Error(ErrorKind::dangling_endpoint, where, "unknown head vertex '" + e.to + "'");
        edges.push_back(Edge{t->second, h->second, e.color == 1 ? Color::one : Color::two});
    }

    return from_edges(std::move(vertex_names), std::move(edges));
}

auto ColoredDigraph::from_edges(std::vector<std::string> vertex_names, std::vector<Edge> edges) -> ColoredDigraph
{
    if (vertex_names.empty())
        throw Error(ErrorKind::empty_vertex_set, "vertices", "graph has no vertices");

    ColoredDigraph g;
    g.names_ = std::move(vertex_names);
    for (Vertex v = 0; v < g.names_.size(); ++v)
        if (! g.index_.emplace(g.names_[v], v).second)
            throw Error(ErrorKind::duplicate_vertex, "vertices[" + std::to_string(v) + "]",
                "vertex '" + g.names_[v] + "' declared twice");

    const auto n = g.names_.size();
    for (auto & side : {&g.out_, &g.in_})
        for (auto & per_color : *side)
            per_color.assign(n, {});

    std::set<std::tuple<Vertex, Vertex, int>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto & e = edges[i];
        auto where = "edges[" + std::to_string(i) + "]";
        if (e.tail >= n || e.head >= n)
            throw Error(ErrorKind::dangling_endpoint, where, "edge endpoint out of range");
        if (e.color != Color::one && e.color != Color::two)
            throw Error(ErrorKind::unknown_color, where, "color must be 1 or 2");
        if (e.tail == e.head)
            throw Error(ErrorKind::self_loop, where, "self-loop at '" + g.names_[e.tail] + "'");
        if (! seen.emplace(e.tail, e.head, color_number(e.color)).second)
            throw Error(ErrorKind::duplicate_edge, where,
                "duplicate " + std::to_string(color_number(e.color)) + "-edge ('" + g.names_[e.tail] + "','"
                    + g.names_[e.head] + "')");
        g.out_[color_index(e.color)][e.tail].push_back(i);
        g.in_[color_index(e.color)][e.head].push_back(i);
    }
    g.edges_ = std::move(edges);
    return g;
}

auto ColoredDigraph::find_vertex(const std::string & name) const -> std::size_t
{
    auto it = index_.find(name);
    return it == index_.end() ? npos : it->second;
}

auto ColoredDigraph::find_edge(Vertex tail, Vertex head, Color color) const -> std::size_t
{
    if (tail >= vertex_count())
        return npos;
    for (auto i : out_edges(tail, color))
        if (edges_[i].head == head)
            return i;
    return npos;
}

auto ColoredDigraph::successor(Vertex v, Color c) const -> std::size_t
{
    auto out = out_edges(v, c);
    return out.empty() ? npos : edges_[out.front()].head;
}

auto ColoredDigraph::predecessor(Vertex v, Color c) const -> std::size_t
{
    auto in = in_edges(v, c);
    return in.empty() ? npos : edges_[in.front()].tail;
}

}
