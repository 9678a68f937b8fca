#include "crystalcheck/labels.hpp"
#include "crystalcheck/error.hpp"

namespace crystalcheck {

auto label_char(Label l) -> char
{
    switch (l) {
        case Label::zero: return '0';
        case Label::central: return 'c';
        case Label::one: return '1';
    }
    return '?';
}

auto parse_label(std::string_view text) -> std::optional<Label>
{
    if (text == "0")
        return Label::zero;
    if (text == "c")
        return Label::central;
    if (text == "1")
        return Label::one;
    return std::nullopt;
}

auto Labeling::word() const -> std::string
{
    std::string w;
    w.reserve(labels.size());
    for (auto l : labels)
        w.push_back(label_char(l));
    return w;
}

auto labeling_from_word(std::string_view word) -> Labeling
{
    Labeling lab;
    for (char ch : word) {
        auto l = parse_label(std::string_view(&ch, 1));
        if (! l)
            throw Error(ErrorKind::invalid_label, std::string(word), std::string("bad label character '") + ch + "'");
        lab.labels.push_back(*l);
    }
    return lab;
}

auto to_string(VertexClass c) -> std::string_view
{
    switch (c) {
        case VertexClass::left: return "left";
        case VertexClass::central: return "central";
        case VertexClass::right: return "right";
    }
    return "?";
}

auto to_string(EdgeClass c) -> std::string_view
{
    switch (c) {
        case EdgeClass::left: return "left";
        case EdgeClass::central: return "central";
        case EdgeClass::right: return "right";
    }
    return "?";
}

auto resolve_labels(const ColoredDigraph & g, const NamedLabels & named) -> Labeling
{
    std::vector<std::optional<Label>> partial(g.vertex_count());
    for (const auto & [name, label] : named) {
        auto v = g.find_vertex(name);
        if (v == ColoredDigraph::npos)
            throw Error(ErrorKind::unknown_vertex, "labels." + name, "label for undeclared vertex '" + name + "'");
        partial[v] = label;
    }
    Labeling lab;
    lab.labels.reserve(partial.size());
    for (Vertex v = 0; v < partial.size(); ++v) {
        if (! partial[v])
            throw Error(ErrorKind::labeling_not_total, "labels", "vertex '" + g.name(v) + "' has no label");
        lab.labels.push_back(*partial[v]);
    }
    return lab;
}

auto resolve_centers(const ColoredDigraph & g, const NamedCenters & named) -> CentralMarking
{
    CentralMarking m;
    for (const auto & name : named.vertices) {
        auto v = g.find_vertex(name);
        if (v == ColoredDigraph::npos)
            throw Error(ErrorKind::unknown_vertex, "centers.vertices", "undeclared central vertex '" + name + "'");
        m.central_vertices.insert(v);
    }
    for (const auto & [from, to] : named.edges_1) {
        auto t = g.find_vertex(from), h = g.find_vertex(to);
        if (t == ColoredDigraph::npos || h == ColoredDigraph::npos
            || g.find_edge(t, h, Color::one) == ColoredDigraph::npos)
            throw Error(ErrorKind::unknown_edge, "centers.edges_1",
                "('" + from + "','" + to + "') is not a 1-edge of the graph");
        m.central_1_edges.emplace(t, h);
    }
    return m;
}

auto name_labels(const ColoredDigraph & g, const Labeling & lab) -> NamedLabels
{
    NamedLabels named;
    for (Vertex v = 0; v < lab.size() && v < g.vertex_count(); ++v)
        named.emplace_back(g.name(v), lab[v]);
    return named;
}

auto name_centers(const ColoredDigraph & g, const CentralMarking & marking) -> NamedCenters
{
    NamedCenters named;
    for (auto v : marking.central_vertices)
        named.vertices.push_back(g.name(v));
    // Edges in declared edge order rather than index-pair order.
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto & e = g.edge(i);
        if (e.color == Color::one && marking.central_1_edges.contains({e.tail, e.head}))
            named.edges_1.emplace_back(g.name(e.tail), g.name(e.head));
    }
    return named;
}

}
