#include "crystalcheck/axioms.hpp"
#include "crystalcheck/error.hpp"
#include "crystalcheck/topology.hpp"

#include <functional>
#include <optional>
#include <string>

namespace crystalcheck {

namespace {

    auto string_text(const ColoredDigraph & g, Color c, const std::vector<Vertex> & s) -> std::string
    {
        std::string out = std::to_string(color_number(c)) + "-string [";
        for (std::size_t i = 0; i < s.size(); ++i)
            out += (i ? "," : "") + g.name(s[i]);
        return out + "]";
    }

    auto pair_text(Label a, Label b) -> std::string
    {
        return std::string("(") + label_char(a) + "," + label_char(b) + ")";
    }

    void validate_marking(const ColoredDigraph & g, const CentralMarking & marking)
    {
        for (auto v : marking.central_vertices)
            if (v >= g.vertex_count())
                throw Error(ErrorKind::unknown_vertex, "centers.vertices",
                    "central vertex index " + std::to_string(v) + " is not in the graph");
        for (auto [t, h] : marking.central_1_edges)
            if (g.find_edge(t, h, Color::one) == ColoredDigraph::npos)
                throw Error(ErrorKind::unknown_edge, "centers.edges_1", "central edge is not a 1-edge of the graph");
    }

    void require_total(const ColoredDigraph & g, const Labeling & lab)
    {
        if (lab.size() != g.vertex_count())
            throw Error(ErrorKind::labeling_not_total, "labels",
                "labeling has " + std::to_string(lab.size()) + " entries for " + std::to_string(g.vertex_count())
                    + " vertices");
    }

    /// Classes for vertices whose 1-string has exactly one central element;
    /// nullopt elsewhere. Also reports the offending strings, if asked.
    auto partial_classes(const StringDecomposition & strings_1, const CentralMarking & marking,
        const std::function<void(std::size_t, std::size_t)> & on_bad_string) -> std::vector<std::optional<VertexClass>>
    {
        std::vector<std::optional<VertexClass>> cls(strings_1.string_of.size());
        for (std::size_t k = 0; k < strings_1.strings.size(); ++k) {
            const auto & s = strings_1.strings[k];
            std::size_t count = 0;
            std::optional<std::size_t> central_vertex_pos, central_edge_pos;
            for (std::size_t p = 0; p < s.size(); ++p) {
                if (marking.central_vertices.contains(s[p])) {
                    ++count;
                    central_vertex_pos = p;
                }
                if (p + 1 < s.size() && marking.central_1_edges.contains({s[p], s[p + 1]})) {
                    ++count;
                    central_edge_pos = p;
                }
            }
            if (count != 1) {
                on_bad_string(k, count);
                continue;
            }
            for (std::size_t p = 0; p < s.size(); ++p) {
                if (central_vertex_pos)
                    cls[s[p]] = p < *central_vertex_pos ? VertexClass::left
                        : p == *central_vertex_pos      ? VertexClass::central
                                                        : VertexClass::right;
                else
                    cls[s[p]] = p <= *central_edge_pos ? VertexClass::left : VertexClass::right;
            }
        }
        return cls;
    }

}

auto check_global(const ColoredDigraph & g, const CentralMarking & marking) -> ViolationReport
{
    validate_marking(g, marking);
    auto strings_1 = decompose_strings(g, Color::one);
    auto strings_2 = decompose_strings(g, Color::two);
    auto potential = find_potential(g);
    if (auto cyc = std::get_if<CycleCertificate>(&potential))
        throw Error(ErrorKind::graph_cyclic, g.name(cyc->cycle.front()), "graph has a directed cycle");
    return check_global(g, strings_1, strings_2, marking);
}

auto check_global(const ColoredDigraph & g, const StringDecomposition & strings_1,
    const StringDecomposition & strings_2, const CentralMarking & marking) -> ViolationReport
{
    validate_marking(g, marking);
    std::vector<Violation> found;

    auto cls = partial_classes(strings_1, marking, [&](std::size_t k, std::size_t count) {
        const auto & s = strings_1.strings[k];
        found.push_back({"B1", VertexLocation{s.front()},
            string_text(g, Color::one, s) + " has " + std::to_string(count) + " central elements"});
    });

    for (const auto & s : strings_2.strings) {
        std::size_t count = 0, at = 0;
        for (std::size_t p = 0; p < s.size(); ++p)
            if (marking.central_vertices.contains(s[p])) {
                ++count;
                at = p;
            }
        if (count != 1) {
            found.push_back({"B2", VertexLocation{s.front()},
                string_text(g, Color::two, s) + " has " + std::to_string(count) + " central vertices"});
            continue;
        }
        for (std::size_t p = 0; p < s.size(); ++p) {
            if (p == at || ! cls[s[p]])
                continue;
            auto want = p < at ? VertexClass::right : VertexClass::left;
            if (*cls[s[p]] != want)
                found.push_back({"B2", VertexLocation{s[p]},
                    std::string(p < at ? "precedes" : "follows") + " central vertex " + g.name(s[at])
                        + " on its 2-string but is " + std::string(to_string(*cls[s[p]]))});
        }
    }
    return ViolationReport(std::move(found));
}

auto classify_vertices(const StringDecomposition & strings_1, const CentralMarking & marking) -> std::vector<VertexClass>
{
    for (auto [t, h] : marking.central_1_edges) {
        auto n = strings_1.string_of.size();
        if (t >= n || h >= n || strings_1.string_of[t] != strings_1.string_of[h]
            || strings_1.position_of[h] != strings_1.position_of[t] + 1)
            throw Error(ErrorKind::precondition, "centers.edges_1", "central edge does not lie on a 1-string");
    }
    auto cls = partial_classes(strings_1, marking, [&](std::size_t k, std::size_t count) {
        throw Error(ErrorKind::precondition, "1-string " + std::to_string(k),
            "1-string " + std::to_string(k) + " has " + std::to_string(count) + " central elements");
    });
    std::vector<VertexClass> out;
    out.reserve(cls.size());
    for (auto c : cls)
        out.push_back(*c);
    return out;
}

auto allowed_pair(Color color, Label tail, Label head) -> bool
{
    using enum Label;
    if (color == Color::one)
        return (tail == zero && (head == zero || head == central || head == one))
            || (head == one && (tail == central || tail == one));
    return (tail == one && (head == one || head == central)) || (head == zero && (tail == central || tail == zero));
}

auto check_local(const ColoredDigraph & g, const Labeling & lab) -> ViolationReport
{
    require_total(g, lab);
    std::vector<Violation> found;

    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto & e = g.edge(i);
        if (! allowed_pair(e.color, lab[e.tail], lab[e.head]))
            found.push_back({e.color == Color::one ? "B1(i)" : "B2(i)", EdgeLocation{i},
                "label pair " + pair_text(lab[e.tail], lab[e.head]) + " not allowed on a "
                    + std::to_string(color_number(e.color)) + "-edge"});
    }

    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto l = lab[v];
        if (g.in_edges(v, Color::one).empty() && l == Label::one)
            found.push_back({"B1(ii)", VertexLocation{v}, "no entering 1-edge but labeled 1"});
        if (g.out_edges(v, Color::one).empty() && l == Label::zero)
            found.push_back({"B1(ii)", VertexLocation{v}, "no leaving 1-edge but labeled 0"});
        if (g.in_edges(v, Color::two).empty() && l == Label::zero)
            found.push_back({"B2(ii)", VertexLocation{v}, "no entering 2-edge but labeled 0"});
        if (g.out_edges(v, Color::two).empty() && l == Label::one)
            found.push_back({"B2(ii)", VertexLocation{v}, "no leaving 2-edge but labeled 1"});
    }
    return ViolationReport(std::move(found));
}

auto satisfies_local(const ColoredDigraph & g, const Labeling & lab) -> bool
{
    require_total(g, lab);
    for (const auto & e : g.edges())
        if (! allowed_pair(e.color, lab[e.tail], lab[e.head]))
            return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto l = lab[v];
        if (l == Label::one && (g.in_edges(v, Color::one).empty() || g.out_edges(v, Color::two).empty()))
            return false;
        if (l == Label::zero && (g.out_edges(v, Color::one).empty() || g.in_edges(v, Color::two).empty()))
            return false;
    }
    return true;
}

auto classify_edges(const ColoredDigraph & g, const Labeling & lab) -> std::vector<EdgeClass>
{
    require_total(g, lab);
    using enum Label;
    std::vector<EdgeClass> out;
    out.reserve(g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto & e = g.edge(i);
        auto a = lab[e.tail], b = lab[e.head];
        if (! allowed_pair(e.color, a, b))
            throw Error(ErrorKind::precondition, "edges[" + std::to_string(i) + "]",
                "label pair " + pair_text(a, b) + " is outside the allowed list");
        if (e.color == Color::one)
            out.push_back(a == zero && b == one ? EdgeClass::central
                    : a == zero                 ? EdgeClass::left
                                                : EdgeClass::right);
        else
            out.push_back(b == zero ? EdgeClass::left : EdgeClass::right);
    }
    return out;
}

auto labels_from_marking(const ColoredDigraph & g, const CentralMarking & marking) -> Labeling
{
    auto strings_1 = decompose_strings(g, Color::one);
    if (! check_global(g, marking).empty())
        throw Error(ErrorKind::precondition, "centers", "marking does not satisfy the global axioms");
    Labeling lab;
    for (auto c : classify_vertices(strings_1, marking))
        lab.labels.push_back(c == VertexClass::left ? Label::zero
                : c == VertexClass::central         ? Label::central
                                                    : Label::one);
    return lab;
}

auto marking_from_labels(const ColoredDigraph & g, const Labeling & lab) -> CentralMarking
{
    if (! satisfies_local(g, lab))
        throw Error(ErrorKind::precondition, "labels", "labeling does not satisfy the local axioms");
    CentralMarking m;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (lab[v] == Label::central)
            m.central_vertices.insert(v);
    for (const auto & e : g.edges())
        if (e.color == Color::one && lab[e.tail] == Label::zero && lab[e.head] == Label::one)
            m.central_1_edges.emplace(e.tail, e.head);
    return m;
}

}
