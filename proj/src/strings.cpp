#include "crystalcheck/strings.hpp"
#include "crystalcheck/error.hpp"

namespace crystalcheck {

auto check_degree_axiom(const ColoredDigraph & g) -> ViolationReport
{
    std::vector<Violation> found;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (auto c : all_colors) {
            auto cn = std::to_string(color_number(c));
            if (auto k = g.out_edges(v, c).size(); k > 1)
                found.push_back({"B0", VertexLocation{v}, "color " + cn + " out-degree " + std::to_string(k)});
            if (auto k = g.in_edges(v, c).size(); k > 1)
                found.push_back({"B0", VertexLocation{v}, "color " + cn + " in-degree " + std::to_string(k)});
        }
    return ViolationReport(std::move(found));
}

auto decompose_strings(const ColoredDigraph & g, Color color) -> StringDecomposition
{
    const auto n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        if (g.out_edges(v, color).size() > 1 || g.in_edges(v, color).size() > 1)
            throw Error(ErrorKind::degree_axiom_violated, g.name(v),
                "vertex '" + g.name(v) + "' has more than one " + std::to_string(color_number(color))
                    + "-edge in one direction");

    StringDecomposition d{color, {}, std::vector<std::size_t>(n, ColoredDigraph::npos), std::vector<std::size_t>(n, 0)};
    for (Vertex v = 0; v < n; ++v) {
        if (g.predecessor(v, color) != ColoredDigraph::npos)
            continue;
        std::vector<Vertex> s;
        for (auto u = v; u != ColoredDigraph::npos; u = g.successor(u, color)) {
            d.string_of[u] = d.strings.size();
            d.position_of[u] = s.size();
            s.push_back(u);
        }
        d.strings.push_back(std::move(s));
    }

    // Anything left over lies on a cycle of this color.
    for (Vertex v = 0; v < n; ++v)
        if (d.string_of[v] == ColoredDigraph::npos) {
            std::string cycle = g.name(v);
            for (auto u = g.successor(v, color); u != v; u = g.successor(u, color))
                cycle += " -> " + g.name(u);
            throw Error(ErrorKind::monochromatic_cycle, g.name(v),
                std::to_string(color_number(color)) + "-edges form a cycle: " + cycle + " -> " + g.name(v));
        }

    // Strings start at sources visited in declared order, so they are
    // already listed by first vertex.
    return d;
}

}
