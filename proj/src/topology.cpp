#include "crystalcheck/topology.hpp"

#include <algorithm>
#include <numeric>

namespace crystalcheck {

auto find_potential(const ColoredDigraph & g) -> std::variant<Potential, CycleCertificate>
{
    const auto n = g.vertex_count();
    std::vector<std::size_t> indegree(n, 0);
    for (const auto & e : g.edges())
        ++indegree[e.head];

    std::vector<long> depth(n, 0);
    std::vector<Vertex> ready;
    for (Vertex v = n; v-- > 0;)
        if (indegree[v] == 0)
            ready.push_back(v);

    std::size_t done = 0;
    std::vector<bool> removed(n, false);
    while (! ready.empty()) {
        auto v = ready.back();
        ready.pop_back();
        removed[v] = true;
        ++done;
        for (auto c : all_colors)
            for (auto i : g.out_edges(v, c)) {
                auto h = g.edge(i).head;
                depth[h] = std::max(depth[h], depth[v] + 1);
                if (--indegree[h] == 0)
                    ready.push_back(h);
            }
    }

    if (done == n)
        return Potential{std::move(depth)};

    // Every remaining vertex has a remaining predecessor; walking back from
    // any of them must revisit a vertex.
    auto remaining_pred = [&](Vertex v) {
        Vertex best = ColoredDigraph::npos;
        for (auto c : all_colors)
            for (auto i : g.in_edges(v, c)) {
                auto t = g.edge(i).tail;
                if (! removed[t])
                    best = std::min(best, t);
            }
        return best;
    };

    Vertex start = 0;
    while (removed[start])
        ++start;
    std::vector<std::size_t> seen_at(n, ColoredDigraph::npos);
    std::vector<Vertex> walk;
    auto v = start;
    while (seen_at[v] == ColoredDigraph::npos) {
        seen_at[v] = walk.size();
        walk.push_back(v);
        v = remaining_pred(v);
    }
    std::vector<Vertex> cycle(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[v]), walk.end());
    std::reverse(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    cycle.push_back(cycle.front());
    return CycleCertificate{std::move(cycle)};
}

auto weak_components(const ColoredDigraph & g) -> std::vector<std::vector<Vertex>>
{
    const auto n = g.vertex_count();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto & e : g.edges()) {
        auto a = find(e.tail), b = find(e.head);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }

    std::vector<std::vector<Vertex>> components;
    std::vector<std::size_t> slot(n, ColoredDigraph::npos);
    for (Vertex v = 0; v < n; ++v) {
        auto r = find(v);
        if (slot[r] == ColoredDigraph::npos) {
            slot[r] = components.size();
            components.emplace_back();
        }
        components[slot[r]].push_back(v);
    }
    return components;
}

}
