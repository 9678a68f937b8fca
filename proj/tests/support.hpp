// Test-only helpers: fixtures, random generators and brute-force oracles that
// do not go through the library code paths they are used to check.
#pragma once

#include "crystalcheck/enumerate.hpp"
#include "crystalcheck/graph.hpp"
#include "crystalcheck/labels.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace crystalcheck::testing {

inline auto make_graph(std::vector<std::string> names, std::vector<ColoredDigraph::NamedEdge> edges) -> ColoredDigraph
{
    return ColoredDigraph::build(std::move(names), edges);
}

/// v1 -1-> v2 -2-> v3 -2-> v4 -1-> v5
inline auto path5() -> ColoredDigraph
{
    return make_graph({"v1", "v2", "v3", "v4", "v5"},
        {{"v1", "v2", 1}, {"v2", "v3", 2}, {"v3", "v4", 2}, {"v4", "v5", 1}});
}

/// u' -2-> u -1-> v -2-> v'
inline auto chain4() -> ColoredDigraph
{
    return make_graph({"u'", "u", "v", "v'"}, {{"u'", "u", 2}, {"u", "v", 1}, {"v", "v'", 2}});
}

inline auto single_vertex() -> ColoredDigraph { return make_graph({"a"}, {}); }

inline auto bare_edge() -> ColoredDigraph { return make_graph({"u", "v"}, {{"u", "v", 1}}); }

/// Labeling validity typed in directly from the allowed-pair lists and the
/// endpoint rules, written without the library's tables.
inline auto oracle_is_valid(const ColoredDigraph & g, const std::vector<char> & lab) -> bool
{
    static const std::set<std::string> pairs_1{"00", "0c", "01", "c1", "11"};
    static const std::set<std::string> pairs_2{"11", "1c", "c0", "00"};
    std::vector<int> in1(g.vertex_count()), out1(g.vertex_count()), in2(g.vertex_count()), out2(g.vertex_count());
    for (const auto & e : g.edges()) {
        std::string p{lab[e.tail], lab[e.head]};
        if (e.color == Color::one) {
            if (! pairs_1.contains(p))
                return false;
            ++out1[e.tail];
            ++in1[e.head];
        }
        else {
            if (! pairs_2.contains(p))
                return false;
            ++out2[e.tail];
            ++in2[e.head];
        }
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (! in1[v] && lab[v] == '1')
            return false;
        if (! out1[v] && lab[v] == '0')
            return false;
        if (! in2[v] && lab[v] == '0')
            return false;
        if (! out2[v] && lab[v] == '1')
            return false;
    }
    return true;
}

/// All valid label words by odometer over {0,c,1}^n, lexicographic with
/// 0 < c < 1.
inline auto oracle_labelings(const ColoredDigraph & g) -> std::vector<std::string>
{
    const std::string alphabet = "0c1";
    std::vector<std::string> out;
    std::vector<int> digits(g.vertex_count(), 0);
    while (true) {
        std::vector<char> lab;
        for (int d : digits)
            lab.push_back(alphabet[d]);
        if (oracle_is_valid(g, lab))
            out.emplace_back(lab.begin(), lab.end());
        int k = static_cast<int>(digits.size()) - 1;
        while (k >= 0 && digits[k] == 2)
            digits[k--] = 0;
        if (k < 0)
            break;
        ++digits[k];
    }
    return out;
}

inline auto words(const std::vector<Labeling> & labs) -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (const auto & l : labs)
        out.push_back(l.word());
    return out;
}

/// Three-color depth-first search.
inline auto oracle_has_cycle(const ColoredDigraph & g) -> bool
{
    std::vector<int> state(g.vertex_count(), 0);
    auto visit = [&](auto & self, Vertex v) -> bool {
        state[v] = 1;
        for (const auto & e : g.edges()) {
            if (e.tail != v)
                continue;
            if (state[e.head] == 1)
                return true;
            if (state[e.head] == 0 && self(self, e.head))
                return true;
        }
        state[v] = 2;
        return false;
    };
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (state[v] == 0 && visit(visit, v))
            return true;
    return false;
}

/// Color- and direction-preserving isomorphism by trying every bijection.
inline auto oracle_isomorphic(const SmallGraph & a, const SmallGraph & b) -> bool
{
    if (a.n != b.n)
        return false;
    std::vector<int> p(a.n);
    for (int i = 0; i < a.n; ++i)
        p[i] = i;
    do {
        bool ok = true;
        for (auto c : all_colors)
            for (int i = 0; i < a.n && ok; ++i)
                for (int j = 0; j < a.n && ok; ++j)
                    if (i != j && a.has_edge(i, j, c) != b.has_edge(p[i], p[j], c))
                        ok = false;
        if (ok)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Random graph with in/out degree at most one per color and no directed
/// cycle: edges only go forward in a random topological order.
inline auto random_b0_dag(std::mt19937 & rng, int n, double density = 0.7) -> ColoredDigraph
{
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution take(density);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back("x" + std::to_string(i));
    std::vector<Edge> edges;
    for (auto c : all_colors) {
        std::vector<bool> has_in(n, false);
        for (int a = 0; a < n; ++a) {
            if (! take(rng))
                continue;
            std::vector<int> candidates;
            for (int b = a + 1; b < n; ++b)
                if (! has_in[order[b]])
                    candidates.push_back(order[b]);
            if (candidates.empty())
                continue;
            auto h = candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)];
            has_in[h] = true;
            edges.push_back({static_cast<Vertex>(order[a]), static_cast<Vertex>(h), c});
        }
    }
    return ColoredDigraph::from_edges(std::move(names), std::move(edges));
}

/// Random sparse graph plus a directed cycle through a random vertex subset.
/// Degree bounds are not respected.
inline auto random_with_cycle(std::mt19937 & rng, int n) -> ColoredDigraph
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back("y" + std::to_string(i));
    std::set<std::tuple<int, int, int>> edges;
    std::uniform_int_distribution<int> vertex(0, n - 1), color(1, 2);
    std::bernoulli_distribution inject(0.9);
    for (int k = 0; k < n; ++k) {
        int a = vertex(rng), b = vertex(rng);
        if (a < b)
            edges.emplace(a, b, color(rng));
    }
    if (inject(rng)) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i)
            perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        int len = std::uniform_int_distribution<int>(2, n)(rng);
        for (int i = 0; i < len; ++i)
            edges.emplace(perm[i], perm[(i + 1) % len], color(rng));
    }
    std::vector<Edge> list;
    for (auto [a, b, c] : edges)
        list.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), c == 1 ? Color::one : Color::two});
    return ColoredDigraph::from_edges(std::move(names), std::move(list));
}

}
