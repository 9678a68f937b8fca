#include "crystalcheck/enumerate.hpp"
#include "crystalcheck/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <omp.h>

namespace crystalcheck {

namespace {

    using Perm = std::array<std::uint8_t, max_enumeration_vertices>;

    /// All permutations of 0..n-1 in lexicographic order, for n <= 8.
    auto permutations(int n) -> const std::vector<Perm> &
    {
        static const auto table = [] {
            std::array<std::vector<Perm>, max_enumeration_vertices + 1> t;
            for (int k = 0; k <= max_enumeration_vertices; ++k) {
                Perm p{};
                std::iota(p.begin(), p.begin() + k, 0);
                do
                    t[k].push_back(p);
                while (std::next_permutation(p.begin(), p.begin() + k));
            }
            return t;
        }();
        return table[n];
    }

    constexpr auto row(std::uint64_t adj, int v) -> unsigned { return (adj >> (8 * v)) & 0xFFU; }

    /// Encoding of one color's matrix after pulling back along t, i.e. of
    /// the graph whose edge i -> j exists iff t[i] -> t[j] does.
    auto color_key(std::uint64_t adj, int n, const Perm & t) -> std::uint64_t
    {
        std::uint64_t k = 0;
        for (int i = 0; i < n; ++i) {
            auto r = row(adj, t[i]);
            for (int j = 0; j < n; ++j)
                if (j != i)
                    k = (k << 1) | ((r >> t[j]) & 1U);
        }
        return k;
    }

    auto identity(int n) -> Perm
    {
        Perm p{};
        std::iota(p.begin(), p.begin() + n, 0);
        return p;
    }

    auto combine(std::uint64_t k1, std::uint64_t k2, int n) -> EncodingKey
    {
        return (EncodingKey{k1} << (n * (n - 1))) | k2;
    }

    auto pullback(const SmallGraph & g, const Perm & t) -> SmallGraph
    {
        SmallGraph out{g.n, {}};
        for (int c = 0; c < 2; ++c)
            for (int i = 0; i < g.n; ++i)
                for (int j = 0; j < g.n; ++j)
                    if (i != j && ((row(g.adjacency[c], t[i]) >> t[j]) & 1U))
                        out.adjacency[c] |= std::uint64_t{1} << (8 * i + j);
        return out;
    }

    /// True when no relabeling gives a smaller encoding.
    auto is_canonical_brute_force(const SmallGraph & g) -> bool
    {
        const auto own = encoding_key(g);
        for (const auto & t : permutations(g.n))
            if (combine(color_key(g.adjacency[0], g.n, t), color_key(g.adjacency[1], g.n, t), g.n) < own)
                return false;
        return true;
    }

    /// Every single-color edge set with in- and out-degree at most one and
    /// no self-loops; only linear forests when acyclic is set.
    auto color_structures(int n, bool acyclic) -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> out;
        std::array<int, max_enumeration_vertices> succ{};
        succ.fill(-1);
        auto closes_cycle = [&](int from, int to) {
            for (int u = to; u != -1; u = succ[u])
                if (u == from)
                    return true;
            return false;
        };
        auto rec = [&](auto & self, int v, unsigned used_heads, std::uint64_t mask) -> void {
            if (v == n) {
                out.push_back(mask);
                return;
            }
            succ[v] = -1;
            self(self, v + 1, used_heads, mask);
            for (int u = 0; u < n; ++u) {
                if (u == v || (used_heads >> u & 1U))
                    continue;
                if (acyclic && closes_cycle(v, u))
                    continue;
                succ[v] = u;
                self(self, v + 1, used_heads | (1U << u), mask | (std::uint64_t{1} << (8 * v + u)));
                succ[v] = -1;
            }
        };
        rec(rec, 0, 0, 0);
        return out;
    }

    /// Isomorphism classes of single-color structures, each given by its
    /// minimal-encoding representative together with that representative's
    /// automorphism group.
    struct ColorClass {
        std::uint64_t representative;
        std::vector<Perm> automorphisms;
    };

    auto color_classes(int n, bool acyclic) -> std::vector<ColorClass>
    {
        // A structure is a disjoint union of paths (>= 1 vertex) and, unless
        // acyclic, cycles (>= 2 vertices). Component codes: path of length L
        // is L, cycle of length L is n + L.
        std::vector<std::vector<int>> types;
        std::vector<int> current;
        auto size_of = [n](int code) { return code > n ? code - n : code; };
        auto rec = [&](auto & self, int remaining, int max_code) -> void {
            if (remaining == 0) {
                types.push_back(current);
                return;
            }
            for (int code = max_code; code >= 1; --code) {
                bool cycle = code > n;
                if (cycle && (acyclic || code - n < 2))
                    continue;
                if (size_of(code) > remaining)
                    continue;
                current.push_back(code);
                self(self, remaining - size_of(code), code);
                current.pop_back();
            }
        };
        rec(rec, n, 2 * n);

        const auto & perms = permutations(n);
        std::vector<ColorClass> classes;
        for (const auto & type : types) {
            std::uint64_t realized = 0;
            int base = 0;
            for (int code : type) {
                int len = size_of(code);
                for (int k = 0; k + 1 < len; ++k)
                    realized |= std::uint64_t{1} << (8 * (base + k) + base + k + 1);
                if (code > n)
                    realized |= std::uint64_t{1} << (8 * (base + len - 1) + base);
                base += len;
            }

            const Perm * best = &perms.front();
            auto best_key = color_key(realized, n, *best);
            for (const auto & t : perms)
                if (auto k = color_key(realized, n, t); k < best_key) {
                    best_key = k;
                    best = &t;
                }
            SmallGraph tmp{n, {realized, 0}};
            auto rep = pullback(tmp, *best).adjacency[0];

            ColorClass cls{rep, {}};
            const auto rep_key = color_key(rep, n, identity(n));
            for (const auto & t : perms)
                if (color_key(rep, n, t) == rep_key)
                    cls.automorphisms.push_back(t);
            classes.push_back(std::move(cls));
        }
        return classes;
    }

    void check_order(int n, const GraphFilters & filters)
    {
        if (n < 1 || n > max_enumeration_vertices)
            throw Error(ErrorKind::out_of_range, "max_vertices",
                "vertex count must be in [1, " + std::to_string(max_enumeration_vertices) + "], got " + std::to_string(n));
        if (! filters.degree_axiom && n > max_unrestricted_vertices)
            throw Error(ErrorKind::out_of_range, "max_vertices",
                "without the degree filter the vertex count must be in [1, "
                    + std::to_string(max_unrestricted_vertices) + "], got " + std::to_string(n));
    }

    auto sorted_by_key(std::vector<SmallGraph> graphs) -> std::vector<SmallGraph>
    {
        std::vector<std::pair<EncodingKey, SmallGraph>> keyed;
        keyed.reserve(graphs.size());
        for (const auto & g : graphs)
            keyed.emplace_back(encoding_key(g), g);
        std::sort(keyed.begin(), keyed.end(), [](const auto & a, const auto & b) { return a.first < b.first; });
        std::vector<SmallGraph> out;
        out.reserve(keyed.size());
        for (const auto & [k, g] : keyed)
            out.push_back(g);
        return out;
    }

    /// Adjacency bitmask walk, any edge set; only used without the degree filter.
    template <typename Emit>
    void for_each_unrestricted(int n, std::int64_t index, Emit && emit)
    {
        SmallGraph g{n, {}};
        int bit_pos = 0;
        for (int c = 0; c < 2; ++c)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (i != j) {
                        if ((index >> bit_pos) & 1)
                            g.adjacency[c] |= std::uint64_t{1} << (8 * i + j);
                        ++bit_pos;
                    }
        emit(g);
    }

    template <typename Body>
    auto collect_parallel(std::int64_t tasks, Body && body) -> std::vector<SmallGraph>
    {
        std::vector<std::vector<SmallGraph>> per_thread(static_cast<std::size_t>(omp_get_max_threads()));
#pragma omp parallel
        {
            auto & mine = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 512)
            for (std::int64_t t = 0; t < tasks; ++t)
                body(t, mine);
        }
        std::vector<SmallGraph> all;
        for (auto & part : per_thread)
            all.insert(all.end(), part.begin(), part.end());
        return all;
    }

}

auto encoding_key(const SmallGraph & g) -> EncodingKey
{
    const auto id = identity(g.n);
    return combine(color_key(g.adjacency[0], g.n, id), color_key(g.adjacency[1], g.n, id), g.n);
}

auto canonical_key(const SmallGraph & g) -> EncodingKey
{
    return encoding_key(canonical_form(g));
}

auto canonical_form(const SmallGraph & g) -> SmallGraph
{
    const auto & perms = permutations(g.n);
    const Perm * best = &perms.front();
    auto best_key = combine(color_key(g.adjacency[0], g.n, *best), color_key(g.adjacency[1], g.n, *best), g.n);
    for (const auto & t : perms)
        if (auto k = combine(color_key(g.adjacency[0], g.n, t), color_key(g.adjacency[1], g.n, t), g.n); k < best_key) {
            best_key = k;
            best = &t;
        }
    return pullback(g, *best);
}

auto relabel(const SmallGraph & g, const std::vector<int> & perm) -> SmallGraph
{
    SmallGraph out{g.n, {}};
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                if (i != j && ((row(g.adjacency[c], i) >> j) & 1U))
                    out.adjacency[c] |= std::uint64_t{1} << (8 * perm[i] + perm[j]);
    return out;
}

auto satisfies_degree_axiom(const SmallGraph & g) -> bool
{
    for (int c = 0; c < 2; ++c)
        for (int v = 0; v < g.n; ++v) {
            if (std::popcount(row(g.adjacency[c], v)) > 1)
                return false;
            int in = 0;
            for (int u = 0; u < g.n; ++u)
                in += (row(g.adjacency[c], u) >> v) & 1U;
            if (in > 1)
                return false;
        }
    return true;
}

auto is_acyclic(const SmallGraph & g) -> bool
{
    std::array<unsigned, max_enumeration_vertices> preds{};
    for (int u = 0; u < g.n; ++u) {
        auto out = row(g.adjacency[0], u) | row(g.adjacency[1], u);
        for (int v = 0; v < g.n; ++v)
            if (out >> v & 1U)
                preds[v] |= 1U << u;
    }
    unsigned remaining = (1U << g.n) - 1;
    while (remaining) {
        bool progressed = false;
        for (int v = 0; v < g.n; ++v)
            if ((remaining >> v & 1U) && (preds[v] & remaining) == 0) {
                remaining &= ~(1U << v);
                progressed = true;
            }
        if (! progressed)
            return false;
    }
    return true;
}

auto is_weakly_connected(const SmallGraph & g) -> bool
{
    std::array<unsigned, max_enumeration_vertices> nbrs{};
    for (int u = 0; u < g.n; ++u) {
        auto out = row(g.adjacency[0], u) | row(g.adjacency[1], u);
        nbrs[u] |= out;
        for (int v = 0; v < g.n; ++v)
            if (out >> v & 1U)
                nbrs[v] |= 1U << u;
    }
    unsigned seen = 1, frontier = 1;
    while (frontier) {
        unsigned next = 0;
        for (int v = 0; v < g.n; ++v)
            if (frontier >> v & 1U)
                next |= nbrs[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1U << g.n) - 1;
}

auto passes(const SmallGraph & g, const GraphFilters & filters) -> bool
{
    return (! filters.degree_axiom || satisfies_degree_axiom(g)) && (! filters.acyclic || is_acyclic(g))
        && (! filters.connected || is_weakly_connected(g));
}

auto to_digraph(const SmallGraph & g) -> ColoredDigraph
{
    std::vector<std::string> names;
    for (int v = 0; v < g.n; ++v)
        names.push_back("v" + std::to_string(v + 1));
    std::vector<Edge> edges;
    for (int t = 0; t < g.n; ++t)
        for (auto c : all_colors)
            for (int h = 0; h < g.n; ++h)
                if (g.has_edge(t, h, c))
                    edges.push_back({static_cast<Vertex>(t), static_cast<Vertex>(h), c});
    return ColoredDigraph::from_edges(std::move(names), std::move(edges));
}

auto enumerate_order(int n, const GraphFilters & filters, bool canonical) -> std::vector<SmallGraph>
{
    check_order(n, filters);

    if (! filters.degree_axiom) {
        const std::int64_t total = std::int64_t{1} << (2 * n * (n - 1));
        return sorted_by_key(collect_parallel(total, [&](std::int64_t t, std::vector<SmallGraph> & out) {
            for_each_unrestricted(n, t, [&](const SmallGraph & g) {
                if (passes(g, filters) && (! canonical || is_canonical_brute_force(g)))
                    out.push_back(g);
            });
        }));
    }

    const auto second = color_structures(n, filters.acyclic);
    const auto s2 = static_cast<std::int64_t>(second.size());

    if (! canonical) {
        const auto first = color_structures(n, filters.acyclic);
        return sorted_by_key(collect_parallel(
            static_cast<std::int64_t>(first.size()) * s2, [&](std::int64_t t, std::vector<SmallGraph> & out) {
                SmallGraph g{n, {first[static_cast<std::size_t>(t / s2)], second[static_cast<std::size_t>(t % s2)]}};
                if (passes(g, filters))
                    out.push_back(g);
            }));
    }

    // The canonical form's color-1 matrix is the minimal representative of
    // its class, and among relabelings fixing it (its automorphisms) the
    // color-2 matrix is minimal.
    const auto classes = color_classes(n, filters.acyclic);
    return sorted_by_key(collect_parallel(
        static_cast<std::int64_t>(classes.size()) * s2, [&](std::int64_t t, std::vector<SmallGraph> & out) {
            const auto & cls = classes[static_cast<std::size_t>(t / s2)];
            SmallGraph g{n, {cls.representative, second[static_cast<std::size_t>(t % s2)]}};
            if (! passes(g, filters))
                return;
            const auto own = color_key(g.adjacency[1], n, identity(n));
            for (const auto & a : cls.automorphisms)
                if (color_key(g.adjacency[1], n, a) < own)
                    return;
            out.push_back(g);
        }));
}

auto enumerate_order_serial(int n, const GraphFilters & filters, bool canonical) -> std::vector<SmallGraph>
{
    check_order(n, filters);

    // Straight from the definition: every labeled graph, filtered, kept if
    // no relabeling has a smaller encoding.
    std::vector<SmallGraph> out;
    auto consider = [&](const SmallGraph & g) {
        if (passes(g, filters) && (! canonical || is_canonical_brute_force(g)))
            out.push_back(g);
    };
    if (! filters.degree_axiom) {
        const std::int64_t total = std::int64_t{1} << (2 * n * (n - 1));
        for (std::int64_t t = 0; t < total; ++t)
            for_each_unrestricted(n, t, consider);
    }
    else {
        const auto structures = color_structures(n, filters.acyclic);
        for (auto a : structures)
            for (auto b : structures)
                consider(SmallGraph{n, {a, b}});
    }
    return sorted_by_key(std::move(out));
}

auto enumerate_graphs(const GraphStream & stream) -> std::vector<SmallGraph>
{
    check_order(stream.max_vertices, stream.filters);
    std::vector<SmallGraph> out;
    for (int n = 1; n <= stream.max_vertices; ++n) {
        auto part = enumerate_order(n, stream.filters, stream.canonical);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

auto enumerate_graphs_serial(const GraphStream & stream) -> std::vector<SmallGraph>
{
    check_order(stream.max_vertices, stream.filters);
    std::vector<SmallGraph> out;
    for (int n = 1; n <= stream.max_vertices; ++n) {
        auto part = enumerate_order_serial(n, stream.filters, stream.canonical);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}
