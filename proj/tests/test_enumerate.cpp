#include "crystalcheck/enumerate.hpp"
#include "crystalcheck/error.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace crystalcheck;
using namespace crystalcheck::testing;

namespace {

/// Every labeled graph on n vertices with the degree bound, straight from
/// adjacency bitmasks (independent of the library's structure generator).
auto all_labeled(int n, const GraphFilters & f) -> std::vector<SmallGraph>
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                pairs.emplace_back(i, j);
    std::vector<SmallGraph> out;
    const auto bits = 2 * pairs.size();
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << bits); ++m) {
        SmallGraph g{n, {}};
        for (std::size_t b = 0; b < bits; ++b)
            if (m >> b & 1U)
                g.add_edge(pairs[b % pairs.size()].first, pairs[b % pairs.size()].second,
                    b < pairs.size() ? Color::one : Color::two);
        if (passes(g, f))
            out.push_back(g);
    }
    return out;
}

auto isomorphism_classes(const std::vector<SmallGraph> & graphs) -> std::size_t
{
    std::vector<SmallGraph> reps;
    for (const auto & g : graphs)
        if (std::none_of(reps.begin(), reps.end(), [&](const SmallGraph & r) { return oracle_isomorphic(r, g); }))
            reps.push_back(g);
    return reps.size();
}

}

TEST_CASE("tiny streams")
{
    CHECK(enumerate_graphs(GraphStream{1, GraphFilters{}, true}).size() == 1);
    auto two = enumerate_order(2, GraphFilters{}, true);
    CHECK(two.size() == 3);
    CHECK(enumerate_order(3, GraphFilters{}, true).size() <= enumerate_order(3, GraphFilters{}, false).size());
}

TEST_CASE("canonical counts match isomorphism classes found by brute force")
{
    for (const auto & f : {GraphFilters{}, GraphFilters{true, true, false}, GraphFilters{true, false, true}}) {
        for (int n = 1; n <= 3; ++n) {
            auto labeled = all_labeled(n, f);
            CHECK(enumerate_order(n, f, false).size() == labeled.size());
            CHECK(enumerate_order(n, f, true).size() == isomorphism_classes(labeled));
        }
    }
    // n = 4 with every filter: 2^24 candidate bitmasks.
    auto labeled = all_labeled(4, GraphFilters{});
    CHECK(enumerate_order(4, GraphFilters{}, true).size() == isomorphism_classes(labeled));
}

TEST_CASE("canonical graphs are pairwise non-isomorphic")
{
    for (int n = 1; n <= 4; ++n) {
        auto graphs = enumerate_order(n, GraphFilters{}, true);
        for (std::size_t i = 0; i < graphs.size(); ++i)
            for (std::size_t j = i + 1; j < graphs.size(); ++j)
                CHECK_FALSE(oracle_isomorphic(graphs[i], graphs[j]));
    }
}

TEST_CASE("parallel kernel equals the serial reference")
{
    for (int n = 1; n <= 5; ++n)
        CHECK(enumerate_order(n, GraphFilters{}, true) == enumerate_order_serial(n, GraphFilters{}, true));
    for (int n = 1; n <= 4; ++n) {
        CHECK(enumerate_order(n, GraphFilters{}, false) == enumerate_order_serial(n, GraphFilters{}, false));
        CHECK(enumerate_order(n, GraphFilters{true, false, false}, true)
            == enumerate_order_serial(n, GraphFilters{true, false, false}, true));
    }
    for (int n = 1; n <= 3; ++n)
        CHECK(enumerate_order(n, GraphFilters{false, false, false}, true)
            == enumerate_order_serial(n, GraphFilters{false, false, false}, true));
}

TEST_CASE("stream properties")
{
    auto stream = GraphStream{5, GraphFilters{}, true};
    auto first = enumerate_graphs(stream);
    CHECK(first == enumerate_graphs(stream));
    for (const auto & g : first) {
        CHECK(passes(g, stream.filters));
        CHECK(encoding_key(g) == canonical_key(g));
    }
    for (std::size_t i = 1; i < first.size(); ++i)
        if (first[i].n == first[i - 1].n)
            CHECK(encoding_key(first[i - 1]) < encoding_key(first[i]));
}

TEST_CASE("canonical key is invariant under relabeling")
{
    std::mt19937 rng(9);
    auto graphs = enumerate_order(5, GraphFilters{}, true);
    for (int trial = 0; trial < 200; ++trial) {
        const auto & g = graphs[rng() % graphs.size()];
        std::vector<int> perm{0, 1, 2, 3, 4};
        std::shuffle(perm.begin(), perm.end(), rng);
        auto h = relabel(g, perm);
        CHECK(oracle_isomorphic(g, h));
        CHECK(canonical_key(h) == encoding_key(g));
        CHECK(canonical_form(h) == g);
    }
}

TEST_CASE("bit encoding")
{
    SmallGraph g{2, {}};
    g.add_edge(0, 1, Color::one);
    // pairs (0,1),(1,0) per color: color 1 = 10, color 2 = 00
    CHECK(encoding_key(g) == EncodingKey{0b1000});
    auto d = to_digraph(g);
    CHECK(d.name(0) == "v1");
    CHECK(d.edge(0) == Edge{0, 1, Color::one});
}

TEST_CASE("range errors")
{
    CHECK_THROWS_AS(enumerate_graphs(GraphStream{0, GraphFilters{}, true}), Error);
    CHECK_THROWS_AS(enumerate_graphs(GraphStream{9, GraphFilters{}, true}), Error);
    CHECK_THROWS_AS(enumerate_graphs(GraphStream{5, GraphFilters{false, true, true}, true}), Error);
}
