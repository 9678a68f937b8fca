#include "crystalcheck/enumerate.hpp"
#include "crystalcheck/error.hpp"
#include "crystalcheck/inference.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace crystalcheck;
using namespace crystalcheck::testing;

TEST_CASE("fixture labelings")
{
    // Expected words come from the test-side odometer oracle; they are
    // frozen here so a change in either side shows up.
    CHECK(oracle_labelings(single_vertex()) == std::vector<std::string>{"c"});
    CHECK(oracle_labelings(bare_edge()).empty());
    CHECK(oracle_labelings(path5()) == std::vector<std::string>{"c1c0c"});
    CHECK(oracle_labelings(chain4()) == std::vector<std::string>{"c01c"});

    for (auto g : {single_vertex(), bare_edge(), path5(), chain4()}) {
        CHECK(words(infer_labelings(g)) == oracle_labelings(g));
        CHECK(words(infer_labelings_exhaustive(g)) == oracle_labelings(g));
    }
}

TEST_CASE("several labelings come out in lexicographic order")
{
    // 2-string a -2-> b -2-> c plus 1-edges that let the central vertex move.
    auto g = make_graph({"a", "b", "c", "d", "e"}, {{"a", "b", 2}, {"b", "c", 2}, {"d", "a", 1}, {"c", "e", 1}});
    auto expected = oracle_labelings(g);
    auto got = words(infer_labelings(g));
    CHECK(got == expected);
    CHECK(std::is_sorted(got.begin(), got.end(), [](const std::string & x, const std::string & y) {
        auto rank = [](char ch) { return ch == '0' ? 0 : ch == 'c' ? 1 : 2; };
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
            [&](char p, char q) { return rank(p) < rank(q); });
    }));
}

TEST_CASE("propagation agrees with brute force on every graph up to 4 vertices")
{
    for (const auto & small : enumerate_graphs(GraphStream{4, GraphFilters{}, true})) {
        auto g = to_digraph(small);
        CHECK(words(infer_labelings(g)) == oracle_labelings(g));
    }
}

TEST_CASE("propagation agrees with brute force on random DAGs")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = random_b0_dag(rng, 6 + trial % 3, 0.8);
        CHECK(infer_labelings(g) == infer_labelings_exhaustive(g));
    }
}

TEST_CASE("parallel exhaustive search equals the serial reference")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = random_b0_dag(rng, 8 + trial % 3, 0.9);
        CHECK(infer_labelings_exhaustive(g) == infer_labelings_exhaustive_serial(g));
    }
}

TEST_CASE("preconditions")
{
    CHECK_THROWS_AS(infer_labelings(make_graph({"a", "b", "c"}, {{"a", "b", 1}, {"a", "c", 1}})), Error);
    CHECK_THROWS_AS(infer_labelings(make_graph({"a", "b"}, {{"a", "b", 1}, {"b", "a", 2}})), Error);
    std::vector<std::string> many;
    for (int i = 0; i < 21; ++i)
        many.push_back("n" + std::to_string(i));
    CHECK_THROWS_AS(infer_labelings_exhaustive(make_graph(many, {})), Error);
    // Propagation has no size limit: isolated vertices are forced to c.
    CHECK(infer_labelings(make_graph(many, {})).size() == 1);
}
