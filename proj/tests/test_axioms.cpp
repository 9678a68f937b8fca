#include "crystalcheck/axioms.hpp"
#include "crystalcheck/enumerate.hpp"
#include "crystalcheck/error.hpp"
#include "crystalcheck/inference.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace crystalcheck;
using namespace crystalcheck::testing;

namespace {

auto marking(std::set<Vertex> vs, std::set<std::pair<Vertex, Vertex>> es = {}) -> CentralMarking
{
    return CentralMarking{std::move(vs), std::move(es)};
}

auto clauses(const ViolationReport & r) -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (const auto & v : r.entries())
        out.push_back(v.clause);
    return out;
}

}

TEST_CASE("global axioms on the 5-path")
{
    auto g = path5();
    CHECK(check_global(g, marking({0, 2, 4})).empty());

    auto r = check_global(g, marking({2}));
    // 1-strings [v1,v2] and [v4,v5] have no central element; the 2-strings
    // [v1] and [v5] have no central vertex.
    CHECK(r.count("B1") == 2);
    CHECK(r.count("B2") == 2);
    CHECK(r.entries()[0].at == Location{VertexLocation{0}});
    CHECK(r.entries()[0].detail.find("[v1,v2] has 0 central") != std::string::npos);
}

TEST_CASE("global axioms, other cases")
{
    CHECK(check_global(single_vertex(), marking({0})).empty());
    CHECK(check_global(single_vertex(), marking({})).count("B1") == 1);

    auto chain = chain4();
    CHECK(check_global(chain, marking({0, 3}, {{1, 2}})).empty());

    // A central vertex and a central edge on the same 1-string count as two.
    auto r = check_global(chain, marking({0, 1, 3}, {{1, 2}}));
    CHECK(r.count("B1") == 1);

    // x -1-> z, x -2-> y with y and z central: x is left but precedes y on
    // the 2-string [x,y].
    auto order = make_graph({"x", "y", "z"}, {{"x", "z", 1}, {"x", "y", 2}});
    auto ordered = check_global(order, marking({1, 2}));
    REQUIRE(ordered.size() == 1);
    CHECK(ordered.entries()[0].clause == "B2");
    CHECK(ordered.entries()[0].at == Location{VertexLocation{0}});
    CHECK(ordered.entries()[0].detail == "precedes central vertex y on its 2-string but is left");

    CHECK_THROWS_AS(check_global(chain, marking({9})), Error);
    CHECK_THROWS_AS(check_global(chain, marking({}, {{0, 1}})), Error);  // a 2-edge
    auto cyclic = make_graph({"a", "b"}, {{"a", "b", 1}, {"b", "a", 2}});
    CHECK_THROWS_AS(check_global(cyclic, marking({})), Error);
}

TEST_CASE("vertex classification")
{
    auto g = make_graph({"v1", "v2"}, {{"v1", "v2", 1}});
    auto d = decompose_strings(g, Color::one);
    CHECK(classify_vertices(d, marking({0})) == std::vector<VertexClass>{VertexClass::central, VertexClass::right});
    CHECK(classify_vertices(d, marking({}, {{0, 1}})) == std::vector<VertexClass>{VertexClass::left, VertexClass::right});
    CHECK(classify_vertices(decompose_strings(single_vertex(), Color::one), marking({0}))
        == std::vector<VertexClass>{VertexClass::central});
    CHECK_THROWS_AS(classify_vertices(d, marking({})), Error);
    CHECK_THROWS_AS(classify_vertices(d, marking({0}, {{0, 1}})), Error);

    auto long_string = make_graph({"a", "b", "c", "d", "e"}, {{"a", "b", 1}, {"b", "c", 1}, {"c", "d", 1}, {"d", "e", 1}});
    auto ld = decompose_strings(long_string, Color::one);
    using enum VertexClass;
    CHECK(classify_vertices(ld, marking({2})) == std::vector<VertexClass>{left, left, central, right, right});
    CHECK(classify_vertices(ld, marking({}, {{1, 2}})) == std::vector<VertexClass>{left, left, right, right, right});
}

TEST_CASE("local axioms")
{
    auto edge = bare_edge();
    auto r = check_local(edge, labeling_from_word("cc"));
    CHECK(r.count("B1(i)") == 1);

    auto lone = single_vertex();
    CHECK(check_local(lone, labeling_from_word("c")).empty());
    auto zero = check_local(lone, labeling_from_word("0"));
    CHECK(clauses(zero) == std::vector<std::string>{"B1(ii)", "B2(ii)"});
    CHECK(zero.entries()[0].detail == "no leaving 1-edge but labeled 0");
    CHECK(zero.entries()[1].detail == "no entering 2-edge but labeled 0");
    CHECK(clauses(check_local(lone, labeling_from_word("1"))) == std::vector<std::string>{"B1(ii)", "B2(ii)"});

    CHECK(check_local(path5(), labeling_from_word("c1c0c")).empty());
    CHECK_THROWS_AS(check_local(path5(), labeling_from_word("c1c0")), Error);

    // One entry per clause instance, vertices before edges.
    auto many = check_local(path5(), labeling_from_word("11111"));
    CHECK(many.size() >= 3);
    CHECK(std::holds_alternative<VertexLocation>(many.entries().front().at));
}

TEST_CASE("allowed pair tables match the axiom lists exactly")
{
    using enum Label;
    std::set<std::pair<Label, Label>> first, second;
    for (auto a : all_labels)
        for (auto b : all_labels) {
            if (allowed_pair(Color::one, a, b))
                first.emplace(a, b);
            if (allowed_pair(Color::two, a, b))
                second.emplace(a, b);
        }
    CHECK(first == std::set<std::pair<Label, Label>>{{zero, zero}, {zero, central}, {zero, one}, {central, one}, {one, one}});
    CHECK(second == std::set<std::pair<Label, Label>>{{one, one}, {one, central}, {central, zero}, {zero, zero}});
}

TEST_CASE("edge classification")
{
    auto g = make_graph({"a", "b", "c", "d"}, {{"a", "b", 1}, {"c", "d", 2}, {"b", "c", 1}});
    auto cls = classify_edges(g, labeling_from_word("011c"));
    CHECK(cls[0] == EdgeClass::central);
    CHECK(cls[1] == EdgeClass::right);  // (1,c) on a 2-edge
    CHECK(cls[2] == EdgeClass::right);  // (1,1) on a 1-edge
    CHECK(classify_edges(g, labeling_from_word("00c0"))[0] == EdgeClass::left);
    CHECK(classify_edges(g, labeling_from_word("00c0"))[1] == EdgeClass::left);
    CHECK_THROWS_AS(classify_edges(bare_edge(), labeling_from_word("cc")), Error);
}

TEST_CASE("marking and labeling conversions on fixtures")
{
    auto g = path5();
    CHECK(labels_from_marking(g, marking({0, 2, 4})).word() == "c1c0c");
    CHECK(marking_from_labels(g, labeling_from_word("c1c0c")) == marking({0, 2, 4}));

    CHECK(labels_from_marking(single_vertex(), marking({0})).word() == "c");
    CHECK(marking_from_labels(single_vertex(), labeling_from_word("c")) == marking({0}));

    auto chain = chain4();
    CHECK(labels_from_marking(chain, marking({0, 3}, {{1, 2}})).word() == "c01c");
    CHECK(marking_from_labels(chain, labeling_from_word("c01c")) == marking({0, 3}, {{1, 2}}));

    CHECK_THROWS_AS(labels_from_marking(g, marking({2})), Error);
    CHECK_THROWS_AS(marking_from_labels(bare_edge(), labeling_from_word("cc")), Error);
}

TEST_CASE("conversion properties over every small graph")
{
    const auto graphs = enumerate_graphs(GraphStream{4, GraphFilters{}, true});
    std::size_t labelings_seen = 0;
    for (const auto & small : graphs) {
        auto g = to_digraph(small);
        for (const auto & lab : infer_labelings_exhaustive(g)) {
            ++labelings_seen;
            auto m = marking_from_labels(g, lab);
            CHECK(check_global(g, m).empty());
            CHECK(labels_from_marking(g, m) == lab);

            // Global left/right on non-central 1-edges matches the label classes.
            auto strings_1 = decompose_strings(g, Color::one);
            auto vcls = classify_vertices(strings_1, m);
            auto ecls = classify_edges(g, lab);
            for (std::size_t i = 0; i < g.edge_count(); ++i) {
                const auto & e = g.edge(i);
                if (e.color != Color::one)
                    continue;
                if (m.central_1_edges.contains({e.tail, e.head}))
                    CHECK(ecls[i] == EdgeClass::central);
                else if (vcls[e.tail] == VertexClass::left)
                    CHECK(ecls[i] == EdgeClass::left);
                else if (vcls[e.head] == VertexClass::right)
                    CHECK(ecls[i] == EdgeClass::right);
                else
                    FAIL("1-edge neither left nor right");
            }
        }
    }
    CHECK(labelings_seen > 0);
}
