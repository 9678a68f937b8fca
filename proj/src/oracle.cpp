#include "crystalcheck/oracle.hpp"
#include "crystalcheck/axioms.hpp"
#include "crystalcheck/document.hpp"
#include "crystalcheck/error.hpp"
#include "crystalcheck/inference.hpp"
#include "crystalcheck/strings.hpp"
#include "crystalcheck/structure.hpp"
#include "crystalcheck/topology.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <sstream>

#include <omp.h>

namespace crystalcheck {

namespace {

    constexpr std::size_t max_markable_elements = 24;

    auto marking_text(const ColoredDigraph & g, const CentralMarking & m) -> std::string
    {
        Document d{g, std::nullopt, name_centers(g, m)};
        return serialize_document(d);
    }

    auto labeling_text(const ColoredDigraph & g, const Labeling & lab) -> std::string
    {
        Document d{g, name_labels(g, lab), std::nullopt};
        return serialize_document(d);
    }

    /// What one census graph contributes.
    struct GraphOutcome {
        std::size_t labelings = 0;
        std::size_t markings = 0;
        bool proposition_ok = true;
        std::string proposition_detail;
        PredicateTally corollary2;
        PredicateTally corollary3;
        std::vector<std::string> corollary2_failures;
        std::vector<std::string> corollary3_failures;
    };

    void tally(PredicateTally & t, PredicateStatus s)
    {
        switch (s) {
            case PredicateStatus::holds: ++t.holds; break;
            case PredicateStatus::fails: ++t.fails; break;
            case PredicateStatus::vacuous: ++t.vacuous; break;
        }
    }

    auto examine(const SmallGraph & small) -> GraphOutcome
    {
        auto g = to_digraph(small);
        GraphOutcome out;
        auto prop = check_proposition(g);
        out.labelings = prop.labelings;
        out.markings = prop.markings;
        out.proposition_ok = prop.holds && prop.labelings == prop.markings;
        if (! out.proposition_ok)
            out.proposition_detail = serialize_graph(g) + " " + prop.detail;

        for (const auto & lab : infer_labelings_exhaustive_serial(g)) {
            auto c2 = check_corollary2(g, lab);
            auto c3 = check_corollary3(g, lab);
            tally(out.corollary2, c2.status);
            tally(out.corollary3, c3.status);
            if (c2.status == PredicateStatus::fails)
                out.corollary2_failures.push_back(labeling_text(g, lab));
            if (c3.status == PredicateStatus::fails)
                out.corollary3_failures.push_back(labeling_text(g, lab));
        }
        return out;
    }

    void add(PredicateTally & into, const PredicateTally & from)
    {
        into.holds += from.holds;
        into.fails += from.fails;
        into.vacuous += from.vacuous;
    }

}

auto check_proposition(const ColoredDigraph & g) -> PropositionResult
{
    if (! check_degree_axiom(g).empty())
        throw Error(ErrorKind::degree_axiom_violated, "edges", "graph violates the degree axiom");
    if (std::holds_alternative<CycleCertificate>(find_potential(g)))
        throw Error(ErrorKind::graph_cyclic, "edges", "graph has a directed cycle");

    std::vector<std::pair<Vertex, Vertex>> edges_1;
    for (const auto & e : g.edges())
        if (e.color == Color::one)
            edges_1.emplace_back(e.tail, e.head);
    const auto n = g.vertex_count();
    const auto elements = n + edges_1.size();
    if (elements > max_markable_elements)
        throw Error(ErrorKind::out_of_range, "vertices",
            "too many markable elements for brute force (" + std::to_string(elements) + ")");

    const auto strings_1 = decompose_strings(g, Color::one);
    const auto strings_2 = decompose_strings(g, Color::two);

    std::vector<CentralMarking> markings;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << elements); ++mask) {
        CentralMarking m;
        for (std::size_t b = 0; b < elements; ++b)
            if (mask >> b & 1U) {
                if (b < n)
                    m.central_vertices.insert(b);
                else
                    m.central_1_edges.insert(edges_1[b - n]);
            }
        if (check_global(g, strings_1, strings_2, m).empty())
            markings.push_back(std::move(m));
    }

    const auto labelings = infer_labelings_exhaustive_serial(g);

    PropositionResult r;
    r.markings = markings.size();
    r.labelings = labelings.size();

    auto fail = [&](std::string detail) {
        r.holds = false;
        r.detail = std::move(detail);
        return r;
    };

    std::vector<Labeling> images;
    for (const auto & m : markings) {
        auto lab = labels_from_marking(g, m);
        if (! satisfies_local(g, lab)) {
            r.witness_marking = m;
            return fail("image of marking " + marking_text(g, m) + " violates the local axioms");
        }
        if (marking_from_labels(g, lab) != m) {
            r.witness_marking = m;
            return fail("marking " + marking_text(g, m) + " is not recovered from its labeling");
        }
        images.push_back(std::move(lab));
    }
    std::sort(images.begin(), images.end());
    if (auto dup = std::adjacent_find(images.begin(), images.end()); dup != images.end()) {
        r.witness_labeling = *dup;
        return fail("two markings map to labeling " + labeling_text(g, *dup));
    }
    for (const auto & lab : labelings) {
        if (! std::binary_search(images.begin(), images.end(), lab)) {
            r.witness_labeling = lab;
            return fail("labeling " + labeling_text(g, lab) + " is not the image of any valid marking");
        }
        auto m = marking_from_labels(g, lab);
        if (! check_global(g, strings_1, strings_2, m).empty()) {
            r.witness_labeling = lab;
            return fail("marking read off labeling " + labeling_text(g, lab) + " violates the global axioms");
        }
    }
    if (images.size() != labelings.size())
        return fail("a valid marking maps outside the valid labelings");
    return r;
}

auto census(const CensusOptions & options) -> CensusResult
{
    if (options.max_vertices < 1 || options.max_vertices > 6)
        throw Error(ErrorKind::out_of_range, "max_vertices",
            "census vertex count must be in [1, 6], got " + std::to_string(options.max_vertices));

    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto over_budget = [&] {
        return options.budget_seconds > 0
            && std::chrono::duration<double>(clock::now() - start).count() > options.budget_seconds;
    };
    auto budget_error = [&] {
        return Error(ErrorKind::budget_exceeded, "census",
            "census exceeded its budget of " + std::to_string(options.budget_seconds) + " s");
    };

    CensusResult result;
    const GraphFilters all_filters{};
    for (int n = 1; n <= options.max_vertices; ++n) {
        auto graphs = options.parallel ? enumerate_order(n, all_filters, true)
                                       : enumerate_order_serial(n, all_filters, true);
        if (over_budget())
            throw budget_error();
        if (options.on_graph)
            for (const auto & g : graphs)
                options.on_graph(g);

        const auto count = static_cast<std::int64_t>(graphs.size());
        std::vector<GraphOutcome> outcomes(graphs.size());
        std::atomic<bool> stop{false};
#pragma omp parallel for schedule(dynamic, 16) if (options.parallel)
        for (std::int64_t i = 0; i < count; ++i) {
            if (stop.load(std::memory_order_relaxed))
                continue;
            outcomes[static_cast<std::size_t>(i)] = examine(graphs[static_cast<std::size_t>(i)]);
            if ((i & 63) == 0 && over_budget())
                stop = true;
        }
        if (stop || over_budget())
            throw budget_error();

        CensusRow row{n, graphs.size(), 0, 0, 0};
        for (const auto & o : outcomes) {
            row.graphs_with_labeling += o.labelings > 0 ? 1 : 0;
            row.labelings += o.labelings;
            row.markings += o.markings;
            add(result.corollary2, o.corollary2);
            add(result.corollary3, o.corollary3);
            for (const auto & w : o.corollary2_failures)
                if (result.corollary2_failures.size() < CensusResult::max_recorded_witnesses)
                    result.corollary2_failures.push_back(w);
            for (const auto & w : o.corollary3_failures)
                if (result.corollary3_failures.size() < CensusResult::max_recorded_witnesses)
                    result.corollary3_failures.push_back(w);
            if (! o.proposition_ok)
                result.proposition_failures.push_back(o.proposition_detail);
        }
        if (row.labelings != row.markings)
            result.proposition_failures.push_back("order " + std::to_string(n) + ": labeling and marking totals differ");
        result.rows.push_back(row);
    }
    return result;
}

auto census_csv(const std::vector<CensusRow> & rows) -> std::string
{
    std::ostringstream out;
    out << "n,graphs,graphs_with_labeling,labelings,markings\n";
    for (const auto & r : rows)
        out << r.n << ',' << r.graphs << ',' << r.graphs_with_labeling << ',' << r.labelings << ',' << r.markings << '\n';
    return out.str();
}

}
