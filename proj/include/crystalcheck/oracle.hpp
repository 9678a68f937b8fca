#pragma once

#include "crystalcheck/enumerate.hpp"
#include "crystalcheck/graph.hpp"
#include "crystalcheck/labels.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace crystalcheck {

struct PropositionResult {
    bool holds = true;
    std::size_t markings = 0;
    std::size_t labelings = 0;
    std::optional<CentralMarking> witness_marking;
    std::optional<Labeling> witness_labeling;
    std::string detail;
};

/// Brute-force check that marking -> labels_from_marking is a bijection from
/// the markings passing check_global onto the labelings passing check_local,
/// with inverse marking_from_labels. Markings range over all subsets of
/// vertices and 1-edges; labelings over all of {0,c,1}^V.
///
/// Requires the degree axiom and acyclicity. Throws out_of_range when
/// |V| + |E1| > 24.
auto check_proposition(const ColoredDigraph & g) -> PropositionResult;

struct CensusRow {
    int n = 0;
    std::size_t graphs = 0;
    std::size_t graphs_with_labeling = 0;
    std::size_t labelings = 0;
    std::size_t markings = 0;

    friend auto operator==(const CensusRow &, const CensusRow &) -> bool = default;
};

struct PredicateTally {
    std::size_t holds = 0;
    std::size_t fails = 0;
    std::size_t vacuous = 0;

    friend auto operator==(const PredicateTally &, const PredicateTally &) -> bool = default;
};

struct CensusOptions {
    int max_vertices = 5;
    /// Wall-clock cap in seconds; zero or negative means none.
    double budget_seconds = 0;
    bool parallel = true;
    /// Called for each emitted graph in stream order.
    std::function<void(const SmallGraph &)> on_graph;
};

struct CensusResult {
    std::vector<CensusRow> rows;
    /// Tallied over every valid labeling of every graph.
    PredicateTally corollary2;
    PredicateTally corollary3;
    /// Documents (graph + labels) where a corollary predicate fails; at most
    /// max_recorded_witnesses of each, in stream order.
    std::vector<std::string> corollary2_failures;
    std::vector<std::string> corollary3_failures;
    /// Graphs where check_proposition failed or the row counts disagree.
    std::vector<std::string> proposition_failures;

    static constexpr std::size_t max_recorded_witnesses = 16;
};

/// One row per order 1..max_vertices over canonical graphs with every filter
/// on. Throws out_of_range outside [1, 6] and budget_exceeded when the cap
/// is hit.
auto census(const CensusOptions & options) -> CensusResult;

/// Header `n,graphs,graphs_with_labeling,labelings,markings`, one line per row.
auto census_csv(const std::vector<CensusRow> & rows) -> std::string;

}
