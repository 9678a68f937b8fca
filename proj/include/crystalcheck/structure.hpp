#pragma once

#include "crystalcheck/graph.hpp"
#include "crystalcheck/labels.hpp"
#include "crystalcheck/report.hpp"
#include "crystalcheck/strings.hpp"

#include <string_view>
#include <vector>

#include <json.hpp>

namespace crystalcheck {

enum class PredicateStatus { holds, fails, vacuous };

auto to_string(PredicateStatus s) -> std::string_view;

struct PredicateReport {
    std::string predicate;
    PredicateStatus status = PredicateStatus::vacuous;
    /// Instances checked when the predicate holds, offending instances when
    /// it fails.
    std::vector<Location> witnesses;
};

/// For every 1-edge (u,v) labeled (0,1): some 2-edge (u',u) with u' labeled
/// c, and some 2-edge (v,v') with v' labeled c. Requires check_local empty.
auto check_corollary2(const ColoredDigraph & g, const Labeling & lab) -> PredicateReport;

/// For every 1-edge (u,v) labeled (0,1) and every 2-edge (u,w): some 1-edge
/// (w,w') with w' labeled c. Witnesses are the 2-edges (u,w).
auto check_corollary3(const ColoredDigraph & g, const Labeling & lab) -> PredicateReport;

/// Label words along strings: 1-strings must read 0^a c 1^b or 0^a 1^b
/// (a,b >= 1), 2-strings 1^a c 0^b. Witnesses are the failing strings.
auto check_string_words(const StringDecomposition & strings, const Labeling & lab) -> PredicateReport;

/// Both colors at once.
auto check_string_words(const ColoredDigraph & g, const Labeling & lab) -> PredicateReport;

auto predicate_to_json(const ColoredDigraph & g, const PredicateReport & report) -> nlohmann::ordered_json;

}
