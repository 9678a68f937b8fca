#include "crystalcheck/structure.hpp"
#include "crystalcheck/axioms.hpp"
#include "crystalcheck/error.hpp"

#include <regex>

namespace crystalcheck {

namespace {

    void require_local(const ColoredDigraph & g, const Labeling & lab)
    {
        if (! satisfies_local(g, lab))
            throw Error(ErrorKind::precondition, "labels", "labeling does not satisfy the local axioms");
    }

    auto central_1_edges(const ColoredDigraph & g, const Labeling & lab) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            const auto & e = g.edge(i);
            if (e.color == Color::one && lab[e.tail] == Label::zero && lab[e.head] == Label::one)
                out.push_back(i);
        }
        return out;
    }

    auto settle(PredicateReport & r, std::size_t instances, std::vector<Location> checked, std::vector<Location> failed)
    {
        if (instances == 0)
            r.status = PredicateStatus::vacuous;
        else if (failed.empty()) {
            r.status = PredicateStatus::holds;
            r.witnesses = std::move(checked);
        }
        else {
            r.status = PredicateStatus::fails;
            r.witnesses = std::move(failed);
        }
    }

}

auto to_string(PredicateStatus s) -> std::string_view
{
    switch (s) {
        case PredicateStatus::holds: return "holds";
        case PredicateStatus::fails: return "fails";
        case PredicateStatus::vacuous: return "vacuous";
    }
    return "?";
}

auto check_corollary2(const ColoredDigraph & g, const Labeling & lab) -> PredicateReport
{
    require_local(g, lab);
    PredicateReport r{"corollary2", PredicateStatus::vacuous, {}};
    std::vector<Location> checked, failed;
    const auto central = central_1_edges(g, lab);
    for (auto i : central) {
        const auto & e = g.edge(i);
        bool before = false, after = false;
        for (auto k : g.in_edges(e.tail, Color::two))
            before = before || lab[g.edge(k).tail] == Label::central;
        for (auto k : g.out_edges(e.head, Color::two))
            after = after || lab[g.edge(k).head] == Label::central;
        checked.push_back(EdgeLocation{i});
        if (! (before && after))
            failed.push_back(EdgeLocation{i});
    }
    settle(r, central.size(), std::move(checked), std::move(failed));
    return r;
}

auto check_corollary3(const ColoredDigraph & g, const Labeling & lab) -> PredicateReport
{
    require_local(g, lab);
    PredicateReport r{"corollary3", PredicateStatus::vacuous, {}};
    std::vector<Location> checked, failed;
    std::size_t instances = 0;
    for (auto i : central_1_edges(g, lab)) {
        for (auto k : g.out_edges(g.edge(i).tail, Color::two)) {
            ++instances;
            auto w = g.edge(k).head;
            bool ok = false;
            for (auto j : g.out_edges(w, Color::one))
                ok = ok || lab[g.edge(j).head] == Label::central;
            checked.push_back(EdgeLocation{k});
            if (! ok)
                failed.push_back(EdgeLocation{k});
        }
    }
    settle(r, instances, std::move(checked), std::move(failed));
    return r;
}

auto check_string_words(const StringDecomposition & strings, const Labeling & lab) -> PredicateReport
{
    static const std::regex words_1("0*c1*|0+1+");
    static const std::regex words_2("1*c0*");
    const auto & pattern = strings.color == Color::one ? words_1 : words_2;

    PredicateReport r{"string-words", PredicateStatus::holds, {}};
    for (const auto & s : strings.strings) {
        std::string word;
        for (auto v : s)
            word.push_back(label_char(lab[v]));
        if (! std::regex_match(word, pattern)) {
            r.status = PredicateStatus::fails;
            r.witnesses.push_back(StringLocation{strings.color, s});
        }
    }
    if (strings.strings.empty())
        r.status = PredicateStatus::vacuous;
    return r;
}

auto check_string_words(const ColoredDigraph & g, const Labeling & lab) -> PredicateReport
{
    auto r = check_string_words(decompose_strings(g, Color::one), lab);
    auto r2 = check_string_words(decompose_strings(g, Color::two), lab);
    if (r2.status == PredicateStatus::fails)
        r.status = PredicateStatus::fails;
    r.witnesses.insert(r.witnesses.end(), r2.witnesses.begin(), r2.witnesses.end());
    return r;
}

auto predicate_to_json(const ColoredDigraph & g, const PredicateReport & report) -> nlohmann::ordered_json
{
    auto witnesses = nlohmann::ordered_json::array();
    for (const auto & w : report.witnesses)
        witnesses.push_back(location_to_json(g, w));
    return {{"predicate", report.predicate}, {"status", std::string(to_string(report.status))}, {"witnesses", witnesses}};
}

}
