#include "crystalcheck/inference.hpp"
#include "crystalcheck/axioms.hpp"
#include "crystalcheck/error.hpp"
#include "crystalcheck/strings.hpp"
#include "crystalcheck/topology.hpp"

#include <array>
#include <cstdint>

#include <omp.h>

namespace crystalcheck {

namespace {

    using Domain = std::uint8_t;
    constexpr Domain full_domain = 0b111;

    constexpr auto bit(Label l) -> Domain { return Domain(1U << static_cast<unsigned>(l)); }

    /// Deterministic automaton for the label words allowed along one string.
    struct WordAutomaton {
        static constexpr int dead = -1;
        int states;
        std::array<std::array<int, 3>, 4> next;
        unsigned accepting;
    };

    // 1-strings: 0^a c 1^b, or 0^a 1^b with a,b >= 1.
    //   0 start, 1 reading 0s, 2 just read c, 3 reading 1s
    constexpr WordAutomaton string_1_words{4,
        {{{1, 2, WordAutomaton::dead}, {1, 2, 3}, {WordAutomaton::dead, WordAutomaton::dead, 3},
            {WordAutomaton::dead, WordAutomaton::dead, 3}}},
        0b1100};

    // 2-strings: 1^a c 0^b.
    //   0 start, 1 reading 1s, 2 after c
    constexpr WordAutomaton string_2_words{3,
        {{{WordAutomaton::dead, 2, 1}, {WordAutomaton::dead, 2, 1}, {2, WordAutomaton::dead, WordAutomaton::dead},
            {WordAutomaton::dead, WordAutomaton::dead, WordAutomaton::dead}}},
        0b100};

    /// Shrinks each domain on the string to the labels that occur at that
    /// position in some accepted word. Returns false on a wipe-out; sets
    /// `changed` for each vertex whose domain shrank.
    auto filter_string(const WordAutomaton & a, const std::vector<Vertex> & s, std::vector<Domain> & dom,
        std::vector<Vertex> & changed) -> bool
    {
        const auto len = s.size();
        std::vector<unsigned> fwd(len + 1, 0), bwd(len + 1, 0);
        fwd[0] = 1;
        for (std::size_t k = 0; k < len; ++k)
            for (int q = 0; q < a.states; ++q)
                if (fwd[k] >> q & 1U)
                    for (auto l : all_labels)
                        if ((dom[s[k]] & bit(l)) && a.next[q][static_cast<int>(l)] != WordAutomaton::dead)
                            fwd[k + 1] |= 1U << a.next[q][static_cast<int>(l)];
        bwd[len] = a.accepting;
        for (std::size_t k = len; k-- > 0;)
            for (int q = 0; q < a.states; ++q)
                for (auto l : all_labels) {
                    auto t = a.next[q][static_cast<int>(l)];
                    if ((dom[s[k]] & bit(l)) && t != WordAutomaton::dead && (bwd[k + 1] >> t & 1U))
                        bwd[k] |= 1U << q;
                }

        for (std::size_t k = 0; k < len; ++k) {
            Domain keep = 0;
            for (int q = 0; q < a.states; ++q)
                if (fwd[k] >> q & 1U)
                    for (auto l : all_labels) {
                        auto t = a.next[q][static_cast<int>(l)];
                        if ((dom[s[k]] & bit(l)) && t != WordAutomaton::dead && (bwd[k + 1] >> t & 1U))
                            keep |= bit(l);
                    }
            if (keep == 0)
                return false;
            if (keep != dom[s[k]]) {
                dom[s[k]] = keep;
                changed.push_back(s[k]);
            }
        }
        return true;
    }

    class PropagationSearch {
    public:
        PropagationSearch(const ColoredDigraph & g) :
            strings_{decompose_strings(g, Color::one), decompose_strings(g, Color::two)}
        {
        }

        auto solve(std::size_t n) -> std::vector<Labeling>
        {
            std::vector<Domain> dom(n, full_domain);
            std::vector<bool> dirty_1(strings_[0].strings.size(), true), dirty_2(strings_[1].strings.size(), true);
            if (propagate(dom, dirty_1, dirty_2))
                branch(dom);
            return std::move(solutions_);
        }

    private:
        auto propagate(std::vector<Domain> & dom, std::vector<bool> & dirty_1, std::vector<bool> & dirty_2) -> bool
        {
            std::vector<Vertex> changed;
            for (bool again = true; again;) {
                again = false;
                for (int c = 0; c < 2; ++c) {
                    auto & dirty = c == 0 ? dirty_1 : dirty_2;
                    const auto & automaton = c == 0 ? string_1_words : string_2_words;
                    for (std::size_t k = 0; k < dirty.size(); ++k) {
                        if (! dirty[k])
                            continue;
                        dirty[k] = false;
                        changed.clear();
                        if (! filter_string(automaton, strings_[c].strings[k], dom, changed))
                            return false;
                        for (auto v : changed) {
                            dirty_1[strings_[0].string_of[v]] = true;
                            dirty_2[strings_[1].string_of[v]] = true;
                            again = true;
                        }
                    }
                }
            }
            return true;
        }

        void branch(const std::vector<Domain> & dom)
        {
            std::size_t pick = dom.size();
            for (std::size_t v = 0; v < dom.size(); ++v)
                if (dom[v] & (dom[v] - 1)) {
                    pick = v;
                    break;
                }

            if (pick == dom.size()) {
                Labeling lab;
                lab.labels.reserve(dom.size());
                for (auto d : dom)
                    lab.labels.push_back(d == bit(Label::zero) ? Label::zero
                            : d == bit(Label::central)         ? Label::central
                                                               : Label::one);
                solutions_.push_back(std::move(lab));
                return;
            }

            for (auto l : all_labels) {
                if (! (dom[pick] & bit(l)))
                    continue;
                auto child = dom;
                child[pick] = bit(l);
                std::vector<bool> dirty_1(strings_[0].strings.size(), false), dirty_2(strings_[1].strings.size(), false);
                dirty_1[strings_[0].string_of[pick]] = true;
                dirty_2[strings_[1].string_of[pick]] = true;
                if (propagate(child, dirty_1, dirty_2))
                    branch(child);
            }
        }

        std::array<StringDecomposition, 2> strings_;
        std::vector<Labeling> solutions_;
    };

    auto power_of_three(std::size_t n) -> std::uint64_t
    {
        std::uint64_t p = 1;
        for (std::size_t i = 0; i < n; ++i)
            p *= 3;
        return p;
    }

    /// Vertex 0 is the most significant digit, so index order is
    /// lexicographic order.
    auto decode(std::uint64_t index, std::size_t n) -> Labeling
    {
        Labeling lab;
        lab.labels.assign(n, Label::zero);
        for (std::size_t v = n; v-- > 0;) {
            lab.labels[v] = static_cast<Label>(index % 3);
            index /= 3;
        }
        return lab;
    }

    constexpr std::size_t max_exhaustive_vertices = 20;

    void require_exhaustive_size(const ColoredDigraph & g)
    {
        if (g.vertex_count() > max_exhaustive_vertices)
            throw Error(ErrorKind::out_of_range, "vertices",
                "exhaustive search is limited to " + std::to_string(max_exhaustive_vertices) + " vertices");
    }

}

auto infer_labelings(const ColoredDigraph & g) -> std::vector<Labeling>
{
    if (! check_degree_axiom(g).empty())
        throw Error(ErrorKind::degree_axiom_violated, "edges", "graph violates the degree axiom");
    if (std::holds_alternative<CycleCertificate>(find_potential(g)))
        throw Error(ErrorKind::graph_cyclic, "edges", "graph has a directed cycle");
    return PropagationSearch(g).solve(g.vertex_count());
}

auto infer_labelings_exhaustive_serial(const ColoredDigraph & g) -> std::vector<Labeling>
{
    require_exhaustive_size(g);
    std::vector<Labeling> out;
    const auto total = power_of_three(g.vertex_count());
    for (std::uint64_t i = 0; i < total; ++i)
        if (auto lab = decode(i, g.vertex_count()); satisfies_local(g, lab))
            out.push_back(std::move(lab));
    return out;
}

auto infer_labelings_exhaustive(const ColoredDigraph & g) -> std::vector<Labeling>
{
    require_exhaustive_size(g);
    const auto n = g.vertex_count();
    const auto total = power_of_three(n);
    constexpr std::uint64_t block = 4096;
    const auto blocks = static_cast<std::int64_t>((total + block - 1) / block);
    if (blocks <= 1)
        return infer_labelings_exhaustive_serial(g);

    std::vector<std::vector<Labeling>> found(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < blocks; ++b) {
        const auto lo = static_cast<std::uint64_t>(b) * block;
        const auto hi = std::min(total, lo + block);
        for (auto i = lo; i < hi; ++i)
            if (auto lab = decode(i, n); satisfies_local(g, lab))
                found[static_cast<std::size_t>(b)].push_back(std::move(lab));
    }

    std::vector<Labeling> out;
    for (auto & part : found)
        for (auto & lab : part)
            out.push_back(std::move(lab));
    return out;
}

}
