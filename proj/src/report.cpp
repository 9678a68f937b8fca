#include "crystalcheck/report.hpp"

#include <algorithm>
#include <tuple>

namespace crystalcheck {

namespace {

    // (kind rank, primary index, secondary) gives the declared-order sort.
    auto location_key(const Location & at) -> std::tuple<int, std::size_t, std::vector<Vertex>>
    {
        if (auto v = std::get_if<VertexLocation>(&at))
            return {0, v->vertex, {}};
        if (auto e = std::get_if<EdgeLocation>(&at))
            return {1, e->edge, {}};
        const auto & s = std::get<StringLocation>(at);
        return {2, static_cast<std::size_t>(color_number(s.color)), s.vertices};
    }

    auto before(const Violation & a, const Violation & b) -> bool
    {
        auto ka = location_key(a.at), kb = location_key(b.at);
        if (ka != kb)
            return ka < kb;
        if (a.clause != b.clause)
            return a.clause < b.clause;
        return a.detail < b.detail;
    }

}

ViolationReport::ViolationReport(std::vector<Violation> entries) :
    entries_(std::move(entries))
{
    std::stable_sort(entries_.begin(), entries_.end(), before);
}

void ViolationReport::add(Violation v)
{
    auto pos = std::upper_bound(entries_.begin(), entries_.end(), v, before);
    entries_.insert(pos, std::move(v));
}

void ViolationReport::merge(const ViolationReport & other)
{
    for (const auto & v : other.entries_)
        add(v);
}

auto ViolationReport::count(std::string_view clause) const -> std::size_t
{
    return std::count_if(entries_.begin(), entries_.end(), [&](const Violation & v) { return v.clause == clause; });
}

auto location_to_json(const ColoredDigraph & g, const Location & at) -> nlohmann::ordered_json
{
    using nlohmann::ordered_json;
    if (auto v = std::get_if<VertexLocation>(&at))
        return g.name(v->vertex);
    if (auto e = std::get_if<EdgeLocation>(&at)) {
        const auto & edge = g.edge(e->edge);
        return ordered_json::array({g.name(edge.tail), g.name(edge.head), color_number(edge.color)});
    }
    const auto & s = std::get<StringLocation>(at);
    ordered_json vs = ordered_json::array();
    for (auto v : s.vertices)
        vs.push_back(g.name(v));
    return ordered_json{{"color", color_number(s.color)}, {"vertices", vs}};
}

auto location_to_text(const ColoredDigraph & g, const Location & at) -> std::string
{
    if (auto v = std::get_if<VertexLocation>(&at))
        return g.name(v->vertex);
    if (auto e = std::get_if<EdgeLocation>(&at)) {
        const auto & edge = g.edge(e->edge);
        return "(" + g.name(edge.tail) + "," + g.name(edge.head) + ")/" + std::to_string(color_number(edge.color));
    }
    const auto & s = std::get<StringLocation>(at);
    std::string out = std::to_string(color_number(s.color)) + "-string [";
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        out += (i ? "," : "") + g.name(s.vertices[i]);
    return out + "]";
}

auto report_to_json(const ColoredDigraph & g, const ViolationReport & report) -> nlohmann::ordered_json
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto & v : report.entries())
        arr.push_back({{"clause", v.clause}, {"at", location_to_json(g, v.at)}, {"detail", v.detail}});
    return arr;
}

}
