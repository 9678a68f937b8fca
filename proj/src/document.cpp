#include "crystalcheck/document.hpp"
#include "crystalcheck/error.hpp"

#include <json.hpp>

namespace crystalcheck {

using nlohmann::ordered_json;

namespace {

void reject_unknown_keys(const ordered_json & obj, std::initializer_list<std::string_view> allowed, const std::string & where)
{
    for (const auto & [key, value] : obj.items()) {
        bool ok = false;
        for (auto a : allowed)
            ok = ok || key == a;
        if (! ok)
            throw Error(ErrorKind::schema, where.empty() ? key : where + "." + key, "unknown key '" + key + "'");
    }
}

auto expect_string(const ordered_json & j, const std::string & where) -> std::string
{
    if (! j.is_string())
        throw Error(ErrorKind::schema, where, "expected a string");
    return j.get<std::string>();
}

auto expect_array(const ordered_json & j, const std::string & where) -> const ordered_json &
{
    if (! j.is_array())
        throw Error(ErrorKind::schema, where, "expected an array");
    return j;
}

auto parse_centers(const ordered_json & j) -> NamedCenters
{
    if (! j.is_object())
        throw Error(ErrorKind::schema, "centers", "expected an object");
    reject_unknown_keys(j, {"vertices", "edges_1"}, "centers");
    NamedCenters c;
    if (j.contains("vertices")) {
        const auto & vs = expect_array(j["vertices"], "centers.vertices");
        for (std::size_t i = 0; i < vs.size(); ++i)
            c.vertices.push_back(expect_string(vs[i], "centers.vertices[" + std::to_string(i) + "]"));
    }
    if (j.contains("edges_1")) {
        const auto & es = expect_array(j["edges_1"], "centers.edges_1");
        for (std::size_t i = 0; i < es.size(); ++i) {
            auto where = "centers.edges_1[" + std::to_string(i) + "]";
            if (! es[i].is_array() || es[i].size() != 2)
                throw Error(ErrorKind::schema, where, "expected a [from, to] pair");
            c.edges_1.emplace_back(expect_string(es[i][0], where), expect_string(es[i][1], where));
        }
    }
    return c;
}

auto parse_labels(const ordered_json & j) -> NamedLabels
{
    if (! j.is_object())
        throw Error(ErrorKind::schema, "labels", "expected an object");
    NamedLabels labels;
    for (const auto & [name, value] : j.items()) {
        auto where = "labels." + name;
        std::optional<Label> l;
        if (value.is_string())
            l = parse_label(value.get<std::string>());
        if (! l)
            throw Error(ErrorKind::invalid_label, where, "label must be one of \"0\", \"c\", \"1\"");
        labels.emplace_back(name, *l);
    }
    return labels;
}

auto graph_json(const ColoredDigraph & g) -> ordered_json
{
    ordered_json doc = ordered_json::object();
    doc["vertices"] = ordered_json::array();
    for (const auto & n : g.names())
        doc["vertices"].push_back(n);
    doc["edges"] = ordered_json::array();
    for (const auto & e : g.edges())
        doc["edges"].push_back(ordered_json{{"from", g.name(e.tail)}, {"to", g.name(e.head)}, {"color", color_number(e.color)}});
    return doc;
}

}

auto parse_document(std::string_view text) -> Document
{
    ordered_json root;
    try {
        root = ordered_json::parse(text.begin(), text.end());
    }
    catch (const ordered_json::parse_error & e) {
        throw Error(ErrorKind::syntax, "byte " + std::to_string(e.byte), e.what());
    }

    if (! root.is_object())
        throw Error(ErrorKind::schema, "", "top level must be an object");
    reject_unknown_keys(root, {"vertices", "edges", "labels", "centers"}, "");
    for (auto key : {"vertices", "edges"})
        if (! root.contains(key))
            throw Error(ErrorKind::schema, key, std::string("missing key '") + key + "'");

    std::vector<std::string> vertices;
    const auto & vs = expect_array(root["vertices"], "vertices");
    for (std::size_t i = 0; i < vs.size(); ++i)
        vertices.push_back(expect_string(vs[i], "vertices[" + std::to_string(i) + "]"));

    std::vector<ColoredDigraph::NamedEdge> edges;
    {
        const auto & es = expect_array(root["edges"], "edges");
        for (std::size_t i = 0; i < es.size(); ++i) {
            auto where = "edges[" + std::to_string(i) + "]";
            const auto & e = es[i];
            if (! e.is_object())
                throw Error(ErrorKind::schema, where, "expected an edge object");
            reject_unknown_keys(e, {"from", "to", "color"}, where);
            for (auto key : {"from", "to", "color"})
                if (! e.contains(key))
                    throw Error(ErrorKind::schema, where, std::string("missing key '") + key + "'");
            const auto & color = e["color"];
            if (! color.is_number_integer() || (color.get<long long>() != 1 && color.get<long long>() != 2))
                throw Error(ErrorKind::unknown_color, where + ".color", "color must be 1 or 2, got " + color.dump());
            edges.push_back({expect_string(e["from"], where + ".from"), expect_string(e["to"], where + ".to"),
                color.get<int>()});
        }
    }

    Document doc{ColoredDigraph::build(std::move(vertices), edges), std::nullopt, std::nullopt};
    if (root.contains("labels"))
        doc.labels = parse_labels(root["labels"]);
    if (root.contains("centers"))
        doc.centers = parse_centers(root["centers"]);
    return doc;
}

auto serialize_document(const Document & doc) -> std::string
{
    auto j = graph_json(doc.graph);
    if (doc.labels) {
        j["labels"] = ordered_json::object();
        for (const auto & [name, label] : *doc.labels)
            j["labels"][name] = std::string(1, label_char(label));
    }
    if (doc.centers) {
        ordered_json c = ordered_json::object();
        c["vertices"] = doc.centers->vertices;
        c["edges_1"] = ordered_json::array();
        for (const auto & [a, b] : doc.centers->edges_1)
            c["edges_1"].push_back(ordered_json::array({a, b}));
        j["centers"] = std::move(c);
    }
    return j.dump();
}

auto serialize_graph(const ColoredDigraph & g) -> std::string
{
    return graph_json(g).dump();
}

}
