#pragma once

#include "crystalcheck/graph.hpp"

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace crystalcheck {

struct VertexLocation {
    Vertex vertex;
    friend auto operator==(const VertexLocation &, const VertexLocation &) -> bool = default;
};

struct EdgeLocation {
    std::size_t edge;
    friend auto operator==(const EdgeLocation &, const EdgeLocation &) -> bool = default;
};

/// A whole monochromatic string.
struct StringLocation {
    Color color;
    std::vector<Vertex> vertices;
    friend auto operator==(const StringLocation &, const StringLocation &) -> bool = default;
};

using Location = std::variant<VertexLocation, EdgeLocation, StringLocation>;

struct Violation {
    std::string clause;
    Location at;
    std::string detail;

    friend auto operator==(const Violation &, const Violation &) -> bool = default;
};

/// Ordered list of axiom violations.
///
/// Entries are kept sorted: vertex locations first in declared vertex order,
/// then edge locations in declared edge order; ties broken by clause id and
/// then detail text.
class ViolationReport {
public:
    ViolationReport() = default;
    explicit ViolationReport(std::vector<Violation> entries);

    void add(Violation v);
    void merge(const ViolationReport & other);

    [[nodiscard]] auto empty() const noexcept -> bool { return entries_.empty(); }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return entries_.size(); }
    [[nodiscard]] auto entries() const noexcept -> const std::vector<Violation> & { return entries_; }
    [[nodiscard]] auto count(std::string_view clause) const -> std::size_t;

    friend auto operator==(const ViolationReport &, const ViolationReport &) -> bool = default;

private:
    std::vector<Violation> entries_;
};

/// "a" for a vertex, ["a","b",1] for an edge, {"color":1,"vertices":[...]}
/// for a string.
auto location_to_json(const ColoredDigraph & g, const Location & at) -> nlohmann::ordered_json;
auto location_to_text(const ColoredDigraph & g, const Location & at) -> std::string;

/// Array of {"clause", "at", "detail"} objects.
auto report_to_json(const ColoredDigraph & g, const ViolationReport & report) -> nlohmann::ordered_json;

}
