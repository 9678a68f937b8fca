#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crystalcheck {

enum class ErrorKind {
    // document ingestion
    syntax,
    schema,
    unknown_color,
    dangling_endpoint,
    duplicate_edge,
    duplicate_vertex,
    self_loop,
    empty_vertex_set,
    invalid_label,
    // label / marking resolution
    unknown_vertex,
    unknown_edge,
    labeling_not_total,
    // operation preconditions
    degree_axiom_violated,
    monochromatic_cycle,
    graph_cyclic,
    precondition,
    // enumeration and census
    out_of_range,
    budget_exceeded,
    // command line
    usage,
    io,
};

auto to_string(ErrorKind kind) -> std::string_view;

/// Every failure the library reports as an error (as opposed to an axiom
/// violation, which is data) is thrown as this type.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string location, const std::string & message);

    [[nodiscard]] auto kind() const noexcept -> ErrorKind { return kind_; }
    [[nodiscard]] auto location() const noexcept -> const std::string & { return location_; }

private:
    ErrorKind kind_;
    std::string location_;
};

}
