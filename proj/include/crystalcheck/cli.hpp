#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace crystalcheck::cli {

enum class Subcommand { validate, infer, enumerate, census };
enum class Mode { labels, centers, automatic };
enum class Format { json, text };

struct RunConfig {
    Subcommand subcommand = Subcommand::validate;
    std::string input = "-";
    Mode mode = Mode::automatic;
    bool require_connected = true;
    int max_vertices = 5;
    bool canonical = true;
    double budget_seconds = 0;
    std::optional<std::string> dump_graphs;
    Format format = Format::json;
};

namespace exit_code {
    inline constexpr int ok = 0;
    inline constexpr int violation = 1;
    inline constexpr int input_error = 2;
    inline constexpr int budget_exceeded = 3;
}

/// Full command-line entry point. argv excludes the program name. Reads the
/// document from `in` when the input path is "-".
auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;

/// Runs an already-parsed configuration.
auto run(const RunConfig & config, std::istream & in, std::ostream & out, std::ostream & err) -> int;

}
