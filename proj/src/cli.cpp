#include "crystalcheck/cli.hpp"
#include "crystalcheck/axioms.hpp"
#include "crystalcheck/document.hpp"
#include "crystalcheck/enumerate.hpp"
#include "crystalcheck/error.hpp"
#include "crystalcheck/inference.hpp"
#include "crystalcheck/oracle.hpp"
#include "crystalcheck/parallel.hpp"
#include "crystalcheck/structure.hpp"
#include "crystalcheck/topology.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

namespace crystalcheck::cli {

using nlohmann::ordered_json;

namespace {

    auto read_input(const std::string & path, std::istream & in) -> std::string
    {
        if (path == "-")
            return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        std::ifstream file(path, std::ios::binary);
        if (! file)
            throw Error(ErrorKind::io, path, "cannot open '" + path + "'");
        return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    }

    void print_error(std::ostream & err, const Error & e)
    {
        err << "error: " << to_string(e.kind());
        if (! e.location().empty())
            err << " at " << e.location();
        err << ": " << e.what() << '\n';
    }

    auto labeling_json(const ColoredDigraph & g, const Labeling & lab) -> ordered_json
    {
        ordered_json j = ordered_json::object();
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            j[g.name(v)] = std::string(1, label_char(lab[v]));
        return j;
    }

    auto cycle_text(const ColoredDigraph & g, const CycleCertificate & c) -> std::string
    {
        std::string s;
        for (std::size_t i = 0; i < c.cycle.size(); ++i)
            s += (i ? " -> " : "") + g.name(c.cycle[i]);
        return s;
    }

    /// Degree axiom and acyclicity. Returns false when later checks cannot run.
    auto structural_checks(const ColoredDigraph & g, ViolationReport & report) -> bool
    {
        report.merge(check_degree_axiom(g));
        if (! report.empty())
            return false;
        auto potential = find_potential(g);
        if (auto cyc = std::get_if<CycleCertificate>(&potential)) {
            report.add({"acyclic", VertexLocation{cyc->cycle.front()}, "directed cycle " + cycle_text(g, *cyc)});
            return false;
        }
        return true;
    }

    auto mode_name(Mode m) -> std::string
    {
        switch (m) {
            case Mode::labels: return "labels";
            case Mode::centers: return "centers";
            case Mode::automatic: return "inferred";
        }
        return "?";
    }

    auto run_validate(const RunConfig & config, std::istream & in, std::ostream & out) -> int
    {
        auto doc = parse_document(read_input(config.input, in));
        const auto & g = doc.graph;

        auto mode = config.mode;
        if (mode == Mode::labels && ! doc.labels)
            throw Error(ErrorKind::usage, "labels", "--mode labels needs a \"labels\" key in the document");
        if (mode == Mode::centers && ! doc.centers)
            throw Error(ErrorKind::usage, "centers", "--mode centers needs a \"centers\" key in the document");
        if (mode == Mode::automatic)
            mode = doc.labels ? Mode::labels : doc.centers ? Mode::centers : Mode::automatic;

        // Resolve names before checking, so reference errors stay input errors.
        std::optional<Labeling> given_labels;
        std::optional<CentralMarking> given_centers;
        if (mode == Mode::labels)
            given_labels = resolve_labels(g, *doc.labels);
        if (mode == Mode::centers)
            given_centers = resolve_centers(g, *doc.centers);

        ViolationReport report;
        const bool structural_ok = structural_checks(g, report);
        if (config.require_connected) {
            auto components = weak_components(g);
            if (components.size() > 1)
                report.add({"connected", VertexLocation{components[1].front()},
                    "graph has " + std::to_string(components.size()) + " weak components"});
        }

        std::optional<Labeling> used;
        std::size_t inferred_count = 0;
        if (structural_ok) {
            if (mode == Mode::labels) {
                auto local = check_local(g, *given_labels);
                if (local.empty())
                    used = given_labels;
                report.merge(local);
            }
            else if (mode == Mode::centers) {
                auto global = check_global(g, *given_centers);
                if (global.empty())
                    used = labels_from_marking(g, *given_centers);
                report.merge(global);
            }
            else {
                auto all = infer_labelings(g);
                inferred_count = all.size();
                if (all.empty())
                    report.add({"labeling", VertexLocation{0}, "no labeling satisfies B1(i), B1(ii), B2(i), B2(ii)"});
                else
                    used = all.front();
            }
        }

        std::vector<PredicateReport> predicates;
        if (used) {
            predicates.push_back(check_corollary2(g, *used));
            predicates.push_back(check_corollary3(g, *used));
            predicates.push_back(check_string_words(g, *used));
        }

        bool predicate_failed = false;
        for (const auto & p : predicates)
            predicate_failed = predicate_failed || p.status == PredicateStatus::fails;
        const bool valid = report.empty() && ! predicate_failed;

        if (config.format == Format::json) {
            ordered_json j;
            j["valid"] = valid;
            j["mode"] = mode_name(mode);
            j["violations"] = report_to_json(g, report);
            j["predicates"] = ordered_json::array();
            for (const auto & p : predicates)
                j["predicates"].push_back(predicate_to_json(g, p));
            if (mode == Mode::automatic && structural_ok)
                j["labelings_found"] = inferred_count;
            if (used)
                j["labeling"] = labeling_json(g, *used);
            out << j.dump() << '\n';
        }
        else {
            out << "valid: " << (valid ? "yes" : "no") << '\n';
            out << "mode: " << mode_name(mode) << '\n';
            if (mode == Mode::automatic && structural_ok)
                out << "labelings found: " << inferred_count << '\n';
            if (used)
                out << "labeling: " << used->word() << '\n';
            out << "violations: " << report.size() << '\n';
            for (const auto & v : report.entries())
                out << "  " << v.clause << " at " << location_to_text(g, v.at) << ": " << v.detail << '\n';
            for (const auto & p : predicates) {
                out << "predicate " << p.predicate << ": " << to_string(p.status) << '\n';
                for (const auto & w : p.witnesses)
                    out << "  " << location_to_text(g, w) << '\n';
            }
        }
        return valid ? exit_code::ok : exit_code::violation;
    }

    auto run_infer(const RunConfig & config, std::istream & in, std::ostream & out, std::ostream & err) -> int
    {
        auto doc = parse_document(read_input(config.input, in));
        const auto & g = doc.graph;
        ViolationReport report;
        if (! structural_checks(g, report)) {
            err << report_to_json(g, report).dump() << '\n';
            return exit_code::violation;
        }
        for (const auto & lab : infer_labelings(g))
            out << labeling_json(g, lab).dump() << '\n';
        return exit_code::ok;
    }

    auto run_enumerate(const RunConfig & config, std::ostream & out) -> int
    {
        GraphStream stream{config.max_vertices, GraphFilters{}, config.canonical};
        for (const auto & g : enumerate_graphs(stream))
            out << serialize_graph(to_digraph(g)) << '\n';
        return exit_code::ok;
    }

    auto run_census(const RunConfig & config, std::ostream & out, std::ostream & err) -> int
    {
        std::ofstream dump;
        if (config.dump_graphs) {
            dump.open(*config.dump_graphs, std::ios::binary);
            if (! dump)
                throw Error(ErrorKind::io, *config.dump_graphs, "cannot write '" + *config.dump_graphs + "'");
        }
        CensusOptions options;
        options.max_vertices = config.max_vertices;
        options.budget_seconds = config.budget_seconds;
        if (config.dump_graphs)
            options.on_graph = [&](const SmallGraph & g) { dump << serialize_graph(to_digraph(g)) << '\n'; };

        auto result = census(options);
        out << census_csv(result.rows);

        auto tally_text = [](const PredicateTally & t) {
            return std::to_string(t.holds) + " hold, " + std::to_string(t.fails) + " fail, " + std::to_string(t.vacuous)
                + " vacuous";
        };
        err << "corollary2: " << tally_text(result.corollary2) << '\n';
        err << "corollary3: " << tally_text(result.corollary3) << '\n';
        for (const auto & w : result.corollary2_failures)
            err << "corollary2 fails on " << w << '\n';
        for (const auto & w : result.corollary3_failures)
            err << "corollary3 fails on " << w << '\n';
        for (const auto & f : result.proposition_failures)
            err << "proposition fails: " << f << '\n';
        return result.proposition_failures.empty() ? exit_code::ok : exit_code::violation;
    }

}

auto run(const RunConfig & config, std::istream & in, std::ostream & out, std::ostream & err) -> int
{
    try {
        switch (config.subcommand) {
            case Subcommand::validate: return run_validate(config, in, out);
            case Subcommand::infer: return run_infer(config, in, out, err);
            case Subcommand::enumerate: return run_enumerate(config, out);
            case Subcommand::census: return run_census(config, out, err);
        }
    }
    catch (const Error & e) {
        print_error(err, e);
        return e.kind() == ErrorKind::budget_exceeded ? exit_code::budget_exceeded : exit_code::input_error;
    }
    return exit_code::input_error;
}

auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int
{
    configure_threads_from_environment();

    CLI::App app{"Validator and label inference for finite 2-colored crystal graphs of type B2", "crystalcheck"};
    app.require_subcommand(1);

    RunConfig config;
    std::string mode = "auto", format = "json";
    bool no_connected = false, no_canonical = false;

    auto * validate = app.add_subcommand("validate", "Check a graph document against the crystal axioms");
    validate->add_option("input", config.input, "Document path, or - for stdin")->required();
    validate->add_option("--mode", mode, "Which annotation to check")
        ->check(CLI::IsMember({"labels", "centers", "auto"}));
    validate->add_flag("--no-require-connected", no_connected, "Accept graphs with several weak components");
    validate->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));

    auto * infer = app.add_subcommand("infer", "Print every labeling that satisfies the local axioms");
    infer->add_option("input", config.input, "Document path, or - for stdin")->required();

    auto * enumerate = app.add_subcommand("enumerate", "Print small candidate graphs as JSON lines");
    enumerate->add_option("--max-vertices", config.max_vertices, "Largest vertex count")->required();
    enumerate->add_flag("--no-canonical", no_canonical, "Emit every labeled graph, not one per isomorphism class");

    auto * census_cmd = app.add_subcommand("census", "Count graphs, labelings and markings per vertex count");
    census_cmd->add_option("--max-vertices", config.max_vertices, "Largest vertex count (1-6)");
    census_cmd->add_option("--budget-seconds", config.budget_seconds, "Wall-clock cap; 0 means none");
    census_cmd->add_option("--dump-graphs", config.dump_graphs, "Also write the graphs as JSON lines to this file");

    std::vector<const char *> argv{"crystalcheck"};
    for (const auto & a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_code::ok;
    }
    catch (const CLI::ParseError & e) {
        err << "error: usage: " << e.what() << '\n';
        return exit_code::input_error;
    }

    if (validate->parsed())
        config.subcommand = Subcommand::validate;
    else if (infer->parsed())
        config.subcommand = Subcommand::infer;
    else if (enumerate->parsed())
        config.subcommand = Subcommand::enumerate;
    else
        config.subcommand = Subcommand::census;

    config.mode = mode == "labels" ? Mode::labels : mode == "centers" ? Mode::centers : Mode::automatic;
    config.format = format == "text" ? Format::text : Format::json;
    config.require_connected = ! no_connected;
    config.canonical = ! no_canonical;
    return run(config, in, out, err);
}

}
