#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spc/catalog.hpp"
#include "spc/classify.hpp"
#include "spc/colorers.hpp"
#include "spc/errors.hpp"
#include "spc/files.hpp"
#include "spc/generator.hpp"
#include "spc/report.hpp"
#include "spc/solver.hpp"

namespace {

// stable exit codes for scripting
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitNotColorable = 2;
constexpr int kExitOutOfClass = 3;
constexpr int kExitParse = 4;
constexpr int kExitTimeout = 5;

int exit_code_for(const spc::Error& e)
{
    using spc::ErrorKind;
    switch (e.kind()) {
    case ErrorKind::parse:
    case ErrorKind::malformed_edge:
    case ErrorKind::bad_sequence:
    case ErrorKind::incomplete_coloring:
    case ErrorKind::unknown_name:
        return kExitParse;
    case ErrorKind::out_of_class:
    case ErrorKind::excluded_graph:
    case ErrorKind::exceptional_graph:
    case ErrorKind::not_subcubic:
    case ErrorKind::precondition_violated:
        return kExitOutOfClass;
    case ErrorKind::not_colorable:
        return kExitNotColorable;
    case ErrorKind::timeout:
        return kExitTimeout;
    default:
        return kExitFailure;
    }
}

struct SizeRange {
    int lo = 8;
    int hi = 24;
};

SizeRange parse_sizes(const std::string& text)
{
    auto pos = text.find("..");
    if (pos == std::string::npos)
        spc::fail(spc::ErrorKind::parse, "--sizes expects the form a..b");
    try {
        SizeRange r;
        r.lo = std::stoi(text.substr(0, pos));
        r.hi = std::stoi(text.substr(pos + 2));
        if (r.lo < 1 || r.hi < r.lo)
            spc::fail(spc::ErrorKind::parse, "--sizes range is empty");
        return r;
    } catch (const spc::Error&) {
        throw;
    } catch (const std::exception&) {
        spc::fail(spc::ErrorKind::parse, "--sizes expects the form a..b");
    }
}

int cmd_classify(const std::string& path, bool as_json)
{
    auto g = spc::read_graph_file(path);
    auto p = spc::classify(g);
    auto girth_text = [](int v) {
        return v == spc::kInfDist ? std::string("inf") : std::to_string(v);
    };
    if (as_json) {
        nlohmann::json doc{{"n", g.n()},
                           {"m", g.m()},
                           {"max_degree", p.max_degree},
                           {"min_degree", p.min_degree},
                           {"saturation", p.saturation},
                           {"three_k", p.three_k},
                           {"g3", p.g3 == spc::kInfDist ? -1 : p.g3},
                           {"has_three_vertex", p.had_three_vertex},
                           {"claw_free", p.claw_free},
                           {"heavy", p.heavy},
                           {"rich", p.rich},
                           {"has_diamond", p.diamond.has_value()}};
        std::cout << doc.dump(2) << '\n';
        return kExitOk;
    }
    std::cout << "n=" << g.n() << " m=" << g.m() << " delta=" << p.min_degree
              << " Delta=" << p.max_degree << '\n';
    std::cout << "saturation=" << p.saturation << " three_k=" << p.three_k
              << " g3=" << girth_text(p.g3) << (p.had_three_vertex ? "" : " (no 3-vertex)")
              << '\n';
    std::cout << "claw_free=" << (p.claw_free ? "yes" : "no")
              << " diamond=" << (p.diamond ? "yes" : "no") << " heavy=" << p.heavy.size()
              << " rich=" << p.rich.size() << '\n';
    return kExitOk;
}

int cmd_color(const std::string& path, const std::string& seq_text, const std::string& method,
              const std::string& out_path, std::uint64_t budget)
{
    auto g = spc::read_graph_file(path);
    auto s = spc::parse_sequence(seq_text);
    spc::SolveConfig cfg;
    if (budget)
        cfg.node_budget = budget;

    spc::ColorerResult result;
    if (method == "exact") {
        auto out = spc::decide(g, s, cfg);
        if (out.status == spc::SolveOutcome::Status::timeout)
            spc::fail(spc::ErrorKind::timeout, "solver budget exhausted");
        if (out.status == spc::SolveOutcome::Status::not_colorable)
            spc::fail(spc::ErrorKind::not_colorable, "no such packing coloring exists");
        result.coloring = *out.witness;
        result.seq = s;
    } else {
        try {
            result = spc::auto_color(g, s, cfg);
        } catch (const spc::Error& e) {
            // the full-solver outcomes can only come from the fallback path
            if (method == "constructive" && (e.kind() == spc::ErrorKind::not_colorable ||
                                             e.kind() == spc::ErrorKind::timeout))
                spc::fail(spc::ErrorKind::out_of_class,
                          "no constructive colorer covers this class and sequence");
            throw;
        }
        bool via_solver = !result.trace.empty() && result.trace.front() == "exact solver";
        if (method == "constructive" && via_solver)
            spc::fail(spc::ErrorKind::out_of_class,
                      "no constructive colorer covers this class and sequence");
    }

    if (!spc::verify(g, s, result.coloring).valid)
        spc::fail(spc::ErrorKind::internal_structure, "refusing to emit an invalid coloring");
    spc::ColoringFile cf{s, result.coloring};
    if (out_path.empty())
        spc::write_coloring(std::cout, cf);
    else
        spc::write_coloring_file(out_path, cf);
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path)
{
    auto g = spc::read_graph_file(graph_path);
    auto cf = spc::read_coloring_file(coloring_path);
    auto res = spc::verify(g, cf.s, cf.coloring);
    if (res.valid) {
        std::cout << "OK\n";
        return kExitOk;
    }
    for (const auto& v : res.violations)
        std::cout << "violation: class " << v.cls << " vertices " << v.u << "," << v.v
                  << " at distance " << v.dist << " with s=" << cf.s.at(v.cls) << '\n';
    return kExitFailure;
}

int cmd_catalog(const std::string& name, const std::string& out_path)
{
    if (name.empty()) {
        for (const auto& named : spc::catalog_all())
            std::cout << named.name << "  (n=" << named.graph.n() << ", m=" << named.graph.m()
                      << ")  " << named.note << '\n';
        return kExitOk;
    }
    const auto& named = spc::catalog_get(name);
    if (out_path.empty())
        spc::write_graph(std::cout, named.graph);
    else
        spc::write_graph_file(out_path, named.graph);
    return kExitOk;
}

int cmd_gen(const std::string& class_text, const std::string& sizes, std::uint64_t seed,
            const std::string& out_path)
{
    spc::GenSpec spec;
    spec.constraint = spc::parse_constraint(class_text);
    auto range = parse_sizes(sizes);
    spec.n_min = range.lo;
    spec.n_max = range.hi;
    spec.seed = seed;
    auto g = spc::generate(spec);
    if (out_path.empty())
        spc::write_graph(std::cout, g);
    else
        spc::write_graph_file(out_path, g);
    return kExitOk;
}

int cmd_table(const std::string& sizes, int count, std::uint64_t seed, bool as_json)
{
    spc::TableOptions options;
    auto range = parse_sizes(sizes);
    options.n_min = range.lo;
    options.n_max = range.hi;
    options.count = count;
    options.seed = seed;
    auto report = spc::run_table(options);
    std::cout << (as_json ? spc::render_table_json(report) : spc::render_table(report));
    return report.all_ok ? kExitOk : kExitFailure;
}

int cmd_search(const std::string& class_text, const std::string& seq_text,
               const std::string& sizes, int count, std::uint64_t seed, std::uint64_t budget,
               bool budget_set)
{
    auto constraint = spc::parse_constraint(class_text);
    auto s = spc::parse_sequence(seq_text);
    auto range = parse_sizes(sizes);
    spc::SolveConfig cfg;
    if (budget_set)
        cfg.node_budget = std::max<std::uint64_t>(budget, 1);
    int timeouts = 0;
    for (int i = 0; i < count; ++i) {
        spc::GenSpec spec;
        spec.constraint = constraint;
        spec.n_min = range.lo;
        spec.n_max = range.hi;
        spec.seed = seed + static_cast<std::uint64_t>(i) * 7919;
        spc::Graph g;
        try {
            g = spc::generate(spec);
        } catch (const spc::Error& e) {
            if (e.kind() == spc::ErrorKind::generation_exhausted)
                continue;
            throw;
        }
        auto out = spc::decide(g, s, cfg);
        if (out.status == spc::SolveOutcome::Status::timeout) {
            ++timeouts;
            continue;
        }
        if (out.status == spc::SolveOutcome::Status::not_colorable) {
            std::cout << "counterexample found (instance " << i << "):\n";
            spc::write_graph(std::cout, g);
            return kExitOk;
        }
    }
    std::cout << "no counterexample among " << count << " instances in class '" << class_text
              << "' under (" << seq_text << ")";
    if (timeouts)
        std::cout << " (" << timeouts << " timed out)";
    std::cout << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"S-packing colorings of saturated subcubic graphs"};
    app.require_subcommand(1);

    std::string graph_path, coloring_path, seq_text, out_path, name, class_text;
    std::string method = "auto";
    std::string sizes = "8..24";
    bool as_json = false;
    int count = 20;
    std::uint64_t seed = 1, budget = 0;

    auto* classify = app.add_subcommand("classify", "structural parameters of a graph");
    classify->add_option("graph", graph_path, "graph file")->required();
    classify->add_flag("--json", as_json, "machine-readable output");

    auto* color = app.add_subcommand("color", "produce a packing coloring");
    color->add_option("graph", graph_path, "graph file")->required();
    color->add_option("--s", seq_text, "sequence, e.g. 1,2,2,3")->required();
    color->add_option("--method", method, "auto | constructive | exact")
        ->check(CLI::IsMember({"auto", "constructive", "exact"}));
    color->add_option("--out", out_path, "coloring output file (default stdout)");
    color->add_option("--budget", budget, "solver node budget");

    auto* verify = app.add_subcommand("verify", "check a coloring file against a graph");
    verify->add_option("graph", graph_path, "graph file")->required();
    verify->add_option("coloring", coloring_path, "coloring file")->required();

    auto* catalog = app.add_subcommand("catalog", "the fixed graphs of the catalog");
    catalog->add_option("name", name, "graph name (omit to list)");
    catalog->add_option("--out", out_path, "write the graph file here");

    auto* gen = app.add_subcommand("gen", "generate a class-constrained instance");
    gen->add_option("--class", class_text, "e.g. sat<=2,g3=3")->required();
    gen->add_option("--sizes", sizes, "vertex range a..b");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--out", out_path, "graph output file (default stdout)");

    auto* table = app.add_subcommand("table", "reproduce the colorability summary table");
    table->add_option("--sizes", sizes, "vertex range a..b for generated suites");
    table->add_option("--count", count, "instances per proven cell")->capture_default_str();
    table->add_option("--seed", seed, "suite seed");
    table->add_flag("--json", as_json, "machine-readable output");

    auto* search = app.add_subcommand("search", "look for conjecture counterexamples");
    search->add_option("--class", class_text, "e.g. 3k<=3,g3=3")->required();
    search->add_option("--s", seq_text, "sequence to test")->required();
    search->add_option("--sizes", sizes, "vertex range a..b");
    search->add_option("--count", count, "instances to try")->capture_default_str();
    search->add_option("--seed", seed, "generator seed");
    search->add_option("--budget", budget, "solver node budget per instance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (classify->parsed())
            return cmd_classify(graph_path, as_json);
        if (color->parsed())
            return cmd_color(graph_path, seq_text, method, out_path, budget);
        if (verify->parsed())
            return cmd_verify(graph_path, coloring_path);
        if (catalog->parsed())
            return cmd_catalog(name, out_path);
        if (gen->parsed())
            return cmd_gen(class_text, sizes, seed, out_path);
        if (table->parsed())
            return cmd_table(sizes, count, seed, as_json);
        if (search->parsed())
            return cmd_search(class_text, seq_text, sizes, count, seed, budget,
                              search->count("--budget") > 0);
    } catch (const spc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}
