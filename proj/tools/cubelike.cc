#include <cubelike/autgrp.hh>
#include <cubelike/cayley.hh>
#include <cubelike/errors.hh>
#include <cubelike/fixtures.hh>
#include <cubelike/graph6.hh>
#include <cubelike/hom.hh>
#include <cubelike/invariants.hh>
#include <cubelike/pipeline.hh>
#include <cubelike/spectral.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cubelike;
using nlohmann::json;
using std::string;
using std::vector;

namespace
{
    auto deadline_for(unsigned timeout_ms) -> Deadline
    {
        return timeout_ms ? Deadline{std::chrono::milliseconds{timeout_ms}} : Deadline{};
    }

    auto labels_json(const Graph & g) -> json
    {
        json labels = json::array();
        for (auto & w : g.labels())
            labels.push_back(w.to_string());
        return labels;
    }

    auto print_graph(const Graph & g, bool with_labels) -> void
    {
        if (with_labels)
            std::cout << json{{"graph6", to_graph6(g)}, {"labels", labels_json(g)}}.dump() << '\n';
        else
            std::cout << to_graph6(g) << '\n';
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in{path, std::ios::binary};
        if (! in)
            throw std::runtime_error("cannot read " + path);
        return string{std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
    }

    auto outcome_json(Outcome o) -> json
    {
        return string{to_string(o)};
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Cores of cubelike graphs: constructions, tests and the filter cascade"};
    app.require_subcommand(1);
    unsigned timeout_ms = 0;
    app.add_option("--timeout-ms", timeout_ms, "Budget for each search; 0 is unlimited");
    unsigned cap = vertex_cap();
    app.add_option("--vertex-cap", cap, "Largest graph any construction may build");

    auto gen = app.add_subcommand("gen", "Print a graph as graph6");
    gen->require_subcommand(1);
    bool with_labels = false;
    gen->add_flag("--labels", with_labels, "Print JSON with the Z_2^n label of each vertex");
    unsigned order = 0;
    auto gen_cube = gen->add_subcommand("cube", "The d-cube");
    gen_cube->add_option("d", order)->required();
    auto gen_folded = gen->add_subcommand("folded", "The folded cube of order n");
    gen_folded->add_option("n", order)->required();
    auto gen_halved = gen->add_subcommand("halved", "The halved cube of order n");
    gen_halved->add_option("n", order)->required();
    string connection;
    auto gen_cayley = gen->add_subcommand("cayley", "Cay(Z_2^n, C) from little-endian bitstrings");
    gen_cayley->add_option("n", order)->required();
    gen_cayley->add_option("connection-set", connection, "e.g. 100,010,001")->required();
    string g6;
    auto gen_hull = gen->add_subcommand("hull", "The cubelike hull Z_2[X]");
    gen_hull->add_option("graph6", g6)->required();
    string name;
    auto gen_fixture = gen->add_subcommand("fixture", "A named graph");
    gen_fixture->add_option("name", name)->required()->check(CLI::IsMember(fixture_names()));

    auto aut = app.add_subcommand("aut", "Automorphism group summary as JSON");
    aut->add_option("graph6", g6)->required();

    auto core = app.add_subcommand("core", "Core and retraction as JSON");
    core->add_option("graph6", g6)->required();

    string target;
    bool injective = false, induced = false;
    auto hom = app.add_subcommand("hom", "Search for a homomorphism between two graphs");
    hom->add_option("source", g6)->required();
    hom->add_option("target", target)->required();
    auto injective_flag = hom->add_flag("--injective", injective);
    hom->add_flag("--induced", induced)->excludes(injective_flag);

    auto homidem = app.add_subcommand("homidem", "Decide X box X -> X");
    homidem->add_option("graph6", g6)->required();

    auto spectrum = app.add_subcommand("spectrum", "Exact integer spectrum as JSON");
    spectrum->add_option("graph6", g6)->required();

    auto invariants = app.add_subcommand("invariants", "Clique, independence and chromatic numbers as JSON");
    invariants->add_option("graph6", g6)->required();

    string corpus, report_path, checkpoint_path;
    unsigned jobs = 1;
    auto filter = app.add_subcommand("filter", "Run the filter cascade over a graph6 corpus");
    filter->add_option("corpus", corpus)->required();
    filter->add_option("--jobs", jobs)->check(CLI::Range(1u, 1024u));
    filter->add_option("--report", report_path, "JSON-lines report; stdout if absent");
    filter->add_option("--checkpoint", checkpoint_path, "Resume file of completed lines");

    auto funnel_cmd = app.add_subcommand("funnel", "Per-filter counts of a report");
    funnel_cmd->add_option("report", report_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        set_vertex_cap(cap);
        auto dl = deadline_for(timeout_ms);

        if (gen->parsed()) {
            if (gen_cube->parsed())
                print_graph(hypercube(order), with_labels);
            else if (gen_folded->parsed())
                print_graph(folded_cube(order), with_labels);
            else if (gen_halved->parsed())
                print_graph(halved_cube(order), with_labels);
            else if (gen_cayley->parsed()) {
                auto c = ConnectionSet::parse(connection);
                if (c.dimension() != order)
                    throw DimensionMismatch("connection set words have length " + std::to_string(c.dimension()) + ", expected " + std::to_string(order));
                print_graph(cayley_z2(c), with_labels);
            }
            else if (gen_hull->parsed())
                print_graph(cubelike_hull(parse_graph_line(g6)).graph, with_labels);
            else
                print_graph(fixture(name), with_labels);
        }
        else if (aut->parsed()) {
            auto x = parse_graph_line(g6);
            auto group = automorphism_group(x);
            auto orb = orbitals(group);
            std::cout << json{
                {"order", group.order().get_str()},
                {"generators", group.generators().size()},
                {"vertex_orbits", group.orbits().size()},
                {"orbitals", orb.count()},
                {"vertex_transitive", is_vertex_transitive(x, group)},
                {"generously_transitive", is_generously_transitive(x, group)}
            }.dump() << '\n';
        }
        else if (core->parsed()) {
            auto x = parse_graph_line(g6);
            auto r = compute_core(x, dl);
            std::cout << json{
                {"outcome", outcome_json(r.outcome)},
                {"core_graph6", to_graph6(r.core)},
                {"core_vertices", r.core_vertices},
                {"retraction", r.retraction.image()},
                {"iterations", r.chain.size()}
            }.dump() << '\n';
        }
        else if (hom->parsed()) {
            auto x = parse_graph_line(g6);
            auto y = parse_graph_line(target);
            HomProblem p{x, y, injective ? HomMode::injective : induced ? HomMode::induced : HomMode::any};
            auto r = find_homomorphism(p, dl);
            json out{{"outcome", outcome_json(r.outcome)}, {"nodes", r.nodes}};
            if (r.map)
                out["map"] = r.map->image();
            std::cout << out.dump() << '\n';
        }
        else if (homidem->parsed()) {
            auto r = is_hom_idempotent(parse_graph_line(g6), false, dl);
            std::cout << json{{"outcome", outcome_json(r.outcome)}, {"method", r.method}}.dump() << '\n';
        }
        else if (spectrum->parsed()) {
            auto s = integer_spectrum(parse_graph_line(g6));
            json out{{"integral", s.integral()}};
            json entries = json::array();
            for (auto & [value, mult] : s.entries)
                entries.push_back({value, mult});
            out["entries"] = entries;
            if (! s.integral())
                out["residual_poly"] = to_string(*s.residual);
            std::cout << out.dump() << '\n';
        }
        else if (invariants->parsed()) {
            auto x = parse_graph_line(g6);
            auto omega = maximum_clique(x, dl);
            auto alpha = maximum_independent_set(x, dl);
            auto chi = chromatic_number(x, dl);
            json out{
                {"omega", omega.size()},
                {"alpha", alpha.size()},
                {"chi", chi.value()},
                {"odd_girth", odd_girth(x)}
            };
            if (omega.outcome != Outcome::yes || alpha.outcome != Outcome::yes || chi.outcome != Outcome::yes) {
                out["exact"] = false;
                out["chi_lower"] = chi.lower;
            }
            out["cc_equality"] = omega.size() * alpha.size() == x.size();
            std::cout << out.dump() << '\n';
        }
        else if (filter->parsed()) {
            auto text = read_file(corpus);
            CorpusOptions options;
            options.filters.timeout = std::chrono::milliseconds{timeout_ms};
            options.jobs = jobs;
            if (! checkpoint_path.empty())
                options.checkpoint = checkpoint_path;
            std::ofstream report_file;
            if (! report_path.empty()) {
                bool resume = options.checkpoint && checkpoint_matches(*options.checkpoint, text);
                report_file.open(report_path, resume ? std::ios::app : std::ios::trunc);
                if (! report_file)
                    throw std::runtime_error("cannot write " + report_path);
            }
            std::ostream & reports = report_path.empty() ? std::cout : report_file;
            std::istringstream in{text};
            auto summary = run_corpus(in, options, [&] (const Report & r) {
                reports << to_json(r).dump() << '\n' << std::flush;
            });
            std::ostream & log = report_path.empty() ? std::cerr : std::cout;
            if (summary.resumed)
                log << "resumed past " << summary.resumed << " completed lines\n";
            log << format_funnel(summary.funnel);
        }
        else if (funnel_cmd->parsed()) {
            std::ifstream in{report_path};
            if (! in)
                throw std::runtime_error("cannot read " + report_path);
            Funnel f;
            string line;
            for (size_t n = 1 ; std::getline(in, line) ; ++n) {
                if (line.empty())
                    continue;
                try {
                    f.add(report_from_json(json::parse(line)));
                }
                catch (const json::exception & e) {
                    throw std::runtime_error(report_path + ":" + std::to_string(n) + ": " + e.what());
                }
            }
            std::cout << format_funnel(f);
        }
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
