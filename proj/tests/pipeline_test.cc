#include "corpus.hh"

#include <cubelike/autgrp.hh>
#include <cubelike/cayley.hh>
#include <cubelike/fixtures.hh>
#include <cubelike/graph6.hh>
#include <cubelike/hom.hh>
#include <cubelike/invariants.hh>
#include <cubelike/pipeline.hh>

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

using namespace cubelike;
using std::string;
using std::vector;

namespace
{
    auto verdict(const Report & r, FilterId f) -> const FilterVerdict *
    {
        for (auto & v : r.verdicts)
            if (v.filter == f)
                return &v;
        return nullptr;
    }

    auto corpus_text(const vector<Graph> & graphs) -> string
    {
        string text;
        for (auto & g : graphs)
            text += to_graph6(g) + "\n";
        return text;
    }

    auto run_text(const string & text, const CorpusOptions & options, vector<Report> & out) -> CorpusSummary
    {
        std::istringstream in{text};
        return run_corpus(in, options, [&] (const Report & r) { out.push_back(r); });
    }

    struct TempFile
    {
        std::filesystem::path path;

        explicit TempFile(const string & name) :
            path(std::filesystem::temp_directory_path() / (name + "-" + std::to_string(std::random_device{}())))
        {
        }

        ~TempFile() { std::filesystem::remove(path); }
    };
}

TEST_CASE("filter names round-trip")
{
    for (auto f : filter_order)
        CHECK(filter_from_string(to_string(f)) == f);
    CHECK(to_string(FilterId::orbital_clique_3) == "orbital-clique-3");
    CHECK(! filter_from_string("no-such-filter"));
}

TEST_CASE("named graphs through the cascade")
{
    auto petersen = run_filters(fixture("petersen"));
    CHECK(petersen.classification == Classification::rejected);
    CHECK(petersen.decided_at == FilterId::power_of_two_order);

    SUBCASE("shrikhande is rejected by a triangle in an orbital union")
    {
        auto r = run_filters(fixture("shrikhande"));
        CHECK(r.classification == Classification::rejected);
        CHECK(r.decided_at == FilterId::orbital_clique_3);
        CHECK(verdict(r, FilterId::integral_spectrum)->outcome == FilterOutcome::pass);
        CHECK(verdict(r, FilterId::cubelike_recognition)->witness["cubelike"] == false);
        auto & w = verdict(r, FilterId::orbital_clique_3)->witness;
        auto triangle = w["triangle"].get<vector<Vertex>>();
        REQUIRE(triangle.size() == 3);
        auto x = fixture("shrikhande");
        auto aut = automorphism_group(x);
        auto orb = orbitals(aut);
        std::set<unsigned> ids;
        for (auto o : w["orbitals"].get<vector<unsigned>>())
            ids.insert(o);
        auto y = orbital_graph(orb, ids);
        CHECK(y.adjacent(triangle[0], triangle[1]));
        CHECK(y.adjacent(triangle[1], triangle[2]));
        CHECK(y.adjacent(triangle[0], triangle[2]));
        CHECK(clique_number(y) == 3);
    }

    SUBCASE("the sixteen-vertex cores are classified cubelike")
    {
        for (unsigned k : {2, 4, 8, 16}) {
            auto r = run_filters(complete_graph(k));
            CHECK(r.classification == Classification::cubelike);
            CHECK(r.decided_at == FilterId::clique_coclique_complete);
        }
        for (auto name : {"clebsch", "clebsch-complement"}) {
            auto r = run_filters(fixture(name));
            CHECK(r.classification == Classification::cubelike);
            CHECK(r.decided_at == FilterId::cubelike_recognition);
        }
    }

    SUBCASE("the Z4 x Z8 graph passes everything up to the hull test")
    {
        auto r = run_filters(fixture("z4z8"));
        CHECK(r.classification == Classification::rejected);
        CHECK(r.decided_at == FilterId::hull_hom);
        REQUIRE(r.verdicts.size() == filter_order.size());
        for (size_t i = 0 ; i + 1 < r.verdicts.size() ; ++i)
            CHECK(r.verdicts[i].outcome == FilterOutcome::pass);
        CHECK(r.verdicts.back().witness["graph"] == "X");
        CHECK(r.verdicts.back().witness["omega"] == 5);
    }

    SUBCASE("cubelike non-cores stop at the clique-coclique filter")
    {
        for (auto name : {"rook44", "halfQ8"}) {
            auto r = run_filters(fixture(name));
            CHECK(r.decided_at == FilterId::clique_coclique_complete);
            auto & w = verdict(r, FilterId::clique_coclique_complete)->witness;
            CHECK(w["alpha"].get<unsigned>() * w["omega"].get<unsigned>() == fixture(name).size());
        }
    }

    SUBCASE("the precondition rejects with a reason")
    {
        auto r = run_filters(path_graph(4));
        CHECK(r.decided_at == FilterId::precondition);
        CHECK(r.verdicts.back().witness["reason"] == "not vertex-transitive");
        auto two_edges = Graph::from_edges(4, vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}});
        r = run_filters(two_edges);
        CHECK(r.verdicts.back().witness["reason"] == "not connected");
    }
}

TEST_CASE("every verdict list is consistent with its classification")
{
    for (auto & [name, x] : testing::fixture_corpus()) {
        CAPTURE(name);
        auto r = run_filters(x);
        REQUIRE(! r.verdicts.empty());
        CHECK(r.verdicts.front().filter == FilterId::precondition);
        for (size_t i = 0 ; i + 1 < r.verdicts.size() ; ++i) {
            CHECK(r.verdicts[i].outcome != FilterOutcome::reject);
            CHECK(r.verdicts[i].filter < r.verdicts[i + 1].filter);
        }
        if (r.classification == Classification::rejected) {
            CHECK(r.verdicts.back().outcome == FilterOutcome::reject);
            CHECK(r.decided_at == r.verdicts.back().filter);
            CHECK(! r.verdicts.back().witness.empty());
        }
        if (r.classification == Classification::cubelike)
            CHECK(is_cubelike(x).outcome == Outcome::yes);
    }
}

TEST_CASE("cubelike graphs on at most 16 vertices")
{
    FilterConfig all_filters;
    all_filters.stop_at_cubelike = false;
    for (unsigned n = 1 ; n <= 4 ; ++n)
        for (auto & z : enumerate_cubelike(n, true).graphs) {
            auto x = z.without_labels();
            CAPTURE(to_graph6(x));
            auto r = run_filters(x);
            bool complete_core = chromatic_number(x).value() == clique_number(x);
            if (r.classification == Classification::rejected) {
                // a non-complete graph whose core is complete
                CHECK(r.decided_at == FilterId::clique_coclique_complete);
                CHECK(complete_core);
            }
            else
                CHECK(r.classification == Classification::cubelike);

            // on a core no filter may reject, including the orbital filters
            auto core = compute_core(x);
            if (core.core_vertices.size() == x.size()) {
                auto full = run_filters(x, all_filters);
                CHECK(full.classification == Classification::cubelike);
                CHECK(full.verdicts.size() == filter_order.size());
            }

            // orbital graphs of a cubelike graph are cubelike, so these two never reject
            if (! complete_core) {
                auto full = run_filters(x, all_filters);
                for (auto & v : full.verdicts)
                    if (v.filter == FilterId::orbital_clique_3 || v.filter == FilterId::orbital_spectrum)
                        CHECK(v.outcome == FilterOutcome::pass);
            }
        }
}

TEST_CASE("cubelike graphs on 32 vertices")
{
    unsigned recognised = 0, complete_cores = 0;
    for (auto & z : enumerate_cubelike(5, true).graphs) {
        auto x = z.without_labels();
        auto r = run_filters(x);
        CAPTURE(r.graph6);
        if (r.classification == Classification::cubelike) {
            ++recognised;
            continue;
        }
        REQUIRE(r.decided_at == FilterId::clique_coclique_complete);
        // check the certificate: a clique and a coclique whose sizes multiply to |V|
        ++complete_cores;
        auto & w = r.verdicts.back().witness;
        auto clique = w["clique"].get<vector<Vertex>>();
        auto coclique = w["coclique"].get<vector<Vertex>>();
        CHECK(clique.size() * coclique.size() == x.size());
        CHECK(clique.size() < x.size());
        for (size_t i = 0 ; i < clique.size() ; ++i)
            for (size_t j = i + 1 ; j < clique.size() ; ++j)
                CHECK(x.adjacent(clique[i], clique[j]));
        for (size_t i = 0 ; i < coclique.size() ; ++i)
            for (size_t j = i + 1 ; j < coclique.size() ; ++j)
                CHECK(! x.adjacent(coclique[i], coclique[j]));
    }
    CHECK(recognised + complete_cores == 1326);
    CHECK(recognised == 123);
}

TEST_CASE("Cayley graphs of groups of order 16 leave no non-cubelike survivor")
{
    auto graphs = testing::order_16_cayley_corpus();
    std::map<string, unsigned> tally;
    for (auto & x : graphs) {
        auto r = run_filters(x);
        CAPTURE(r.graph6);
        CHECK(r.classification != Classification::survivor);
        CHECK(r.classification != Classification::survivor_flagged);
        if (r.classification == Classification::cubelike) {
            CHECK(is_cubelike(x).outcome == Outcome::yes);
            // the sixteen-vertex theorem: K_16, Clebsch or its complement
            CHECK((are_isomorphic(x, complete_graph(16)) || are_isomorphic(x, fixture("clebsch"))
                        || are_isomorphic(x, fixture("clebsch-complement"))));
        }
        // every later rejection is of a graph that is not cubelike
        if (r.classification == Classification::rejected && r.decided_at > FilterId::cubelike_recognition)
            CHECK(is_cubelike(x).outcome == Outcome::no);
        ++tally[string{to_string(r.classification)}];
    }
    CHECK(tally["cubelike"] == 3);
    CHECK(tally["error"] == 0);
}

TEST_CASE("reports round-trip through JSON")
{
    for (auto name : {"petersen", "shrikhande", "clebsch"}) {
        auto r = run_filters(fixture(name));
        r.line = 7;
        auto back = report_from_json(nlohmann::json::parse(to_json(r).dump()));
        CHECK(back.same_verdicts(r));
        CHECK(back.seconds == doctest::Approx(r.seconds));
    }
    CHECK_THROWS(report_from_json(nlohmann::json{{"line", 1}}));
}

TEST_CASE("corpus runs are deterministic and ordered")
{
    vector<Graph> graphs;
    for (auto & [name, x] : testing::fixture_corpus())
        graphs.push_back(x);
    for (auto & z : enumerate_cubelike(3, true).graphs)
        graphs.push_back(z.without_labels());

    vector<Report> serial;
    CorpusOptions options;
    run_text(corpus_text(graphs), options, serial);
    REQUIRE(serial.size() == graphs.size());
    for (size_t i = 0 ; i < serial.size() ; ++i)
        CHECK(serial[i].line == i + 1);

    std::mt19937 rng{17};
    std::shuffle(graphs.begin(), graphs.end(), rng);
    vector<Report> parallel;
    options.jobs = 4;
    run_text(corpus_text(graphs), options, parallel);
    REQUIRE(parallel.size() == serial.size());
    for (size_t i = 0 ; i < parallel.size() ; ++i)
        CHECK(parallel[i].line == i + 1);

    std::map<string, Report> by_graph;
    for (auto r : serial) {
        r.line = 0;
        by_graph[r.graph6] = r;
    }
    for (auto r : parallel) {
        r.line = 0;
        REQUIRE(by_graph.contains(r.graph6));
        CHECK(r.same_verdicts(by_graph[r.graph6]));
    }
}

TEST_CASE("corpus lines that fail to parse become error reports")
{
    string text = ">>graph6<<C~\n\nnot graph6 at all\nC~\n";
    vector<Report> reports;
    auto summary = run_text(text, {}, reports);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].line == 1);
    CHECK(reports[0].classification == Classification::cubelike);
    CHECK(reports[1].line == 3);
    CHECK(reports[1].classification == Classification::error);
    CHECK(! reports[1].error.empty());
    CHECK(reports[2].line == 4);
    CHECK(summary.funnel.errors == 1);
    CHECK(summary.funnel.cubelike == 2);
}

TEST_CASE("checkpoints resume and are invalidated by a different corpus")
{
    auto text = corpus_text({complete_graph(4), fixture("petersen"), fixture("clebsch"), cycle_graph(8)});
    TempFile checkpoint{"cubelike-checkpoint"};
    CorpusOptions options;
    options.checkpoint = checkpoint.path;

    vector<Report> first;
    auto s1 = run_text(text, options, first);
    CHECK(! s1.checkpoint_valid);
    CHECK(s1.processed == 4);

    vector<Report> second;
    auto s2 = run_text(text, options, second);
    CHECK(s2.checkpoint_valid);
    CHECK(s2.processed == 0);
    CHECK(s2.resumed == 4);

    // an interrupted run: only lines 1 and 3 were completed
    {
        std::ofstream out{checkpoint.path};
        out << "cubelike-checkpoint 1\ncorpus " << corpus_hash(text) << "\n1\n3\n";
    }
    vector<Report> third;
    auto s3 = run_text(text, options, third);
    CHECK(s3.resumed == 2);
    REQUIRE(third.size() == 2);
    CHECK(third[0].line == 2);
    CHECK(third[1].line == 4);

    vector<Report> fourth;
    auto s4 = run_text(text + to_graph6(complete_graph(2)) + "\n", options, fourth);
    CHECK(! s4.checkpoint_valid);
    CHECK(s4.processed == 5);
}

TEST_CASE("funnel counts")
{
    vector<Report> reports;
    for (auto & [name, x] : testing::fixture_corpus())
        reports.push_back(run_filters(x));
    for (auto & x : testing::order_16_cayley_corpus())
        reports.push_back(run_filters(x));
    auto f = funnel(reports);
    CHECK(f.total == reports.size());
    CHECK(f.cubelike + f.rejected + f.survivors + f.flagged + f.errors == f.total);
    CHECK(f.rows.front().entered == f.total - f.errors);
    // what leaves one filter is exactly what enters the next
    for (size_t i = 0 ; i + 1 < f.rows.size() ; ++i) {
        auto & row = f.rows[i];
        CHECK(f.rows[i + 1].entered <= row.entered);
        CHECK(f.rows[i + 1].entered == row.entered - row.rejected - row.cubelike);
    }
    auto table = format_funnel(f);
    CHECK(table.find("orbital-clique-3") != string::npos);
}

TEST_CASE("a tight timeout flags rather than passes")
{
    FilterConfig config;
    config.timeout = std::chrono::milliseconds{1};
    auto r = run_filters(fixture("z4z8"), config);
    CHECK(r.classification != Classification::survivor);
    CHECK(r.classification != Classification::cubelike);
    bool flagged = std::any_of(r.verdicts.begin(), r.verdicts.end(),
            [] (const FilterVerdict & v) { return v.outcome == FilterOutcome::indeterminate; });
    if (flagged) {
        auto v = std::find_if(r.verdicts.begin(), r.verdicts.end(),
                [] (const FilterVerdict & v) { return v.outcome == FilterOutcome::indeterminate; });
        CHECK(v->witness.contains("reason"));
    }
}
