#include <cubelike/cayley.hh>
#include <cubelike/autgrp.hh>
#include <cubelike/errors.hh>

#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

using namespace cubelike;
using std::vector;

namespace
{
    auto w(const char * s) -> Word { return Word::parse(s); }

    auto cs(const char * s) -> ConnectionSet { return ConnectionSet::parse(s); }

    // graph canonical forms of Cay(Z_2^n, S) over every subset S, kept if connected when asked
    auto brute_force_classes(unsigned n, bool connected_only) -> std::set<std::string>
    {
        unsigned points = (1u << n) - 1;
        std::set<std::string> forms;
        for (uint64_t mask = 0 ; mask < (uint64_t{1} << points) ; ++mask) {
            vector<Word> words;
            for (unsigned p = 0 ; p < points ; ++p)
                if ((mask >> p) & 1)
                    words.emplace_back(n, p + 1);
            ConnectionSet c{n, words};
            if (connected_only && ! c.spans())
                continue;
            forms.insert(canonical_form(cayley_z2(c)));
        }
        return forms;
    }
}

TEST_CASE("connection sets")
{
    CHECK_THROWS_AS(cs("00,10"), LoopError);
    CHECK_THROWS_AS(cs("10,100"), DimensionMismatch);
    CHECK_THROWS_AS(cs("1x"), ParseError);
    CHECK(cs("10,01,10").size() == 2);
    CHECK(cs("10,01").spans());
    CHECK(! cs("110,011,101").spans());
}

TEST_CASE("cayley_z2")
{
    CHECK(cayley_z2(cs("10,01,11")) == complete_graph(4).with_labels({w("00"), w("10"), w("01"), w("11")}));

    for (unsigned d = 1 ; d <= 6 ; ++d) {
        auto q = hypercube(d);
        CHECK(q.size() == (1u << d));
        CHECK(q.regular_degree() == d);
        CHECK(is_bipartite(q));
    }

    auto rook = cayley_z2(cs("1000,0100,1100,0010,0001,0011"));
    CHECK(are_isomorphic(rook, cartesian_product(complete_graph(4), complete_graph(4))));

    auto c = cs("1000,0100,0010,0001,1111");
    auto labelled = cayley_z2(c);
    CHECK(connection_set_of(labelled) == c);
    CHECK(! connection_set_of(labelled.without_labels()));

    SUBCASE("Cayley graphs are generously transitive with translations in Aut")
    {
        for (auto text : {"1000,0100,0010,0001,1111", "100,010,001", "1100,0110,0011,1001,1010"}) {
            auto g = cayley_z2(cs(text));
            auto aut = automorphism_group(g);
            CHECK(is_generously_transitive(g, aut));
            for (Vertex t = 1 ; t < g.size() ; ++t) {
                vector<Vertex> image(g.size());
                for (Vertex v = 0 ; v < g.size() ; ++v)
                    image[v] = v ^ t;
                CHECK(aut.contains(Permutation{image}));
            }
        }
    }
}

TEST_CASE("folded and halved cubes")
{
    CHECK(folded_cube(3).same_adjacency(complete_graph(4)));
    auto clebsch = folded_cube(5);
    CHECK(clebsch.size() == 16);
    CHECK(clebsch.regular_degree() == 5u);
    CHECK(odd_girth(clebsch) == 5);
    CHECK(are_isomorphic(halved_cube(5), complement(clebsch)));
    CHECK(halved_cube(4).regular_degree() == 6u);
    CHECK(halved_cube(8).size() == 128);
    CHECK_THROWS_AS(folded_cube(1), std::invalid_argument);

    // the halved 4-cube is a component of the distance-2 graph of Q_4
    auto d2 = distance_graph(hypercube(4), 2);
    auto component = connected_components(d2).front();
    CHECK(are_isomorphic(induced_subgraph(d2, component), halved_cube(4)));
}

TEST_CASE("cubelike hull")
{
    auto k2 = cubelike_hull(complete_graph(2));
    CHECK(k2.graph.same_adjacency(complete_graph(2)));

    CHECK(are_isomorphic(cubelike_hull(cycle_graph(5)).graph, folded_cube(5)));
    CHECK(are_isomorphic(cubelike_hull(cycle_graph(7)).graph, folded_cube(7)));
    for (unsigned n = 2 ; n <= 7 ; ++n)
        CHECK(are_isomorphic(cubelike_hull(complete_graph(n)).graph, halved_cube(n)));

    SUBCASE("embedding is faithful")
    {
        vector<Graph> corpus{cycle_graph(5), complete_graph(4), path_graph(6), cycle_graph(6), folded_cube(3)};
        // Petersen as a Kneser graph
        vector<unsigned> pairs;
        for (unsigned m = 0 ; m < 32 ; ++m)
            if (std::popcount(m) == 2)
                pairs.push_back(m);
        vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex u = 0 ; u < 10 ; ++u)
            for (Vertex v = u + 1 ; v < 10 ; ++v)
                if ((pairs[u] & pairs[v]) == 0)
                    edges.emplace_back(u, v);
        corpus.push_back(Graph::from_edges(10, edges));

        for (auto & x : corpus) {
            auto hull = cubelike_hull(x);
            CHECK(hull.embedding.is_injective());
            CHECK(hull.embedding.is_homomorphism(x, hull.graph));
            auto image = hull.embedding.image();
            CHECK(induced_subgraph(hull.graph, image).same_adjacency(x));
            CHECK(hull.graph.size() == (1u << (x.size() - 1)));
        }
    }
}

TEST_CASE("cube cover map")
{
    auto basis = cs("100,010,001");
    auto id = cube_cover_map(basis);
    for (unsigned x = 0 ; x < 8 ; ++x)
        CHECK(id.apply(Word{3, x}) == Word{3, x});

    auto fold = cube_cover_map(cs("1000,0100,0010,0001,1111"));
    // elements are sorted, so e5 is sent to the all-ones word
    CHECK(fold.domain_dimension() == 5);
    CHECK(fold.kernel().rank() == 1);
    CHECK(fold.kernel().contains(w("11111")));
    auto fibres = as_vertex_map(fold).fibres();
    for (auto & f : fibres)
        CHECK(f.size() == 2);

    auto halved = cube_cover_map(cs("100,010,001,110,101,011"));
    for (auto & f : as_vertex_map(halved).fibres())
        CHECK(f.size() == 8);

    CHECK_THROWS_AS(cube_cover_map(cs("110,011")), NotConnectedError);
}

TEST_CASE("quotient by subgroup")
{
    auto q3 = hypercube(3);
    auto trivial = quotient_by_subgroup(q3, span(vector<Word>{}, 3));
    CHECK(trivial.graph == q3);

    for (unsigned n = 3 ; n <= 7 ; ++n) {
        Word ones{n, (uint64_t{1} << n) - 1};
        auto folded = quotient_by_subgroup(hypercube(n), span(vector<Word>{ones}));
        CHECK(are_isomorphic(folded.graph, folded_cube(n)));
        CHECK(folded.map.is_homomorphism(hypercube(n), folded.graph));
        CHECK(folded.map.is_surjective());
    }

    auto c4 = quotient_by_subgroup(q3, span(vector<Word>{w("110")}));
    CHECK(c4.graph.size() == 4);
    CHECK(are_isomorphic(c4.graph, cycle_graph(4)));

    CHECK_THROWS_AS(quotient_by_subgroup(q3, span(vector<Word>{w("100")})), LoopError);
}

TEST_CASE("enumerate_cubelike")
{
    auto one = enumerate_cubelike(1, true);
    REQUIRE(one.graphs.size() == 1);
    CHECK(one.graphs.front().same_adjacency(complete_graph(2)));

    // C_4 and K_4
    CHECK(enumerate_cubelike(2, true).graphs.size() == 2);
    CHECK(enumerate_cubelike(2, false).graphs.size() == 4);

    for (unsigned n = 1 ; n <= 4 ; ++n)
        for (bool connected : {true, false}) {
            auto result = enumerate_cubelike(n, connected);
            auto oracle = brute_force_classes(n, connected);
            std::set<std::string> forms;
            for (auto & g : result.graphs)
                forms.insert(canonical_form(g));
            CHECK(forms.size() == result.graphs.size());
            CHECK(forms == oracle);
        }

    CHECK_THROWS_AS(enumerate_cubelike(6, true), CapacityError);
}

TEST_CASE("GL canonical form")
{
    // a basis and any other basis
    CHECK(gl_canonical_form(3, {w("100"), w("010"), w("001")}) == gl_canonical_form(3, {w("110"), w("011"), w("111")}));
    // three independent vectors versus three on a line
    CHECK(gl_canonical_form(3, {w("100"), w("010"), w("001")}) != gl_canonical_form(3, {w("100"), w("010"), w("110")}));
}

TEST_CASE("is_cubelike")
{
    auto q3 = is_cubelike(hypercube(3).without_labels());
    CHECK(q3.outcome == Outcome::yes);

    auto clebsch = is_cubelike(folded_cube(5).without_labels());
    REQUIRE(clebsch.outcome == Outcome::yes);
    auto & witness = *clebsch.witness;
    CHECK(cayley_z2(witness.connection_set).same_adjacency(relabel(folded_cube(5).without_labels(), [&] {
        vector<Vertex> p(16);
        for (Vertex v = 0 ; v < 16 ; ++v)
            p[v] = static_cast<Vertex>(witness.labels[v].bits());
        return p;
    }())));
    CHECK(gl_canonical_form(4, witness.connection_set.elements()) == gl_canonical_form(4, cs("1000,0100,0010,0001,1111").elements()));

    // Shrikhande: Cay(Z_4 x Z_4, {±(1,0), ±(0,1), ±(1,1)})
    vector<std::pair<Vertex, Vertex>> edges;
    int steps[3][2] = {{1, 0}, {0, 1}, {1, 1}};
    for (int a = 0 ; a < 4 ; ++a)
        for (int b = 0 ; b < 4 ; ++b)
            for (auto & s : steps)
                edges.emplace_back(a * 4 + b, ((a + s[0]) % 4) * 4 + (b + s[1]) % 4);
    CHECK(is_cubelike(Graph::from_edges(16, edges)).outcome == Outcome::no);

    CHECK(is_cubelike(cycle_graph(8)).outcome == Outcome::no);
    CHECK(is_cubelike(cycle_graph(4)).outcome == Outcome::yes);
    CHECK(is_cubelike(complete_graph(6)).outcome == Outcome::no);
    CHECK(is_cubelike(complete_graph(16)).outcome == Outcome::yes);
    CHECK(is_cubelike(Graph{8}).outcome == Outcome::yes);
    CHECK(is_cubelike(path_graph(4)).outcome == Outcome::no);

    SUBCASE("every enumerated cubelike graph is recognised after relabelling")
    {
        std::mt19937_64 rng(9);
        for (auto & g : enumerate_cubelike(4, false).graphs) {
            vector<Vertex> p(16);
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            auto scrambled = relabel(g.without_labels(), p);
            auto r = is_cubelike(scrambled);
            REQUIRE(r.outcome == Outcome::yes);
            CHECK(are_isomorphic(cayley_z2(r.witness->connection_set), g));
        }
    }
}

TEST_CASE("clique subgroups and linear colourings")
{
    auto half_q8 = connection_set_of(halved_cube(8)).value();
    CHECK(largest_clique_subgroup(half_q8).order() == 4);
    CHECK(largest_clique_subgroup(cs("10,01,11")).order() == 4);

    auto h = linear_colouring_subgroup(half_q8, 3);
    REQUIRE(h);
    CHECK(h->rank() == 4);
    for (auto & c : half_q8.elements())
        CHECK(! h->contains(c));
    // every coset of a subgroup missing C is independent, so no subgroup of rank 5 avoids weights 1 and 2
    CHECK(! linear_colouring_subgroup(half_q8, 2));
}
