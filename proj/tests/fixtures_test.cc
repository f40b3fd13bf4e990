#include "corpus.hh"

#include <cubelike/autgrp.hh>
#include <cubelike/cayley.hh>
#include <cubelike/errors.hh>
#include <cubelike/fixtures.hh>

#include <doctest.h>

#include <set>

using namespace cubelike;
using std::vector;

namespace
{
    // (n, k, lambda, mu) if strongly regular
    auto srg_parameters(const Graph & g) -> std::optional<std::array<unsigned, 4>>
    {
        auto k = g.regular_degree();
        if (! k)
            return std::nullopt;
        std::set<unsigned> lambda, mu;
        for (Vertex u = 0 ; u < g.size() ; ++u)
            for (Vertex v = u + 1 ; v < g.size() ; ++v)
                (g.adjacent(u, v) ? lambda : mu).insert(g.neighbours(u).intersection_count(g.neighbours(v)));
        if (lambda.size() != 1 || mu.size() != 1)
            return std::nullopt;
        return std::array<unsigned, 4>{g.size(), *k, *lambda.begin(), *mu.begin()};
    }
}

TEST_CASE("named fixtures")
{
    CHECK(are_isomorphic(fixture("clebsch"), folded_cube(5)));
    CHECK(srg_parameters(fixture("shrikhande")) == std::array<unsigned, 4>{16, 6, 2, 2});
    CHECK(srg_parameters(fixture("petersen")) == std::array<unsigned, 4>{10, 3, 0, 1});
    CHECK(srg_parameters(fixture("clebsch")) == std::array<unsigned, 4>{16, 5, 0, 2});
    // same parameters, different graphs
    CHECK(srg_parameters(fixture("rook44")) == std::array<unsigned, 4>{16, 6, 2, 2});
    CHECK(! are_isomorphic(fixture("rook44"), fixture("shrikhande")));

    auto rook = fixture("rook44");
    CHECK(are_isomorphic(rook, cartesian_product(complete_graph(4), complete_graph(4))));
    CHECK(is_cubelike(rook.without_labels()).outcome == Outcome::yes);

    auto cub = fixture("cuboctahedron-d3");
    CHECK(cub.regular_degree() == 5u);
    CHECK(is_vertex_transitive(cub));
    // antipodal pairs are the unique pairs at distance 3 in the skeleton
    CHECK(cub.edge_count() == 30);

    auto z = fixture("z4z8");
    CHECK(z.size() == 32);
    CHECK(z.regular_degree() == 16u);
    CHECK(is_connected(z));

    CHECK(fixture("halfQ8").size() == 128);
    CHECK_THROWS_AS(fixture("dodecahedron"), UnknownFixture);
    for (auto & name : fixture_names())
        CHECK(fixture(name) == fixture(name));
}

TEST_CASE("groups of order 16")
{
    auto groups = groups_of_order_16();
    REQUIRE(groups.size() == 14);
    std::set<std::string> signatures;
    unsigned abelian = 0;
    for (auto & g : groups) {
        CAPTURE(g.name);
        REQUIRE(g.order() == 16);
        for (unsigned a = 0 ; a < 16 ; ++a) {
            CHECK(g.multiply(0, a) == a);
            CHECK(g.multiply(a, 0) == a);
            std::set<unsigned> row(g.table[a].begin(), g.table[a].end());
            CHECK(row.size() == 16);
            for (unsigned b = 0 ; b < 16 ; ++b)
                for (unsigned c = 0 ; c < 16 ; ++c)
                    REQUIRE(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
        }
        abelian += g.is_abelian();
        // element orders, centre size and number of squares separate the fourteen groups
        std::multiset<unsigned> orders;
        unsigned centre = 0;
        std::set<unsigned> squares;
        for (unsigned a = 0 ; a < 16 ; ++a) {
            unsigned k = 1;
            for (unsigned x = a ; x != 0 ; x = g.multiply(x, a))
                ++k;
            orders.insert(k);
            bool central = true;
            for (unsigned b = 0 ; b < 16 ; ++b)
                central = central && g.multiply(a, b) == g.multiply(b, a);
            centre += central;
            squares.insert(g.multiply(a, a));
        }
        std::string signature = std::to_string(centre) + "/" + std::to_string(squares.size()) + "/";
        for (auto o : orders)
            signature += std::to_string(o) + ",";
        signatures.insert(signature);
    }
    CHECK(abelian == 5);
    CHECK(signatures.size() == 14);

    auto z16 = groups.front();
    CHECK(are_isomorphic(cayley_graph(z16, {1}), cycle_graph(16)));
    CHECK_THROWS_AS(cayley_graph(z16, {0}), LoopError);
}

TEST_CASE("Cayley graphs of order 16 are vertex-transitive")
{
    auto corpus = cubelike::testing::order_16_cayley_corpus();
    CHECK(corpus.size() > 200);
    unsigned cubelike = 0;
    for (unsigned i = 0 ; i < corpus.size() ; i += 7)
        CHECK(is_vertex_transitive(corpus[i]));
    for (auto & g : corpus)
        cubelike += is_cubelike(g).outcome == Outcome::yes;
    // every connected cubelike graph on 16 vertices appears
    CHECK(cubelike == enumerate_cubelike(4, true).graphs.size());
}
