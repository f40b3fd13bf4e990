#include <cubelike/graph.hh>
#include <cubelike/graph6.hh>
#include <cubelike/errors.hh>

#include <doctest.h>

#include <random>

using namespace cubelike;
using std::vector;

namespace
{
    auto random_graph(unsigned n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution coin(p);
        vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v)
                if (coin(rng))
                    edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }

    auto cube(unsigned d) -> Graph
    {
        Graph g = complete_graph(2);
        for (unsigned i = 1 ; i < d ; ++i)
            g = cartesian_product(g, complete_graph(2));
        return g;
    }
}

TEST_CASE("constructors reject malformed adjacency")
{
    vector<std::pair<Vertex, Vertex>> loop{{1, 1}};
    CHECK_THROWS_AS(Graph::from_edges(3, loop), LoopError);

    vector<Bitset> rows(2, Bitset{2});
    rows[0].set(1);
    CHECK_THROWS_AS(Graph::from_rows(rows), std::invalid_argument);

    Graph g{3};
    CHECK_THROWS_AS(g.with_labels({Word{2, 0}, Word{2, 1}, Word{2, 1}}), std::invalid_argument);
}

TEST_CASE("graph6")
{
    CHECK(to_graph6(complete_graph(1)) == "@");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(from_graph6("C~") == complete_graph(4));
    CHECK(from_graph6(">>graph6<<C~\n") == complete_graph(4));

    SUBCASE("round trip")
    {
        std::mt19937_64 rng(1);
        for (int i = 0 ; i < 10000 ; ++i) {
            auto g = random_graph(rng() % 65, 0.3, rng);
            REQUIRE(from_graph6(to_graph6(g)) == g);
        }
        auto big = random_graph(300, 0.05, rng);
        CHECK(from_graph6(to_graph6(big)) == big);
    }

    SUBCASE("errors carry offsets")
    {
        try {
            from_graph6("C~~");
            FAIL("accepted trailing bytes");
        }
        catch (const ParseError & e) {
            CHECK(e.offset() == 2);
        }
        CHECK_THROWS_AS(from_graph6("C\x01"), ParseError);
        CHECK_THROWS_AS(from_graph6(""), ParseError);
    }

    SUBCASE("sparse6")
    {
        // nauty's example: ":Fa@x^" is the 7-vertex graph with edges 0-1 0-2 1-2 5-6
        auto g = from_sparse6(":Fa@x^");
        CHECK(g.size() == 7);
        CHECK(g.edge_count() == 4);
        CHECK(g.adjacent(0, 1));
        CHECK(g.adjacent(0, 2));
        CHECK(g.adjacent(1, 2));
        CHECK(g.adjacent(5, 6));
        CHECK(parse_graph_line(":Fa@x^") == g);
    }

    SUBCASE("vertex cap")
    {
        auto saved = vertex_cap();
        set_vertex_cap(10);
        CHECK_THROWS_AS(from_graph6(to_graph6(Graph{11})), CapacityError);
        set_vertex_cap(saved);
    }
}

TEST_CASE("complement")
{
    CHECK(complement(complete_graph(5)).edge_count() == 0);
    std::mt19937_64 rng(2);
    for (int i = 0 ; i < 50 ; ++i) {
        auto g = random_graph(1 + rng() % 30, 0.5, rng);
        CHECK(complement(complement(g)) == g);
        CHECK(complement(g).edge_count() + g.edge_count() == g.size() * (g.size() - 1) / 2);
    }
}

TEST_CASE("cartesian product")
{
    auto c4 = cartesian_product(complete_graph(2), complete_graph(2));
    CHECK(c4.size() == 4);
    CHECK(c4.regular_degree() == 2u);
    CHECK(c4.edge_count() == 4);
    CHECK(! c4.adjacent(0, 3));

    auto rook = cartesian_product(complete_graph(4), complete_graph(4));
    CHECK(rook.size() == 16);
    CHECK(rook.regular_degree() == 6u);
    // (i, j) is vertex 4i + j
    CHECK(rook.adjacent(4 * 1 + 2, 4 * 3 + 2));
    CHECK(! rook.adjacent(4 * 1 + 2, 4 * 3 + 1));

    auto q3 = cube(3);
    CHECK(q3.regular_degree() == 3u);
    CHECK(is_bipartite(q3));

    auto saved = vertex_cap();
    set_vertex_cap(100);
    CHECK_THROWS_AS(cartesian_product(complete_graph(10), complete_graph(11)), CapacityError);
    set_vertex_cap(saved);
}

TEST_CASE("distances and odd girth")
{
    CHECK(odd_girth(cube(4)) == infinite_distance);
    CHECK(odd_girth(complete_graph(4)) == 3);
    CHECK(odd_girth(cycle_graph(7)) == 7);
    CHECK(odd_girth(cycle_graph(8)) == infinite_distance);

    // C_9 with a chord 0-4 has the odd cycle 0..4 of length 5
    vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 0 ; v < 9 ; ++v)
        edges.emplace_back(v, (v + 1) % 9);
    edges.emplace_back(0, 4);
    CHECK(odd_girth(Graph::from_edges(9, edges)) == 5);

    auto d = distances(Graph{3});
    CHECK(d[0][0] == 0);
    CHECK(d[0][1] == infinite_distance);

    SUBCASE("metric properties on random graphs")
    {
        std::mt19937_64 rng(3);
        for (int i = 0 ; i < 30 ; ++i) {
            auto g = random_graph(2 + rng() % 25, 0.15, rng);
            auto dist = distances(g);
            for (Vertex u = 0 ; u < g.size() ; ++u) {
                CHECK(dist[u][u] == 0);
                for (Vertex v = 0 ; v < g.size() ; ++v) {
                    CHECK(dist[u][v] == dist[v][u]);
                    for (Vertex w = 0 ; w < g.size() ; ++w)
                        if (dist[u][w] != infinite_distance && dist[w][v] != infinite_distance)
                            CHECK(dist[u][v] <= dist[u][w] + dist[w][v]);
                }
            }
        }
    }
}

TEST_CASE("components and induced subgraphs")
{
    CHECK(connected_components(Graph{5}).size() == 5);
    CHECK(is_connected(cube(3)));
    CHECK(! is_connected(Graph{2}));

    auto k5 = complete_graph(5);
    vector<Vertex> some{4, 1, 2};
    CHECK(induced_subgraph(k5, some) == complete_graph(3));
    vector<Vertex> bad{7};
    CHECK_THROWS_AS(induced_subgraph(k5, bad), std::out_of_range);

    // distance-2 graph of Q_4 splits by parity into two 8-vertex 6-regular components
    auto d2 = distance_graph(cube(4), 2);
    auto components = connected_components(d2);
    REQUIRE(components.size() == 2);
    for (auto & c : components) {
        CHECK(c.size() == 8);
        CHECK(induced_subgraph(d2, c).regular_degree() == 6u);
    }
}

TEST_CASE("bipartite double cover")
{
    auto k3 = bipartite_double_cover(complete_graph(3));
    CHECK(k3.size() == 6);
    CHECK(k3.regular_degree() == 2u);
    CHECK(is_connected(k3));

    auto c4 = cycle_graph(4);
    auto cover = bipartite_double_cover(c4);
    CHECK(connected_components(cover).size() == 2);
    // vertex (u, s) is 2u + s
    CHECK(cover.adjacent(2 * 0 + 0, 2 * 1 + 1));
    CHECK(! cover.adjacent(2 * 0 + 0, 2 * 1 + 0));
}

TEST_CASE("vertex maps")
{
    auto c6 = cycle_graph(6);
    VertexMap parity{2, {0, 1, 0, 1, 0, 1}};
    CHECK(parity.is_homomorphism(c6, complete_graph(2)));
    CHECK(parity.is_surjective());
    CHECK(! parity.is_injective());
    CHECK(parity.fibres()[1] == vector<Vertex>{1, 3, 5});
    CHECK(! VertexMap(3, {0, 0, 1, 1, 2, 2}).is_homomorphism(c6, complete_graph(3)));
    CHECK_THROWS_AS(VertexMap(2, {0, 2}), std::out_of_range);

    VertexMap swap{2, {1, 0}};
    CHECK(swap.after(parity).image() == vector<Vertex>{1, 0, 1, 0, 1, 0});
}
