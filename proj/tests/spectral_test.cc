#include "corpus.hh"

#include <cubelike/cayley.hh>
#include <cubelike/errors.hh>
#include <cubelike/fixtures.hh>
#include <cubelike/hom.hh>
#include <cubelike/spectral.hh>

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace cubelike;
using namespace cubelike::testing;
using std::vector;

namespace
{
    auto poly(std::initializer_list<long> coefficients) -> Polynomial
    {
        Polynomial p;
        for (auto c : coefficients)
            p.emplace_back(c);
        return p;
    }

    // det(tI - A) by the Leibniz expansion over all permutations
    auto leibniz_det(const Graph & g, long t) -> long
    {
        unsigned n = g.size();
        vector<unsigned> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        long total = 0;
        do {
            long term = 1;
            for (unsigned i = 0 ; i < n && term != 0 ; ++i)
                term *= (i == perm[i] ? t : 0) - (g.adjacent(i, perm[i]) ? 1 : 0);
            unsigned inversions = 0;
            for (unsigned i = 0 ; i < n ; ++i)
                for (unsigned j = i + 1 ; j < n ; ++j)
                    inversions += perm[i] > perm[j];
            total += inversions % 2 ? -term : term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return total;
    }

    auto value_at(const Polynomial & p, long t) -> mpz_class
    {
        mpz_class v = 0;
        for (size_t i = p.size() ; i-- > 0 ; )
            v = v * t + p[i];
        return v;
    }

    auto spectrum(std::initializer_list<std::pair<long, unsigned>> entries) -> Spectrum
    {
        return Spectrum{entries, std::nullopt};
    }
}

TEST_CASE("characteristic polynomial examples")
{
    CHECK(char_poly(complete_graph(2)) == poly({-1, 0, 1}));
    CHECK(char_poly(complete_graph(4)) == poly({-3, -8, -6, 0, 1}));
    CHECK(char_poly(Graph{0}) == poly({1}));
    CHECK(char_poly(Graph{3}) == poly({0, 0, 0, 1}));
    CHECK(to_string(char_poly(complete_graph(4))) == "x^4 - 6x^2 - 8x - 3");
    CHECK(to_string(poly({1})) == "1");
    CHECK_THROWS_AS(char_poly(hypercube(10).without_labels()), CapacityError);
}

TEST_CASE("characteristic polynomial agrees with the Leibniz expansion")
{
    std::mt19937_64 rng(29);
    for (unsigned trial = 0 ; trial < 60 ; ++trial) {
        unsigned n = 1 + trial % 8;
        vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v)
                if (rng() % 2)
                    edges.emplace_back(u, v);
        auto g = Graph::from_edges(n, edges);
        auto p = char_poly(g);
        REQUIRE(p.size() == n + 1);
        CHECK(p[n] == 1);
        // n + 1 points determine a polynomial of degree n
        for (long t = -1 ; t < static_cast<long>(n) ; ++t)
            CHECK(value_at(p, t) == leibniz_det(g, t));
        if (n >= 2) {
            CHECK(p[n - 1] == 0);
            CHECK(p[n - 2] == -static_cast<long>(g.edge_count()));
        }
    }
}

TEST_CASE("integer spectra")
{
    auto q3 = integer_spectrum(hypercube(3).without_labels());
    CHECK(q3 == spectrum({{3, 1}, {1, 3}, {-1, 3}, {-3, 1}}));

    auto c5 = integer_spectrum(cycle_graph(5));
    CHECK(! c5.integral());
    CHECK(c5.entries == vector<std::pair<long, unsigned>>{{2, 1}});
    CHECK(to_string(*c5.residual) == "x^4 + 2x^3 - x^2 - 2x + 1");

    CHECK(integer_spectrum(fixture("shrikhande")) == spectrum({{6, 1}, {2, 6}, {-2, 9}}));
    auto clebsch = spectrum({{5, 1}, {1, 10}, {-3, 5}});
    CHECK(integer_spectrum(fixture("clebsch").without_labels()) == clebsch);
    CHECK(integer_spectrum(fixture("clebsch")) == clebsch);
    CHECK(integer_spectrum(Graph{4}) == spectrum({{0, 4}}));
    CHECK(integer_spectrum(fixture("petersen")) == spectrum({{3, 1}, {1, 5}, {-2, 4}}));
}

TEST_CASE("labelled cubelike spectra agree with the characteristic polynomial")
{
    for (auto & [name, x] : fixture_corpus()) {
        if (! connection_set_of(x) || x.size() > spectral_cap)
            continue;
        CAPTURE(name);
        CHECK(integer_spectrum(x) == integer_spectrum(x.without_labels()));
    }
    for (unsigned d = 1 ; d <= 8 ; ++d)
        CHECK(integer_spectrum(hypercube(d).without_labels()) == cube_spectrum(d));
}

TEST_CASE("trace identities")
{
    for (auto & [name, x] : fixture_corpus()) {
        if (x.size() > spectral_cap)
            continue;
        CAPTURE(name);
        auto s = integer_spectrum(x);
        if (! s.integral())
            continue;
        long count = 0, trace = 0, trace2 = 0;
        for (auto [value, m] : s.entries) {
            count += m;
            trace += value * m;
            trace2 += value * value * m;
        }
        CHECK(count == x.size());
        CHECK(trace == 0);
        CHECK(trace2 == 2 * static_cast<long>(x.edge_count()));
    }
}

TEST_CASE("cube spectra and sub-multisets")
{
    CHECK(cube_spectrum(3) == spectrum({{3, 1}, {1, 3}, {-1, 3}, {-3, 1}}));
    CHECK(cube_spectrum(6).multiplicity(2) == 15);
    CHECK(is_submultiset_of_cube(integer_spectrum(fixture("shrikhande")), 6));
    CHECK(is_submultiset_of_cube(integer_spectrum(fixture("clebsch")), 5));
    CHECK(! is_submultiset_of_cube(integer_spectrum(fixture("clebsch")), 4));
    // eigenvalues of Q_d share the parity of d
    CHECK(! is_submultiset_of_cube(spectrum({{1, 1}}), 6));
    CHECK(! is_submultiset_of_cube(integer_spectrum(cycle_graph(5)), 2));
    CHECK(is_submultiset(spectrum({}), cube_spectrum(1)));
}

TEST_CASE("coverings transport spectra")
{
    vector<std::tuple<VertexMap, Graph, Graph>> coverings;
    for (auto & [name, y] : fixture_corpus()) {
        if (y.size() > 64)
            continue;
        vector<Vertex> image(2 * y.size());
        for (Vertex v = 0 ; v < image.size() ; ++v)
            image[v] = v / 2;
        coverings.emplace_back(VertexMap{y.size(), image}, bipartite_double_cover(y), y);
        if (auto c = connection_set_of(y); c && c->spans() && c->size() <= 9)
            coverings.emplace_back(as_vertex_map(cube_cover_map(*c)), hypercube(c->size()), y);
    }
    coverings.emplace_back(VertexMap{5, {0, 1, 2, 3, 4, 0, 1, 2, 3, 4}}, cycle_graph(10), cycle_graph(5));

    unsigned checked = 0;
    for (auto & [phi, x, y] : coverings) {
        REQUIRE(verify_covering_map(phi, x, y).ok);
        auto sy = integer_spectrum(y);
        auto sx = integer_spectrum(x);
        if (sy.integral()) {
            CHECK(is_submultiset(sy, sx));
            ++checked;
        }
        else
            // the residual of Y divides that of X, so it is still present
            CHECK(! sx.integral());
    }
    CHECK(checked > 20);
}
