#include <cubelike/fixtures.hh>
#include <cubelike/cayley.hh>
#include <cubelike/errors.hh>

#include <bit>
#include <functional>

using std::vector;

namespace cubelike
{
    namespace
    {
        using Edges = vector<std::pair<Vertex, Vertex>>;

        // Kneser graph K(5,2)
        auto petersen() -> Graph
        {
            vector<unsigned> pairs;
            for (unsigned m = 0 ; m < 32 ; ++m)
                if (std::popcount(m) == 2)
                    pairs.push_back(m);
            Edges edges;
            for (Vertex u = 0 ; u < pairs.size() ; ++u)
                for (Vertex v = u + 1 ; v < pairs.size() ; ++v)
                    if ((pairs[u] & pairs[v]) == 0)
                        edges.emplace_back(u, v);
            return Graph::from_edges(10, edges);
        }

        // Cay(Z_4 x Z_4, {±(1,0), ±(0,1), ±(1,1)}), vertex (a,b) at 4a + b
        const Edges shrikhande_edges{
            {0, 1}, {0, 3}, {0, 4}, {0, 5}, {0, 12}, {0, 15}, {1, 2}, {1, 5}, {1, 6}, {1, 12}, {1, 13}, {2, 3},
            {2, 6}, {2, 7}, {2, 13}, {2, 14}, {3, 4}, {3, 7}, {3, 14}, {3, 15}, {4, 5}, {4, 7}, {4, 8}, {4, 9},
            {5, 6}, {5, 9}, {5, 10}, {6, 7}, {6, 10}, {6, 11}, {7, 8}, {7, 11}, {8, 9}, {8, 11}, {8, 12}, {8, 13},
            {9, 10}, {9, 13}, {9, 14}, {10, 11}, {10, 14}, {10, 15}, {11, 12}, {11, 15}, {12, 13}, {12, 15},
            {13, 14}, {14, 15}};

        // Cuboctahedron skeleton plus its six antipodal pairs. Vertices are
        // the permutations of (±1, ±1, 0) in decreasing lexicographic order;
        // edges join inner product 1 (skeleton) and -2 (antipodes).
        const Edges cuboctahedron_d3_edges{
            {0, 1}, {0, 2}, {0, 4}, {0, 5}, {0, 11}, {1, 3}, {1, 4}, {1, 6}, {1, 10}, {2, 3}, {2, 5}, {2, 7},
            {2, 9}, {3, 6}, {3, 7}, {3, 8}, {4, 7}, {4, 8}, {4, 9}, {5, 6}, {5, 8}, {5, 10}, {6, 9}, {6, 11},
            {7, 10}, {7, 11}, {8, 9}, {8, 10}, {9, 11}, {10, 11}};

        auto cyclic_product(unsigned m, unsigned k) -> FiniteGroup
        {
            FiniteGroup g{"Z" + std::to_string(m) + (k > 1 ? "xZ" + std::to_string(k) : ""), {}};
            g.table.assign(m * k, vector<unsigned>(m * k));
            for (unsigned a = 0 ; a < m * k ; ++a)
                for (unsigned b = 0 ; b < m * k ; ++b)
                    g.table[a][b] = ((a / k + b / k) % m) * k + (a % k + b % k) % k;
            return g;
        }

        // <a, b | a^m, b^k = a^s, b^-1 a b = a^r>, element a^i b^j at index j m + i
        auto metacyclic(std::string name, unsigned m, unsigned k, unsigned r, unsigned s) -> FiniteGroup
        {
            FiniteGroup g{std::move(name), {}};
            unsigned n = m * k;
            g.table.assign(n, vector<unsigned>(n));
            for (unsigned x = 0 ; x < n ; ++x)
                for (unsigned y = 0 ; y < n ; ++y) {
                    unsigned i1 = x % m, j1 = x / m, i2 = y % m, j2 = y / m;
                    // b^j1 a^i2 = a^(i2 t) b^j1 with t = r^-j1 mod m
                    unsigned rinv = 1;
                    while ((rinv * r) % m != 1 % m)
                        ++rinv;
                    unsigned t = 1;
                    for (unsigned e = 0 ; e < j1 ; ++e)
                        t = (t * rinv) % m;
                    unsigned i = (i1 + i2 * t) % m;
                    unsigned j = j1 + j2;
                    if (j >= k) {
                        j -= k;
                        i = (i + s) % m;
                    }
                    g.table[x][y] = j * m + i;
                }
            return g;
        }

        // N x| Z_2 for an automorphism phi of N of order dividing 2; (n, j) at index j |N| + n
        auto semidirect_z2(std::string name, const FiniteGroup & normal, const vector<unsigned> & phi) -> FiniteGroup
        {
            FiniteGroup g{std::move(name), {}};
            unsigned n = normal.order();
            g.table.assign(2 * n, vector<unsigned>(2 * n));
            for (unsigned x = 0 ; x < 2 * n ; ++x)
                for (unsigned y = 0 ; y < 2 * n ; ++y) {
                    unsigned n1 = x % n, j1 = x / n, n2 = y % n, j2 = y / n;
                    unsigned twisted = j1 ? phi[n2] : n2;
                    g.table[x][y] = ((j1 + j2) % 2) * n + normal.multiply(n1, twisted);
                }
            return g;
        }

        auto direct_z2(const FiniteGroup & h) -> FiniteGroup
        {
            vector<unsigned> identity(h.order());
            for (unsigned i = 0 ; i < h.order() ; ++i)
                identity[i] = i;
            return semidirect_z2(h.name + "xZ2", h, identity);
        }
    }

    auto fixture(std::string_view name) -> Graph
    {
        if (name == "petersen")
            return petersen();
        if (name == "shrikhande")
            return Graph::from_edges(16, shrikhande_edges);
        if (name == "rook44")
            return cayley_z2(ConnectionSet::parse("1000,0100,1100,0010,0001,0011"));
        if (name == "cuboctahedron-d3")
            return Graph::from_edges(12, cuboctahedron_d3_edges);
        if (name == "clebsch")
            return folded_cube(5);
        if (name == "clebsch-complement")
            return complement(folded_cube(5));
        if (name == "halfQ8")
            return halved_cube(8);
        if (name == "z4z8") {
            auto g = cyclic_product(4, 8);
            return cayley_graph(g, {1 * 8 + 0, 0 * 8 + 6, 0 * 8 + 3, 0 * 8 + 7, 1 * 8 + 5, 1 * 8 + 1, 1 * 8 + 6, 2 * 8 + 2});
        }
        throw UnknownFixture("unknown fixture '" + std::string{name} + "'");
    }

    auto fixture_names() -> vector<std::string>
    {
        return {"petersen", "shrikhande", "rook44", "cuboctahedron-d3", "clebsch", "clebsch-complement", "halfQ8", "z4z8"};
    }

    auto FiniteGroup::inverse(unsigned a) const -> unsigned
    {
        for (unsigned b = 0 ; b < order() ; ++b)
            if (table[a][b] == 0)
                return b;
        throw std::logic_error("group table without inverses");
    }

    auto FiniteGroup::is_abelian() const -> bool
    {
        for (unsigned a = 0 ; a < order() ; ++a)
            for (unsigned b = 0 ; b < a ; ++b)
                if (table[a][b] != table[b][a])
                    return false;
        return true;
    }

    auto groups_of_order_16() -> vector<FiniteGroup>
    {
        auto z4z2 = cyclic_product(4, 2);
        // on Z_4 x Z_2 with (x, y) at 2x + y
        vector<unsigned> shear(8), central(8);
        for (unsigned x = 0 ; x < 4 ; ++x)
            for (unsigned y = 0 ; y < 2 ; ++y) {
                shear[2 * x + y] = 2 * x + (y + x) % 2;
                central[2 * x + y] = 2 * ((x + 2 * y) % 4) + y;
            }
        auto z2z2 = cyclic_product(2, 2);
        return {
            cyclic_product(16, 1),
            cyclic_product(4, 4),
            semidirect_z2("(Z4xZ2):Z2", z4z2, shear),
            metacyclic("Z4:Z4", 4, 4, 3, 0),
            cyclic_product(8, 2),
            metacyclic("M16", 8, 2, 5, 0),
            metacyclic("D16", 8, 2, 7, 0),
            metacyclic("SD16", 8, 2, 3, 0),
            metacyclic("Q16", 8, 2, 7, 4),
            direct_z2(z4z2),
            direct_z2(metacyclic("D8", 4, 2, 3, 0)),
            direct_z2(metacyclic("Q8", 4, 2, 3, 2)),
            semidirect_z2("Pauli", z4z2, central),
            direct_z2(direct_z2(z2z2)),
        };
    }

    auto cayley_graph(const FiniteGroup & g, const vector<unsigned> & s) -> Graph
    {
        Edges edges;
        for (auto c : s) {
            if (c == 0)
                throw LoopError("connection set contains the identity");
            for (unsigned x = 0 ; x < g.order() ; ++x)
                edges.emplace_back(x, g.multiply(x, c));
        }
        return Graph::from_edges(g.order(), edges);
    }
}
