#ifndef CUBELIKE_FIXTURES_HH
#define CUBELIKE_FIXTURES_HH

#include <cubelike/graph.hh>

#include <string>
#include <string_view>
#include <vector>

namespace cubelike
{
    /// Named graphs: petersen, shrikhande, rook44, cuboctahedron-d3, clebsch,
    /// clebsch-complement, halfQ8, z4z8. Throws UnknownFixture otherwise.
    auto fixture(std::string_view name) -> Graph;

    auto fixture_names() -> std::vector<std::string>;

    /// A finite group by its multiplication table; element 0 is the identity.
    struct FiniteGroup
    {
        std::string name;
        std::vector<std::vector<unsigned>> table;

        auto order() const -> unsigned { return static_cast<unsigned>(table.size()); }
        auto multiply(unsigned a, unsigned b) const -> unsigned { return table[a][b]; }
        auto inverse(unsigned a) const -> unsigned;
        auto is_abelian() const -> bool;
    };

    /// The fourteen groups of order 16 up to isomorphism.
    auto groups_of_order_16() -> std::vector<FiniteGroup>;

    /// Cay(G, S u S^-1) with g adjacent to gs. Throws LoopError if S holds the identity.
    auto cayley_graph(const FiniteGroup & g, const std::vector<unsigned> & s) -> Graph;
}

#endif
