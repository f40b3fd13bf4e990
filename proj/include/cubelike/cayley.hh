#ifndef CUBELIKE_CAYLEY_HH
#define CUBELIKE_CAYLEY_HH

#include <cubelike/deadline.hh>
#include <cubelike/gf2.hh>
#include <cubelike/graph.hh>

#include <optional>
#include <string_view>
#include <vector>

namespace cubelike
{
    /// A connection set of Z_2^n: distinct nonzero words, kept sorted.
    class ConnectionSet
    {
        public:
            /// Duplicates collapse. Throws LoopError if zero is present.
            ConnectionSet(unsigned dimension, std::vector<Word> elements);

            /// Comma-separated little-endian bitstrings, e.g. "100,010,001".
            static auto parse(std::string_view text) -> ConnectionSet;

            auto dimension() const -> unsigned { return _dimension; }
            auto elements() const -> const std::vector<Word> & { return _elements; }
            auto size() const -> unsigned { return static_cast<unsigned>(_elements.size()); }
            auto contains(const Word & w) const -> bool;
            /// Whether the elements span Z_2^n, i.e. the Cayley graph is connected.
            auto spans() const -> bool;
            auto to_string() const -> std::string;

            friend auto operator== (const ConnectionSet &, const ConnectionSet &) -> bool = default;

        private:
            unsigned _dimension;
            std::vector<Word> _elements;
    };

    /// Cay(Z_2^n, C). Vertex i carries the label Word{n, i}.
    auto cayley_z2(const ConnectionSet & c) -> Graph;

    /// The connection set of a labelled graph, if it is the Cayley graph of
    /// its labels (labels must form all of Z_2^n).
    auto connection_set_of(const Graph & z) -> std::optional<ConnectionSet>;

    auto hypercube(unsigned d) -> Graph;
    /// Cay(Z_2^{n-1}, {e_1 .. e_{n-1}, e_1 + .. + e_{n-1}}).
    auto folded_cube(unsigned n) -> Graph;
    /// Cay(Z_2^{n-1}, weight one and weight two words).
    auto halved_cube(unsigned n) -> Graph;

    /// Z_2[X] on the even-weight words of Z_2^{V(X)}. The word w is vertex
    /// w >> 1 and is labelled by w with coordinate e_1 dropped, which is a
    /// linear isomorphism onto Z_2^{|V(X)|-1}; the hull is thus an ordinary
    /// labelled cayley_z2 graph. The base vertex is u0 = 0 and the
    /// embedding sends v to e_0 + e_v.
    struct Hull
    {
        Graph graph;
        VertexMap embedding;
        ConnectionSet connection_set;
    };

    auto cubelike_hull(const Graph & x) -> Hull;

    /// Connection set of Z_2[X] without building the graph.
    auto hull_connection_set(const Graph & x) -> ConnectionSet;

    /// f: Z_2^d -> Z_2^n with f(e_i) = c_i, in the order of c.elements().
    auto cube_cover_map(const ConnectionSet & c) -> LinearMap;

    /// A linear map read as a vertex map between cayley_z2 vertex indexings.
    auto as_vertex_map(const LinearMap & f) -> VertexMap;

    struct Quotient
    {
        Graph graph;
        VertexMap map;
        ConnectionSet connection_set;
    };

    /// Z / H for a labelled cubelike Z. Cosets are labelled by their
    /// canonical representative with the pivot coordinates of H removed.
    /// Throws LoopError if some coset contains an edge.
    auto quotient_by_subgroup(const Graph & z, const Subgroup & h) -> Quotient;

    struct CubelikeEnumeration
    {
        /// One labelled representative per isomorphism class.
        std::vector<Graph> graphs;
        /// Number of GL(n,2)-orbits of connection sets visited.
        std::size_t gl_orbits = 0;
    };

    /// Cubelike graphs on 2^n vertices up to isomorphism, n <= 5. Connection
    /// sets are first reduced modulo GL(n,2), then deduplicated by graph
    /// canonical form. The empty connection set is included unless
    /// connected_only is set.
    auto enumerate_cubelike(unsigned n, bool connected_only) -> CubelikeEnumeration;

    /// GL(n,2)-canonical form of a set of nonzero words: two sets get the
    /// same string iff some invertible linear map carries one to the other.
    auto gl_canonical_form(unsigned n, const std::vector<Word> & set) -> std::string;

    struct CubelikeWitness
    {
        /// labels[v] is the group element of vertex v; vertex 0 gets zero.
        std::vector<Word> labels;
        ConnectionSet connection_set;
    };

    struct CubelikeRecognition
    {
        Outcome outcome = Outcome::no;
        std::optional<CubelikeWitness> witness;
    };

    /// Searches Aut(X) for a regular elementary abelian 2-subgroup by
    /// building commuting fixed-point-free involutions one at a time.
    auto is_cubelike(const Graph & x, const Deadline & deadline = {}) -> CubelikeRecognition;

    /// A largest subgroup H of Z_2^n with H \ {0} inside C, i.e. inducing a clique.
    auto largest_clique_subgroup(const ConnectionSet & c) -> Subgroup;

    /// A subgroup H of codimension k with H and C disjoint, if one exists.
    /// The cosets of H then properly colour Cay(Z_2^n, C) with 2^k colours.
    auto linear_colouring_subgroup(const ConnectionSet & c, unsigned k) -> std::optional<Subgroup>;
}

#endif
