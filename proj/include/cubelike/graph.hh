#ifndef CUBELIKE_GRAPH_HH
#define CUBELIKE_GRAPH_HH

#include <cubelike/bitset.hh>
#include <cubelike/gf2.hh>

#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cubelike
{
    using Vertex = unsigned;

    /// Default hard cap on vertex count for constructions. Adjustable at runtime.
    auto vertex_cap() -> unsigned;
    auto set_vertex_cap(unsigned cap) -> void;

    /// An immutable simple graph with bitset adjacency rows. Optionally each
    /// vertex carries a distinct Word label tying it to a group element.
    class Graph
    {
        public:
            Graph() = default;

            /// Edgeless graph on n vertices.
            explicit Graph(unsigned n);

            static auto from_edges(unsigned n, std::span<const std::pair<Vertex, Vertex>> edges) -> Graph;
            static auto from_rows(std::vector<Bitset> rows) -> Graph;

            auto size() const -> unsigned { return static_cast<unsigned>(_adj.size()); }
            auto adjacent(Vertex u, Vertex v) const -> bool { return _adj[u].test(v); }
            auto neighbours(Vertex v) const -> const Bitset & { return _adj[v]; }
            auto degree(Vertex v) const -> unsigned { return _adj[v].count(); }
            auto edge_count() const -> unsigned;
            auto edges() const -> std::vector<std::pair<Vertex, Vertex>>;

            /// Degree if every vertex has the same degree.
            auto regular_degree() const -> std::optional<unsigned>;

            auto has_labels() const -> bool { return ! _labels.empty(); }
            auto labels() const -> const std::vector<Word> & { return _labels; }
            auto label(Vertex v) const -> const Word & { return _labels[v]; }

            /// Vertex carrying the given label. Requires has_labels().
            auto vertex_of(const Word & w) const -> std::optional<Vertex>;

            /// Copy with labels attached (distinct, one dimension) or removed.
            auto with_labels(std::vector<Word> labels) const -> Graph;
            auto without_labels() const -> Graph;

            /// Same graph as unlabeled adjacency (labels ignored).
            auto same_adjacency(const Graph & other) const -> bool { return _adj == other._adj; }

            friend auto operator== (const Graph &, const Graph &) -> bool = default;

        private:
            auto check() const -> void;

            std::vector<Bitset> _adj;
            std::vector<Word> _labels;
    };

    /// A loopless digraph, used for orbital digraphs.
    class Digraph
    {
        public:
            explicit Digraph(unsigned n);
            static auto from_rows(std::vector<Bitset> out_rows) -> Digraph;

            auto size() const -> unsigned { return static_cast<unsigned>(_out.size()); }
            auto has_arc(Vertex u, Vertex v) const -> bool { return _out[u].test(v); }
            auto out_neighbours(Vertex v) const -> const Bitset & { return _out[v]; }
            auto arc_count() const -> unsigned;
            auto is_symmetric() const -> bool;

            /// The underlying graph. Requires is_symmetric().
            auto to_graph() const -> Graph;

        private:
            std::vector<Bitset> _out;
    };

    /// A function V(X) -> V(Y).
    class VertexMap
    {
        public:
            VertexMap() = default;
            VertexMap(unsigned codomain_size, std::vector<Vertex> image);

            static auto identity(unsigned n) -> VertexMap;

            auto domain_size() const -> unsigned { return static_cast<unsigned>(_image.size()); }
            auto codomain_size() const -> unsigned { return _codomain_size; }
            auto operator() (Vertex v) const -> Vertex { return _image[v]; }
            auto image() const -> const std::vector<Vertex> & { return _image; }

            /// Set of vertices hit.
            auto range() const -> std::vector<Vertex>;

            /// (this after first)(v) = this(first(v)).
            auto after(const VertexMap & first) const -> VertexMap;

            auto is_homomorphism(const Graph & from, const Graph & to) const -> bool;
            auto is_injective() const -> bool;
            auto is_surjective() const -> bool;

            /// Fibres indexed by codomain vertex.
            auto fibres() const -> std::vector<std::vector<Vertex>>;

            friend auto operator== (const VertexMap &, const VertexMap &) -> bool = default;

        private:
            unsigned _codomain_size = 0;
            std::vector<Vertex> _image;
    };

    inline constexpr unsigned infinite_distance = std::numeric_limits<unsigned>::max();

    auto complete_graph(unsigned n) -> Graph;
    auto cycle_graph(unsigned n) -> Graph;
    auto path_graph(unsigned n) -> Graph;

    auto complement(const Graph & g) -> Graph;

    /// Vertex (i, j) becomes i * |V(y)| + j.
    auto cartesian_product(const Graph & x, const Graph & y) -> Graph;

    /// Tensor product with K_2: vertex (u, s) becomes 2u + s and (u,0) ~ (v,1) iff u ~ v.
    auto bipartite_double_cover(const Graph & g) -> Graph;

    /// Row u holds the hop distances from u; infinite_distance across components.
    auto distances(const Graph & g) -> std::vector<std::vector<unsigned>>;
    auto bfs_distances(const Graph & g, Vertex source) -> std::vector<unsigned>;

    /// Shortest odd closed walk length, or infinite_distance for bipartite graphs.
    auto odd_girth(const Graph & g) -> unsigned;
    auto is_bipartite(const Graph & g) -> bool;

    auto connected_components(const Graph & g) -> std::vector<std::vector<Vertex>>;
    auto is_connected(const Graph & g) -> bool;

    /// Vertices renumbered 0.. in the given order; labels kept.
    auto induced_subgraph(const Graph & g, std::span<const Vertex> vertices) -> Graph;

    /// Graph on the same vertices whose edges join vertices at distance exactly k.
    auto distance_graph(const Graph & g, unsigned k) -> Graph;

    /// Relabels vertices: vertex v of g becomes perm[v].
    auto relabel(const Graph & g, std::span<const Vertex> perm) -> Graph;
}

#endif
