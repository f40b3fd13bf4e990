#ifndef CUBELIKE_AUTGRP_HH
#define CUBELIKE_AUTGRP_HH

#include <cubelike/graph.hh>
#include <cubelike/perm.hh>

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cubelike
{
    /// Result of one canonical-labelling search.
    struct CanonicalResult
    {
        /// labelling[v] is the canonical position of vertex v.
        std::vector<Vertex> labelling;
        /// graph6 of the relabelled graph; equal strings iff isomorphic.
        std::string canonical_graph6;
        /// Generates Aut(X); each is checked to preserve adjacency.
        std::vector<Permutation> generators;
        mpz_class group_order;
        std::size_t leaves_visited = 0;
    };

    /// Individualisation-refinement search: equitable refinement, first
    /// smallest non-singleton target cell, automorphism pruning and
    /// first-path orbit products for the group order. An optional vertex
    /// colouring restricts to colour-preserving automorphisms.
    auto canonical_search(const Graph & x, const std::vector<unsigned> & colours = {}) -> CanonicalResult;

    auto automorphism_group(const Graph & x) -> PermGroup;
    auto canonical_form(const Graph & x) -> std::string;
    auto are_isomorphic(const Graph & x, const Graph & y) -> bool;

    /// An isomorphism x -> y if one exists.
    auto find_isomorphism(const Graph & x, const Graph & y) -> std::optional<VertexMap>;

    auto is_vertex_transitive(const Graph & x) -> bool;
    auto is_vertex_transitive(const Graph & x, const PermGroup & aut) -> bool;
    auto is_generously_transitive(const Graph & x) -> bool;
    auto is_generously_transitive(const Graph & x, const PermGroup & aut) -> bool;

    /// Orbits of a group on ordered pairs (u, v), u != v.
    class OrbitalPartition
    {
        public:
            OrbitalPartition(unsigned n, std::vector<unsigned> ids, std::vector<unsigned> paired);

            auto vertex_count() const -> unsigned { return _n; }
            auto count() const -> unsigned { return static_cast<unsigned>(_paired.size()); }
            /// Orbital id of the ordered pair (u, v), u != v.
            auto id(Vertex u, Vertex v) const -> unsigned { return _ids[u * _n + v]; }
            auto paired(unsigned id) const -> unsigned { return _paired[id]; }
            auto is_self_paired(unsigned id) const -> bool { return _paired[id] == id; }
            auto all_self_paired() const -> bool;

            /// Number of ordered pairs in the orbital.
            auto size(unsigned id) const -> unsigned;

            /// Orbital classes closed under pairing: {o} or {o, o*}, one per class.
            auto symmetric_classes() const -> std::vector<std::vector<unsigned>>;

        private:
            unsigned _n;
            std::vector<unsigned> _ids;
            std::vector<unsigned> _paired;
    };

    auto orbitals(const Graph & x) -> OrbitalPartition;
    auto orbitals(const PermGroup & group) -> OrbitalPartition;

    /// Arcs are the union of the chosen orbitals.
    auto orbital_digraph(const OrbitalPartition & orbitals, const std::set<unsigned> & ids) -> Digraph;

    /// The orbital graph as an undirected graph; the ids must be closed under pairing.
    auto orbital_graph(const OrbitalPartition & orbitals, const std::set<unsigned> & ids) -> Graph;

    inline constexpr std::size_t shift_graph_cap = 10000;

    /// Automorphisms mapping every vertex to a neighbour.
    auto shifts(const Graph & x, std::size_t cap = shift_graph_cap) -> std::vector<Permutation>;

    /// Shift graph: the Cayley graph of Aut(X) whose connection set is the shifts.
    /// Vertex i is the i-th element of the closure order of Aut(X); a ~ b iff a b^-1 is a shift.
    struct ShiftGraph
    {
        Graph graph;
        std::vector<Permutation> elements;
        std::vector<Permutation> shifts;
    };

    auto shift_graph(const Graph & x, std::size_t cap = shift_graph_cap) -> ShiftGraph;
}

#endif
