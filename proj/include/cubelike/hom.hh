#ifndef CUBELIKE_HOM_HH
#define CUBELIKE_HOM_HH

#include <cubelike/deadline.hh>
#include <cubelike/gf2.hh>
#include <cubelike/graph.hh>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cubelike
{
    enum class HomMode
    {
        any,
        injective,
        /// injective and non-adjacent pairs map to non-adjacent pairs
        induced
    };

    /// A homomorphism question. Proper endomorphisms are expressed by
    /// removing the omitted vertex from every domain; extensions of a
    /// partial map by the fixed list.
    struct HomProblem
    {
        const Graph & source;
        const Graph & target;
        HomMode mode = HomMode::any;
        std::vector<std::pair<Vertex, Vertex>> fixed = {};
        /// Allowed images per source vertex; empty means unrestricted.
        std::vector<Bitset> domains = {};
    };

    struct HomResult
    {
        Outcome outcome = Outcome::no;
        std::optional<VertexMap> map;
        std::size_t nodes = 0;
    };

    /// Backtracking over bitset domains, keeping arc consistency along source
    /// edges and forward-checking injectivity. Variables are
    /// chosen by smallest domain, then largest source degree, then smallest
    /// index; values ascend. When the target is complete and domains are
    /// unrestricted, unused colours are interchangeable and only the least is tried.
    auto find_homomorphism(const HomProblem & p, const Deadline & deadline = {}) -> HomResult;

    auto find_homomorphism(const Graph & source, const Graph & target, const Deadline & deadline = {}) -> HomResult;

    /// An injective map whose image induces a copy of the pattern.
    auto induced_subgraph_search(const Graph & pattern, const Graph & host, const Deadline & deadline = {}) -> HomResult;

    struct CoreResult
    {
        Outcome outcome = Outcome::yes;
        /// Induced subgraph on core_vertices, labels kept. When the outcome is
        /// indeterminate this is the smallest retract reached so far.
        Graph core;
        std::vector<Vertex> core_vertices;
        /// Endomorphism of the host that is the identity on core_vertices.
        VertexMap retraction;
        /// Endomorphisms of the host whose composition, first to last, is the retraction.
        std::vector<VertexMap> chain;
    };

    /// Shrinks by proper endomorphisms until none exists. Shortcuts: edgeless
    /// graphs retract to a vertex, bipartite graphs to an edge, and graphs
    /// with chi = omega to a maximum clique.
    auto compute_core(const Graph & x, const Deadline & deadline = {}) -> CoreResult;

    /// Whether x has no proper endomorphism.
    auto is_core(const Graph & x, const Deadline & deadline = {}) -> Outcome;

    struct HomIdempotence
    {
        Outcome outcome = Outcome::no;
        /// X box X -> X, with (i, j) at index i |V(X)| + j.
        std::optional<VertexMap> map;
        /// "addition" when the group law of the labels was used, else "search".
        std::string method;
    };

    /// Decides X box X -> X. Labelled cubelike graphs use the addition map.
    /// A vertex-transitive x lets (0,0) -> 0 be fixed; assume_core further
    /// fixes (x,0) -> x and (0,y) -> y, which is sound because every
    /// endomorphism of a core is an automorphism.
    auto is_hom_idempotent(const Graph & x, bool assume_core = false, const Deadline & deadline = {}) -> HomIdempotence;

    struct ShiftGraphEquivalence
    {
        Outcome outcome = Outcome::no;
        /// "shift-graph" when Sh(X) was built, "hom-idempotence" after a capacity fallback.
        std::string route;
        std::optional<VertexMap> embedding;
    };

    /// For a core x, whether x is an induced subgraph of Sh(x); falls back to
    /// X box X -> X when Aut(x) is over the shift-graph cap.
    auto core_equivalent_to_shift_graph(const Graph & x, const Deadline & deadline = {}) -> ShiftGraphEquivalence;

    struct CoveringCheck
    {
        bool ok = false;
        /// Violating vertex of the domain, or of the codomain for surjectivity.
        std::optional<Vertex> vertex;
        std::string reason;
    };

    /// Homomorphism, vertex-surjective, and a bijection from N(u) onto N(phi(u)) for all u.
    auto verify_covering_map(const VertexMap & phi, const Graph & x, const Graph & y) -> CoveringCheck;

    struct FibreCosets
    {
        /// The common subgroup when every fibre is a coset of it.
        std::optional<Subgroup> subgroup;
        /// A fibre (codomain vertex) that is not a coset of the candidate subgroup.
        std::optional<Vertex> witness;
        /// How many fibres are individually cosets of some subgroup.
        unsigned coset_fibres = 0;
    };

    /// phi maps a labelled graph y (labels in Z_2^n) onto its codomain.
    auto fibres_are_cosets(const VertexMap & phi, const Graph & y) -> FibreCosets;

    /// Decides Z_2[Y] -> X, assuming Y -> X. A labelled cubelike X is
    /// certified by the linear extension of a found Y -> X without building
    /// the hull; otherwise the hull is searched directly.
    auto hull_hom_test(const Graph & y, const Graph & x, const Deadline & deadline = {}) -> HomResult;
}

#endif
