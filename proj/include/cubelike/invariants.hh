#ifndef CUBELIKE_INVARIANTS_HH
#define CUBELIKE_INVARIANTS_HH

#include <cubelike/deadline.hh>
#include <cubelike/graph.hh>

#include <optional>
#include <vector>

namespace cubelike
{
    struct CliqueResult
    {
        /// yes when the clique is certified maximum.
        Outcome outcome = Outcome::yes;
        std::vector<Vertex> clique;
        auto size() const -> unsigned { return static_cast<unsigned>(clique.size()); }
    };

    /// Bitset branch and bound with greedy colouring bounds.
    auto maximum_clique(const Graph & x, const Deadline & deadline = {}) -> CliqueResult;
    auto maximum_independent_set(const Graph & x, const Deadline & deadline = {}) -> CliqueResult;

    auto clique_number(const Graph & x) -> unsigned;
    auto independence_number(const Graph & x) -> unsigned;

    /// DSATUR greedy colouring; colours are 0 .. k-1.
    auto greedy_colouring(const Graph & x) -> VertexMap;

    struct ChromaticResult
    {
        /// yes when lower == upper.
        Outcome outcome = Outcome::yes;
        unsigned lower = 0;
        unsigned upper = 0;
        /// A colouring with `upper` colours.
        std::optional<VertexMap> colouring;
        auto value() const -> unsigned { return upper; }
    };

    /// Brackets chi between max(omega, ceil(n / alpha)) and DSATUR (or a
    /// linear colouring for labelled cubelike graphs), then closes the gap
    /// with searches X -> K_k that fix a maximum clique.
    auto chromatic_number(const Graph & x, const Deadline & deadline = {}) -> ChromaticResult;

    /// alpha(X) omega(X) = |V(X)|. X must be vertex-transitive.
    auto clique_coclique_equality(const Graph & x, const Deadline & deadline = {}) -> Outcome;
}

#endif
