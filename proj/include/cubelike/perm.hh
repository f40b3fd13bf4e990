#ifndef CUBELIKE_PERM_HH
#define CUBELIKE_PERM_HH

#include <cubelike/graph.hh>

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace cubelike
{
    /// A bijection on {0, .., n-1}.
    class Permutation
    {
        public:
            Permutation() = default;
            explicit Permutation(std::vector<Vertex> image);

            static auto identity(unsigned n) -> Permutation;

            auto degree() const -> unsigned { return static_cast<unsigned>(_image.size()); }
            auto operator() (Vertex v) const -> Vertex { return _image[v]; }
            auto image() const -> const std::vector<Vertex> & { return _image; }

            /// (this * other)(v) = this(other(v)): apply other first.
            auto operator* (const Permutation & other) const -> Permutation;
            auto inverse() const -> Permutation;
            auto is_identity() const -> bool;
            auto is_involution() const -> bool;
            auto fixes(Vertex v) const -> bool { return _image[v] == v; }
            auto has_fixed_point() const -> bool;

            /// Least k >= 1 with this^k = identity.
            auto order() const -> std::uint64_t;
            auto power(std::uint64_t k) const -> Permutation;

            auto is_automorphism_of(const Graph & g) const -> bool;

            friend auto operator== (const Permutation &, const Permutation &) -> bool = default;
            friend auto operator<=> (const Permutation &, const Permutation &) = default;

        private:
            std::vector<Vertex> _image;
    };

    struct PermutationHash
    {
        auto operator() (const Permutation & p) const noexcept -> std::size_t;
    };

    /// A permutation group given by generators. The order and orbit structure
    /// are computed once on demand and cached.
    class PermGroup
    {
        public:
            PermGroup(unsigned degree, std::vector<Permutation> generators);
            PermGroup(unsigned degree, std::vector<Permutation> generators, mpz_class known_order);

            auto degree() const -> unsigned { return _degree; }
            auto generators() const -> const std::vector<Permutation> & { return _generators; }

            /// Group order; uses the known order when supplied, else the stabiliser chain.
            auto order() const -> mpz_class;

            /// Order computed from a Schreier-Sims stabiliser chain, ignoring any known order.
            auto stabiliser_chain_order() const -> mpz_class;

            auto contains(const Permutation & p) const -> bool;

            /// orbit_of()[v] is the least vertex in the orbit of v.
            auto orbit_representatives() const -> const std::vector<Vertex> &;
            auto orbits() const -> std::vector<std::vector<Vertex>>;
            auto is_transitive() const -> bool;

            /// Every element, by closure under the generators. Throws CapacityError
            /// once more than cap elements have been generated.
            auto elements(std::size_t cap) const -> std::vector<Permutation>;

        private:
            struct Chain;
            auto chain() const -> const Chain &;

            unsigned _degree;
            std::vector<Permutation> _generators;
            std::optional<mpz_class> _known_order;
            mutable std::vector<Vertex> _orbit_reps;
            mutable std::shared_ptr<Chain> _chain;
    };

    /// Orbit representatives (least element) under the group generated by gens.
    auto orbit_representatives(unsigned n, std::span<const Permutation> gens) -> std::vector<Vertex>;
}

#endif
