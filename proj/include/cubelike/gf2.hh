#ifndef CUBELIKE_GF2_HH
#define CUBELIKE_GF2_HH

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubelike
{
    /// An element of Z_2^n, packed into a single 64-bit word. Bit i-1 is the
    /// coefficient of e_i.
    class Word
    {
        public:
            static constexpr unsigned max_dimension = 64;

            constexpr Word() = default;
            Word(unsigned dimension, std::uint64_t bits);

            static auto zero(unsigned dimension) -> Word { return Word{dimension, 0}; }

            /// The standard basis vector e_i, 1-based.
            static auto unit(unsigned dimension, unsigned i) -> Word;

            /// Parses a little-endian bitstring: "1101" is e1+e2+e4.
            static auto parse(std::string_view bitstring) -> Word;

            constexpr auto dimension() const -> unsigned { return _dimension; }
            constexpr auto bits() const -> std::uint64_t { return _bits; }
            auto weight() const -> unsigned;
            auto is_zero() const -> bool { return _bits == 0; }

            /// Coefficient of e_i, 1-based.
            auto coordinate(unsigned i) const -> bool { return (_bits >> (i - 1)) & 1; }

            auto operator+ (const Word & other) const -> Word;
            auto operator+= (const Word & other) -> Word &;

            /// Little-endian bitstring of length dimension().
            auto to_string() const -> std::string;

            friend constexpr auto operator== (const Word &, const Word &) -> bool = default;
            friend constexpr auto operator<=> (const Word &, const Word &) = default;

        private:
            unsigned _dimension = 0;
            std::uint64_t _bits = 0;
    };

    /// A subgroup of Z_2^n held as a basis in reduced row-echelon form. Pivot
    /// columns are the lowest set bit of each basis row, strictly increasing.
    class Subgroup
    {
        public:
            explicit Subgroup(unsigned dimension) :
                _dimension(dimension)
            {
            }

            auto dimension() const -> unsigned { return _dimension; }
            auto rank() const -> unsigned { return static_cast<unsigned>(_basis.size()); }
            auto basis() const -> const std::vector<Word> & { return _basis; }

            /// 2^rank, saturating at 2^63 for rank 64.
            auto order() const -> std::uint64_t;

            auto contains(const Word & w) const -> bool;

            friend auto operator== (const Subgroup &, const Subgroup &) -> bool = default;

        private:
            friend auto span(std::span<const Word> words, unsigned dimension) -> Subgroup;

            unsigned _dimension;
            std::vector<Word> _basis;
    };

    /// RREF basis of the subgroup generated by the words. The dimension argument
    /// fixes the ambient space when the list is empty.
    auto span(std::span<const Word> words, unsigned dimension) -> Subgroup;
    auto span(std::span<const Word> words) -> Subgroup;

    /// Reduces w against the RREF basis of h. Equal outputs iff same coset.
    auto coset_canonical(const Word & w, const Subgroup & h) -> Word;

    /// Yields every element of h exactly once. Order: element k is the sum of
    /// basis rows i for each set bit i of k (k = 0 .. 2^rank - 1), so the
    /// sequence is lexicographic in the coordinates relative to the basis.
    auto enumerate_subgroup(const Subgroup & h) -> std::vector<Word>;
    auto for_each_in_subgroup(const Subgroup & h, const std::function<void (const Word &)> & f) -> void;

    inline constexpr unsigned subgroup_enumeration_cap = 25;

    /// A linear map Z_2^d -> Z_2^n determined by the images of e_1 .. e_d.
    class LinearMap
    {
        public:
            LinearMap(unsigned domain_dimension, unsigned codomain_dimension, std::vector<Word> images);

            auto domain_dimension() const -> unsigned { return _domain_dimension; }
            auto codomain_dimension() const -> unsigned { return _codomain_dimension; }
            auto images() const -> const std::vector<Word> & { return _images; }

            auto apply(const Word & x) const -> Word;

            /// Kernel as a subgroup of the domain.
            auto kernel() const -> Subgroup;

            /// Image as a subgroup of the codomain.
            auto image() const -> Subgroup;

        private:
            unsigned _domain_dimension;
            unsigned _codomain_dimension;
            std::vector<Word> _images;
    };

    /// The linear map sending e_i to images[i-1]. The codomain dimension is
    /// taken from the images; pass it explicitly when the list may be empty.
    auto linear_extend(std::span<const Word> images) -> LinearMap;
    auto linear_extend(std::span<const Word> images, unsigned codomain_dimension) -> LinearMap;

    /// Whether the set of words is a coset of some subgroup, i.e. its size is a
    /// power of two and it is closed under sums of three elements.
    auto is_coset(std::span<const Word> words) -> bool;
}

template <>
struct std::hash<cubelike::Word>
{
    auto operator() (const cubelike::Word & w) const noexcept -> std::size_t
    {
        return std::hash<std::uint64_t>{}(w.bits() * 0x9e3779b97f4a7c15ULL + w.dimension());
    }
};

#endif
