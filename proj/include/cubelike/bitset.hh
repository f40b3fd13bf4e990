#ifndef CUBELIKE_BITSET_HH
#define CUBELIKE_BITSET_HH

#include <bit>
#include <cstdint>
#include <vector>

namespace cubelike
{
    /// Dynamically sized bitset used for adjacency rows and search domains.
    /// All binary operations require operands of equal size.
    class Bitset
    {
        public:
            Bitset() = default;
            explicit Bitset(unsigned size) :
                _size(size),
                _words((size + 63) / 64, 0)
            {
            }

            auto size() const -> unsigned { return _size; }

            auto test(unsigned i) const -> bool
            {
                return (_words[i >> 6] >> (i & 63)) & 1;
            }

            auto set(unsigned i) -> void { _words[i >> 6] |= std::uint64_t{1} << (i & 63); }
            auto reset(unsigned i) -> void { _words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

            auto set_all() -> void
            {
                for (auto & w : _words)
                    w = ~std::uint64_t{0};
                trim();
            }

            auto reset_all() -> void
            {
                for (auto & w : _words)
                    w = 0;
            }

            auto count() const -> unsigned
            {
                unsigned result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto any() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return true;
                return false;
            }

            auto none() const -> bool { return ! any(); }

            /// Index of the lowest set bit, or size() if empty.
            auto first() const -> unsigned
            {
                for (unsigned i = 0 ; i < _words.size() ; ++i)
                    if (_words[i])
                        return i * 64 + std::countr_zero(_words[i]);
                return _size;
            }

            /// Index of the lowest set bit strictly greater than i, or size().
            auto next(unsigned i) const -> unsigned
            {
                ++i;
                if (i >= _size)
                    return _size;
                unsigned wi = i >> 6;
                std::uint64_t w = _words[wi] & (~std::uint64_t{0} << (i & 63));
                while (true) {
                    if (w)
                        return wi * 64 + std::countr_zero(w);
                    if (++wi >= _words.size())
                        return _size;
                    w = _words[wi];
                }
            }

            auto operator&= (const Bitset & other) -> Bitset &
            {
                for (unsigned i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= other._words[i];
                return *this;
            }

            auto operator|= (const Bitset & other) -> Bitset &
            {
                for (unsigned i = 0 ; i < _words.size() ; ++i)
                    _words[i] |= other._words[i];
                return *this;
            }

            auto operator^= (const Bitset & other) -> Bitset &
            {
                for (unsigned i = 0 ; i < _words.size() ; ++i)
                    _words[i] ^= other._words[i];
                return *this;
            }

            auto subtract(const Bitset & other) -> Bitset &
            {
                for (unsigned i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= ~other._words[i];
                return *this;
            }

            auto flip() -> Bitset &
            {
                for (auto & w : _words)
                    w = ~w;
                trim();
                return *this;
            }

            auto intersects(const Bitset & other) const -> bool
            {
                for (unsigned i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & other._words[i])
                        return true;
                return false;
            }

            auto intersection_count(const Bitset & other) const -> unsigned
            {
                unsigned result = 0;
                for (unsigned i = 0 ; i < _words.size() ; ++i)
                    result += std::popcount(_words[i] & other._words[i]);
                return result;
            }

            auto is_subset_of(const Bitset & other) const -> bool
            {
                for (unsigned i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & ~other._words[i])
                        return false;
                return true;
            }

            auto words() const -> const std::vector<std::uint64_t> & { return _words; }

            friend auto operator== (const Bitset &, const Bitset &) -> bool = default;

            friend auto operator& (Bitset a, const Bitset & b) -> Bitset { return a &= b; }
            friend auto operator| (Bitset a, const Bitset & b) -> Bitset { return a |= b; }

            template <typename F>
            auto for_each(F && f) const -> void
            {
                for (unsigned wi = 0 ; wi < _words.size() ; ++wi) {
                    std::uint64_t w = _words[wi];
                    while (w) {
                        unsigned b = std::countr_zero(w);
                        w &= w - 1;
                        f(wi * 64 + b);
                    }
                }
            }

        private:
            auto trim() -> void
            {
                if (_size & 63)
                    _words.back() &= (std::uint64_t{1} << (_size & 63)) - 1;
            }

            unsigned _size = 0;
            std::vector<std::uint64_t> _words;
    };
}

#endif
