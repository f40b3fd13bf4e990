#include <cubelike/gf2.hh>
#include <cubelike/errors.hh>

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_set>

using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace cubelike
{
    namespace
    {
        auto mask_for(unsigned dimension) -> uint64_t
        {
            return dimension >= 64 ? ~uint64_t{0} : (uint64_t{1} << dimension) - 1;
        }

        auto check_same_dimension(const Word & a, const Word & b) -> void
        {
            if (a.dimension() != b.dimension())
                throw DimensionMismatch("words of dimension " + to_string(a.dimension()) + " and " + to_string(b.dimension()));
        }
    }

    Word::Word(unsigned dimension, uint64_t bits) :
        _dimension(dimension),
        _bits(bits)
    {
        if (dimension > max_dimension)
            throw CapacityError("word dimension " + std::to_string(dimension) + " exceeds 64");
        if (bits & ~mask_for(dimension))
            throw DimensionMismatch("bits set outside dimension " + std::to_string(dimension));
    }

    auto Word::unit(unsigned dimension, unsigned i) -> Word
    {
        if (i < 1 || i > dimension)
            throw DimensionMismatch("basis index " + std::to_string(i) + " out of range for dimension " + std::to_string(dimension));
        return Word{dimension, uint64_t{1} << (i - 1)};
    }

    auto Word::parse(std::string_view bitstring) -> Word
    {
        if (bitstring.size() > max_dimension)
            throw CapacityError("bitstring longer than 64");
        uint64_t bits = 0;
        for (unsigned i = 0 ; i < bitstring.size() ; ++i) {
            if (bitstring[i] == '1')
                bits |= uint64_t{1} << i;
            else if (bitstring[i] != '0')
                throw ParseError("bad character in bitstring '" + string(bitstring) + "'", i);
        }
        return Word{static_cast<unsigned>(bitstring.size()), bits};
    }

    auto Word::weight() const -> unsigned
    {
        return std::popcount(_bits);
    }

    auto Word::operator+ (const Word & other) const -> Word
    {
        Word result = *this;
        return result += other;
    }

    auto Word::operator+= (const Word & other) -> Word &
    {
        check_same_dimension(*this, other);
        _bits ^= other._bits;
        return *this;
    }

    auto Word::to_string() const -> string
    {
        string result(_dimension, '0');
        for (unsigned i = 0 ; i < _dimension ; ++i)
            if ((_bits >> i) & 1)
                result[i] = '1';
        return result;
    }

    auto Subgroup::order() const -> uint64_t
    {
        return rank() >= 64 ? uint64_t{1} << 63 : uint64_t{1} << rank();
    }

    auto Subgroup::contains(const Word & w) const -> bool
    {
        return coset_canonical(w, *this).is_zero();
    }

    auto span(std::span<const Word> words, unsigned dimension) -> Subgroup
    {
        Subgroup result{dimension};
        vector<uint64_t> rows;
        for (auto & w : words) {
            if (w.dimension() != dimension)
                throw DimensionMismatch("span over words of mixed dimension");
            uint64_t x = w.bits();
            for (auto r : rows)
                if (x & (r & -r))
                    x ^= r;
            if (! x)
                continue;
            // eliminate the new pivot from the existing rows
            uint64_t pivot = x & -x;
            for (auto & r : rows)
                if (r & pivot)
                    r ^= x;
            rows.push_back(x);
        }
        std::sort(rows.begin(), rows.end(), [] (uint64_t a, uint64_t b) { return (a & -a) < (b & -b); });
        for (auto r : rows)
            result._basis.emplace_back(dimension, r);
        return result;
    }

    auto span(std::span<const Word> words) -> Subgroup
    {
        if (words.empty())
            throw DimensionMismatch("span of an empty list needs an explicit dimension");
        return span(words, words.front().dimension());
    }

    auto coset_canonical(const Word & w, const Subgroup & h) -> Word
    {
        if (w.dimension() != h.dimension())
            throw DimensionMismatch("word dimension " + to_string(w.dimension()) + " vs subgroup dimension " + to_string(h.dimension()));
        uint64_t x = w.bits();
        for (auto & r : h.basis())
            if (x & (r.bits() & -r.bits()))
                x ^= r.bits();
        return Word{w.dimension(), x};
    }

    auto for_each_in_subgroup(const Subgroup & h, const std::function<void (const Word &)> & f) -> void
    {
        if (h.rank() > subgroup_enumeration_cap)
            throw CapacityError("subgroup of rank " + to_string(h.rank()) + " exceeds enumeration cap");
        uint64_t count = uint64_t{1} << h.rank();
        for (uint64_t k = 0 ; k < count ; ++k) {
            uint64_t x = 0;
            for (unsigned i = 0 ; i < h.rank() ; ++i)
                if ((k >> i) & 1)
                    x ^= h.basis()[i].bits();
            f(Word{h.dimension(), x});
        }
    }

    auto enumerate_subgroup(const Subgroup & h) -> vector<Word>
    {
        vector<Word> result;
        if (h.rank() <= subgroup_enumeration_cap)
            result.reserve(std::size_t{1} << h.rank());
        for_each_in_subgroup(h, [&] (const Word & w) { result.push_back(w); });
        return result;
    }

    LinearMap::LinearMap(unsigned domain_dimension, unsigned codomain_dimension, vector<Word> images) :
        _domain_dimension(domain_dimension),
        _codomain_dimension(codomain_dimension),
        _images(std::move(images))
    {
        if (_images.size() != domain_dimension)
            throw DimensionMismatch("linear map needs one image per domain basis vector");
        if (domain_dimension > Word::max_dimension || codomain_dimension > Word::max_dimension)
            throw CapacityError("linear map dimension exceeds 64");
        for (auto & w : _images)
            if (w.dimension() != codomain_dimension)
                throw DimensionMismatch("linear map images of mixed dimension");
    }

    auto LinearMap::apply(const Word & x) const -> Word
    {
        if (x.dimension() != _domain_dimension)
            throw DimensionMismatch("linear map applied to word of dimension " + to_string(x.dimension()));
        uint64_t result = 0, bits = x.bits();
        while (bits) {
            result ^= _images[std::countr_zero(bits)].bits();
            bits &= bits - 1;
        }
        return Word{_codomain_dimension, result};
    }

    auto LinearMap::kernel() const -> Subgroup
    {
        // row-reduce the augmented rows (image | e_i); rows whose image part
        // vanishes carry kernel vectors
        vector<std::pair<uint64_t, uint64_t>> rows;
        vector<Word> kernel_words;
        for (unsigned i = 0 ; i < _domain_dimension ; ++i) {
            uint64_t img = _images[i].bits(), tag = uint64_t{1} << i;
            for (auto & [r, t] : rows)
                if (img & (r & -r)) {
                    img ^= r;
                    tag ^= t;
                }
            if (img)
                rows.emplace_back(img, tag);
            else
                kernel_words.emplace_back(_domain_dimension, tag);
        }
        return span(kernel_words, _domain_dimension);
    }

    auto LinearMap::image() const -> Subgroup
    {
        return span(_images, _codomain_dimension);
    }

    auto linear_extend(std::span<const Word> images, unsigned codomain_dimension) -> LinearMap
    {
        return LinearMap{static_cast<unsigned>(images.size()), codomain_dimension, vector<Word>(images.begin(), images.end())};
    }

    auto linear_extend(std::span<const Word> images) -> LinearMap
    {
        if (images.empty())
            throw DimensionMismatch("linear_extend of an empty list needs an explicit codomain dimension");
        return linear_extend(images, images.front().dimension());
    }

    auto is_coset(std::span<const Word> words) -> bool
    {
        if (words.empty() || ! std::has_single_bit(words.size()))
            return false;
        std::unordered_set<Word> members(words.begin(), words.end());
        if (members.size() != words.size())
            return false;
        // F is a coset iff F + f0 is closed under addition
        const Word & base = words.front();
        for (std::size_t i = 1 ; i < words.size() ; ++i)
            for (std::size_t j = i + 1 ; j < words.size() ; ++j)
                if (! members.contains(words[i] + words[j] + base))
                    return false;
        return true;
    }
}
