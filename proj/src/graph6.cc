#include <cubelike/graph6.hh>
#include <cubelike/errors.hh>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

using std::size_t;
using std::string;
using std::string_view;
using std::uint64_t;
using std::vector;

namespace cubelike
{
    namespace
    {
        auto encode_size(unsigned n, string & out) -> void
        {
            if (n <= 62)
                out.push_back(static_cast<char>(n + 63));
            else if (n <= 258047) {
                out.push_back(126);
                for (int shift = 12 ; shift >= 0 ; shift -= 6)
                    out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
            }
            else {
                out.push_back(126);
                out.push_back(126);
                for (int shift = 30 ; shift >= 0 ; shift -= 6)
                    out.push_back(static_cast<char>((((uint64_t{n}) >> shift) & 63) + 63));
            }
        }

        struct Cursor
        {
            string_view text;
            size_t base;
            size_t pos = 0;

            auto byte() -> unsigned
            {
                if (pos >= text.size())
                    throw ParseError("unexpected end of input", base + pos);
                unsigned char c = text[pos];
                if (c < 63 || c > 126)
                    throw ParseError("byte out of printable graph6 range", base + pos);
                ++pos;
                return c - 63;
            }
        };

        auto decode_size(Cursor & cur) -> uint64_t
        {
            unsigned first = cur.byte();
            if (first != 63)
                return first;
            size_t before = cur.pos;
            unsigned second = cur.byte();
            if (second != 63) {
                cur.pos = before;
                uint64_t n = 0;
                for (int i = 0 ; i < 3 ; ++i)
                    n = (n << 6) | cur.byte();
                return n;
            }
            uint64_t n = 0;
            for (int i = 0 ; i < 6 ; ++i)
                n = (n << 6) | cur.byte();
            return n;
        }

        auto strip(string_view text, string_view header, size_t & offset) -> string_view
        {
            while (! text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
                text.remove_suffix(1);
            while (! text.empty() && (text.front() == ' ' || text.front() == '\t')) {
                text.remove_prefix(1);
                ++offset;
            }
            if (text.starts_with(header)) {
                text.remove_prefix(header.size());
                offset += header.size();
            }
            return text;
        }

        auto checked_size(uint64_t n, size_t offset) -> unsigned
        {
            if (n > vertex_cap())
                throw ParseError("graph on " + std::to_string(n) + " vertices exceeds vertex cap", offset);
            return static_cast<unsigned>(n);
        }
    }

    auto to_graph6(const Graph & g) -> string
    {
        string out;
        unsigned n = g.size();
        encode_size(n, out);
        unsigned acc = 0, nbits = 0;
        for (Vertex j = 1 ; j < n ; ++j)
            for (Vertex i = 0 ; i < j ; ++i) {
                acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++nbits == 6) {
                    out.push_back(static_cast<char>(acc + 63));
                    acc = nbits = 0;
                }
            }
        if (nbits)
            out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
        return out;
    }

    auto from_graph6(string_view text) -> Graph
    {
        size_t offset = 0;
        text = strip(text, ">>graph6<<", offset);
        Cursor cur{text, offset};
        unsigned n = checked_size(decode_size(cur), offset);
        uint64_t pairs = uint64_t{n} * (n - (n ? 1 : 0)) / 2;
        uint64_t expected = (pairs + 5) / 6;
        if (text.size() - cur.pos != expected)
            throw ParseError("expected " + std::to_string(expected) + " adjacency bytes, found " + std::to_string(text.size() - cur.pos),
                    offset + std::min(text.size(), cur.pos + expected));
        vector<Bitset> rows(n, Bitset{n});
        unsigned value = 0;
        int remaining = 0;
        for (Vertex j = 1 ; j < n ; ++j)
            for (Vertex i = 0 ; i < j ; ++i) {
                if (remaining == 0) {
                    value = cur.byte();
                    remaining = 6;
                }
                --remaining;
                if ((value >> remaining) & 1) {
                    rows[i].set(j);
                    rows[j].set(i);
                }
            }
        if (remaining && (value & ((1u << remaining) - 1)))
            throw ParseError("nonzero padding bits", offset + cur.pos - 1);
        return Graph::from_rows(std::move(rows));
    }

    auto from_sparse6(string_view text) -> Graph
    {
        size_t offset = 0;
        text = strip(text, ">>sparse6<<", offset);
        if (text.empty() || text.front() != ':')
            throw ParseError("sparse6 must start with ':'", offset);
        Cursor cur{text, offset, 1};
        unsigned n = checked_size(decode_size(cur), offset + 1);
        unsigned k = 0;
        while ((uint64_t{1} << k) < n)
            ++k;
        vector<Bitset> rows(n, Bitset{n});

        unsigned value = 0;
        int remaining = 0;
        auto next_bit = [&] (bool & ok) -> unsigned {
            if (remaining == 0) {
                if (cur.pos >= text.size()) {
                    ok = false;
                    return 0;
                }
                value = cur.byte();
                remaining = 6;
            }
            --remaining;
            return (value >> remaining) & 1;
        };

        uint64_t v = 0;
        while (true) {
            bool ok = true;
            unsigned b = next_bit(ok);
            if (! ok)
                break;
            uint64_t x = 0;
            for (unsigned i = 0 ; i < k && ok ; ++i)
                x = (x << 1) | next_bit(ok);
            if (! ok)
                break;
            if (b)
                ++v;
            if (v >= n)
                break;
            if (x > v)
                v = x;
            else {
                if (x == v)
                    throw ParseError("loop in sparse6 input", offset + cur.pos - 1);
                rows[x].set(v);
                rows[v].set(x);
            }
        }
        return Graph::from_rows(std::move(rows));
    }

    auto parse_graph_line(string_view text) -> Graph
    {
        auto first = text.find_first_not_of(" \t");
        if (first != string_view::npos && (text[first] == ':' || text.substr(first).starts_with(">>sparse6<<")))
            return from_sparse6(text);
        return from_graph6(text);
    }
}
