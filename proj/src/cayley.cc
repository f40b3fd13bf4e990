#include <cubelike/cayley.hh>
#include <cubelike/autgrp.hh>
#include <cubelike/errors.hh>

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace cubelike
{
    auto to_string(Outcome o) -> std::string_view
    {
        switch (o) {
            case Outcome::yes: return "yes";
            case Outcome::no: return "no";
            case Outcome::indeterminate: return "indeterminate";
        }
        return "?";
    }

    ConnectionSet::ConnectionSet(unsigned dimension, vector<Word> elements) :
        _dimension(dimension),
        _elements(std::move(elements))
    {
        for (auto & w : _elements) {
            if (w.dimension() != dimension)
                throw DimensionMismatch("connection set element " + w.to_string() + " not of dimension " + std::to_string(dimension));
            if (w.is_zero())
                throw LoopError("connection set contains zero");
        }
        std::sort(_elements.begin(), _elements.end());
        _elements.erase(std::unique(_elements.begin(), _elements.end()), _elements.end());
    }

    auto ConnectionSet::parse(std::string_view text) -> ConnectionSet
    {
        vector<Word> words;
        size_t start = 0;
        while (start <= text.size()) {
            size_t comma = text.find(',', start);
            if (comma == std::string_view::npos)
                comma = text.size();
            auto item = text.substr(start, comma - start);
            try {
                words.push_back(Word::parse(item));
            }
            catch (const ParseError & e) {
                throw ParseError("bad connection set element '" + string(item) + "'", start + e.offset());
            }
            start = comma + 1;
        }
        if (words.empty())
            throw ParseError("empty connection set", 0);
        return ConnectionSet{words.front().dimension(), std::move(words)};
    }

    auto ConnectionSet::contains(const Word & w) const -> bool
    {
        return std::binary_search(_elements.begin(), _elements.end(), w);
    }

    auto ConnectionSet::spans() const -> bool
    {
        return span(_elements, _dimension).rank() == _dimension;
    }

    auto ConnectionSet::to_string() const -> string
    {
        string result;
        for (auto & w : _elements) {
            if (! result.empty())
                result += ',';
            result += w.to_string();
        }
        return result;
    }

    auto cayley_z2(const ConnectionSet & c) -> Graph
    {
        unsigned n = c.dimension();
        if (n >= 32 || (1u << n) > vertex_cap())
            throw CapacityError("Cayley graph of Z_2^" + std::to_string(n) + " exceeds vertex cap " + std::to_string(vertex_cap()));
        unsigned size = 1u << n;
        vector<Bitset> rows(size, Bitset{size});
        vector<Word> labels;
        labels.reserve(size);
        for (Vertex v = 0 ; v < size ; ++v) {
            for (auto & s : c.elements())
                rows[v].set(v ^ static_cast<Vertex>(s.bits()));
            labels.emplace_back(n, v);
        }
        return Graph::from_rows(std::move(rows)).with_labels(std::move(labels));
    }

    auto connection_set_of(const Graph & z) -> std::optional<ConnectionSet>
    {
        if (! z.has_labels() || z.size() == 0 || ! std::has_single_bit(z.size()))
            return std::nullopt;
        unsigned n = z.label(0).dimension();
        if (z.size() != (uint64_t{1} << n))
            return std::nullopt;
        auto zero = z.vertex_of(Word::zero(n));
        if (! zero)
            return std::nullopt;
        vector<Word> elements;
        z.neighbours(*zero).for_each([&] (Vertex v) { elements.push_back(z.label(v)); });
        ConnectionSet c{n, std::move(elements)};
        // translation invariance: every neighbourhood is the translate of N(0)
        for (Vertex v = 0 ; v < z.size() ; ++v) {
            if (z.degree(v) != c.size())
                return std::nullopt;
            for (auto & s : c.elements()) {
                auto u = z.vertex_of(z.label(v) + s);
                if (! u || ! z.adjacent(v, *u))
                    return std::nullopt;
            }
        }
        return c;
    }

    auto hypercube(unsigned d) -> Graph
    {
        vector<Word> c;
        for (unsigned i = 1 ; i <= d ; ++i)
            c.push_back(Word::unit(d, i));
        return cayley_z2(ConnectionSet{d, std::move(c)});
    }

    auto folded_cube(unsigned n) -> Graph
    {
        if (n < 2)
            throw std::invalid_argument("folded cube needs order at least 2");
        unsigned m = n - 1;
        vector<Word> c;
        for (unsigned i = 1 ; i <= m ; ++i)
            c.push_back(Word::unit(m, i));
        c.emplace_back(m, (uint64_t{1} << m) - 1);
        return cayley_z2(ConnectionSet{m, std::move(c)});
    }

    auto halved_cube(unsigned n) -> Graph
    {
        if (n < 2)
            throw std::invalid_argument("halved cube needs order at least 2");
        unsigned m = n - 1;
        vector<Word> c;
        for (unsigned i = 1 ; i <= m ; ++i) {
            c.push_back(Word::unit(m, i));
            for (unsigned j = i + 1 ; j <= m ; ++j)
                c.push_back(Word::unit(m, i) + Word::unit(m, j));
        }
        return cayley_z2(ConnectionSet{m, std::move(c)});
    }

    namespace
    {
        // e_v with the first coordinate dropped; e_0 becomes zero
        auto hull_coordinate(unsigned m, Vertex v) -> Word
        {
            return v == 0 ? Word::zero(m - 1) : Word::unit(m - 1, v);
        }
    }

    auto hull_connection_set(const Graph & x) -> ConnectionSet
    {
        unsigned m = x.size();
        if (m == 0)
            throw std::invalid_argument("hull of the empty graph");
        if (m - 1 > Word::max_dimension)
            throw CapacityError("hull dimension exceeds word size");
        vector<Word> c;
        for (auto [a, b] : x.edges())
            c.push_back(hull_coordinate(m, a) + hull_coordinate(m, b));
        return ConnectionSet{m - 1, std::move(c)};
    }

    auto cubelike_hull(const Graph & x) -> Hull
    {
        auto c = hull_connection_set(x);
        unsigned m = x.size();
        vector<Vertex> image(m);
        for (Vertex v = 0 ; v < m ; ++v)
            image[v] = static_cast<Vertex>(hull_coordinate(m, v).bits());
        auto graph = cayley_z2(c);
        VertexMap embedding{graph.size(), std::move(image)};
        return Hull{std::move(graph), std::move(embedding), std::move(c)};
    }

    auto cube_cover_map(const ConnectionSet & c) -> LinearMap
    {
        if (! c.spans())
            throw NotConnectedError("connection set " + c.to_string() + " does not span Z_2^" + std::to_string(c.dimension()));
        return linear_extend(c.elements(), c.dimension());
    }

    auto as_vertex_map(const LinearMap & f) -> VertexMap
    {
        unsigned d = f.domain_dimension(), n = f.codomain_dimension();
        if (d >= 32 || n >= 32 || (1u << d) > vertex_cap())
            throw CapacityError("linear map domain too large to tabulate");
        vector<Vertex> image(1u << d);
        for (Vertex v = 0 ; v < image.size() ; ++v)
            image[v] = static_cast<Vertex>(f.apply(Word{d, v}).bits());
        return VertexMap{1u << n, std::move(image)};
    }

    namespace
    {
        // deletes the pivot columns of h from a reduced word
        auto compress(const Word & reduced, const Subgroup & h) -> Word
        {
            uint64_t pivots = 0;
            for (auto & r : h.basis())
                pivots |= r.bits() & -r.bits();
            uint64_t out = 0;
            unsigned j = 0;
            for (unsigned i = 0 ; i < reduced.dimension() ; ++i) {
                if ((pivots >> i) & 1)
                    continue;
                out |= ((reduced.bits() >> i) & 1) << j++;
            }
            return Word{reduced.dimension() - h.rank(), out};
        }
    }

    auto quotient_by_subgroup(const Graph & z, const Subgroup & h) -> Quotient
    {
        auto c = connection_set_of(z);
        if (! c)
            throw std::invalid_argument("quotient needs a labelled cubelike graph");
        if (c->dimension() != h.dimension())
            throw DimensionMismatch("subgroup dimension differs from the group of the graph");
        vector<Word> reduced;
        for (auto & s : c->elements()) {
            auto r = coset_canonical(s, h);
            if (r.is_zero())
                throw LoopError("coset " + s.to_string() + " + H contains an edge");
            reduced.push_back(compress(r, h));
        }
        ConnectionSet quotient_set{h.dimension() - h.rank(), std::move(reduced)};
        auto graph = cayley_z2(quotient_set);
        vector<Vertex> image(z.size());
        for (Vertex v = 0 ; v < z.size() ; ++v)
            image[v] = static_cast<Vertex>(compress(coset_canonical(z.label(v), h), h).bits());
        VertexMap map{graph.size(), std::move(image)};
        return Quotient{std::move(graph), std::move(map), std::move(quotient_set)};
    }

    namespace
    {
        // Points and lines of PG(n-1, 2) as a coloured incidence graph. Its
        // colour-preserving automorphisms are exactly GL(n, 2) acting on the
        // points, so canonical labelling with the set as a colour class gives
        // a GL-canonical form and the set stabiliser.
        class Geometry
        {
            public:
                explicit Geometry(unsigned n) :
                    _points((1u << n) - 1)
                {
                    vector<std::pair<Vertex, Vertex>> edges;
                    Vertex line = _points;
                    for (unsigned x = 1 ; x <= _points ; ++x)
                        for (unsigned y = x + 1 ; y <= _points ; ++y)
                            if ((x ^ y) > y) {
                                for (unsigned p : {x, y, x ^ y})
                                    edges.emplace_back(p - 1, line);
                                ++line;
                            }
                    _graph = Graph::from_edges(line, edges);
                }

                auto points() const -> unsigned { return _points; }

                auto search(uint64_t set) const -> CanonicalResult
                {
                    vector<unsigned> colours(_graph.size(), 2);
                    for (unsigned p = 0 ; p < _points ; ++p)
                        colours[p] = ((set >> p) & 1) ? 0 : 1;
                    return canonical_search(_graph, colours);
                }

            private:
                unsigned _points;
                Graph _graph;
        };

        // point p of the geometry is the word p + 1
        auto set_mask(const vector<Word> & words) -> uint64_t
        {
            uint64_t mask = 0;
            for (auto & w : words)
                mask |= uint64_t{1} << (w.bits() - 1);
            return mask;
        }

        auto mask_words(unsigned n, uint64_t mask) -> vector<Word>
        {
            vector<Word> words;
            for (unsigned p = 0 ; p < 64 ; ++p)
                if ((mask >> p) & 1)
                    words.emplace_back(n, p + 1);
            return words;
        }
    }

    auto gl_canonical_form(unsigned n, const vector<Word> & set) -> string
    {
        if (n == 0 || n > 5)
            throw CapacityError("GL canonical form supports 1 <= n <= 5");
        for (auto & w : set)
            if (w.dimension() != n || w.is_zero())
                throw DimensionMismatch("set element " + w.to_string() + " is not a nonzero word of dimension " + std::to_string(n));
        return Geometry{n}.search(set_mask(set)).canonical_graph6;
    }

    auto enumerate_cubelike(unsigned n, bool connected_only) -> CubelikeEnumeration
    {
        if (n == 0 || n > 5)
            throw CapacityError("exhaustive cubelike enumeration supports 1 <= n <= 5");
        Geometry geometry{n};
        unsigned points = geometry.points();
        uint64_t all = (uint64_t{1} << points) - 1;

        // level k holds one set per GL-orbit of k-subsets; levels above
        // points / 2 are the complements of lower levels
        vector<vector<uint64_t>> levels(points / 2 + 1);
        std::unordered_set<string> seen;
        vector<vector<Permutation>> stabilisers;
        vector<vector<Permutation>> next_stabilisers;
        {
            auto r = geometry.search(0);
            levels[0].push_back(0);
            stabilisers.push_back(std::move(r.generators));
        }
        for (unsigned k = 0 ; k + 1 < levels.size() ; ++k) {
            seen.clear();
            next_stabilisers.clear();
            for (size_t i = 0 ; i < levels[k].size() ; ++i) {
                uint64_t set = levels[k][i];
                // one extension per stabiliser orbit on points outside the set
                vector<Permutation> on_points;
                for (auto & g : stabilisers[i]) {
                    vector<Vertex> image(points);
                    for (Vertex p = 0 ; p < points ; ++p)
                        image[p] = g(p);
                    on_points.emplace_back(std::move(image));
                }
                auto reps = orbit_representatives(points, on_points);
                for (Vertex p = 0 ; p < points ; ++p) {
                    if (((set >> p) & 1) || reps[p] != p)
                        continue;
                    uint64_t extended = set | (uint64_t{1} << p);
                    auto r = geometry.search(extended);
                    if (seen.insert(r.canonical_graph6).second) {
                        levels[k + 1].push_back(extended);
                        next_stabilisers.push_back(std::move(r.generators));
                    }
                }
            }
            std::swap(stabilisers, next_stabilisers);
        }

        vector<uint64_t> orbit_reps;
        for (auto & level : levels)
            orbit_reps.insert(orbit_reps.end(), level.begin(), level.end());
        for (size_t k = levels.size() ; k-- > 0 ; )
            for (auto set : levels[k])
                orbit_reps.push_back(all & ~set);

        CubelikeEnumeration result;
        std::unordered_set<string> forms;
        for (auto set : orbit_reps) {
            ConnectionSet c{n, mask_words(n, set)};
            if (connected_only && ! c.spans())
                continue;
            ++result.gl_orbits;
            auto g = cayley_z2(c);
            if (forms.insert(canonical_form(g)).second)
                result.graphs.push_back(std::move(g));
        }
        return result;
    }

    namespace
    {
        // Builds a regular elementary abelian 2-subgroup of Aut(X) one
        // generator at a time. With H the group so far, the next generator s
        // is an automorphism with s(0) = v for the least v outside the
        // H-orbit of 0, commuting with H, an involution, and with s(x)
        // outside the H-orbit of x for every x so that <H, s> is semiregular.
        // Commutation forces s(h(x)) = h(s(x)), so one choice fixes s on two
        // whole H-orbits.
        class RegularSubgroupSearch
        {
            public:
                RegularSubgroupSearch(const Graph & x, const Deadline & deadline) :
                    _x(x),
                    _n(x.size()),
                    _deadline(deadline)
                {
                }

                auto run() -> Outcome
                {
                    vector<Vertex> identity(_n);
                    for (Vertex v = 0 ; v < _n ; ++v)
                        identity[v] = v;
                    _elements.push_back(std::move(identity));
                    auto found = extend();
                    if (_timed_out)
                        return Outcome::indeterminate;
                    return found ? Outcome::yes : Outcome::no;
                }

                auto generators() const -> const vector<vector<Vertex>> & { return _generators; }

            private:
                static constexpr Vertex unset = ~Vertex{0};

                auto extend() -> bool
                {
                    if (_elements.size() == _n)
                        return true;
                    vector<bool> in_orbit(_n, false);
                    for (auto & h : _elements)
                        in_orbit[h[0]] = true;
                    Vertex target = 0;
                    while (in_orbit[target])
                        ++target;

                    vector<Vertex> sigma(_n, unset);
                    vector<Vertex> trail;
                    bool found = false;
                    if (assign(sigma, trail, 0, target))
                        found = complete(sigma, trail);
                    return found;
                }

                // all completions of sigma; recurses into extend() for each
                auto complete(vector<Vertex> & sigma, vector<Vertex> & trail) -> bool
                {
                    if (_deadline.expired()) {
                        _timed_out = true;
                        return false;
                    }
                    Vertex x = 0;
                    while (x < _n && sigma[x] != unset)
                        ++x;
                    if (x == _n)
                        return accept(sigma);

                    vector<bool> forbidden(_n, false);
                    for (auto & h : _elements)
                        forbidden[h[x]] = true;
                    for (Vertex y = 0 ; y < _n ; ++y) {
                        if (forbidden[y] || sigma[y] != unset)
                            continue;
                        size_t mark = trail.size();
                        if (assign(sigma, trail, x, y) && complete(sigma, trail))
                            return true;
                        undo(sigma, trail, mark);
                        if (_timed_out)
                            return false;
                    }
                    return false;
                }

                auto accept(const vector<Vertex> & sigma) -> bool
                {
                    size_t old = _elements.size();
                    for (size_t i = 0 ; i < old ; ++i) {
                        vector<Vertex> product(_n);
                        for (Vertex v = 0 ; v < _n ; ++v)
                            product[v] = _elements[i][sigma[v]];
                        _elements.push_back(std::move(product));
                    }
                    _generators.push_back(sigma);
                    if (extend())
                        return true;
                    _generators.pop_back();
                    _elements.resize(old);
                    return false;
                }

                auto set_pair(vector<Vertex> & sigma, vector<Vertex> & trail, Vertex a, Vertex b) -> bool
                {
                    if (sigma[a] != unset)
                        return sigma[a] == b;
                    if (sigma[b] != unset)
                        return false;
                    // adjacency against every assigned vertex
                    for (Vertex t : trail)
                        if (_x.adjacent(a, t) != _x.adjacent(b, sigma[t]))
                            return false;
                    sigma[a] = b;
                    trail.push_back(a);
                    if (a != b) {
                        for (Vertex t : trail)
                            if (_x.adjacent(b, t) != _x.adjacent(a, sigma[t]))
                                return false;
                        sigma[b] = a;
                        trail.push_back(b);
                    }
                    return true;
                }

                auto assign(vector<Vertex> & sigma, vector<Vertex> & trail, Vertex x, Vertex y) -> bool
                {
                    for (auto & h : _elements)
                        if (! set_pair(sigma, trail, h[x], h[y]))
                            return false;
                    return true;
                }

                static auto undo(vector<Vertex> & sigma, vector<Vertex> & trail, size_t mark) -> void
                {
                    while (trail.size() > mark) {
                        sigma[trail.back()] = unset;
                        trail.pop_back();
                    }
                }

                const Graph & _x;
                unsigned _n;
                const Deadline & _deadline;
                vector<vector<Vertex>> _elements;
                vector<vector<Vertex>> _generators;
                bool _timed_out = false;
        };
    }

    auto is_cubelike(const Graph & x, const Deadline & deadline) -> CubelikeRecognition
    {
        unsigned n = x.size();
        if (n == 0 || ! std::has_single_bit(n) || ! x.regular_degree())
            return {};
        unsigned dim = static_cast<unsigned>(std::countr_zero(n));

        RegularSubgroupSearch search{x, deadline};
        auto outcome = search.run();
        if (outcome != Outcome::yes)
            return CubelikeRecognition{outcome, std::nullopt};

        // label each vertex by the generators needed to reach it from 0
        auto & gens = search.generators();
        vector<Word> labels(n);
        vector<bool> reached(n, false);
        vector<Vertex> queue{0};
        reached[0] = true;
        labels[0] = Word::zero(dim);
        for (size_t i = 0 ; i < queue.size() ; ++i) {
            Vertex v = queue[i];
            for (unsigned g = 0 ; g < gens.size() ; ++g) {
                Vertex u = gens[g][v];
                if (! reached[u]) {
                    reached[u] = true;
                    labels[u] = labels[v] + Word::unit(dim, g + 1);
                    queue.push_back(u);
                }
            }
        }
        auto labelled = x.with_labels(labels);
        auto c = connection_set_of(labelled);
        if (! c)
            throw std::logic_error("regular subgroup labelling failed to reconstruct the graph");
        return CubelikeRecognition{Outcome::yes, CubelikeWitness{std::move(labels), std::move(*c)}};
    }

    auto largest_clique_subgroup(const ConnectionSet & c) -> Subgroup
    {
        unsigned n = c.dimension();
        vector<uint64_t> members{0};
        vector<Word> basis, best_basis;

        // cosets s + H with every element in C
        std::function<void (size_t)> grow = [&] (size_t from) {
            if (basis.size() > best_basis.size())
                best_basis = basis;
            auto & elems = c.elements();
            for (size_t i = from ; i < elems.size() ; ++i) {
                uint64_t s = elems[i].bits();
                if (std::find(members.begin(), members.end(), s) != members.end())
                    continue;
                bool inside = std::all_of(members.begin(), members.end(),
                        [&] (uint64_t h) { return h == 0 || c.contains(Word{n, h ^ s}); });
                if (! inside)
                    continue;
                size_t old = members.size();
                for (size_t j = 0 ; j < old ; ++j)
                    members.push_back(members[j] ^ s);
                basis.push_back(elems[i]);
                grow(i + 1);
                basis.pop_back();
                members.resize(old);
            }
        };
        grow(0);
        return span(best_basis, n);
    }

    auto linear_colouring_subgroup(const ConnectionSet & c, unsigned k) -> std::optional<Subgroup>
    {
        unsigned n = c.dimension();
        if (k > n)
            return std::nullopt;
        unsigned rank = n - k;
        if (n >= 32)
            throw CapacityError("linear colouring search supports dimension below 32");
        uint64_t size = uint64_t{1} << n;
        vector<bool> in_c(size, false);
        for (auto & s : c.elements())
            in_c[s.bits()] = true;

        vector<uint64_t> members{0};
        vector<Word> basis;
        std::function<bool (uint64_t)> grow = [&] (uint64_t from) -> bool {
            if (basis.size() == rank)
                return true;
            for (uint64_t s = from ; s < size ; ++s) {
                if (in_c[s])
                    continue;
                // s must be the least element of its coset s + H
                bool ok = true;
                for (auto h : members)
                    if (in_c[h ^ s] || (h != 0 && (h ^ s) < s)) {
                        ok = false;
                        break;
                    }
                if (! ok)
                    continue;
                size_t old = members.size();
                for (size_t j = 0 ; j < old ; ++j)
                    members.push_back(members[j] ^ s);
                basis.emplace_back(n, s);
                if (grow(s + 1))
                    return true;
                basis.pop_back();
                members.resize(old);
            }
            return false;
        };
        if (! grow(1))
            return std::nullopt;
        return span(basis, n);
    }
}
