#include <cubelike/autgrp.hh>
#include <cubelike/errors.hh>
#include <cubelike/graph6.hh>

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

using std::size_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace cubelike
{
    namespace
    {
        constexpr unsigned no_jump = std::numeric_limits<unsigned>::max();

        /// Ordered partition of the vertex set. Cells are contiguous ranges of
        /// `elements`; cell_end is meaningful at cell start positions only.
        struct OrderedPartition
        {
            vector<Vertex> elements;
            vector<unsigned> cell_of;
            vector<unsigned> cell_end;

            auto is_discrete() const -> bool
            {
                for (unsigned c = 0 ; c < elements.size() ; c = cell_end[c])
                    if (cell_end[c] - c > 1)
                        return false;
                return true;
            }
        };

        class Refiner
        {
            public:
                explicit Refiner(const Graph & g) :
                    _g(g),
                    _n(g.size()),
                    _counts(g.size()),
                    _in_queue(g.size(), false)
                {
                }

                auto refine(OrderedPartition & p, std::deque<unsigned> queue) -> void
                {
                    for (auto s : queue)
                        _in_queue[s] = true;
                    while (! queue.empty()) {
                        unsigned s = queue.front();
                        queue.pop_front();
                        _in_queue[s] = false;

                        Bitset splitter{_n};
                        for (unsigned i = s ; i < p.cell_end[s] ; ++i)
                            splitter.set(p.elements[i]);

                        for (unsigned c = 0 ; c < _n ; ) {
                            unsigned e = p.cell_end[c];
                            if (e - c > 1)
                                split(p, c, e, splitter, queue);
                            c = e;
                        }
                    }
                }

            private:
                auto split(OrderedPartition & p, unsigned c, unsigned e, const Bitset & splitter, std::deque<unsigned> & queue) -> void
                {
                    bool uniform = true;
                    for (unsigned i = c ; i < e ; ++i) {
                        _counts[p.elements[i]] = _g.neighbours(p.elements[i]).intersection_count(splitter);
                        if (_counts[p.elements[i]] != _counts[p.elements[c]])
                            uniform = false;
                    }
                    if (uniform)
                        return;

                    std::stable_sort(p.elements.begin() + c, p.elements.begin() + e,
                            [&] (Vertex a, Vertex b) { return _counts[a] < _counts[b]; });

                    bool was_queued = _in_queue[c];
                    vector<std::pair<unsigned, unsigned>> fragments;
                    for (unsigned i = c ; i < e ; ) {
                        unsigned j = i + 1;
                        while (j < e && _counts[p.elements[j]] == _counts[p.elements[i]])
                            ++j;
                        fragments.emplace_back(i, j);
                        p.cell_end[i] = j;
                        for (unsigned k = i ; k < j ; ++k)
                            p.cell_of[p.elements[k]] = i;
                        i = j;
                    }

                    // Hopcroft: if the parent is not pending, the largest fragment may be skipped
                    size_t skip = fragments.size();
                    if (! was_queued) {
                        skip = 0;
                        for (size_t f = 1 ; f < fragments.size() ; ++f)
                            if (fragments[f].second - fragments[f].first > fragments[skip].second - fragments[skip].first)
                                skip = f;
                    }
                    for (size_t f = 0 ; f < fragments.size() ; ++f)
                        if (f != skip && ! _in_queue[fragments[f].first]) {
                            _in_queue[fragments[f].first] = true;
                            queue.push_back(fragments[f].first);
                        }
                }

                const Graph & _g;
                unsigned _n;
                vector<unsigned> _counts;
                vector<bool> _in_queue;
        };

        class Search
        {
            public:
                Search(const Graph & g) :
                    _g(g),
                    _n(g.size()),
                    _refiner(g)
                {
                }

                auto run(const vector<unsigned> & colours) -> CanonicalResult
                {
                    OrderedPartition p;
                    p.elements.resize(_n);
                    std::iota(p.elements.begin(), p.elements.end(), 0);
                    p.cell_of.assign(_n, 0);
                    p.cell_end.assign(_n, _n);
                    std::deque<unsigned> queue;
                    if (_n > 0) {
                        if (! colours.empty()) {
                            std::stable_sort(p.elements.begin(), p.elements.end(),
                                    [&] (Vertex a, Vertex b) { return colours[a] < colours[b]; });
                            for (unsigned i = 0 ; i < _n ; ) {
                                unsigned j = i + 1;
                                while (j < _n && colours[p.elements[j]] == colours[p.elements[i]])
                                    ++j;
                                p.cell_end[i] = j;
                                for (unsigned k = i ; k < j ; ++k)
                                    p.cell_of[p.elements[k]] = i;
                                queue.push_back(i);
                                i = j;
                            }
                        }
                        else
                            queue.push_back(0);
                        _refiner.refine(p, std::move(queue));
                    }

                    vector<Vertex> path;
                    if (_n > 0)
                        search(p, path);
                    else
                        _best_elements.clear();

                    CanonicalResult result;
                    result.labelling.resize(_n);
                    for (unsigned i = 0 ; i < _n ; ++i)
                        result.labelling[_best_elements[i]] = i;
                    result.canonical_graph6 = to_graph6(relabel(_g.without_labels(), result.labelling));
                    result.generators = _generators;
                    result.group_order = group_order();
                    result.leaves_visited = _leaves;
                    return result;
                }

            private:
                auto search(const OrderedPartition & p, vector<Vertex> & path) -> unsigned
                {
                    if (p.is_discrete())
                        return leaf(p, path);

                    // first smallest non-singleton cell
                    unsigned target = _n, target_size = _n + 1;
                    for (unsigned c = 0 ; c < _n ; c = p.cell_end[c]) {
                        unsigned size = p.cell_end[c] - c;
                        if (size > 1 && size < target_size) {
                            target = c;
                            target_size = size;
                        }
                    }
                    vector<Vertex> members(p.elements.begin() + target, p.elements.begin() + p.cell_end[target]);
                    std::sort(members.begin(), members.end());

                    bool on_first_path = ! _have_first;
                    if (on_first_path)
                        _first_path_cells.push_back(members);

                    unsigned level = static_cast<unsigned>(path.size());
                    vector<Vertex> explored;
                    vector<Vertex> reps;
                    size_t reps_generator_count = std::numeric_limits<size_t>::max();

                    for (auto v : members) {
                        if (_generators.size() != reps_generator_count) {
                            reps = stabiliser_orbit_reps(path);
                            reps_generator_count = _generators.size();
                        }
                        if (std::any_of(explored.begin(), explored.end(), [&] (Vertex u) { return reps[u] == reps[v]; }))
                            continue;
                        explored.push_back(v);

                        OrderedPartition child = p;
                        individualise(child, v);
                        path.push_back(v);
                        unsigned jump = search(child, path);
                        path.pop_back();
                        if (jump < level)
                            return jump;
                    }
                    return no_jump;
                }

                auto individualise(OrderedPartition & p, Vertex v) -> void
                {
                    unsigned c = p.cell_of[v];
                    unsigned e = p.cell_end[c];
                    unsigned pos = static_cast<unsigned>(std::find(p.elements.begin() + c, p.elements.begin() + e, v) - p.elements.begin());
                    // keep the rest of the cell in its existing order
                    std::rotate(p.elements.begin() + c, p.elements.begin() + pos, p.elements.begin() + pos + 1);
                    p.cell_end[c] = c + 1;
                    p.cell_end[c + 1] = e;
                    for (unsigned i = c + 1 ; i < e ; ++i)
                        p.cell_of[p.elements[i]] = c + 1;
                    _refiner.refine(p, std::deque<unsigned>{c});
                }

                auto certificate(const vector<Vertex> & elements) const -> vector<uint64_t>
                {
                    unsigned words = (_n + 63) / 64;
                    vector<unsigned> position(_n);
                    for (unsigned i = 0 ; i < _n ; ++i)
                        position[elements[i]] = i;
                    vector<uint64_t> cert(static_cast<size_t>(_n) * words, 0);
                    for (unsigned i = 0 ; i < _n ; ++i)
                        _g.neighbours(elements[i]).for_each([&] (Vertex w) {
                            unsigned j = position[w];
                            cert[static_cast<size_t>(i) * words + (j >> 6)] |= uint64_t{1} << (63 - (j & 63));
                        });
                    return cert;
                }

                auto add_generator(const vector<Vertex> & from, const vector<Vertex> & to) -> void
                {
                    vector<Vertex> image(_n);
                    for (unsigned i = 0 ; i < _n ; ++i)
                        image[from[i]] = to[i];
                    Permutation gamma{std::move(image)};
                    if (! gamma.is_automorphism_of(_g))
                        throw std::logic_error("canonical search produced a non-automorphism");
                    if (! gamma.is_identity())
                        _generators.push_back(std::move(gamma));
                }

                static auto common_prefix(const vector<Vertex> & a, const vector<Vertex> & b) -> unsigned
                {
                    unsigned k = 0;
                    while (k < a.size() && k < b.size() && a[k] == b[k])
                        ++k;
                    return k;
                }

                auto leaf(const OrderedPartition & p, const vector<Vertex> & path) -> unsigned
                {
                    ++_leaves;
                    auto cert = certificate(p.elements);
                    if (! _have_first) {
                        _have_first = true;
                        _first_elements = _best_elements = p.elements;
                        _first_cert = _best_cert = std::move(cert);
                        _first_path = _best_path = path;
                        return no_jump;
                    }
                    if (cert == _first_cert) {
                        add_generator(_first_elements, p.elements);
                        return common_prefix(path, _first_path);
                    }
                    if (cert == _best_cert) {
                        add_generator(_best_elements, p.elements);
                        return common_prefix(path, _best_path);
                    }
                    if (cert > _best_cert) {
                        _best_cert = std::move(cert);
                        _best_elements = p.elements;
                        _best_path = path;
                    }
                    return no_jump;
                }

                auto stabiliser_orbit_reps(const vector<Vertex> & fixed) const -> vector<Vertex>
                {
                    vector<Permutation> gens;
                    for (auto & g : _generators)
                        if (std::all_of(fixed.begin(), fixed.end(), [&] (Vertex v) { return g(v) == v; }))
                            gens.push_back(g);
                    return orbit_representatives(_n, gens);
                }

                auto group_order() const -> mpz_class
                {
                    mpz_class order = 1;
                    for (size_t level = 0 ; level < _first_path.size() ; ++level) {
                        vector<Vertex> prefix(_first_path.begin(), _first_path.begin() + level);
                        auto reps = stabiliser_orbit_reps(prefix);
                        unsigned long orbit = 0;
                        for (auto v : _first_path_cells[level])
                            if (reps[v] == reps[_first_path[level]])
                                ++orbit;
                        order *= orbit;
                    }
                    return order;
                }

                const Graph & _g;
                unsigned _n;
                Refiner _refiner;
                vector<Permutation> _generators;
                bool _have_first = false;
                vector<Vertex> _first_elements, _best_elements, _first_path, _best_path;
                vector<uint64_t> _first_cert, _best_cert;
                vector<vector<Vertex>> _first_path_cells;
                size_t _leaves = 0;
        };
    }

    auto canonical_search(const Graph & x, const vector<unsigned> & colours) -> CanonicalResult
    {
        if (! colours.empty() && colours.size() != x.size())
            throw DimensionMismatch("colour vector length differs from vertex count");
        return Search{x}.run(colours);
    }

    auto automorphism_group(const Graph & x) -> PermGroup
    {
        auto r = canonical_search(x);
        return PermGroup{x.size(), std::move(r.generators), std::move(r.group_order)};
    }

    auto canonical_form(const Graph & x) -> string
    {
        return canonical_search(x).canonical_graph6;
    }

    auto are_isomorphic(const Graph & x, const Graph & y) -> bool
    {
        if (x.size() != y.size() || x.edge_count() != y.edge_count())
            return false;
        return canonical_form(x) == canonical_form(y);
    }

    auto find_isomorphism(const Graph & x, const Graph & y) -> std::optional<VertexMap>
    {
        if (x.size() != y.size() || x.edge_count() != y.edge_count())
            return std::nullopt;
        auto cx = canonical_search(x), cy = canonical_search(y);
        if (cx.canonical_graph6 != cy.canonical_graph6)
            return std::nullopt;
        vector<Vertex> inverse_y(y.size());
        for (Vertex v = 0 ; v < y.size() ; ++v)
            inverse_y[cy.labelling[v]] = v;
        vector<Vertex> image(x.size());
        for (Vertex v = 0 ; v < x.size() ; ++v)
            image[v] = inverse_y[cx.labelling[v]];
        return VertexMap{y.size(), std::move(image)};
    }

    auto is_vertex_transitive(const Graph & x, const PermGroup & aut) -> bool
    {
        return x.size() <= 1 || aut.is_transitive();
    }

    auto is_vertex_transitive(const Graph & x) -> bool
    {
        return is_vertex_transitive(x, automorphism_group(x));
    }

    auto is_generously_transitive(const Graph & x, const PermGroup & aut) -> bool
    {
        return is_vertex_transitive(x, aut) && orbitals(aut).all_self_paired();
    }

    auto is_generously_transitive(const Graph & x) -> bool
    {
        return is_generously_transitive(x, automorphism_group(x));
    }

    OrbitalPartition::OrbitalPartition(unsigned n, vector<unsigned> ids, vector<unsigned> paired) :
        _n(n),
        _ids(std::move(ids)),
        _paired(std::move(paired))
    {
    }

    auto OrbitalPartition::all_self_paired() const -> bool
    {
        for (unsigned o = 0 ; o < count() ; ++o)
            if (! is_self_paired(o))
                return false;
        return true;
    }

    auto OrbitalPartition::size(unsigned id) const -> unsigned
    {
        unsigned total = 0;
        for (Vertex u = 0 ; u < _n ; ++u)
            for (Vertex v = 0 ; v < _n ; ++v)
                if (u != v && this->id(u, v) == id)
                    ++total;
        return total;
    }

    auto OrbitalPartition::symmetric_classes() const -> vector<vector<unsigned>>
    {
        vector<vector<unsigned>> result;
        for (unsigned o = 0 ; o < count() ; ++o) {
            if (paired(o) == o)
                result.push_back({o});
            else if (o < paired(o))
                result.push_back({o, paired(o)});
        }
        return result;
    }

    auto orbitals(const PermGroup & group) -> OrbitalPartition
    {
        unsigned n = group.degree();
        size_t pairs = static_cast<size_t>(n) * n;
        vector<size_t> parent(pairs);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&] (size_t v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        for (auto & g : group.generators())
            for (Vertex u = 0 ; u < n ; ++u)
                for (Vertex v = 0 ; v < n ; ++v) {
                    if (u == v)
                        continue;
                    size_t a = find(static_cast<size_t>(u) * n + v), b = find(static_cast<size_t>(g(u)) * n + g(v));
                    if (a != b)
                        parent[std::max(a, b)] = std::min(a, b);
                }

        // ids numbered in order of first ordered pair (lexicographic)
        constexpr unsigned unassigned = std::numeric_limits<unsigned>::max();
        vector<unsigned> id_of_root(pairs, unassigned);
        vector<unsigned> ids(pairs, unassigned);
        unsigned next = 0;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = 0 ; v < n ; ++v) {
                if (u == v)
                    continue;
                size_t r = find(static_cast<size_t>(u) * n + v);
                if (id_of_root[r] == unassigned)
                    id_of_root[r] = next++;
                ids[static_cast<size_t>(u) * n + v] = id_of_root[r];
            }
        vector<unsigned> paired(next, unassigned);
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = 0 ; v < n ; ++v)
                if (u != v)
                    paired[ids[static_cast<size_t>(u) * n + v]] = ids[static_cast<size_t>(v) * n + u];
        return OrbitalPartition{n, std::move(ids), std::move(paired)};
    }

    auto orbitals(const Graph & x) -> OrbitalPartition
    {
        return orbitals(automorphism_group(x));
    }

    auto orbital_digraph(const OrbitalPartition & orbitals, const std::set<unsigned> & ids) -> Digraph
    {
        if (ids.empty())
            throw std::invalid_argument("orbital graph needs at least one orbital");
        for (auto id : ids)
            if (id >= orbitals.count())
                throw std::out_of_range("orbital id " + std::to_string(id) + " out of range");
        unsigned n = orbitals.vertex_count();
        vector<Bitset> rows(n, Bitset{n});
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = 0 ; v < n ; ++v)
                if (u != v && ids.contains(orbitals.id(u, v)))
                    rows[u].set(v);
        return Digraph::from_rows(std::move(rows));
    }

    auto orbital_graph(const OrbitalPartition & orbitals, const std::set<unsigned> & ids) -> Graph
    {
        for (auto id : ids)
            if (id < orbitals.count() && ! ids.contains(orbitals.paired(id)))
                throw std::invalid_argument("orbital set not closed under pairing");
        return orbital_digraph(orbitals, ids).to_graph();
    }

    auto shifts(const Graph & x, size_t cap) -> vector<Permutation>
    {
        return shift_graph(x, cap).shifts;
    }

    auto shift_graph(const Graph & x, size_t cap) -> ShiftGraph
    {
        auto aut = automorphism_group(x);
        if (aut.order() > static_cast<unsigned long>(cap))
            throw CapacityError("automorphism group of order " + aut.order().get_str() + " exceeds shift-graph cap " + std::to_string(cap));
        ShiftGraph result;
        result.elements = aut.elements(cap);

        auto is_shift = [&] (const Permutation & p) {
            for (Vertex v = 0 ; v < x.size() ; ++v)
                if (! x.adjacent(v, p(v)))
                    return false;
            return true;
        };
        for (auto & p : result.elements)
            if (is_shift(p))
                result.shifts.push_back(p);

        std::unordered_map<Permutation, unsigned, PermutationHash> index;
        for (unsigned i = 0 ; i < result.elements.size() ; ++i)
            index.emplace(result.elements[i], i);

        unsigned m = static_cast<unsigned>(result.elements.size());
        vector<Bitset> rows(m, Bitset{m});
        // a ~ b iff a b^-1 = s, i.e. a = s b
        for (unsigned b = 0 ; b < m ; ++b)
            for (auto & s : result.shifts) {
                unsigned a = index.at(s * result.elements[b]);
                rows[a].set(b);
                rows[b].set(a);
            }
        result.graph = Graph::from_rows(std::move(rows));
        return result;
    }
}
