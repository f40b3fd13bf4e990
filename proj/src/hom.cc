#include <cubelike/hom.hh>
#include <cubelike/autgrp.hh>
#include <cubelike/cayley.hh>
#include <cubelike/errors.hh>
#include <cubelike/invariants.hh>

#include <algorithm>
#include <bit>
#include <numeric>

using std::size_t;
using std::uint64_t;
using std::vector;

namespace cubelike
{
    namespace
    {
        constexpr Vertex unassigned = ~Vertex{0};

        // Domains live in one flat array per search depth: level d holds n
        // rows of w words. Branching copies the level, then prunes it.
        class Engine
        {
            public:
                Engine(const HomProblem & p, const Deadline & deadline) :
                    _src(p.source),
                    _tgt(p.target),
                    _mode(p.mode),
                    _deadline(deadline),
                    _n(p.source.size()),
                    _m(p.target.size()),
                    _w((p.target.size() + 63) / 64),
                    _assigned(_n, unassigned)
                {
                    _tadj.assign(static_cast<size_t>(_m) * _w, 0);
                    for (Vertex a = 0 ; a < _m ; ++a)
                        copy_row(_tgt.neighbours(a), &_tadj[static_cast<size_t>(a) * _w]);
                    if (_mode == HomMode::induced) {
                        _tnon.assign(static_cast<size_t>(_m) * _w, 0);
                        for (Vertex a = 0 ; a < _m ; ++a) {
                            Bitset non = _tgt.neighbours(a);
                            non.flip();
                            non.reset(a);
                            copy_row(non, &_tnon[static_cast<size_t>(a) * _w]);
                        }
                    }
                    _domains.assign(static_cast<size_t>(_n + 1) * _n * _w, 0);
                    Bitset full{_m};
                    full.set_all();
                    for (Vertex u = 0 ; u < _n ; ++u) {
                        if (! p.domains.empty()) {
                            if (p.domains.size() != _n || p.domains[u].size() != _m)
                                throw DimensionMismatch("domain list does not match the problem sizes");
                            copy_row(p.domains[u], row(0, u));
                        }
                        else
                            copy_row(full, row(0, u));
                    }
                    _complete_target = p.domains.empty() && _tgt.edge_count() == _m * (_m - 1) / 2;
                    _colour_uses.assign(_m, 0);
                    _fixed = p.fixed;
                }

                auto run() -> HomResult
                {
                    HomResult result;
                    bool ok = true;
                    if (_mode != HomMode::any && _n > _m)
                        ok = false;
                    for (auto [u, a] : _fixed) {
                        if (! ok)
                            break;
                        if (u >= _n || a >= _m)
                            throw std::out_of_range("pre-assignment outside the problem");
                        if (_assigned[u] != unassigned) {
                            ok = _assigned[u] == a;
                            continue;
                        }
                        ok = test(row(0, u), a) && assign(0, u, a);
                    }
                    if (ok)
                        ok = solve(0);
                    result.nodes = _nodes;
                    if (ok) {
                        result.outcome = Outcome::yes;
                        result.map = VertexMap{_m, _assigned};
                    }
                    else
                        result.outcome = _timed_out ? Outcome::indeterminate : Outcome::no;
                    return result;
                }

            private:
                auto row(unsigned level, Vertex u) -> uint64_t *
                {
                    return &_domains[(static_cast<size_t>(level) * _n + u) * _w];
                }

                auto copy_row(const Bitset & b, uint64_t * out) const -> void
                {
                    std::copy(b.words().begin(), b.words().end(), out);
                }

                static auto test(const uint64_t * r, Vertex a) -> bool
                {
                    return (r[a >> 6] >> (a & 63)) & 1;
                }

                auto count(const uint64_t * r) const -> unsigned
                {
                    unsigned c = 0;
                    for (unsigned i = 0 ; i < _w ; ++i)
                        c += std::popcount(r[i]);
                    return c;
                }

                auto intersect(uint64_t * r, const uint64_t * with) const -> bool
                {
                    uint64_t any = 0;
                    for (unsigned i = 0 ; i < _w ; ++i)
                        any |= (r[i] &= with[i]);
                    return any != 0;
                }

                // assigns u -> a at this level and forward-checks the other unassigned variables
                auto assign(unsigned level, Vertex u, Vertex a) -> bool
                {
                    _assigned[u] = a;
                    ++_colour_uses[a];
                    uint64_t * du = row(level, u);
                    std::fill(du, du + _w, 0);
                    du[a >> 6] |= uint64_t{1} << (a & 63);

                    const uint64_t * adj = &_tadj[static_cast<size_t>(a) * _w];
                    bool ok = true;
                    _src.neighbours(u).for_each([&] (Vertex v) {
                        if (ok && _assigned[v] == unassigned)
                            ok = intersect(row(level, v), adj);
                        else if (ok && ! test(adj, _assigned[v]))
                            ok = false;
                    });
                    if (! ok)
                        return false;

                    _queue.clear();
                    _queued.assign(_n, false);
                    auto enqueue = [&] (Vertex v) {
                        if (! _queued[v]) {
                            _queued[v] = true;
                            _queue.push_back(v);
                        }
                    };
                    _src.neighbours(u).for_each([&] (Vertex v) {
                        if (_assigned[v] == unassigned)
                            enqueue(v);
                    });
                    if (_mode != HomMode::any) {
                        for (Vertex v = 0 ; v < _n ; ++v) {
                            if (_assigned[v] != unassigned)
                                continue;
                            uint64_t * dv = row(level, v);
                            dv[a >> 6] &= ~(uint64_t{1} << (a & 63));
                            if (_mode == HomMode::induced && v != u && ! _src.adjacent(u, v))
                                intersect(dv, &_tnon[static_cast<size_t>(a) * _w]);
                            if (count(dv) == 0)
                                return false;
                            enqueue(v);
                        }
                    }
                    return revise(level, enqueue);
                }

                // arc consistency on the edges between unassigned variables:
                // every value of w needs an adjacent value in each neighbour's domain
                auto revise(unsigned level, const auto & enqueue) -> bool
                {
                    _support.resize(_w);
                    for (size_t head = 0 ; head < _queue.size() ; ++head) {
                        Vertex v = _queue[head];
                        _queued[v] = false;
                        std::fill(_support.begin(), _support.end(), 0);
                        const uint64_t * dv = row(level, v);
                        for (unsigned i = 0 ; i < _w ; ++i)
                            for (uint64_t word = dv[i] ; word ; word &= word - 1) {
                                const uint64_t * adj = &_tadj[(static_cast<size_t>(i) * 64 + std::countr_zero(word)) * _w];
                                for (unsigned j = 0 ; j < _w ; ++j)
                                    _support[j] |= adj[j];
                            }
                        bool ok = true;
                        _src.neighbours(v).for_each([&] (Vertex w) {
                            if (! ok || _assigned[w] != unassigned)
                                return;
                            uint64_t * dw = row(level, w);
                            bool changed = false;
                            for (unsigned j = 0 ; j < _w ; ++j)
                                changed = changed || (dw[j] & ~_support[j]);
                            if (! changed)
                                return;
                            ok = intersect(dw, _support.data());
                            enqueue(w);
                        });
                        if (! ok)
                            return false;
                    }
                    return true;
                }

                auto unassign(Vertex u) -> void
                {
                    --_colour_uses[_assigned[u]];
                    _assigned[u] = unassigned;
                }

                auto choose(unsigned level) -> Vertex
                {
                    Vertex best = unassigned;
                    unsigned best_size = 0;
                    for (Vertex u = 0 ; u < _n ; ++u) {
                        if (_assigned[u] != unassigned)
                            continue;
                        unsigned s = count(row(level, u));
                        if (best == unassigned || s < best_size
                                || (s == best_size && _src.degree(u) > _src.degree(best))) {
                            best = u;
                            best_size = s;
                        }
                    }
                    return best;
                }

                auto solve(unsigned level) -> bool
                {
                    ++_nodes;
                    if (_deadline.expired()) {
                        _timed_out = true;
                        return false;
                    }
                    Vertex u = choose(level);
                    if (u == unassigned)
                        return true;

                    vector<Vertex> values;
                    bool tried_unused = false;
                    const uint64_t * du = row(level, u);
                    for (unsigned i = 0 ; i < _w ; ++i)
                        for (uint64_t word = du[i] ; word ; word &= word - 1) {
                            Vertex a = i * 64 + std::countr_zero(word);
                            if (_complete_target && _colour_uses[a] == 0) {
                                if (tried_unused)
                                    continue;
                                tried_unused = true;
                            }
                            values.push_back(a);
                        }

                    for (auto a : values) {
                        std::copy(row(level, 0), row(level, 0) + static_cast<size_t>(_n) * _w, row(level + 1, 0));
                        bool ok = assign(level + 1, u, a) && solve(level + 1);
                        if (ok)
                            return true;
                        unassign(u);
                        if (_timed_out)
                            return false;
                    }
                    return false;
                }

                const Graph & _src;
                const Graph & _tgt;
                HomMode _mode;
                const Deadline & _deadline;
                unsigned _n, _m, _w;
                vector<uint64_t> _tadj, _tnon, _domains;
                vector<Vertex> _assigned;
                vector<Vertex> _queue;
                vector<bool> _queued;
                vector<uint64_t> _support;
                vector<unsigned> _colour_uses;
                vector<std::pair<Vertex, Vertex>> _fixed;
                bool _complete_target = false;
                bool _timed_out = false;
                size_t _nodes = 0;
        };
    }

    auto find_homomorphism(const HomProblem & p, const Deadline & deadline) -> HomResult
    {
        // the search stack is levels x variables x target words
        if (p.source.size() > 0 && static_cast<uint64_t>(p.source.size() + 1) * p.source.size() * ((p.target.size() + 63) / 64) > (uint64_t{1} << 28))
            throw CapacityError("homomorphism search state too large");
        return Engine{p, deadline}.run();
    }

    auto find_homomorphism(const Graph & source, const Graph & target, const Deadline & deadline) -> HomResult
    {
        return find_homomorphism(HomProblem{source, target}, deadline);
    }

    auto induced_subgraph_search(const Graph & pattern, const Graph & host, const Deadline & deadline) -> HomResult
    {
        return find_homomorphism(HomProblem{pattern, host, HomMode::induced}, deadline);
    }

    namespace
    {
        auto record(HomResult & overall, HomResult result) -> bool
        {
            overall.nodes += result.nodes;
            if (result.outcome == Outcome::yes) {
                result.nodes = overall.nodes;
                overall = std::move(result);
                return true;
            }
            if (result.outcome == Outcome::indeterminate)
                overall.outcome = Outcome::indeterminate;
            return false;
        }

        // Proper endomorphism of g. A non-surjective endomorphism of a finite
        // graph is non-injective, so some non-adjacent u, w share an image.
        // When Aut(g) is transitive, composing with automorphisms makes that
        // image u and lets u be vertex 0 and w a Stab(0)-orbit representative.
        // Otherwise an omitted vertex v ranges over orbit representatives and
        // the image of v over orbit representatives of Stab(v).
        auto proper_endomorphism(const Graph & g, const Deadline & deadline) -> HomResult
        {
            unsigned n = g.size();
            auto aut = automorphism_group(g);
            auto & reps = aut.orbit_representatives();
            auto stabiliser_representatives = [&] (Vertex v) {
                vector<unsigned> colours(n, 0);
                colours[v] = 1;
                return orbit_representatives(n, canonical_search(g, colours).generators);
            };
            HomResult overall;

            if (aut.is_transitive()) {
                auto images = stabiliser_representatives(0);
                for (Vertex w = 1 ; w < n ; ++w) {
                    if (images[w] != w || g.adjacent(0, w))
                        continue;
                    HomProblem p{g, g};
                    p.fixed = {{0, 0}, {w, 0}};
                    if (record(overall, find_homomorphism(p, deadline)))
                        return overall;
                }
                return overall;
            }

            for (Vertex v = 0 ; v < n ; ++v) {
                if (reps[v] != v)
                    continue;
                auto images = stabiliser_representatives(v);
                Bitset domain{n};
                domain.set_all();
                domain.reset(v);
                for (Vertex r = 0 ; r < n ; ++r) {
                    if (r == v || images[r] != r)
                        continue;
                    HomProblem p{g, g};
                    p.domains.assign(n, domain);
                    p.fixed.emplace_back(v, r);
                    if (record(overall, find_homomorphism(p, deadline)))
                        return overall;
                }
            }
            return overall;
        }

        auto retraction_onto_clique(const Graph & x, const vector<Vertex> & clique, const VertexMap & colouring) -> VertexMap
        {
            vector<Vertex> vertex_of_colour(colouring.codomain_size(), unassigned);
            for (auto v : clique)
                vertex_of_colour[colouring(v)] = v;
            vector<Vertex> image(x.size());
            for (Vertex v = 0 ; v < x.size() ; ++v)
                image[v] = vertex_of_colour[colouring(v)];
            return VertexMap{x.size(), std::move(image)};
        }

        // A colouring with omega colours in which the clique gets distinct colours.
        auto clique_colouring(const Graph & x, const CliqueResult & clique, const Deadline & deadline) -> HomResult
        {
            unsigned omega = clique.size();
            if (auto c = connection_set_of(x); c && std::has_single_bit(omega) && c->dimension() <= 8) {
                unsigned k = static_cast<unsigned>(std::countr_zero(omega));
                if (auto h = linear_colouring_subgroup(*c, k)) {
                    auto q = quotient_by_subgroup(x, *h);
                    return HomResult{Outcome::yes, VertexMap{omega, q.map.image()}, 0};
                }
            }
            auto target = complete_graph(omega);
            HomProblem p{x, target};
            for (unsigned i = 0 ; i < omega ; ++i)
                p.fixed.emplace_back(clique.clique[i], i);
            return find_homomorphism(p, deadline);
        }

        auto finish_core(const Graph & x, CoreResult & result, const VertexMap & phi) -> void
        {
            // iterate phi until its image stabilises; phi is then a permutation sigma there
            VertexMap psi = phi;
            vector<VertexMap> applied{phi};
            while (true) {
                auto next = phi.after(psi);
                if (next.range().size() == psi.range().size())
                    break;
                psi = std::move(next);
                applied.push_back(phi);
            }
            auto image = psi.range();
            vector<Vertex> sigma_image(x.size());
            std::iota(sigma_image.begin(), sigma_image.end(), 0);
            for (auto v : image)
                sigma_image[v] = psi(v);
            Permutation sigma{std::move(sigma_image)};
            auto inverse = sigma.power(sigma.order() - 1);
            VertexMap normalise{x.size(), inverse.image()};

            result.chain.insert(result.chain.end(), applied.begin() + 1, applied.end());
            if (! inverse.is_identity())
                result.chain.push_back(normalise);
            result.retraction = normalise.after(psi);
            result.core_vertices = std::move(image);
            result.core = induced_subgraph(x, result.core_vertices);
        }
    }

    auto compute_core(const Graph & x, const Deadline & deadline) -> CoreResult
    {
        CoreResult result;
        unsigned n = x.size();
        if (n == 0) {
            result.core = x;
            return result;
        }
        auto single = [&] (VertexMap rho) {
            result.chain.push_back(rho);
            result.retraction = std::move(rho);
            result.core_vertices = result.retraction.range();
            result.core = induced_subgraph(x, result.core_vertices);
            return result;
        };

        if (x.edge_count() == 0)
            return single(VertexMap{n, vector<Vertex>(n, 0)});

        if (is_bipartite(x)) {
            auto [u, w] = x.edges().front();
            vector<Vertex> image(n, unassigned);
            for (auto & component : connected_components(x)) {
                Vertex root = std::find(component.begin(), component.end(), u) != component.end() ? u : component.front();
                auto dist = bfs_distances(x, root);
                for (auto v : component)
                    image[v] = dist[v] % 2 == 0 ? u : w;
            }
            return single(VertexMap{n, std::move(image)});
        }

        auto clique = maximum_clique(x, deadline);
        if (clique.size() == n) {
            result.core = x;
            result.core_vertices.resize(n);
            std::iota(result.core_vertices.begin(), result.core_vertices.end(), 0);
            result.retraction = VertexMap::identity(n);
            return result;
        }
        if (clique.outcome == Outcome::yes) {
            auto colouring = clique_colouring(x, clique, deadline);
            if (colouring.outcome == Outcome::yes)
                return single(retraction_onto_clique(x, clique.clique, *colouring.map));
        }

        vector<Vertex> current(n);
        std::iota(current.begin(), current.end(), 0);
        VertexMap phi = VertexMap::identity(n);
        while (true) {
            auto g = induced_subgraph(x, current);
            auto step = proper_endomorphism(g, deadline);
            if (step.outcome == Outcome::indeterminate)
                result.outcome = Outcome::indeterminate;
            if (step.outcome != Outcome::yes)
                break;
            vector<Vertex> image(n);
            std::iota(image.begin(), image.end(), 0);
            for (unsigned i = 0 ; i < current.size() ; ++i)
                image[current[i]] = current[(*step.map)(i)];
            VertexMap extended{n, std::move(image)};
            result.chain.push_back(extended);
            phi = extended.after(phi);
            current = phi.range();
        }
        finish_core(x, result, phi);
        return result;
    }

    auto is_core(const Graph & x, const Deadline & deadline) -> Outcome
    {
        unsigned n = x.size();
        if (n <= 1)
            return Outcome::yes;
        if (x.edge_count() == 0)
            return Outcome::no;
        if (is_bipartite(x))
            return n == 2 ? Outcome::yes : Outcome::no;
        if (x.edge_count() == n * (n - 1) / 2)
            return Outcome::yes;
        auto r = proper_endomorphism(x, deadline);
        switch (r.outcome) {
            case Outcome::yes: return Outcome::no;
            case Outcome::no: return Outcome::yes;
            default: return Outcome::indeterminate;
        }
    }

    namespace
    {
        auto is_square_homomorphism(const VertexMap & f, const Graph & x) -> bool
        {
            unsigned n = x.size();
            for (Vertex i = 0 ; i < n ; ++i)
                for (Vertex j = 0 ; j < n ; ++j) {
                    Vertex here = f(i * n + j);
                    bool ok = true;
                    x.neighbours(j).for_each([&] (Vertex k) { ok = ok && x.adjacent(here, f(i * n + k)); });
                    x.neighbours(i).for_each([&] (Vertex k) { ok = ok && x.adjacent(here, f(k * n + j)); });
                    if (! ok)
                        return false;
                }
            return true;
        }
    }

    auto is_hom_idempotent(const Graph & x, bool assume_core, const Deadline & deadline) -> HomIdempotence
    {
        HomIdempotence result;
        unsigned n = x.size();
        if (connection_set_of(x)) {
            vector<Vertex> image(static_cast<size_t>(n) * n);
            for (Vertex i = 0 ; i < n ; ++i)
                for (Vertex j = 0 ; j < n ; ++j)
                    image[i * n + j] = *x.vertex_of(x.label(i) + x.label(j));
            VertexMap add{n, std::move(image)};
            if (! is_square_homomorphism(add, x))
                throw std::logic_error("addition map failed on a Cayley graph");
            result.outcome = Outcome::yes;
            result.map = std::move(add);
            result.method = "addition";
            return result;
        }
        result.method = "search";
        if (n == 0) {
            result.outcome = Outcome::yes;
            result.map = VertexMap{0, {}};
            return result;
        }
        if (static_cast<uint64_t>(n) * n > vertex_cap()) {
            result.outcome = Outcome::indeterminate;
            result.method = "capacity";
            return result;
        }
        auto square = cartesian_product(x, x);
        HomProblem p{square, x};
        if (assume_core) {
            for (Vertex i = 0 ; i < n ; ++i) {
                p.fixed.emplace_back(i * n, i);
                if (i != 0)
                    p.fixed.emplace_back(i, i);
            }
        }
        else if (is_vertex_transitive(x))
            p.fixed.emplace_back(0, 0);
        auto r = find_homomorphism(p, deadline);
        result.outcome = r.outcome;
        result.map = std::move(r.map);
        return result;
    }

    auto core_equivalent_to_shift_graph(const Graph & x, const Deadline & deadline) -> ShiftGraphEquivalence
    {
        ShiftGraphEquivalence result;
        std::optional<ShiftGraph> sh;
        try {
            sh = shift_graph(x);
        }
        catch (const CapacityError &) {
            auto fallback = is_hom_idempotent(x, true, deadline);
            result.outcome = fallback.outcome;
            result.route = "hom-idempotence";
            return result;
        }
        result.route = "shift-graph";
        if (x.size() == 0) {
            result.outcome = Outcome::yes;
            return result;
        }
        // Sh(X) is a Cayley graph, so vertex 0 of X may go to the identity
        HomProblem p{x, sh->graph, HomMode::induced};
        p.fixed.emplace_back(0, 0);
        auto r = find_homomorphism(p, deadline);
        result.outcome = r.outcome;
        result.embedding = std::move(r.map);
        return result;
    }

    auto verify_covering_map(const VertexMap & phi, const Graph & x, const Graph & y) -> CoveringCheck
    {
        CoveringCheck check;
        if (phi.domain_size() != x.size() || phi.codomain_size() != y.size()) {
            check.reason = "map sizes do not match the graphs";
            return check;
        }
        for (auto [u, v] : x.edges())
            if (! y.adjacent(phi(u), phi(v))) {
                check.vertex = u;
                check.reason = "not a homomorphism at edge " + std::to_string(u) + "-" + std::to_string(v);
                return check;
            }
        vector<bool> hit(y.size(), false);
        for (Vertex u = 0 ; u < x.size() ; ++u)
            hit[phi(u)] = true;
        for (Vertex v = 0 ; v < y.size() ; ++v)
            if (! hit[v]) {
                check.vertex = v;
                check.reason = "vertex " + std::to_string(v) + " of the codomain is not covered";
                return check;
            }
        for (Vertex u = 0 ; u < x.size() ; ++u) {
            Bitset images{y.size()};
            bool injective = true;
            x.neighbours(u).for_each([&] (Vertex w) {
                if (images.test(phi(w)))
                    injective = false;
                images.set(phi(w));
            });
            if (! injective || images != y.neighbours(phi(u))) {
                check.vertex = u;
                check.reason = "not a bijection from N(" + std::to_string(u) + ") onto N(" + std::to_string(phi(u)) + ")";
                return check;
            }
        }
        check.ok = true;
        return check;
    }

    auto fibres_are_cosets(const VertexMap & phi, const Graph & y) -> FibreCosets
    {
        if (! y.has_labels())
            throw std::invalid_argument("fibre coset test needs a labelled graph");
        FibreCosets result;
        auto fibres = phi.fibres();
        vector<vector<Word>> labelled;
        for (auto & f : fibres) {
            vector<Word> words;
            for (auto v : f)
                words.push_back(y.label(v));
            if (! words.empty() && is_coset(words))
                ++result.coset_fibres;
            labelled.push_back(std::move(words));
        }

        unsigned n = y.size() ? y.label(0).dimension() : 0;
        std::optional<Subgroup> candidate;
        for (Vertex c = 0 ; c < labelled.size() ; ++c) {
            auto & words = labelled[c];
            if (words.empty()) {
                result.witness = c;
                return result;
            }
            vector<Word> differences;
            for (auto & w : words)
                differences.push_back(w + words.front());
            auto h = span(differences, n);
            if (! candidate)
                candidate = h;
            if (h != *candidate || words.size() != candidate->order()) {
                result.witness = c;
                return result;
            }
        }
        result.subgroup = std::move(candidate);
        return result;
    }

    auto hull_hom_test(const Graph & y, const Graph & x, const Deadline & deadline) -> HomResult
    {
        auto base = find_homomorphism(y, x, deadline);
        if (base.outcome != Outcome::yes)
            return base;
        unsigned m = y.size();

        if (connection_set_of(x)) {
            // the linear extension of e_u -> label(phi(u)) is a homomorphism on even words
            HomResult result{Outcome::yes, std::nullopt, base.nodes};
            if (m - 1 < 32 && (1u << (m - 1)) <= vertex_cap()) {
                vector<Word> images;
                for (Vertex u = 0 ; u < m ; ++u)
                    images.push_back(x.label((*base.map)(u)));
                vector<Vertex> table(1u << (m - 1));
                for (Vertex t = 0 ; t < table.size() ; ++t) {
                    // hull vertex t is the even word with coordinates t on vertices 1 .. m-1
                    Word sum = std::popcount(t) % 2 ? images[0] : Word::zero(images[0].dimension());
                    for (unsigned v = 1 ; v < m ; ++v)
                        if ((t >> (v - 1)) & 1)
                            sum += images[v];
                    table[t] = *x.vertex_of(sum);
                }
                result.map = VertexMap{x.size(), std::move(table)};
            }
            return result;
        }

        std::optional<Hull> hull;
        try {
            hull = cubelike_hull(y);
        }
        catch (const CapacityError &) {
            return HomResult{Outcome::indeterminate, std::nullopt, base.nodes};
        }
        // the hull is vertex-transitive, so its vertex 0 may go to any orbit representative of Aut(X)
        auto aut = automorphism_group(x);
        auto & reps = aut.orbit_representatives();
        HomResult overall{Outcome::no, std::nullopt, base.nodes};
        for (Vertex r = 0 ; r < x.size() ; ++r) {
            if (reps[r] != r)
                continue;
            HomProblem p{hull->graph, x};
            p.fixed.emplace_back(0, r);
            auto result = find_homomorphism(p, deadline);
            overall.nodes += result.nodes;
            if (result.outcome == Outcome::yes) {
                result.nodes = overall.nodes;
                return result;
            }
            if (result.outcome == Outcome::indeterminate)
                overall.outcome = Outcome::indeterminate;
        }
        return overall;
    }
}
