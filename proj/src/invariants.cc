#include <cubelike/invariants.hh>
#include <cubelike/autgrp.hh>
#include <cubelike/cayley.hh>
#include <cubelike/hom.hh>

#include <algorithm>
#include <bit>
#include <numeric>

using std::size_t;
using std::vector;

namespace cubelike
{
    namespace
    {
        class CliqueSearch
        {
            public:
                CliqueSearch(const Graph & g, const Deadline & deadline) :
                    _n(g.size()),
                    _deadline(deadline)
                {
                    // non-increasing degree order; colouring classes then fill high-degree vertices first
                    _order.resize(_n);
                    std::iota(_order.begin(), _order.end(), 0);
                    std::stable_sort(_order.begin(), _order.end(),
                            [&] (Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
                    vector<Vertex> position(_n);
                    for (unsigned i = 0 ; i < _n ; ++i)
                        position[_order[i]] = i;
                    _adj.assign(_n, Bitset{_n});
                    for (unsigned i = 0 ; i < _n ; ++i)
                        g.neighbours(_order[i]).for_each([&] (Vertex w) { _adj[i].set(position[w]); });
                }

                auto run() -> CliqueResult
                {
                    Bitset all{_n};
                    all.set_all();
                    if (_n > 0)
                        expand(all);
                    CliqueResult result;
                    result.outcome = _timed_out ? Outcome::indeterminate : Outcome::yes;
                    for (auto v : _best)
                        result.clique.push_back(_order[v]);
                    std::sort(result.clique.begin(), result.clique.end());
                    return result;
                }

            private:
                auto expand(Bitset p) -> void
                {
                    if (_deadline.expired()) {
                        _timed_out = true;
                        return;
                    }
                    vector<Vertex> vertices;
                    vector<unsigned> colours;
                    Bitset uncoloured = p;
                    unsigned k = 0;
                    while (uncoloured.any()) {
                        ++k;
                        Bitset q = uncoloured;
                        while (q.any()) {
                            Vertex v = q.first();
                            q.reset(v);
                            q.subtract(_adj[v]);
                            uncoloured.reset(v);
                            vertices.push_back(v);
                            colours.push_back(k);
                        }
                    }
                    for (size_t i = vertices.size() ; i-- > 0 ; ) {
                        if (_current.size() + colours[i] <= _best.size())
                            return;
                        Vertex v = vertices[i];
                        _current.push_back(v);
                        Bitset next = p & _adj[v];
                        if (next.none()) {
                            if (_current.size() > _best.size())
                                _best = _current;
                        }
                        else
                            expand(std::move(next));
                        _current.pop_back();
                        p.reset(v);
                        if (_timed_out)
                            return;
                    }
                }

                unsigned _n;
                const Deadline & _deadline;
                vector<Vertex> _order;
                vector<Bitset> _adj;
                vector<Vertex> _current, _best;
                bool _timed_out = false;
        };
    }

    auto maximum_clique(const Graph & x, const Deadline & deadline) -> CliqueResult
    {
        return CliqueSearch{x, deadline}.run();
    }

    auto maximum_independent_set(const Graph & x, const Deadline & deadline) -> CliqueResult
    {
        return CliqueSearch{complement(x), deadline}.run();
    }

    auto clique_number(const Graph & x) -> unsigned
    {
        return maximum_clique(x).size();
    }

    auto independence_number(const Graph & x) -> unsigned
    {
        return maximum_independent_set(x).size();
    }

    auto greedy_colouring(const Graph & x) -> VertexMap
    {
        unsigned n = x.size();
        constexpr Vertex none = ~Vertex{0};
        vector<Vertex> colour(n, none);
        vector<Bitset> seen(n, Bitset{n + 1});
        vector<unsigned> saturation(n, 0);
        unsigned used = 0;
        for (unsigned step = 0 ; step < n ; ++step) {
            Vertex pick = none;
            for (Vertex v = 0 ; v < n ; ++v) {
                if (colour[v] != none)
                    continue;
                if (pick == none || saturation[v] > saturation[pick]
                        || (saturation[v] == saturation[pick] && x.degree(v) > x.degree(pick)))
                    pick = v;
            }
            Vertex c = 0;
            while (seen[pick].test(c))
                ++c;
            colour[pick] = c;
            used = std::max(used, c + 1);
            x.neighbours(pick).for_each([&] (Vertex w) {
                if (! seen[w].test(c)) {
                    seen[w].set(c);
                    ++saturation[w];
                }
            });
        }
        return VertexMap{used, std::move(colour)};
    }

    namespace
    {
        // the subgroup search is exhaustive and unbounded in time
        constexpr unsigned linear_colouring_dimension_limit = 8;

        // colouring by the cosets of a subgroup missing the connection set
        auto linear_colouring(const Graph & x, unsigned lower, unsigned upper) -> std::optional<VertexMap>
        {
            auto c = connection_set_of(x);
            if (! c || c->dimension() > linear_colouring_dimension_limit)
                return std::nullopt;
            for (unsigned k = 0 ; k <= c->dimension() && (1u << k) < upper ; ++k) {
                if ((1u << k) < lower)
                    continue;
                auto h = linear_colouring_subgroup(*c, k);
                if (! h)
                    continue;
                auto q = quotient_by_subgroup(x, *h);
                return VertexMap{1u << k, q.map.image()};
            }
            return std::nullopt;
        }
    }

    auto chromatic_number(const Graph & x, const Deadline & deadline) -> ChromaticResult
    {
        ChromaticResult result;
        unsigned n = x.size();
        if (n == 0)
            return result;
        auto clique = maximum_clique(x, deadline);
        auto independent = maximum_independent_set(x, deadline);
        // n / alpha bounds chi below only when alpha is certified
        result.lower = clique.size();
        if (independent.outcome == Outcome::yes)
            result.lower = std::max(result.lower, (n + independent.size() - 1) / independent.size());
        result.colouring = greedy_colouring(x);
        result.upper = result.colouring->codomain_size();
        if (result.lower < result.upper)
            if (auto linear = linear_colouring(x, result.lower, result.upper)) {
                result.upper = linear->codomain_size();
                result.colouring = std::move(linear);
            }

        while (result.lower < result.upper) {
            unsigned k = result.lower;
            auto target = complete_graph(k);
            HomProblem p{x, target};
            for (unsigned i = 0 ; i < clique.size() ; ++i)
                p.fixed.emplace_back(clique.clique[i], i);
            auto r = find_homomorphism(p, deadline);
            if (r.outcome == Outcome::yes) {
                result.upper = k;
                result.colouring = std::move(r.map);
            }
            else if (r.outcome == Outcome::no)
                result.lower = k + 1;
            else
                break;
        }
        result.outcome = result.lower == result.upper ? Outcome::yes : Outcome::indeterminate;
        return result;
    }

    auto clique_coclique_equality(const Graph & x, const Deadline & deadline) -> Outcome
    {
        if (! is_vertex_transitive(x))
            throw std::invalid_argument("clique-coclique equality needs a vertex-transitive graph");
        auto omega = maximum_clique(x, deadline);
        auto alpha = maximum_independent_set(x, deadline);
        if (omega.outcome != Outcome::yes || alpha.outcome != Outcome::yes) {
            // witnesses only grow and alpha omega <= |V|, so reaching |V| is already conclusive
            if (omega.size() * alpha.size() == x.size())
                return Outcome::yes;
            return Outcome::indeterminate;
        }
        return omega.size() * alpha.size() == x.size() ? Outcome::yes : Outcome::no;
    }
}
