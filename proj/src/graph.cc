#include <cubelike/graph.hh>
#include <cubelike/errors.hh>

#include <algorithm>
#include <atomic>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>

using std::pair;
using std::string;
using std::to_string;
using std::vector;

namespace cubelike
{
    namespace
    {
        std::atomic<unsigned> global_vertex_cap{4096};

        auto check_size(unsigned n) -> void
        {
            if (n > vertex_cap())
                throw CapacityError("graph on " + to_string(n) + " vertices exceeds vertex cap " + to_string(vertex_cap()));
        }
    }

    auto vertex_cap() -> unsigned
    {
        return global_vertex_cap.load();
    }

    auto set_vertex_cap(unsigned cap) -> void
    {
        global_vertex_cap.store(cap);
    }

    Graph::Graph(unsigned n)
    {
        check_size(n);
        _adj.assign(n, Bitset{n});
    }

    auto Graph::from_edges(unsigned n, std::span<const pair<Vertex, Vertex>> edges) -> Graph
    {
        Graph g{n};
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw std::out_of_range("edge endpoint out of range");
            if (u == v)
                throw LoopError("loop at vertex " + to_string(u));
            g._adj[u].set(v);
            g._adj[v].set(u);
        }
        return g;
    }

    auto Graph::from_rows(vector<Bitset> rows) -> Graph
    {
        check_size(static_cast<unsigned>(rows.size()));
        Graph g;
        g._adj = std::move(rows);
        g.check();
        return g;
    }

    auto Graph::check() const -> void
    {
        unsigned n = size();
        for (Vertex u = 0 ; u < n ; ++u) {
            if (_adj[u].size() != n)
                throw DimensionMismatch("adjacency row of wrong length");
            if (_adj[u].test(u))
                throw LoopError("loop at vertex " + to_string(u));
            _adj[u].for_each([&] (Vertex v) {
                if (! _adj[v].test(u))
                    throw std::invalid_argument("adjacency not symmetric at " + to_string(u) + "," + to_string(v));
            });
        }
        if (! _labels.empty()) {
            if (_labels.size() != n)
                throw DimensionMismatch("label count differs from vertex count");
            std::unordered_set<Word> seen;
            for (auto & w : _labels) {
                if (w.dimension() != _labels.front().dimension())
                    throw DimensionMismatch("labels of mixed dimension");
                if (! seen.insert(w).second)
                    throw std::invalid_argument("duplicate vertex label " + w.to_string());
            }
        }
    }

    auto Graph::edge_count() const -> unsigned
    {
        unsigned total = 0;
        for (auto & r : _adj)
            total += r.count();
        return total / 2;
    }

    auto Graph::edges() const -> vector<pair<Vertex, Vertex>>
    {
        vector<pair<Vertex, Vertex>> result;
        for (Vertex u = 0 ; u < size() ; ++u)
            _adj[u].for_each([&] (Vertex v) {
                if (u < v)
                    result.emplace_back(u, v);
            });
        return result;
    }

    auto Graph::regular_degree() const -> std::optional<unsigned>
    {
        if (_adj.empty())
            return 0;
        unsigned d = degree(0);
        for (Vertex v = 1 ; v < size() ; ++v)
            if (degree(v) != d)
                return std::nullopt;
        return d;
    }

    auto Graph::vertex_of(const Word & w) const -> std::optional<Vertex>
    {
        // cayley constructions index vertex i by the word whose bits are i
        if (w.bits() < _labels.size() && _labels[w.bits()] == w)
            return static_cast<Vertex>(w.bits());
        for (Vertex v = 0 ; v < _labels.size() ; ++v)
            if (_labels[v] == w)
                return v;
        return std::nullopt;
    }

    auto Graph::with_labels(vector<Word> labels) const -> Graph
    {
        Graph g = *this;
        g._labels = std::move(labels);
        g.check();
        return g;
    }

    auto Graph::without_labels() const -> Graph
    {
        Graph g = *this;
        g._labels.clear();
        return g;
    }

    Digraph::Digraph(unsigned n)
    {
        check_size(n);
        _out.assign(n, Bitset{n});
    }

    auto Digraph::from_rows(vector<Bitset> out_rows) -> Digraph
    {
        Digraph d{static_cast<unsigned>(out_rows.size())};
        for (Vertex u = 0 ; u < d.size() ; ++u) {
            if (out_rows[u].size() != d.size())
                throw DimensionMismatch("arc row of wrong length");
            if (out_rows[u].test(u))
                throw LoopError("loop at vertex " + to_string(u));
        }
        d._out = std::move(out_rows);
        return d;
    }

    auto Digraph::arc_count() const -> unsigned
    {
        unsigned total = 0;
        for (auto & r : _out)
            total += r.count();
        return total;
    }

    auto Digraph::is_symmetric() const -> bool
    {
        for (Vertex u = 0 ; u < size() ; ++u) {
            bool ok = true;
            _out[u].for_each([&] (Vertex v) { ok = ok && _out[v].test(u); });
            if (! ok)
                return false;
        }
        return true;
    }

    auto Digraph::to_graph() const -> Graph
    {
        if (! is_symmetric())
            throw std::invalid_argument("digraph is not symmetric");
        return Graph::from_rows(_out);
    }

    VertexMap::VertexMap(unsigned codomain_size, vector<Vertex> image) :
        _codomain_size(codomain_size),
        _image(std::move(image))
    {
        for (auto v : _image)
            if (v >= codomain_size)
                throw std::out_of_range("vertex map image " + to_string(v) + " outside codomain of size " + to_string(codomain_size));
    }

    auto VertexMap::identity(unsigned n) -> VertexMap
    {
        vector<Vertex> image(n);
        for (Vertex v = 0 ; v < n ; ++v)
            image[v] = v;
        return VertexMap{n, std::move(image)};
    }

    auto VertexMap::range() const -> vector<Vertex>
    {
        vector<bool> hit(_codomain_size, false);
        for (auto v : _image)
            hit[v] = true;
        vector<Vertex> result;
        for (Vertex v = 0 ; v < _codomain_size ; ++v)
            if (hit[v])
                result.push_back(v);
        return result;
    }

    auto VertexMap::after(const VertexMap & first) const -> VertexMap
    {
        if (first.codomain_size() != domain_size())
            throw DimensionMismatch("composing vertex maps with mismatched sizes");
        vector<Vertex> image(first.domain_size());
        for (Vertex v = 0 ; v < image.size() ; ++v)
            image[v] = _image[first(v)];
        return VertexMap{_codomain_size, std::move(image)};
    }

    auto VertexMap::is_homomorphism(const Graph & from, const Graph & to) const -> bool
    {
        if (from.size() != domain_size() || to.size() != codomain_size())
            return false;
        for (auto [u, v] : from.edges())
            if (! to.adjacent(_image[u], _image[v]))
                return false;
        return true;
    }

    auto VertexMap::is_injective() const -> bool
    {
        vector<bool> hit(_codomain_size, false);
        for (auto v : _image) {
            if (hit[v])
                return false;
            hit[v] = true;
        }
        return true;
    }

    auto VertexMap::is_surjective() const -> bool
    {
        return range().size() == _codomain_size;
    }

    auto VertexMap::fibres() const -> vector<vector<Vertex>>
    {
        vector<vector<Vertex>> result(_codomain_size);
        for (Vertex v = 0 ; v < _image.size() ; ++v)
            result[_image[v]].push_back(v);
        return result;
    }

    auto complete_graph(unsigned n) -> Graph
    {
        vector<Bitset> rows(n, Bitset{n});
        for (Vertex u = 0 ; u < n ; ++u) {
            rows[u].set_all();
            rows[u].reset(u);
        }
        return Graph::from_rows(std::move(rows));
    }

    auto cycle_graph(unsigned n) -> Graph
    {
        if (n < 3)
            throw std::invalid_argument("cycle needs at least 3 vertices");
        vector<pair<Vertex, Vertex>> edges;
        for (Vertex v = 0 ; v < n ; ++v)
            edges.emplace_back(v, (v + 1) % n);
        return Graph::from_edges(n, edges);
    }

    auto path_graph(unsigned n) -> Graph
    {
        vector<pair<Vertex, Vertex>> edges;
        for (Vertex v = 0 ; v + 1 < n ; ++v)
            edges.emplace_back(v, v + 1);
        return Graph::from_edges(n, edges);
    }

    auto complement(const Graph & g) -> Graph
    {
        vector<Bitset> rows;
        rows.reserve(g.size());
        for (Vertex u = 0 ; u < g.size() ; ++u) {
            Bitset r = g.neighbours(u);
            r.flip();
            r.reset(u);
            rows.push_back(std::move(r));
        }
        Graph result = Graph::from_rows(std::move(rows));
        return g.has_labels() ? result.with_labels(g.labels()) : result;
    }

    auto cartesian_product(const Graph & x, const Graph & y) -> Graph
    {
        unsigned long long total = static_cast<unsigned long long>(x.size()) * y.size();
        if (total > vertex_cap())
            throw CapacityError("cartesian product on " + to_string(total) + " vertices exceeds vertex cap");
        unsigned ny = y.size(), n = static_cast<unsigned>(total);
        vector<Bitset> rows(n, Bitset{n});
        for (Vertex i = 0 ; i < x.size() ; ++i)
            for (Vertex j = 0 ; j < ny ; ++j) {
                auto & r = rows[i * ny + j];
                y.neighbours(j).for_each([&] (Vertex j2) { r.set(i * ny + j2); });
                x.neighbours(i).for_each([&] (Vertex i2) { r.set(i2 * ny + j); });
            }
        return Graph::from_rows(std::move(rows));
    }

    auto bipartite_double_cover(const Graph & g) -> Graph
    {
        unsigned n = 2 * g.size();
        check_size(n);
        vector<Bitset> rows(n, Bitset{n});
        for (Vertex u = 0 ; u < g.size() ; ++u)
            g.neighbours(u).for_each([&] (Vertex v) {
                rows[2 * u].set(2 * v + 1);
                rows[2 * u + 1].set(2 * v);
            });
        return Graph::from_rows(std::move(rows));
    }

    auto bfs_distances(const Graph & g, Vertex source) -> vector<unsigned>
    {
        vector<unsigned> dist(g.size(), infinite_distance);
        Bitset unvisited{g.size()};
        unvisited.set_all();
        unvisited.reset(source);
        dist[source] = 0;
        Bitset frontier{g.size()};
        frontier.set(source);
        unsigned d = 0;
        while (frontier.any()) {
            Bitset next{g.size()};
            frontier.for_each([&] (Vertex v) { next |= g.neighbours(v); });
            next &= unvisited;
            unvisited.subtract(next);
            ++d;
            next.for_each([&] (Vertex v) { dist[v] = d; });
            frontier = std::move(next);
        }
        return dist;
    }

    auto distances(const Graph & g) -> vector<vector<unsigned>>
    {
        vector<vector<unsigned>> result;
        result.reserve(g.size());
        for (Vertex v = 0 ; v < g.size() ; ++v)
            result.push_back(bfs_distances(g, v));
        return result;
    }

    auto odd_girth(const Graph & g) -> unsigned
    {
        // from each root, an edge inside a BFS layer at depth d closes an odd
        // walk of length 2d+1; the minimum over all roots is the odd girth
        unsigned best = infinite_distance;
        for (Vertex root = 0 ; root < g.size() ; ++root) {
            auto dist = bfs_distances(g, root);
            for (auto [u, v] : g.edges())
                if (dist[u] != infinite_distance && dist[u] == dist[v])
                    best = std::min(best, 2 * dist[u] + 1);
        }
        return best;
    }

    auto is_bipartite(const Graph & g) -> bool
    {
        return odd_girth(g) == infinite_distance;
    }

    auto connected_components(const Graph & g) -> vector<vector<Vertex>>
    {
        vector<vector<Vertex>> result;
        vector<bool> seen(g.size(), false);
        for (Vertex s = 0 ; s < g.size() ; ++s) {
            if (seen[s])
                continue;
            auto dist = bfs_distances(g, s);
            vector<Vertex> component;
            for (Vertex v = 0 ; v < g.size() ; ++v)
                if (dist[v] != infinite_distance) {
                    component.push_back(v);
                    seen[v] = true;
                }
            result.push_back(std::move(component));
        }
        return result;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return g.size() <= 1 || connected_components(g).size() == 1;
    }

    auto induced_subgraph(const Graph & g, std::span<const Vertex> vertices) -> Graph
    {
        unsigned n = static_cast<unsigned>(vertices.size());
        vector<Bitset> rows(n, Bitset{n});
        for (auto v : vertices)
            if (v >= g.size())
                throw std::out_of_range("vertex " + to_string(v) + " out of range");
        for (Vertex i = 0 ; i < n ; ++i)
            for (Vertex j = 0 ; j < n ; ++j)
                if (g.adjacent(vertices[i], vertices[j]))
                    rows[i].set(j);
        Graph result = Graph::from_rows(std::move(rows));
        if (g.has_labels()) {
            vector<Word> labels;
            for (auto v : vertices)
                labels.push_back(g.label(v));
            return result.with_labels(std::move(labels));
        }
        return result;
    }

    auto distance_graph(const Graph & g, unsigned k) -> Graph
    {
        vector<Bitset> rows(g.size(), Bitset{g.size()});
        for (Vertex u = 0 ; u < g.size() ; ++u) {
            auto dist = bfs_distances(g, u);
            for (Vertex v = 0 ; v < g.size() ; ++v)
                if (u != v && dist[v] == k)
                    rows[u].set(v);
        }
        Graph result = Graph::from_rows(std::move(rows));
        return g.has_labels() ? result.with_labels(g.labels()) : result;
    }

    auto relabel(const Graph & g, std::span<const Vertex> perm) -> Graph
    {
        unsigned n = g.size();
        if (perm.size() != n)
            throw DimensionMismatch("relabelling permutation of wrong length");
        vector<Bitset> rows(n, Bitset{n});
        for (Vertex u = 0 ; u < n ; ++u)
            g.neighbours(u).for_each([&] (Vertex v) { rows[perm[u]].set(perm[v]); });
        Graph result = Graph::from_rows(std::move(rows));
        if (g.has_labels()) {
            vector<Word> labels(n);
            for (Vertex u = 0 ; u < n ; ++u)
                labels[perm[u]] = g.label(u);
            return result.with_labels(std::move(labels));
        }
        return result;
    }
}
