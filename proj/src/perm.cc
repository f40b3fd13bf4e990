#include <cubelike/perm.hh>
#include <cubelike/errors.hh>

#include <algorithm>
#include <deque>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_set>

using std::size_t;
using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace cubelike
{
    Permutation::Permutation(vector<Vertex> image) :
        _image(std::move(image))
    {
        vector<bool> seen(_image.size(), false);
        for (auto v : _image) {
            if (v >= _image.size() || seen[v])
                throw std::invalid_argument("not a permutation");
            seen[v] = true;
        }
    }

    auto Permutation::identity(unsigned n) -> Permutation
    {
        vector<Vertex> image(n);
        std::iota(image.begin(), image.end(), 0);
        Permutation p;
        p._image = std::move(image);
        return p;
    }

    auto Permutation::operator* (const Permutation & other) const -> Permutation
    {
        if (other.degree() != degree())
            throw DimensionMismatch("composing permutations of different degree");
        Permutation p;
        p._image.resize(degree());
        for (Vertex v = 0 ; v < degree() ; ++v)
            p._image[v] = _image[other._image[v]];
        return p;
    }

    auto Permutation::inverse() const -> Permutation
    {
        Permutation p;
        p._image.resize(degree());
        for (Vertex v = 0 ; v < degree() ; ++v)
            p._image[_image[v]] = v;
        return p;
    }

    auto Permutation::is_identity() const -> bool
    {
        for (Vertex v = 0 ; v < degree() ; ++v)
            if (_image[v] != v)
                return false;
        return true;
    }

    auto Permutation::is_involution() const -> bool
    {
        if (is_identity())
            return false;
        for (Vertex v = 0 ; v < degree() ; ++v)
            if (_image[_image[v]] != v)
                return false;
        return true;
    }

    auto Permutation::has_fixed_point() const -> bool
    {
        for (Vertex v = 0 ; v < degree() ; ++v)
            if (_image[v] == v)
                return true;
        return false;
    }

    auto Permutation::order() const -> uint64_t
    {
        uint64_t result = 1;
        vector<bool> seen(degree(), false);
        for (Vertex v = 0 ; v < degree() ; ++v) {
            if (seen[v])
                continue;
            uint64_t len = 0;
            for (Vertex w = v ; ! seen[w] ; w = _image[w]) {
                seen[w] = true;
                ++len;
            }
            result = std::lcm(result, len);
        }
        return result;
    }

    auto Permutation::power(uint64_t k) const -> Permutation
    {
        // walk each cycle k steps
        Permutation p;
        p._image.resize(degree());
        vector<bool> seen(degree(), false);
        for (Vertex v = 0 ; v < degree() ; ++v) {
            if (seen[v])
                continue;
            vector<Vertex> cycle;
            for (Vertex w = v ; ! seen[w] ; w = _image[w]) {
                seen[w] = true;
                cycle.push_back(w);
            }
            for (size_t i = 0 ; i < cycle.size() ; ++i)
                p._image[cycle[i]] = cycle[(i + k) % cycle.size()];
        }
        return p;
    }

    auto Permutation::is_automorphism_of(const Graph & g) const -> bool
    {
        if (g.size() != degree())
            return false;
        for (auto [u, v] : g.edges())
            if (! g.adjacent(_image[u], _image[v]))
                return false;
        return true;
    }

    auto PermutationHash::operator() (const Permutation & p) const noexcept -> size_t
    {
        size_t h = 1469598103934665603ULL;
        for (auto v : p.image())
            h = (h ^ v) * 1099511628211ULL;
        return h;
    }

    auto orbit_representatives(unsigned n, std::span<const Permutation> gens) -> vector<Vertex>
    {
        vector<Vertex> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&] (Vertex v) {
            while (parent[v] != v)
                v = parent[v] = parent[parent[v]];
            return v;
        };
        for (auto & g : gens)
            for (Vertex v = 0 ; v < n ; ++v) {
                Vertex a = find(v), b = find(g(v));
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        vector<Vertex> result(n);
        for (Vertex v = 0 ; v < n ; ++v)
            result[v] = find(v);
        return result;
    }

    // Deterministic Schreier-Sims. Level i stabilises base[0..i-1]; its
    // transversal maps base[i] to each point of its basic orbit.
    struct PermGroup::Chain
    {
        struct Level
        {
            Vertex base_point;
            vector<Permutation> generators;
            vector<std::optional<Permutation>> transversal;
            vector<Vertex> orbit;
        };

        unsigned degree;
        vector<Level> levels;

        auto rebuild_orbit(Level & level) -> void
        {
            level.transversal.assign(degree, std::nullopt);
            level.orbit.clear();
            level.transversal[level.base_point] = Permutation::identity(degree);
            level.orbit.push_back(level.base_point);
            for (size_t i = 0 ; i < level.orbit.size() ; ++i) {
                Vertex x = level.orbit[i];
                for (auto & g : level.generators) {
                    Vertex y = g(x);
                    if (! level.transversal[y]) {
                        level.transversal[y] = g * *level.transversal[x];
                        level.orbit.push_back(y);
                    }
                }
            }
        }

        // Returns the residue after sifting through levels from `from`, and the level where it stopped.
        auto sift(Permutation g, size_t from) const -> std::pair<Permutation, size_t>
        {
            for (size_t i = from ; i < levels.size() ; ++i) {
                Vertex b = g(levels[i].base_point);
                if (! levels[i].transversal[b])
                    return {std::move(g), i};
                g = levels[i].transversal[b]->inverse() * g;
            }
            return {std::move(g), levels.size()};
        }

        auto first_moved(const Permutation & g) const -> Vertex
        {
            for (Vertex v = 0 ; v < degree ; ++v)
                if (g(v) != v)
                    return v;
            return degree;
        }

        auto add_level_for(const Permutation & g) -> void
        {
            Level level;
            level.base_point = first_moved(g);
            levels.push_back(std::move(level));
        }

        // Schreier-Sims closure from level i downwards.
        auto complete(size_t i) -> void
        {
            rebuild_orbit(levels[i]);
            bool changed = true;
            while (changed) {
                changed = false;
                for (size_t oi = 0 ; oi < levels[i].orbit.size() && ! changed ; ++oi) {
                    Vertex x = levels[i].orbit[oi];
                    for (size_t gi = 0 ; gi < levels[i].generators.size() && ! changed ; ++gi) {
                        auto & s = levels[i].generators[gi];
                        auto & ux = *levels[i].transversal[x];
                        auto & usx = *levels[i].transversal[s(x)];
                        Permutation schreier = usx.inverse() * s * ux;
                        auto [residue, stop] = sift(std::move(schreier), i + 1);
                        if (! residue.is_identity()) {
                            // residue fixes base points of levels i..stop-1
                            if (stop == levels.size())
                                add_level_for(residue);
                            for (size_t j = i + 1 ; j <= stop ; ++j)
                                levels[j].generators.push_back(residue);
                            for (size_t j = stop + 1 ; j-- > i + 1 ; )
                                complete(j);
                            changed = true;
                        }
                    }
                }
            }
        }
    };

    PermGroup::PermGroup(unsigned degree, vector<Permutation> generators) :
        _degree(degree),
        _generators(std::move(generators))
    {
        for (auto & g : _generators)
            if (g.degree() != degree)
                throw DimensionMismatch("generator of degree " + to_string(g.degree()) + " in group of degree " + to_string(degree));
    }

    PermGroup::PermGroup(unsigned degree, vector<Permutation> generators, mpz_class known_order) :
        PermGroup(degree, std::move(generators))
    {
        _known_order = std::move(known_order);
    }

    auto PermGroup::chain() const -> const Chain &
    {
        if (! _chain) {
            auto c = std::make_shared<Chain>();
            c->degree = _degree;
            vector<Permutation> nontrivial;
            for (auto & g : _generators)
                if (! g.is_identity())
                    nontrivial.push_back(g);
            if (! nontrivial.empty()) {
                c->add_level_for(nontrivial.front());
                c->levels[0].generators = nontrivial;
                // base must contain a point moved by every generator: extend greedily
                for (auto & g : nontrivial) {
                    bool fixes_all = true;
                    for (auto & l : c->levels)
                        if (g(l.base_point) != l.base_point)
                            fixes_all = false;
                    if (fixes_all) {
                        Chain::Level level;
                        level.base_point = c->first_moved(g);
                        c->levels.push_back(std::move(level));
                    }
                }
                for (size_t j = 1 ; j < c->levels.size() ; ++j)
                    for (auto & g : nontrivial) {
                        bool fixes = true;
                        for (size_t k = 0 ; k < j ; ++k)
                            if (g(c->levels[k].base_point) != c->levels[k].base_point)
                                fixes = false;
                        if (fixes)
                            c->levels[j].generators.push_back(g);
                    }
                for (size_t j = c->levels.size() ; j-- > 0 ; )
                    c->complete(j);
            }
            _chain = std::move(c);
        }
        return *_chain;
    }

    auto PermGroup::stabiliser_chain_order() const -> mpz_class
    {
        mpz_class result = 1;
        for (auto & l : chain().levels)
            result *= static_cast<unsigned long>(l.orbit.size());
        return result;
    }

    auto PermGroup::order() const -> mpz_class
    {
        if (_known_order)
            return *_known_order;
        return stabiliser_chain_order();
    }

    auto PermGroup::contains(const Permutation & p) const -> bool
    {
        if (p.degree() != _degree)
            return false;
        return chain().sift(p, 0).first.is_identity();
    }

    auto PermGroup::orbit_representatives() const -> const vector<Vertex> &
    {
        if (_orbit_reps.empty() && _degree > 0)
            _orbit_reps = cubelike::orbit_representatives(_degree, _generators);
        return _orbit_reps;
    }

    auto PermGroup::orbits() const -> vector<vector<Vertex>>
    {
        auto & reps = orbit_representatives();
        vector<vector<Vertex>> result;
        vector<int> index(_degree, -1);
        for (Vertex v = 0 ; v < _degree ; ++v) {
            if (index[reps[v]] < 0) {
                index[reps[v]] = static_cast<int>(result.size());
                result.emplace_back();
            }
            result[index[reps[v]]].push_back(v);
        }
        return result;
    }

    auto PermGroup::is_transitive() const -> bool
    {
        auto & reps = orbit_representatives();
        return std::all_of(reps.begin(), reps.end(), [] (Vertex r) { return r == 0; });
    }

    auto PermGroup::elements(size_t cap) const -> vector<Permutation>
    {
        vector<Permutation> result{Permutation::identity(_degree)};
        std::unordered_set<Permutation, PermutationHash> seen{result.front()};
        for (size_t i = 0 ; i < result.size() ; ++i)
            for (auto & g : _generators) {
                Permutation p = g * result[i];
                if (seen.insert(p).second) {
                    if (result.size() >= cap)
                        throw CapacityError("permutation group has more than " + to_string(cap) + " elements");
                    result.push_back(std::move(p));
                }
            }
        return result;
    }
}
