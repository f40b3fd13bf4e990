#include "corpus.hh"

#include <cubelike/autgrp.hh>
#include <cubelike/cayley.hh>
#include <cubelike/fixtures.hh>

#include <set>

using std::vector;

namespace cubelike::testing
{
    auto fixture_corpus() -> vector<NamedGraph>
    {
        vector<NamedGraph> corpus;
        for (auto & name : fixture_names())
            corpus.push_back({name, fixture(name)});
        for (unsigned n : {2, 3, 4, 5, 8})
            corpus.push_back({"K" + std::to_string(n), complete_graph(n)});
        for (unsigned n : {4, 5, 6, 7, 9})
            corpus.push_back({"C" + std::to_string(n), cycle_graph(n)});
        for (unsigned d : {3, 4})
            corpus.push_back({"Q" + std::to_string(d), hypercube(d)});
        for (unsigned n : {4, 6, 7})
            corpus.push_back({"folded" + std::to_string(n), folded_cube(n)});
        for (unsigned n : {4, 5, 6})
            corpus.push_back({"halved" + std::to_string(n), halved_cube(n)});
        corpus.push_back({"P5", path_graph(5)});
        corpus.push_back({"C5xK2", cartesian_product(cycle_graph(5), complete_graph(2))});
        corpus.push_back({"K3xK3", cartesian_product(complete_graph(3), complete_graph(3))});
        corpus.push_back({"petersen-complement", complement(fixture("petersen"))});
        corpus.push_back({"cayley-0110", cayley_z2(ConnectionSet::parse("1000,0100,0010,0001,1100,0011"))});
        // a triangle with a pendant path: not vertex-transitive, core K3
        corpus.push_back({"lollipop", Graph::from_edges(5, vector<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}})});
        return corpus;
    }

    auto order_16_cayley_corpus() -> vector<Graph>
    {
        std::set<std::string> seen;
        vector<Graph> graphs;
        for (auto & group : groups_of_order_16()) {
            // one representative per inverse pair
            vector<unsigned> classes;
            for (unsigned g = 1 ; g < group.order() ; ++g)
                if (group.inverse(g) >= g)
                    classes.push_back(g);
            for (uint64_t mask = 1 ; mask < (uint64_t{1} << classes.size()) ; ++mask) {
                vector<unsigned> s;
                for (unsigned i = 0 ; i < classes.size() ; ++i)
                    if ((mask >> i) & 1)
                        s.push_back(classes[i]);
                auto x = cayley_graph(group, s);
                if (! is_connected(x))
                    continue;
                if (seen.insert(canonical_form(x)).second)
                    graphs.push_back(x);
            }
        }
        return graphs;
    }
}
