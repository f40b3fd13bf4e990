#include <cubelike/pipeline.hh>
#include <cubelike/autgrp.hh>
#include <cubelike/cayley.hh>
#include <cubelike/errors.hh>
#include <cubelike/graph6.hh>
#include <cubelike/hom.hh>
#include <cubelike/invariants.hh>
#include <cubelike/spectral.hh>

#include <algorithm>
#include <atomic>
#include <bit>
#include <condition_variable>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

using nlohmann::json;
using std::size_t;
using std::string;
using std::uint64_t;
using std::string_view;
using std::vector;

namespace cubelike
{
    namespace
    {
        constexpr std::array<string_view, 11> filter_names = {
            "precondition",
            "power-of-two-order",
            "integral-spectrum",
            "clique-coclique-complete",
            "generous-transitivity",
            "cubelike-recognition",
            "orbital-clique-3",
            "orbital-spectrum",
            "core-test",
            "hom-idempotence",
            "hull-hom"
        };

        constexpr std::array<string_view, 3> outcome_names = { "pass", "reject", "indeterminate" };

        constexpr std::array<string_view, 5> classification_names = {
            "cubelike", "rejected", "survivor", "survivor-flagged", "error"
        };

        template <typename Enum, size_t k>
        auto parse_name(const std::array<string_view, k> & names, string_view s) -> std::optional<Enum>
        {
            for (size_t i = 0 ; i < k ; ++i)
                if (names[i] == s)
                    return static_cast<Enum>(i);
            return std::nullopt;
        }

        auto seconds_since(std::chrono::steady_clock::time_point start) -> double
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }

        auto pass(json witness = json::object()) -> FilterVerdict
        {
            return FilterVerdict{FilterId::precondition, FilterOutcome::pass, std::move(witness), 0};
        }

        auto reject(json witness) -> FilterVerdict
        {
            return FilterVerdict{FilterId::precondition, FilterOutcome::reject, std::move(witness), 0};
        }

        auto timed_out(json witness = json::object()) -> FilterVerdict
        {
            if (! witness.contains("reason"))
                witness["reason"] = "timeout";
            return FilterVerdict{FilterId::precondition, FilterOutcome::indeterminate, std::move(witness), 0};
        }

        auto spectrum_json(const Spectrum & s) -> json
        {
            if (! s.integral())
                return json{{"integral", false}, {"residual_poly", to_string(*s.residual)}};
            json entries = json::array();
            for (auto & [value, mult] : s.entries)
                entries.push_back({value, mult});
            return json{{"integral", true}, {"entries", entries}};
        }

        // The first eigenvalue whose multiplicity exceeds that in Q_d.
        auto cube_excess(const Spectrum & s, unsigned d) -> json
        {
            auto cube = cube_spectrum(d);
            for (auto & [value, mult] : s.entries)
                if (mult > cube.multiplicity(value))
                    return json{{"eigenvalue", value}, {"multiplicity", mult}, {"cube_multiplicity", cube.multiplicity(value)}};
            return json::object();
        }

        class Cascade
        {
            public:
                Cascade(const Graph & x, const FilterConfig & config, Report & report) :
                    _x(x),
                    _config(config),
                    _report(report),
                    _n(x.size())
                {
                }

                auto run() -> void
                {
                    using enum FilterId;
                    if (! stage(precondition, [&] { return check_precondition(); }))
                        return;
                    if (! stage(power_of_two_order, [&] { return check_order(); }))
                        return;
                    if (! stage(integral_spectrum, [&] { return check_spectrum(); }))
                        return;
                    if (! stage(clique_coclique_complete, [&] { return check_clique_coclique(); }))
                        return;
                    if (_cubelike && _config.stop_at_cubelike)
                        return;
                    if (! stage(generous_transitivity, [&] { return check_generous(); }))
                        return;
                    if (! stage(cubelike_recognition, [&] { return check_cubelike(); }))
                        return;
                    if (_cubelike && _config.stop_at_cubelike)
                        return;
                    if (! stage(orbital_clique_3, [&] { return check_orbital_cliques(); }))
                        return;
                    if (! stage(orbital_spectrum, [&] { return check_orbital_spectra(); }))
                        return;
                    if (! stage(core_test, [&] { return check_core(); }))
                        return;
                    if (! stage(hom_idempotence, [&] { return check_hom_idempotence(); }))
                        return;
                    stage(hull_hom, [&] { return check_hulls(); });
                }

                auto cubelike_at() const -> std::optional<FilterId> { return _cubelike; }
                auto any_indeterminate() const -> bool { return _indeterminate; }

            private:
                const Graph & _x;
                const FilterConfig & _config;
                Report & _report;
                unsigned _n;

                std::optional<PermGroup> _aut;
                std::optional<OrbitalPartition> _orbitals;
                std::optional<unsigned> _omega;
                std::optional<FilterId> _cubelike;
                bool _core_certified = false;
                bool _indeterminate = false;

                auto deadline() const -> Deadline
                {
                    return _config.timeout.count() > 0 ? Deadline{_config.timeout} : Deadline{};
                }

                // Records one verdict; false when the cascade must stop.
                template <typename Check>
                auto stage(FilterId id, Check && check) -> bool
                {
                    auto start = std::chrono::steady_clock::now();
                    FilterVerdict verdict;
                    try {
                        verdict = check();
                    }
                    catch (const CapacityError & e) {
                        verdict = FilterVerdict{id, FilterOutcome::indeterminate, json{{"reason", "capacity"}, {"message", e.what()}}, 0};
                    }
                    verdict.filter = id;
                    verdict.seconds = seconds_since(start);
                    _report.verdicts.push_back(std::move(verdict));
                    switch (_report.verdicts.back().outcome) {
                        case FilterOutcome::reject:
                            _report.decided_at = id;
                            return false;
                        case FilterOutcome::indeterminate:
                            _indeterminate = true;
                            return true;
                        case FilterOutcome::pass:
                            return true;
                    }
                    return true;
                }

                auto self_paired_orbitals() const -> vector<unsigned>
                {
                    vector<unsigned> ids;
                    for (unsigned o = 0 ; o < _orbitals->count() ; ++o)
                        if (_orbitals->is_self_paired(o))
                            ids.push_back(o);
                    return ids;
                }

                auto orbital_graph_of(const vector<unsigned> & ids) const -> Graph
                {
                    std::set<unsigned> closed;
                    for (auto o : ids) {
                        closed.insert(o);
                        closed.insert(_orbitals->paired(o));
                    }
                    return orbital_graph(*_orbitals, closed);
                }

                auto check_precondition() -> FilterVerdict
                {
                    if (_n == 0)
                        return reject({{"reason", "empty graph"}});
                    if (! is_connected(_x))
                        return reject({{"reason", "not connected"}, {"components", connected_components(_x).size()}});
                    _aut = automorphism_group(_x);
                    if (! is_vertex_transitive(_x, *_aut))
                        return reject({{"reason", "not vertex-transitive"}, {"vertex_orbits", _aut->orbits().size()}});
                    return pass({{"aut_order", _aut->order().get_str()}});
                }

                auto check_order() -> FilterVerdict
                {
                    if (! std::has_single_bit(_n))
                        return reject({{"order", _n}});
                    return pass({{"order", _n}});
                }

                auto check_spectrum() -> FilterVerdict
                {
                    unsigned d = _x.degree(0);
                    auto s = integer_spectrum(_x);
                    if (! s.integral())
                        return reject({{"degree", d}, {"residual_poly", to_string(*s.residual)}});
                    if (! is_submultiset_of_cube(s, d)) {
                        auto w = cube_excess(s, d);
                        w["degree"] = d;
                        return reject(w);
                    }
                    return pass({{"degree", d}, {"spectrum", spectrum_json(s)}});
                }

                auto check_clique_coclique() -> FilterVerdict
                {
                    auto dl = deadline();
                    auto clique = maximum_clique(_x, dl);
                    auto coclique = maximum_independent_set(_x, dl);
                    if (clique.outcome != Outcome::yes || coclique.outcome != Outcome::yes)
                        return timed_out({{"omega_at_least", clique.size()}, {"alpha_at_least", coclique.size()}});
                    _omega = clique.size();
                    json w{{"omega", clique.size()}, {"alpha", coclique.size()}};
                    if (clique.size() * coclique.size() != _n)
                        return pass(w);
                    if (clique.size() == _n) {
                        // a complete graph of power-of-two order is cubelike
                        _cubelike = FilterId::clique_coclique_complete;
                        return pass(w);
                    }
                    w["clique"] = clique.clique;
                    w["coclique"] = coclique.clique;
                    return reject(w);
                }

                auto check_generous() -> FilterVerdict
                {
                    _orbitals = orbitals(*_aut);
                    for (unsigned o = 0 ; o < _orbitals->count() ; ++o)
                        if (! _orbitals->is_self_paired(o))
                            for (Vertex v = 1 ; v < _n ; ++v)
                                if (_orbitals->id(0, v) == o)
                                    return reject({{"orbital", o}, {"pair", {0, v}}, {"paired_orbital", _orbitals->paired(o)}});
                    return pass({{"orbitals", _orbitals->count()}});
                }

                auto check_cubelike() -> FilterVerdict
                {
                    auto r = is_cubelike(_x, deadline());
                    switch (r.outcome) {
                        case Outcome::yes:
                            _cubelike = FilterId::cubelike_recognition;
                            return pass({{"cubelike", true}, {"connection_set", r.witness->connection_set.to_string()}});
                        case Outcome::no:
                            return pass({{"cubelike", false}});
                        default:
                            return timed_out();
                    }
                }

                // A triangle in an orbital graph lies in a union of at most
                // three orbitals, so unions of up to three classes suffice.
                auto check_orbital_cliques() -> FilterVerdict
                {
                    auto ids = self_paired_orbitals();
                    auto dl = deadline();
                    bool unsure = false;
                    unsigned unions = 0;
                    auto test = [&] (const vector<unsigned> & chosen) -> std::optional<FilterVerdict> {
                        ++unions;
                        auto y = orbital_graph_of(chosen);
                        auto c = maximum_clique(y, dl);
                        if (c.outcome == Outcome::yes && c.size() == 3)
                            return reject({{"orbitals", chosen}, {"triangle", c.clique}});
                        if (c.outcome != Outcome::yes)
                            unsure = true;
                        return std::nullopt;
                    };
                    size_t k = ids.size();
                    for (size_t a = 0 ; a < k ; ++a) {
                        if (auto v = test({ids[a]}))
                            return *v;
                        for (size_t b = a + 1 ; b < k ; ++b) {
                            if (auto v = test({ids[a], ids[b]}))
                                return *v;
                            for (size_t c = b + 1 ; c < k ; ++c) {
                                if (dl.expired())
                                    return timed_out({{"unions_tested", unions}});
                                if (auto v = test({ids[a], ids[b], ids[c]}))
                                    return *v;
                            }
                        }
                    }
                    if (unsure)
                        return timed_out({{"unions_tested", unions}});
                    return pass({{"unions_tested", unions}});
                }

                auto check_orbital_spectra() -> FilterVerdict
                {
                    for (auto o : self_paired_orbitals()) {
                        auto y = orbital_graph_of({o});
                        auto components = connected_components(y);
                        auto it = std::find_if(components.begin(), components.end(),
                                [] (const vector<Vertex> & c) { return std::find(c.begin(), c.end(), 0) != c.end(); });
                        auto component = induced_subgraph(y, *it);
                        unsigned d = component.degree(0);
                        auto s = integer_spectrum(component);
                        if (! is_submultiset_of_cube(s, d)) {
                            json w = s.integral() ? cube_excess(s, d) : json{{"residual_poly", to_string(*s.residual)}};
                            w["orbital"] = o;
                            w["degree"] = d;
                            w["component_order"] = component.size();
                            return reject(w);
                        }
                    }
                    return pass();
                }

                auto check_core() -> FilterVerdict
                {
                    auto r = compute_core(_x, deadline());
                    // any proper retract found is a certificate, even after a timeout
                    if (r.core_vertices.size() < _n)
                        return reject({{"core_order", r.core_vertices.size()}, {"core_graph6", to_graph6(r.core)}});
                    if (r.outcome != Outcome::yes)
                        return timed_out();
                    _core_certified = true;
                    return pass();
                }

                auto check_hom_idempotence() -> FilterVerdict
                {
                    auto dl = deadline();
                    bool unsure = false;
                    json w = json::object();
                    if (_core_certified) {
                        auto r = core_equivalent_to_shift_graph(_x, dl);
                        w["route"] = r.route;
                        if (r.outcome == Outcome::no)
                            return reject({{"graph", "X"}, {"route", r.route}});
                        unsure = r.outcome != Outcome::yes;
                        // the fallback search squares X
                        if (unsure && r.route == "hom-idempotence" && uint64_t{_n} * _n > vertex_cap())
                            w["reason"] = "capacity";
                    }
                    else {
                        auto r = is_hom_idempotent(_x, false, dl);
                        w["route"] = r.method;
                        if (r.outcome == Outcome::no)
                            return reject({{"graph", "X"}, {"route", r.method}});
                        unsure = r.outcome != Outcome::yes;
                        if (r.method == "capacity")
                            w["reason"] = "capacity";
                    }
                    for (auto o : self_paired_orbitals()) {
                        auto r = is_hom_idempotent(orbital_graph_of({o}), false, dl);
                        if (r.outcome == Outcome::no)
                            return reject({{"graph", "orbital"}, {"orbital", o}, {"route", r.method}});
                        unsure = unsure || r.outcome != Outcome::yes;
                        if (r.method == "capacity")
                            w["reason"] = "capacity";
                    }
                    if (unsure)
                        return timed_out(w);
                    return pass(w);
                }

                auto check_degree_bounds() -> std::optional<FilterVerdict>
                {
                    unsigned d = _x.degree(0);
                    // K_2 is the one core exempt from the bounds
                    if (d == 1 || d >= 64)
                        return std::nullopt;
                    auto bound = uint64_t{1} << (d - 1);
                    if (_n > bound)
                        return reject({{"bound", "degree"}, {"degree", d}, {"order", _n}});
                    if (_n == bound && (d % 2 == 0 || ! are_isomorphic(_x, folded_cube(d))))
                        return reject({{"bound", "folded-cube equality"}, {"degree", d}, {"order", _n}});
                    if (d % 2 == 0 && d >= 2 && _n > (uint64_t{1} << (d - 2)))
                        return reject({{"bound", "even degree"}, {"degree", d}, {"order", _n}});
                    return std::nullopt;
                }

                auto check_hulls() -> FilterVerdict
                {
                    if (auto v = check_degree_bounds())
                        return *v;
                    auto dl = deadline();
                    bool unsure = false;
                    json w = json::object();

                    // an odd girth g forces an induced folded cube of order g
                    if (! is_bipartite(_x)) {
                        unsigned g = odd_girth(_x);
                        if (g - 1 >= 32 || (uint64_t{1} << (g - 1)) > _n)
                            return reject({{"graph", "X"}, {"odd_girth", g}, {"folded_cube_order", "exceeds |V|"}});
                        auto r = induced_subgraph_search(folded_cube(g), _x, dl);
                        if (r.outcome == Outcome::no)
                            return reject({{"graph", "X"}, {"odd_girth", g}, {"induced_folded_cube", false}});
                        unsure = r.outcome != Outcome::yes;
                    }

                    auto hull_test = [&] (const Graph & y, std::optional<unsigned> omega) -> std::pair<Outcome, unsigned> {
                        if (! omega) {
                            auto c = maximum_clique(y, dl);
                            if (c.outcome != Outcome::yes)
                                return {Outcome::indeterminate, c.size()};
                            omega = c.size();
                        }
                        if (*omega <= 2)
                            return {Outcome::yes, *omega};
                        // without labels on Y the hull of K_omega is built explicitly
                        if (! connection_set_of(y) && (*omega - 1 >= 32 || (uint64_t{1} << (*omega - 1)) > vertex_cap())) {
                            w["reason"] = "capacity";
                            return {Outcome::indeterminate, *omega};
                        }
                        return {hull_hom_test(complete_graph(*omega), y, dl).outcome, *omega};
                    };

                    auto [x_outcome, x_omega] = hull_test(_x, _omega);
                    if (x_outcome == Outcome::no)
                        return reject({{"graph", "X"}, {"omega", x_omega}});
                    unsure = unsure || x_outcome != Outcome::yes;
                    for (auto o : self_paired_orbitals()) {
                        auto [outcome, omega] = hull_test(orbital_graph_of({o}), std::nullopt);
                        if (outcome == Outcome::no)
                            return reject({{"graph", "orbital"}, {"orbital", o}, {"omega", omega}});
                        unsure = unsure || outcome != Outcome::yes;
                    }
                    if (unsure)
                        return timed_out(w);
                    return pass();
                }
        };
    }

    auto to_string(FilterId f) -> string_view
    {
        return filter_names[static_cast<size_t>(f)];
    }

    auto filter_from_string(string_view s) -> std::optional<FilterId>
    {
        return parse_name<FilterId>(filter_names, s);
    }

    auto to_string(FilterOutcome o) -> string_view
    {
        return outcome_names[static_cast<size_t>(o)];
    }

    auto to_string(Classification c) -> string_view
    {
        return classification_names[static_cast<size_t>(c)];
    }

    auto Report::same_verdicts(const Report & other) const -> bool
    {
        if (line != other.line || graph6 != other.graph6 || classification != other.classification
                || decided_at != other.decided_at || error != other.error || verdicts.size() != other.verdicts.size())
            return false;
        for (size_t i = 0 ; i < verdicts.size() ; ++i) {
            auto & a = verdicts[i];
            auto & b = other.verdicts[i];
            if (a.filter != b.filter || a.outcome != b.outcome || a.witness != b.witness)
                return false;
        }
        return true;
    }

    auto to_json(const Report & r) -> json
    {
        json verdicts = json::array();
        for (auto & v : r.verdicts)
            verdicts.push_back({
                {"filter", to_string(v.filter)},
                {"outcome", to_string(v.outcome)},
                {"witness", v.witness},
                {"seconds", v.seconds}
            });
        json j{
            {"line", r.line},
            {"graph6", r.graph6},
            {"classification", to_string(r.classification)},
            {"decided_at", r.decided_at ? json(to_string(*r.decided_at)) : json(nullptr)},
            {"verdicts", verdicts},
            {"seconds", r.seconds}
        };
        if (! r.error.empty())
            j["error"] = r.error;
        return j;
    }

    auto report_from_json(const json & j) -> Report
    {
        auto bad = [] (const string & what) {
            return json::other_error::create(501, "malformed report: " + what, nullptr);
        };
        Report r;
        r.line = j.at("line").get<size_t>();
        r.graph6 = j.at("graph6").get<string>();
        auto c = parse_name<Classification>(classification_names, j.at("classification").get<string>());
        if (! c)
            throw bad("classification");
        r.classification = *c;
        if (! j.at("decided_at").is_null()) {
            r.decided_at = filter_from_string(j.at("decided_at").get<string>());
            if (! r.decided_at)
                throw bad("decided_at");
        }
        for (auto & v : j.at("verdicts")) {
            auto f = filter_from_string(v.at("filter").get<string>());
            auto o = parse_name<FilterOutcome>(outcome_names, v.at("outcome").get<string>());
            if (! f || ! o)
                throw bad("verdict");
            r.verdicts.push_back(FilterVerdict{*f, *o, v.at("witness"), v.at("seconds").get<double>()});
        }
        r.seconds = j.at("seconds").get<double>();
        r.error = j.value("error", "");
        return r;
    }

    auto run_filters(const Graph & x, const FilterConfig & config) -> Report
    {
        auto start = std::chrono::steady_clock::now();
        Report report;
        report.graph6 = to_graph6(x);
        Cascade cascade{x, config, report};
        cascade.run();
        if (report.decided_at)
            report.classification = Classification::rejected;
        else if (cascade.cubelike_at()) {
            report.classification = Classification::cubelike;
            report.decided_at = cascade.cubelike_at();
        }
        else if (cascade.any_indeterminate())
            report.classification = Classification::survivor_flagged;
        else
            report.classification = Classification::survivor;
        report.seconds = seconds_since(start);
        return report;
    }

    Funnel::Funnel()
    {
        for (auto f : filter_order)
            rows.push_back(FunnelRow{f});
    }

    auto Funnel::add(const Report & r) -> void
    {
        ++total;
        switch (r.classification) {
            case Classification::cubelike: ++cubelike; break;
            case Classification::rejected: ++rejected; break;
            case Classification::survivor: ++survivors; break;
            case Classification::survivor_flagged: ++flagged; break;
            case Classification::error: ++errors; break;
        }
        for (auto & v : r.verdicts) {
            auto & row = rows[static_cast<size_t>(v.filter)];
            ++row.entered;
            if (v.outcome == FilterOutcome::reject)
                ++row.rejected;
            else if (v.outcome == FilterOutcome::indeterminate)
                ++row.indeterminate;
        }
        if (r.classification == Classification::cubelike && r.decided_at)
            ++rows[static_cast<size_t>(*r.decided_at)].cubelike;
    }

    auto funnel(std::span<const Report> reports) -> Funnel
    {
        Funnel f;
        for (auto & r : reports)
            f.add(r);
        return f;
    }

    auto format_funnel(const Funnel & f) -> string
    {
        std::ostringstream out;
        out << std::left << std::setw(26) << "filter" << std::right
            << std::setw(10) << "entered" << std::setw(10) << "rejected" << std::setw(10) << "cubelike"
            << std::setw(10) << "flagged" << std::setw(10) << "remaining" << '\n';
        for (auto & row : f.rows)
            out << std::left << std::setw(26) << to_string(row.filter) << std::right
                << std::setw(10) << row.entered << std::setw(10) << row.rejected << std::setw(10) << row.cubelike
                << std::setw(10) << row.indeterminate << std::setw(10) << row.entered - row.rejected - row.cubelike << '\n';
        out << "total " << f.total << ": cubelike " << f.cubelike << ", rejected " << f.rejected
            << ", survivors " << f.survivors << ", flagged " << f.flagged << ", errors " << f.errors << '\n';
        return out.str();
    }

    auto corpus_hash(string_view text) -> string
    {
        uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char c : text) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        char buffer[17];
        std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
        return buffer;
    }

    namespace
    {
        constexpr string_view checkpoint_magic = "cubelike-checkpoint 1";

        auto read_checkpoint(const std::filesystem::path & path, const string & hash) -> std::optional<std::unordered_set<size_t>>
        {
            std::ifstream in{path};
            string magic, key, stored;
            if (! in || ! std::getline(in, magic) || magic != checkpoint_magic || ! (in >> key >> stored) || key != "corpus" || stored != hash)
                return std::nullopt;
            std::unordered_set<size_t> done;
            size_t line;
            while (in >> line)
                done.insert(line);
            return done;
        }

        auto trim(string_view s) -> string_view
        {
            auto first = s.find_first_not_of(" \t\r\n");
            if (first == string_view::npos)
                return {};
            auto last = s.find_last_not_of(" \t\r\n");
            return s.substr(first, last - first + 1);
        }

        auto process_line(size_t line, string_view text, const FilterConfig & config) -> Report
        {
            auto start = std::chrono::steady_clock::now();
            Report r;
            try {
                r = run_filters(parse_graph_line(text), config);
            }
            catch (const std::exception & e) {
                r = Report{};
                r.classification = Classification::error;
                r.error = e.what();
            }
            r.line = line;
            r.graph6 = string{text};
            r.seconds = seconds_since(start);
            return r;
        }
    }

    auto checkpoint_matches(const std::filesystem::path & checkpoint, string_view corpus_text) -> bool
    {
        return read_checkpoint(checkpoint, corpus_hash(corpus_text)).has_value();
    }

    auto run_corpus(std::istream & in, const CorpusOptions & options,
            const std::function<auto (const Report &) -> void> & emit) -> CorpusSummary
    {
        string text{std::istreambuf_iterator<char>{in}, std::istreambuf_iterator<char>{}};
        auto hash = corpus_hash(text);

        CorpusSummary summary;
        std::unordered_set<size_t> done;
        std::ofstream checkpoint;
        if (options.checkpoint) {
            if (auto previous = read_checkpoint(*options.checkpoint, hash)) {
                done = std::move(*previous);
                summary.checkpoint_valid = true;
                checkpoint.open(*options.checkpoint, std::ios::app);
            }
            else {
                checkpoint.open(*options.checkpoint, std::ios::trunc);
                checkpoint << checkpoint_magic << "\ncorpus " << hash << '\n' << std::flush;
            }
            if (! checkpoint)
                throw std::runtime_error("cannot write checkpoint " + options.checkpoint->string());
        }

        struct Task
        {
            size_t line;
            string_view text;
        };
        vector<Task> tasks;
        {
            size_t line = 0, pos = 0;
            while (pos < text.size()) {
                auto end = text.find('\n', pos);
                if (end == string::npos)
                    end = text.size();
                ++line;
                auto content = trim(string_view{text}.substr(pos, end - pos));
                pos = end + 1;
                if (content.empty() || content == ">>graph6<<" || content == ">>sparse6<<")
                    continue;
                if (done.contains(line)) {
                    ++summary.resumed;
                    continue;
                }
                tasks.push_back(Task{line, content});
            }
        }

        // workers claim tasks in order; the caller's thread emits them in order
        vector<std::optional<Report>> results(tasks.size());
        std::mutex mutex;
        std::condition_variable ready;
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i ; (i = next.fetch_add(1)) < tasks.size() ; ) {
                auto report = process_line(tasks[i].line, tasks[i].text, options.filters);
                std::lock_guard lock{mutex};
                results[i] = std::move(report);
                ready.notify_all();
            }
        };
        vector<std::jthread> pool;
        for (unsigned j = 0 ; j < std::max(1u, options.jobs) ; ++j)
            pool.emplace_back(worker);

        for (size_t i = 0 ; i < tasks.size() ; ++i) {
            Report report;
            {
                std::unique_lock lock{mutex};
                ready.wait(lock, [&] { return results[i].has_value(); });
                report = std::move(*results[i]);
                results[i].reset();
            }
            emit(report);
            summary.funnel.add(report);
            ++summary.processed;
            if (checkpoint.is_open())
                checkpoint << report.line << '\n' << std::flush;
        }
        return summary;
    }
}
