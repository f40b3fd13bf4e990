#ifndef CUBELIKE_PIPELINE_HH
#define CUBELIKE_PIPELINE_HH

#include <cubelike/graph.hh>

#include <json.hpp>

#include <array>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubelike
{
    /// Filters in the order they run. The precondition (connected and
    /// vertex-transitive) is recorded like a filter.
    enum class FilterId
    {
        precondition,
        power_of_two_order,
        integral_spectrum,
        clique_coclique_complete,
        generous_transitivity,
        cubelike_recognition,
        orbital_clique_3,
        orbital_spectrum,
        core_test,
        hom_idempotence,
        hull_hom
    };

    inline constexpr std::array<FilterId, 11> filter_order = {
        FilterId::precondition,
        FilterId::power_of_two_order,
        FilterId::integral_spectrum,
        FilterId::clique_coclique_complete,
        FilterId::generous_transitivity,
        FilterId::cubelike_recognition,
        FilterId::orbital_clique_3,
        FilterId::orbital_spectrum,
        FilterId::core_test,
        FilterId::hom_idempotence,
        FilterId::hull_hom
    };

    auto to_string(FilterId f) -> std::string_view;
    auto filter_from_string(std::string_view s) -> std::optional<FilterId>;

    enum class FilterOutcome
    {
        pass,
        reject,
        indeterminate
    };

    auto to_string(FilterOutcome o) -> std::string_view;

    enum class Classification
    {
        /// certified cubelike by the complete-graph case or by recognition
        cubelike,
        /// certified not to be a non-cubelike core of a cubelike graph
        rejected,
        /// passed every filter
        survivor,
        /// no filter rejected, but at least one was indeterminate
        survivor_flagged,
        /// the input line could not be parsed or a filter failed
        error
    };

    auto to_string(Classification c) -> std::string_view;

    struct FilterVerdict
    {
        FilterId filter = FilterId::precondition;
        FilterOutcome outcome = FilterOutcome::pass;
        /// Why the filter rejected, or the timeout or capacity context.
        nlohmann::json witness = nlohmann::json::object();
        double seconds = 0;
    };

    struct Report
    {
        /// 1-based line of the corpus; 0 for a graph not read from a corpus.
        std::size_t line = 0;
        std::string graph6;
        Classification classification = Classification::error;
        /// The rejecting or classifying filter.
        std::optional<FilterId> decided_at;
        std::vector<FilterVerdict> verdicts;
        double seconds = 0;
        std::string error;

        /// Equality ignoring the timing fields.
        auto same_verdicts(const Report & other) const -> bool;
    };

    auto to_json(const Report & r) -> nlohmann::json;
    /// Throws nlohmann::json::exception on a malformed report.
    auto report_from_json(const nlohmann::json & j) -> Report;

    struct FilterConfig
    {
        /// Budget for each search-based filter; zero means unlimited.
        std::chrono::milliseconds timeout{0};
        /// Stop once the graph is recognised as cubelike. When false the
        /// later filters still run, which is how their soundness is tested.
        bool stop_at_cubelike = true;
    };

    /// Runs the filter cascade, stopping at the first rejection.
    auto run_filters(const Graph & x, const FilterConfig & config = {}) -> Report;

    struct FunnelRow
    {
        FilterId filter;
        /// Graphs that reached the filter.
        std::size_t entered = 0;
        std::size_t rejected = 0;
        std::size_t cubelike = 0;
        std::size_t indeterminate = 0;
    };

    struct Funnel
    {
        std::size_t total = 0;
        std::size_t errors = 0;
        std::size_t cubelike = 0;
        std::size_t rejected = 0;
        std::size_t survivors = 0;
        std::size_t flagged = 0;
        /// One row per filter, in filter order.
        std::vector<FunnelRow> rows;

        Funnel();
        auto add(const Report & r) -> void;
    };

    auto funnel(std::span<const Report> reports) -> Funnel;
    /// Plain-text table, one row per filter.
    auto format_funnel(const Funnel & f) -> std::string;

    struct CorpusOptions
    {
        FilterConfig filters;
        unsigned jobs = 1;
        /// Completed line numbers plus a hash of the corpus; lines listed in a
        /// checkpoint whose hash matches are skipped.
        std::optional<std::filesystem::path> checkpoint;
    };

    struct CorpusSummary
    {
        Funnel funnel;
        std::size_t processed = 0;
        /// Lines skipped because the checkpoint recorded them.
        std::size_t resumed = 0;
        /// Whether an existing checkpoint matched this corpus.
        bool checkpoint_valid = false;
    };

    /// Reads graph6 or sparse6 lines, one graph each; blank lines are skipped
    /// and a header is accepted. Reports reach emit in input order whatever
    /// the number of jobs. Unparseable lines become error reports.
    auto run_corpus(std::istream & in, const CorpusOptions & options,
            const std::function<auto (const Report &) -> void> & emit) -> CorpusSummary;

    /// 64-bit FNV-1a, the corpus hash stored in checkpoints.
    auto corpus_hash(std::string_view text) -> std::string;

    /// Whether run_corpus would resume from this checkpoint for this corpus.
    auto checkpoint_matches(const std::filesystem::path & checkpoint, std::string_view corpus_text) -> bool;
}

#endif
