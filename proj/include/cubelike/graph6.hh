#ifndef CUBELIKE_GRAPH6_HH
#define CUBELIKE_GRAPH6_HH

#include <cubelike/graph.hh>

#include <string>
#include <string_view>

namespace cubelike
{
    /// Encodes the adjacency (labels are not serialised) as a graph6 line
    /// without the optional ">>graph6<<" header or trailing newline.
    auto to_graph6(const Graph & g) -> std::string;

    /// Decodes a graph6 line. A ">>graph6<<" header and surrounding whitespace
    /// are accepted. Malformed input throws ParseError carrying the byte offset.
    auto from_graph6(std::string_view text) -> Graph;

    /// Decodes a sparse6 line (leading ':'), with optional ">>sparse6<<" header.
    /// Multiple edges collapse and loops are rejected.
    auto from_sparse6(std::string_view text) -> Graph;

    /// Dispatches on the leading character: ':' for sparse6, else graph6.
    auto parse_graph_line(std::string_view text) -> Graph;
}

#endif
