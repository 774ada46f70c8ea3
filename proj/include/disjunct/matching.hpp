#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "disjunct/errors.hpp"

namespace disjunct {

inline constexpr std::size_t unmatched = static_cast<std::size_t>(-1);

/// Maximum-cardinality matching in a general graph (Edmonds, via Boost.Graph).
/// Returns mate[v], or `unmatched`. Self-loops are ignored.
inline std::vector<std::size_t> maximum_matching(std::size_t vertices,
                                                 const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    using Vertex = boost::graph_traits<Graph>::vertex_descriptor;
    Graph g(vertices);
    for (auto [a, b] : edges) {
        if (a >= vertices || b >= vertices) throw ParameterError("matching: edge endpoint out of range");
        if (a != b) boost::add_edge(a, b, g);
    }
    std::vector<Vertex> mate(vertices);
    boost::edmonds_maximum_cardinality_matching(g, &mate[0]);

    const auto none = boost::graph_traits<Graph>::null_vertex();
    std::vector<std::size_t> out(vertices, unmatched);
    for (std::size_t v = 0; v < vertices; ++v)
        if (mate[v] != none) out[v] = mate[v];
    return out;
}

inline std::size_t maximum_matching_size(std::size_t vertices,
                                         const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::size_t matched = 0;
    for (auto m : maximum_matching(vertices, edges)) matched += m != unmatched;
    return matched / 2;
}

}  // namespace disjunct
