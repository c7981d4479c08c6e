#pragma once

#include "factorcrit/graph.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace factorcrit {

/// Maximum matching via Edmonds' blossom contraction, O(n^3).
/// Returns mate[v] = matched partner, or -1 when v is exposed.
std::vector<int> max_matching(const Graph& g);

int matching_size(const std::vector<int>& mate);

bool has_perfect_matching(const Graph& g);

/// Bipartite double cover on 2n vertices: v maps to the pair (v, n+v),
/// and each edge uv of g contributes u-(n+v) and v-(n+u).
Graph bipartite_double_cover(const Graph& g);

/// Edge weights in half-units (0, 1, 2 standing for 0, 1/2, 1), keyed by
/// normalized pairs u < v; only nonzero weights are stored. A valid witness
/// gives every vertex incident weight exactly 2, with the half-weight edges
/// decomposing into vertex-disjoint odd cycles.
struct FractionalMatching {
    std::map<std::pair<int, int>, int> half_units;

    int vertex_sum(int v) const;
    bool is_valid(const Graph& g) const;
};

/// A fractional perfect matching exists iff the bipartite double cover has a
/// perfect matching; the witness is pulled back from one and its even
/// half-cycles are rounded to alternating integral weights.
std::optional<FractionalMatching> fractional_perfect_matching(const Graph& g);

bool has_fractional_perfect_matching(const Graph& g);

}  // namespace factorcrit
