#pragma once

#include "factorcrit/graph.hpp"

#include <optional>
#include <string>

namespace factorcrit {

enum class ViolationKind {
    parity,                          // n and k differ mod 2
    odd_components,                  // o(G-S) > |S|-k
    isolated,                        // i(G-S) > |S|-k
    no_perfect_matching,             // G-S has no perfect matching
    no_fractional_perfect_matching,  // G-S has no fractional perfect matching
};

std::string to_string(ViolationKind kind);

struct CriticalityVerdict {
    bool holds = false;
    std::optional<VertexSet> witness;  // deleted set S, present iff !holds
    std::optional<ViolationKind> violation;
};

/// Definition-based check: every |S| = k leaves a perfect matching.
/// Parity of n and k is checked first; witnesses are lexicographically
/// first. Requires 1 <= k < n and n <= 64.
CriticalityVerdict is_k_factor_critical(const Graph& g, int k);

/// Definition-based fractional check: every |T| = k leaves a fractional
/// perfect matching. Requires 1 <= k <= n-2 and n <= 64.
CriticalityVerdict is_fractional_k_factor_critical(const Graph& g, int k);

/// Exhaustive characterization scan: holds iff parity holds and
/// o(G-S) <= |S|-k for every S with |S| >= k. Agrees with
/// is_k_factor_critical; capped at n <= 24.
CriticalityVerdict odd_component_criterion(const Graph& g, int k);

/// Exhaustive characterization scan: holds iff i(G-S) <= |S|-k for every
/// S with |S| >= k. Agrees with is_fractional_k_factor_critical; capped
/// at n <= 24.
CriticalityVerdict isolated_vertex_criterion(const Graph& g, int k);

}  // namespace factorcrit
