#pragma once

#include "factorcrit/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace factorcrit {

/// Symbolic description of K_s v (K_{n_1} u ... u K_{n_t}): a join core of
/// size s over a disjoint union of cliques. Parts are kept sorted
/// non-increasing, so equal families compare equal regardless of how they
/// were assembled.
struct CliqueJoinFamily {
    int s = 0;
    std::vector<int> parts;  // non-increasing, all >= 1

    CliqueJoinFamily() = default;
    CliqueJoinFamily(int core, std::vector<int> part_sizes);

    int order() const;
    int part_count() const { return static_cast<int>(parts.size()); }

    std::string literal() const;  // "s=2;parts=3,3,1"

    auto operator<=>(const CliqueJoinFamily&) const = default;
};

CliqueJoinFamily parse_family(const std::string& literal);

/// Parameters (n, k, delta) of the tight non-critical construction.
struct ExtremalParams {
    int n = 0;
    int k = 0;
    int delta = 0;
};

Graph realize(const CliqueJoinFamily& f);

/// K_delta v (K_{n-2delta+k-3} u K_3 u (delta-k) K_1), the graph that meets
/// the size/spectral thresholds without being k-factor-critical. Validates
/// parity of n-k, delta >= k+1, and n >= 2delta-k+6.
CliqueJoinFamily extremal_family(const ExtremalParams& p);
CliqueJoinFamily extremal_family(int n, int k, int delta);

/// Same shape without the parity requirement; for spectral/size comparisons
/// that hold at every order.
CliqueJoinFamily extremal_shape(int n, int k, int delta);

/// K_k v (K_{n-k-3} u K_3): the comparison family with no minimum-degree
/// parameter.
CliqueJoinFamily jfl_family(int n, int k);

/// K_delta v (K_{n-2delta+k-1} u (delta-k+1) K_1): the comparison family
/// from the minimum-degree condition without a connectivity hypothesis.
CliqueJoinFamily fan_lin_family(int n, int k, int delta);

/// Closed-form size: C(s,2) + s(n-s) + sum C(n_i,2).
long long family_edge_count(const CliqueJoinFamily& f);

/// Family plus the relabeling that witnesses the spanning-subgraph guarantee:
/// relabel[v] is v's vertex in realize(family).
struct TutteReduction {
    CliqueJoinFamily family;
    std::vector<int> relabel;
};

/// Packs g around a separator s: the |s|-k+1 smallest odd components of g-s
/// become their own clique parts, everything else merges into the big part.
/// Empty when g-s has fewer than |s|-k+2 odd components, i.e. when this s
/// cannot witness a Tutte-type violation.
std::optional<TutteReduction> tutte_reduction(const Graph& g, const VertexSet& s, int k);

}  // namespace factorcrit
