#include "factorcrit/criticality.hpp"

#include "factorcrit/matching.hpp"

#include <numeric>
#include <stdexcept>

namespace factorcrit {

namespace {

// Advances a k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

VertexSet set_of(const std::vector<int>& idx, int n) {
    VertexSet s = make_vertex_set(n, {});
    for (int v : idx) s.set(static_cast<std::size_t>(v));
    return s;
}

VertexSet first_k(int k, int n) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    return set_of(idx, n);
}

void require_k_range(int k, int n, int hi) {
    if (k < 1 || k > hi) throw std::invalid_argument("criticality: k out of range");
    if (n > 64) throw std::invalid_argument("criticality: order above 64");
}

CriticalityVerdict fail(VertexSet s, ViolationKind kind) {
    return {false, std::move(s), kind};
}

CriticalityVerdict pass() { return {true, std::nullopt, std::nullopt}; }

}  // namespace

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::parity: return "parity";
        case ViolationKind::odd_components: return "odd-components";
        case ViolationKind::isolated: return "isolated";
        case ViolationKind::no_perfect_matching: return "no-perfect-matching";
        case ViolationKind::no_fractional_perfect_matching:
            return "no-fractional-perfect-matching";
    }
    throw std::logic_error("unknown violation kind");
}

CriticalityVerdict is_k_factor_critical(const Graph& g, int k) {
    const int n = g.order();
    require_k_range(k, n, n - 1);
    // Wrong parity already dooms the first deletion: the remainder has odd
    // order, so it cannot have a perfect matching.
    if ((n - k) % 2 != 0) return fail(first_k(k, n), ViolationKind::parity);
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        VertexSet s = set_of(idx, n);
        if (!has_perfect_matching(delete_vertices(g, s)))
            return fail(std::move(s), ViolationKind::no_perfect_matching);
    } while (next_combination(idx, n));
    return pass();
}

CriticalityVerdict is_fractional_k_factor_critical(const Graph& g, int k) {
    const int n = g.order();
    require_k_range(k, n, n - 2);
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    do {
        VertexSet s = set_of(idx, n);
        if (!has_fractional_perfect_matching(delete_vertices(g, s)))
            return fail(std::move(s), ViolationKind::no_fractional_perfect_matching);
    } while (next_combination(idx, n));
    return pass();
}

CriticalityVerdict odd_component_criterion(const Graph& g, int k) {
    const int n = g.order();
    require_k_range(k, n, n - 1);
    if (n > 24) throw std::invalid_argument("criterion scan: order above 24");
    if ((n - k) % 2 != 0) return fail(first_k(k, n), ViolationKind::parity);
    for (int size = k; size <= n; ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        std::iota(idx.begin(), idx.end(), 0);
        do {
            VertexSet s = set_of(idx, n);
            if (odd_component_count(delete_vertices(g, s)) > size - k)
                return fail(std::move(s), ViolationKind::odd_components);
        } while (next_combination(idx, n));
    }
    return pass();
}

CriticalityVerdict isolated_vertex_criterion(const Graph& g, int k) {
    const int n = g.order();
    require_k_range(k, n, n - 2);
    if (n > 24) throw std::invalid_argument("criterion scan: order above 24");
    for (int size = k; size <= n; ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        std::iota(idx.begin(), idx.end(), 0);
        do {
            VertexSet s = set_of(idx, n);
            if (isolated_count(delete_vertices(g, s)) > size - k)
                return fail(std::move(s), ViolationKind::isolated);
        } while (next_combination(idx, n));
    }
    return pass();
}

}  // namespace factorcrit
