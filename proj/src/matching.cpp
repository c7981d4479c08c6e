#include "factorcrit/matching.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace factorcrit {

namespace {

struct Blossom {
    const Graph& g;
    int n;
    std::vector<int> mate, parent, base;
    std::vector<char> used, in_blossom;

    explicit Blossom(const Graph& gg)
        : g(gg), n(gg.order()), mate(n, -1), parent(n), base(n), used(n), in_blossom(n) {}

    int lowest_base(int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (mate[a] == -1) break;
            a = parent[mate[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[mate[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[mate[v]]] = 1;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    }

    // BFS over the alternating forest rooted at `root`; returns an exposed
    // vertex whose parent chain augments the matching, or -1.
    int find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            const VertexSet& nb = g.neighbors(v);
            for (auto uu = nb.find_first(); uu != VertexSet::npos; uu = nb.find_next(uu)) {
                const int u = static_cast<int>(uu);
                if (base[v] == base[u] || mate[v] == u) continue;
                if (u == root || (mate[u] != -1 && parent[mate[u]] != -1)) {
                    // Odd cycle: contract the blossom down to the common base.
                    const int cur = lowest_base(v, u);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_path(v, cur, u);
                    mark_path(u, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (!in_blossom[base[i]]) continue;
                        base[i] = cur;
                        if (!used[i]) {
                            used[i] = 1;
                            q.push(i);
                        }
                    }
                } else if (parent[u] == -1) {
                    parent[u] = v;
                    if (mate[u] == -1) return u;
                    used[mate[u]] = 1;
                    q.push(mate[u]);
                }
            }
        }
        return -1;
    }

    void augment(int u) {
        while (u != -1) {
            const int pv = parent[u];
            const int ppv = mate[pv];
            mate[u] = pv;
            mate[pv] = u;
            u = ppv;
        }
    }
};

struct HopcroftKarp {
    static constexpr int kInf = 1 << 30;

    const Graph& cover;
    int n;  // one side; right vertex ids are offset by n
    std::vector<int> pair_left, pair_right, dist;

    HopcroftKarp(const Graph& c, int left)
        : cover(c), n(left), pair_left(left, -1), pair_right(left, -1), dist(left) {}

    bool bfs() {
        std::queue<int> q;
        for (int u = 0; u < n; ++u) {
            if (pair_left[u] == -1) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = kInf;
            }
        }
        bool reaches_free = false;
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            const VertexSet& nb = cover.neighbors(u);
            for (auto ww = nb.find_first(); ww != VertexSet::npos; ww = nb.find_next(ww)) {
                const int w = static_cast<int>(ww) - n;
                const int m = pair_right[w];
                if (m == -1) {
                    reaches_free = true;
                } else if (dist[m] == kInf) {
                    dist[m] = dist[u] + 1;
                    q.push(m);
                }
            }
        }
        return reaches_free;
    }

    bool dfs(int u) {
        const VertexSet& nb = cover.neighbors(u);
        for (auto ww = nb.find_first(); ww != VertexSet::npos; ww = nb.find_next(ww)) {
            const int w = static_cast<int>(ww) - n;
            const int m = pair_right[w];
            if (m == -1 || (dist[m] == dist[u] + 1 && dfs(m))) {
                pair_left[u] = w;
                pair_right[w] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    }

    int run() {
        int size = 0;
        while (bfs())
            for (int u = 0; u < n; ++u)
                if (pair_left[u] == -1 && dfs(u)) ++size;
        return size;
    }
};

std::pair<int, int> norm_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

std::vector<int> max_matching(const Graph& g) {
    const int n = g.order();
    Blossom state(g);
    // Greedy seed so the search only runs for the hard augmentations.
    for (int v = 0; v < n; ++v) {
        if (state.mate[v] != -1) continue;
        const VertexSet& nb = g.neighbors(v);
        for (auto uu = nb.find_first(); uu != VertexSet::npos; uu = nb.find_next(uu)) {
            const int u = static_cast<int>(uu);
            if (state.mate[u] == -1) {
                state.mate[v] = u;
                state.mate[u] = v;
                break;
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (state.mate[v] != -1) continue;
        const int tail = state.find_path(v);
        if (tail != -1) state.augment(tail);
    }
    return state.mate;
}

int matching_size(const std::vector<int>& mate) {
    int matched = 0;
    for (int partner : mate)
        if (partner != -1) ++matched;
    return matched / 2;
}

bool has_perfect_matching(const Graph& g) {
    const int n = g.order();
    if (n % 2 != 0) return false;
    return 2 * matching_size(max_matching(g)) == n;
}

Graph bipartite_double_cover(const Graph& g) {
    const int n = g.order();
    Graph cover(2 * n);
    for (int v = 0; v < n; ++v) {
        const VertexSet& nb = g.neighbors(v);
        for (auto uu = nb.find_first(); uu != VertexSet::npos; uu = nb.find_next(uu)) {
            const int u = static_cast<int>(uu);
            if (u > v) {
                cover.add_edge(v, n + u);
                cover.add_edge(u, n + v);
            }
        }
    }
    return cover;
}

int FractionalMatching::vertex_sum(int v) const {
    int total = 0;
    for (const auto& [edge, w] : half_units)
        if (edge.first == v || edge.second == v) total += w;
    return total;
}

namespace {

// Walks the half-weight edges (each touched vertex has exactly two) and
// splits them into simple cycles; returns nullopt when the structure is
// not a disjoint cycle union.
std::optional<std::vector<std::vector<int>>> half_cycles(
    const std::map<std::pair<int, int>, int>& half_units) {
    std::map<int, std::vector<int>> adj;
    for (const auto& [edge, w] : half_units) {
        if (w != 1) continue;
        adj[edge.first].push_back(edge.second);
        adj[edge.second].push_back(edge.first);
    }
    for (const auto& [v, nb] : adj)
        if (nb.size() != 2) return std::nullopt;
    std::vector<std::vector<int>> cycles;
    std::map<int, bool> seen;
    for (const auto& [start, nb] : adj) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        int prev = -1;
        int cur = start;
        do {
            seen[cur] = true;
            cycle.push_back(cur);
            const auto& out = adj[cur];
            const int next = (out[0] == prev) ? out[1] : out[0];
            prev = cur;
            cur = next;
        } while (cur != start);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

}  // namespace

bool FractionalMatching::is_valid(const Graph& g) const {
    const int n = g.order();
    VertexSet touched = make_vertex_set(n, {});
    for (const auto& [edge, w] : half_units) {
        const auto [u, v] = edge;
        if (u < 0 || v >= n || u >= v) return false;
        if (!g.has_edge(u, v)) return false;
        if (w != 1 && w != 2) return false;
        touched.set(u);
        touched.set(v);
    }
    if (touched.count() != static_cast<std::size_t>(n)) return false;
    for (int v = 0; v < n; ++v)
        if (vertex_sum(v) != 2) return false;
    const auto cycles = half_cycles(half_units);
    if (!cycles) return false;
    for (const auto& cycle : *cycles)
        if (cycle.size() % 2 == 0) return false;
    return true;
}

std::optional<FractionalMatching> fractional_perfect_matching(const Graph& g) {
    const int n = g.order();
    FractionalMatching out;
    if (n == 0) return out;
    const Graph cover = bipartite_double_cover(g);
    HopcroftKarp hk(cover, n);
    if (hk.run() != n) return std::nullopt;
    for (int u = 0; u < n; ++u) out.half_units[norm_edge(u, hk.pair_left[u])] += 1;

    // Even half-cycles round to an alternating 0/1 assignment; only odd
    // cycles genuinely need the half weights.
    const auto cycles = half_cycles(out.half_units);
    if (!cycles) throw std::logic_error("fractional matching: malformed half support");
    for (const auto& cycle : *cycles) {
        const std::size_t len = cycle.size();
        if (len % 2 != 0) continue;
        for (std::size_t i = 0; i < len; ++i) {
            const auto edge = norm_edge(cycle[i], cycle[(i + 1) % len]);
            if (i % 2 == 0)
                out.half_units[edge] = 2;
            else
                out.half_units.erase(edge);
        }
    }
    return out;
}

bool has_fractional_perfect_matching(const Graph& g) {
    return fractional_perfect_matching(g).has_value();
}

}  // namespace factorcrit
