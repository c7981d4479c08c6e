#include "factorcrit/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace factorcrit {

VertexSet make_vertex_set(int n, std::initializer_list<int> members) {
    VertexSet s(static_cast<size_t>(n));
    for (int v : members) s.set(static_cast<size_t>(v));
    return s;
}

std::string format_vertex_set(const VertexSet& s) {
    std::string out = "{";
    bool first = true;
    for (auto v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        if (!first) out += ',';
        out += std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

namespace {

void require_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex index out of range");
}

}  // namespace

void Graph::add_edge(int u, int v) {
    require_vertex(*this, u);
    require_vertex(*this, v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    rows_[static_cast<size_t>(u)].set(static_cast<size_t>(v));
    rows_[static_cast<size_t>(v)].set(static_cast<size_t>(u));
}

void Graph::remove_edge(int u, int v) {
    require_vertex(*this, u);
    require_vertex(*this, v);
    rows_[static_cast<size_t>(u)].reset(static_cast<size_t>(v));
    rows_[static_cast<size_t>(v)].reset(static_cast<size_t>(u));
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

void Graph::check_invariants() const {
    for (int v = 0; v < n_; ++v) {
        if (rows_[static_cast<size_t>(v)].size() != static_cast<size_t>(n_))
            throw std::logic_error("row width mismatch");
        if (rows_[static_cast<size_t>(v)].test(static_cast<size_t>(v)))
            throw std::logic_error("self-loop present");
        for (size_t u = rows_[static_cast<size_t>(v)].find_first(); u != VertexSet::npos;
             u = rows_[static_cast<size_t>(v)].find_next(u)) {
            if (!rows_[u].test(static_cast<size_t>(v))) throw std::logic_error("adjacency not symmetric");
        }
    }
}

Graph complete(int n) {
    if (n < 0) throw std::invalid_argument("negative order");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.order();
    Graph g(n1 + g2.order());
    for (int u = 0; u < n1; ++u)
        for (size_t v = g1.neighbors(u).find_first(); v != VertexSet::npos; v = g1.neighbors(u).find_next(v))
            if (static_cast<int>(v) > u) g.add_edge(u, static_cast<int>(v));
    for (int u = 0; u < g2.order(); ++u)
        for (size_t v = g2.neighbors(u).find_first(); v != VertexSet::npos; v = g2.neighbors(u).find_next(v))
            if (static_cast<int>(v) > u) g.add_edge(n1 + u, n1 + static_cast<int>(v));
    return g;
}

Graph join(const Graph& g1, const Graph& g2) {
    Graph g = disjoint_union(g1, g2);
    for (int u = 0; u < g1.order(); ++u)
        for (int v = 0; v < g2.order(); ++v) g.add_edge(u, g1.order() + v);
    return g;
}

Graph with_edge(Graph g, int u, int v) {
    g.add_edge(u, v);
    return g;
}

InducedSubgraph delete_vertices_mapped(const Graph& g, const VertexSet& s) {
    if (s.size() != static_cast<size_t>(g.order())) throw std::invalid_argument("vertex set size mismatch");
    InducedSubgraph out;
    out.new_of_old.assign(static_cast<size_t>(g.order()), -1);
    for (int v = 0; v < g.order(); ++v) {
        if (s.test(static_cast<size_t>(v))) continue;
        out.new_of_old[static_cast<size_t>(v)] = static_cast<int>(out.old_of_new.size());
        out.old_of_new.push_back(v);
    }
    out.graph = Graph(static_cast<int>(out.old_of_new.size()));
    for (int nu = 0; nu < out.graph.order(); ++nu) {
        const int u = out.old_of_new[static_cast<size_t>(nu)];
        const VertexSet kept = g.neighbors(u) - s;
        for (size_t v = kept.find_first(); v != VertexSet::npos; v = kept.find_next(v)) {
            const int nv = out.new_of_old[v];
            if (nv > nu) out.graph.add_edge(nu, nv);
        }
    }
    return out;
}

Graph delete_vertices(const Graph& g, const VertexSet& s) { return delete_vertices_mapped(g, s).graph; }

std::vector<VertexSet> components(const Graph& g) {
    const int n = g.order();
    std::vector<VertexSet> comps;
    VertexSet seen(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (seen.test(static_cast<size_t>(v))) continue;
        VertexSet comp(static_cast<size_t>(n));
        VertexSet frontier(static_cast<size_t>(n));
        frontier.set(static_cast<size_t>(v));
        while (frontier.any()) {
            comp |= frontier;
            VertexSet next(static_cast<size_t>(n));
            for (size_t u = frontier.find_first(); u != VertexSet::npos; u = frontier.find_next(u))
                next |= g.neighbors(static_cast<int>(u));
            frontier = next - comp;
        }
        seen |= comp;
        comps.push_back(std::move(comp));
    }
    return comps;  // discovery order = sorted by least vertex
}

int component_count(const Graph& g) { return static_cast<int>(components(g).size()); }

int odd_component_count(const Graph& g) {
    int odd = 0;
    for (const auto& c : components(g))
        if (c.count() % 2 == 1) ++odd;
    return odd;
}

int isolated_count(const Graph& g) {
    int iso = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) ++iso;
    return iso;
}

int min_degree(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("minimum degree of the empty graph is undefined");
    int d = g.order();
    for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

bool is_connected(const Graph& g) { return g.order() <= 1 || component_count(g) == 1; }

namespace {

// Unit-capacity max flow on the vertex-split network; counts internally
// disjoint s-t paths for a nonadjacent pair.
class SplitFlow {
public:
    explicit SplitFlow(const Graph& g) : n_(g.order()) {
        head_.assign(static_cast<size_t>(2 * n_), {});
        for (int v = 0; v < n_; ++v) add_arc(vin(v), vout(v), 1);
        for (int u = 0; u < n_; ++u)
            for (size_t v = g.neighbors(u).find_first(); v != VertexSet::npos; v = g.neighbors(u).find_next(v))
                add_arc(vout(u), vin(static_cast<int>(v)), 1);
    }

    int max_flow(int s, int t) {
        for (auto& a : arcs_) a.flow = 0;
        // source/sink vertices are never cut: lift their internal caps
        set_internal_cap(s, n_ + 1);
        set_internal_cap(t, n_ + 1);
        int total = 0;
        while (true) {
            const int pushed = augment(vout(s), vin(t));
            if (pushed == 0) break;
            total += pushed;
        }
        set_internal_cap(s, 1);
        set_internal_cap(t, 1);
        return total;
    }

private:
    struct Arc {
        int to, cap, flow;
    };

    int vin(int v) const { return 2 * v; }
    int vout(int v) const { return 2 * v + 1; }

    void add_arc(int from, int to, int cap) {
        head_[static_cast<size_t>(from)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, cap, 0});
        head_[static_cast<size_t>(to)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0, 0});
    }

    void set_internal_cap(int v, int cap) {
        // internal arcs were added first, one per vertex, in order
        arcs_[static_cast<size_t>(2 * v)].cap = cap;
    }

    int augment(int s, int t) {
        std::vector<int> prev_arc(static_cast<size_t>(2 * n_), -1);
        std::queue<int> q;
        q.push(s);
        std::vector<char> seen(static_cast<size_t>(2 * n_), 0);
        seen[static_cast<size_t>(s)] = 1;
        while (!q.empty() && !seen[static_cast<size_t>(t)]) {
            const int u = q.front();
            q.pop();
            for (int ai : head_[static_cast<size_t>(u)]) {
                const Arc& a = arcs_[static_cast<size_t>(ai)];
                if (a.flow >= a.cap || seen[static_cast<size_t>(a.to)]) continue;
                seen[static_cast<size_t>(a.to)] = 1;
                prev_arc[static_cast<size_t>(a.to)] = ai;
                q.push(a.to);
            }
        }
        if (!seen[static_cast<size_t>(t)]) return 0;
        for (int v = t; v != s;) {
            const int ai = prev_arc[static_cast<size_t>(v)];
            arcs_[static_cast<size_t>(ai)].flow += 1;
            arcs_[static_cast<size_t>(ai ^ 1)].flow -= 1;
            v = arcs_[static_cast<size_t>(ai ^ 1)].to;
        }
        return 1;
    }

    int n_;
    std::vector<std::vector<int>> head_;
    std::vector<Arc> arcs_;
};

}  // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return 0;
    if (g.edge_count() == static_cast<long long>(n) * (n - 1) / 2) return n - 1;
    if (!is_connected(g)) return 0;

    int v0 = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(v0)) v0 = v;

    SplitFlow flow(g);
    int best = g.degree(v0);
    for (int u = 0; u < n; ++u) {
        if (u == v0 || g.has_edge(v0, u)) continue;
        best = std::min(best, flow.max_flow(v0, u));
    }
    std::vector<int> nbrs;
    for (size_t u = g.neighbors(v0).find_first(); u != VertexSet::npos; u = g.neighbors(v0).find_next(u))
        nbrs.push_back(static_cast<int>(u));
    for (size_t i = 0; i < nbrs.size(); ++i)
        for (size_t j = i + 1; j < nbrs.size(); ++j)
            if (!g.has_edge(nbrs[i], nbrs[j])) best = std::min(best, flow.max_flow(nbrs[i], nbrs[j]));
    return best;
}

bool is_k_connected(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("negative connectivity parameter");
    return g.order() > k && vertex_connectivity(g) >= k;
}

namespace {

// Color refinement: repeatedly split classes by the multiset of neighbor
// colors, synchronized across both graphs so equal colors mean equal
// signatures.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const Graph& g1, const Graph& g2) {
    const int n = g1.order();
    std::vector<int> c1(static_cast<size_t>(n)), c2(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        c1[static_cast<size_t>(v)] = g1.degree(v);
        c2[static_cast<size_t>(v)] = g2.degree(v);
    }
    for (int round = 0; round < n; ++round) {
        std::map<std::pair<int, std::vector<int>>, int> dict;
        auto signature = [](const Graph& g, const std::vector<int>& c, int v) {
            std::vector<int> nb;
            for (size_t u = g.neighbors(v).find_first(); u != VertexSet::npos; u = g.neighbors(v).find_next(u))
                nb.push_back(c[u]);
            std::sort(nb.begin(), nb.end());
            return std::make_pair(c[static_cast<size_t>(v)], std::move(nb));
        };
        std::vector<int> n1(static_cast<size_t>(n)), n2(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto sig = signature(g1, c1, v);
            auto [it, _] = dict.try_emplace(std::move(sig), static_cast<int>(dict.size()));
            n1[static_cast<size_t>(v)] = it->second;
        }
        for (int v = 0; v < n; ++v) {
            auto sig = signature(g2, c2, v);
            auto [it, _] = dict.try_emplace(std::move(sig), static_cast<int>(dict.size()));
            n2[static_cast<size_t>(v)] = it->second;
        }
        bool changed = (n1 != c1) || (n2 != c2);
        c1 = std::move(n1);
        c2 = std::move(n2);
        if (!changed) break;
    }
    return {c1, c2};
}

bool extend_mapping(const Graph& g1, const Graph& g2, const std::vector<int>& order, size_t pos,
                    std::vector<int>& map12, std::vector<char>& used2, const std::vector<int>& c1,
                    const std::vector<int>& c2) {
    if (pos == order.size()) return true;
    const int u = order[pos];
    for (int w = 0; w < g2.order(); ++w) {
        if (used2[static_cast<size_t>(w)] || c2[static_cast<size_t>(w)] != c1[static_cast<size_t>(u)]) continue;
        bool ok = true;
        for (size_t i = 0; i < pos && ok; ++i) {
            const int v = order[i];
            if (g1.has_edge(u, v) != g2.has_edge(w, map12[static_cast<size_t>(v)])) ok = false;
        }
        if (!ok) continue;
        map12[static_cast<size_t>(u)] = w;
        used2[static_cast<size_t>(w)] = 1;
        if (extend_mapping(g1, g2, order, pos + 1, map12, used2, c1, c2)) return true;
        used2[static_cast<size_t>(w)] = 0;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.order() != g2.order()) return false;
    if (g1.edge_count() != g2.edge_count()) return false;
    const int n = g1.order();
    if (n == 0) return true;

    auto [c1, c2] = refine_colors(g1, g2);
    {
        std::vector<int> h1 = c1, h2 = c2;
        std::sort(h1.begin(), h1.end());
        std::sort(h2.begin(), h2.end());
        if (h1 != h2) return false;
    }

    // map rare color classes first
    std::map<int, int> class_size;
    for (int v = 0; v < n; ++v) ++class_size[c1[static_cast<size_t>(v)]];
    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int sa = class_size[c1[static_cast<size_t>(a)]], sb = class_size[c1[static_cast<size_t>(b)]];
        if (sa != sb) return sa < sb;
        if (c1[static_cast<size_t>(a)] != c1[static_cast<size_t>(b)])
            return c1[static_cast<size_t>(a)] < c1[static_cast<size_t>(b)];
        return a < b;
    });

    std::vector<int> map12(static_cast<size_t>(n), -1);
    std::vector<char> used2(static_cast<size_t>(n), 0);
    return extend_mapping(g1, g2, order, 0, map12, used2, c1, c2);
}

std::string graph6_encode(const Graph& g) {
    const int n = g.order();
    if (n > 62) throw std::invalid_argument("graph6 short form only supports n <= 62");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int bitpos = 0;
    int current = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            current = (current << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++bitpos == 6) {
                out.push_back(static_cast<char>(current + 63));
                bitpos = 0;
                current = 0;
            }
        }
    }
    if (bitpos > 0) out.push_back(static_cast<char>((current << (6 - bitpos)) + 63));
    return out;
}

Graph graph6_decode(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    const unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126) throw std::invalid_argument("graph6: long form (n > 62) is not supported");
    if (c0 < 63 || c0 > 125) throw std::invalid_argument("graph6: bad order byte");
    const int n = c0 - 63;
    const long long bits = static_cast<long long>(n) * (n - 1) / 2;
    const size_t want = static_cast<size_t>((bits + 5) / 6);
    if (text.size() != 1 + want)
        throw std::invalid_argument("graph6: length does not match the order header");
    Graph g(n);
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const unsigned char c = static_cast<unsigned char>(text[1 + static_cast<size_t>(bit / 6)]);
            if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
            if ((c - 63) >> (5 - bit % 6) & 1) g.add_edge(i, j);
        }
    }
    if (bits > 0) {
        const unsigned char last = static_cast<unsigned char>(text.back());
        const int used = static_cast<int>(bits % 6 == 0 ? 6 : bits % 6);
        if (((last - 63) & ((1 << (6 - used)) - 1)) != 0)
            throw std::invalid_argument("graph6: trailing padding bits are not zero");
    }
    return g;
}

Graph parse_edge_list(const std::string& text, int n_hint) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> edges;
    int n = n_hint;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw std::invalid_argument("edge list: expected 'u v' per line");
        if (u < 0 || v < 0) throw std::invalid_argument("edge list: negative vertex index");
        edges.emplace_back(u, v);
        n = std::max(n, std::max(u, v) + 1);
    }
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

}  // namespace factorcrit
