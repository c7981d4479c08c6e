#include "factorcrit/family.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace factorcrit {

namespace {

long long choose2(long long m) { return m * (m - 1) / 2; }

}  // namespace

CliqueJoinFamily::CliqueJoinFamily(int core, std::vector<int> part_sizes) : s(core), parts(std::move(part_sizes)) {
    if (s < 0) throw std::invalid_argument("family: negative core size");
    for (int p : parts)
        if (p < 1) throw std::invalid_argument("family: parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int CliqueJoinFamily::order() const {
    return s + std::accumulate(parts.begin(), parts.end(), 0);
}

std::string CliqueJoinFamily::literal() const {
    std::ostringstream out;
    out << "s=" << s << ";parts=";
    for (size_t i = 0; i < parts.size(); ++i) out << (i ? "," : "") << parts[i];
    return out.str();
}

CliqueJoinFamily parse_family(const std::string& literal) {
    int s = 0;
    std::vector<int> parts;
    std::istringstream in(literal);
    std::string field;
    bool saw_s = false, saw_parts = false;
    while (std::getline(in, field, ';')) {
        const auto eq = field.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("family literal: expected key=value");
        const std::string key = field.substr(0, eq);
        const std::string value = field.substr(eq + 1);
        if (key == "s") {
            s = std::stoi(value);
            saw_s = true;
        } else if (key == "parts") {
            std::istringstream ps(value);
            std::string item;
            while (std::getline(ps, item, ',')) parts.push_back(std::stoi(item));
            saw_parts = true;
        } else {
            throw std::invalid_argument("family literal: unknown key '" + key + "'");
        }
    }
    if (!saw_s || !saw_parts) throw std::invalid_argument("family literal: need both s= and parts=");
    return CliqueJoinFamily(s, std::move(parts));
}

Graph realize(const CliqueJoinFamily& f) {
    const int n = f.order();
    Graph g(n);
    for (int u = 0; u < f.s; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);  // core clique + join edges
    int base = f.s;
    for (int size : f.parts) {
        for (int u = 0; u < size; ++u)
            for (int v = u + 1; v < size; ++v) g.add_edge(base + u, base + v);
        base += size;
    }
    return g;
}

CliqueJoinFamily extremal_shape(int n, int k, int delta) {
    if (k < 1) throw std::invalid_argument("extremal family: k must be >= 1");
    if (delta <= k) throw std::invalid_argument("extremal family: delta must exceed k");
    if (n < 2 * delta - k + 6) throw std::invalid_argument("extremal family: n below 2*delta-k+6");
    std::vector<int> parts{n - 2 * delta + k - 3, 3};
    parts.insert(parts.end(), static_cast<size_t>(delta - k), 1);
    return CliqueJoinFamily(delta, std::move(parts));
}

CliqueJoinFamily extremal_family(const ExtremalParams& p) {
    if ((p.n - p.k) % 2 != 0) throw std::invalid_argument("extremal family: n and k must have the same parity");
    return extremal_shape(p.n, p.k, p.delta);
}

CliqueJoinFamily extremal_family(int n, int k, int delta) { return extremal_family(ExtremalParams{n, k, delta}); }

CliqueJoinFamily jfl_family(int n, int k) {
    if (k < 1) throw std::invalid_argument("comparison family: k must be >= 1");
    if (n - k - 3 < 3) throw std::invalid_argument("comparison family: big part smaller than 3");
    return CliqueJoinFamily(k, {n - k - 3, 3});
}

CliqueJoinFamily fan_lin_family(int n, int k, int delta) {
    if (k < 1) throw std::invalid_argument("comparison family: k must be >= 1");
    if (delta < k) throw std::invalid_argument("comparison family: delta must be >= k");
    const int big = n - 2 * delta + k - 1;
    if (big < 1) throw std::invalid_argument("comparison family: big part smaller than 1");
    std::vector<int> parts{big};
    parts.insert(parts.end(), static_cast<size_t>(delta - k + 1), 1);
    CliqueJoinFamily f(delta, std::move(parts));
    if (f.order() != n) throw std::logic_error("comparison family: part sizes do not sum to n");
    return f;
}

long long family_edge_count(const CliqueJoinFamily& f) {
    long long total = choose2(f.s) + static_cast<long long>(f.s) * (f.order() - f.s);
    for (int p : f.parts) total += choose2(p);
    return total;
}

std::optional<TutteReduction> tutte_reduction(const Graph& g, const VertexSet& s, int k) {
    if (k < 1) throw std::invalid_argument("reduction: k must be >= 1");
    if (s.size() != static_cast<size_t>(g.order())) throw std::invalid_argument("reduction: vertex set size mismatch");
    const int core = static_cast<int>(s.count());
    if (core < k) throw std::invalid_argument("reduction: separator smaller than k");

    std::vector<VertexSet> comps;  // components of g-s, in original labels
    {
        const InducedSubgraph ind = delete_vertices_mapped(g, s);
        for (const auto& c : components(ind.graph)) {
            VertexSet orig(static_cast<size_t>(g.order()));
            for (size_t v = c.find_first(); v != VertexSet::npos; v = c.find_next(v))
                orig.set(static_cast<size_t>(ind.old_of_new[v]));
            comps.push_back(std::move(orig));
        }
    }

    std::vector<size_t> odd, even;
    for (size_t i = 0; i < comps.size(); ++i) (comps[i].count() % 2 == 1 ? odd : even).push_back(i);
    const int needed = core - k + 2;
    if (static_cast<int>(odd.size()) < needed) return std::nullopt;

    // smallest odd components become their own parts
    std::sort(odd.begin(), odd.end(),
              [&](size_t a, size_t b) { return comps[a].count() < comps[b].count(); });
    const size_t kept = static_cast<size_t>(core - k + 1);

    VertexSet merged(static_cast<size_t>(g.order()));
    for (size_t i = kept; i < odd.size(); ++i) merged |= comps[odd[i]];
    for (size_t i : even) merged |= comps[i];

    std::vector<std::pair<int, VertexSet>> part_sets;  // (size, members)
    if (merged.any()) part_sets.emplace_back(static_cast<int>(merged.count()), merged);
    for (size_t i = 0; i < kept; ++i)
        part_sets.emplace_back(static_cast<int>(comps[odd[i]].count()), comps[odd[i]]);
    std::stable_sort(part_sets.begin(), part_sets.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });

    TutteReduction out;
    std::vector<int> sizes;
    for (const auto& [size, _] : part_sets) sizes.push_back(size);
    out.family = CliqueJoinFamily(core, sizes);

    out.relabel.assign(static_cast<size_t>(g.order()), -1);
    int next = 0;
    for (size_t v = s.find_first(); v != VertexSet::npos; v = s.find_next(v))
        out.relabel[v] = next++;
    for (const auto& [size, members] : part_sets)
        for (size_t v = members.find_first(); v != VertexSet::npos; v = members.find_next(v))
            out.relabel[v] = next++;
    return out;
}

}  // namespace factorcrit
