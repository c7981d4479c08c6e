// End-to-end acceptance checks for the verification toolkit: every claimed
// inequality route, oracle agreement, and sharpness protocol, with runtime
// budgets. Prints one PASS/FAIL line per check; exits nonzero on failure.
#include "factorcrit/campaign.hpp"
#include "factorcrit/criticality.hpp"
#include "factorcrit/matching.hpp"
#include "factorcrit/spectral.hpp"
#include "oracles.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace factorcrit;

#define REQUIRE(cond, msg)                                                              \
    do {                                                                                \
        if (!(cond)) {                                                                  \
            std::printf("    %s:%d: %s\n", __FILE__, __LINE__,                          \
                        std::string(msg).c_str());                                      \
            return false;                                                               \
        }                                                                               \
    } while (0)

namespace {

// All clique-join families K_s v (K_{n_1} u ... u K_{n_t}) with
// s in [1,5], t in [2,4], parts non-increasing >= 1, order <= 40.
// Deliberately re-enumerated here instead of reusing the library grid.
std::vector<CliqueJoinFamily> full_family_grid() {
    std::vector<CliqueJoinFamily> out;
    std::vector<int> parts;
    for (int s = 1; s <= 5; ++s)
        for (int t = 2; t <= 4; ++t) {
            std::function<void(int, int, int)> rec = [&](int remaining, int budget, int max_val) {
                if (remaining == 0) {
                    out.emplace_back(s, parts);
                    return;
                }
                for (int v = 1; v <= std::min(max_val, budget - (remaining - 1)); ++v) {
                    parts.push_back(v);
                    rec(remaining - 1, budget - v, v);
                    parts.pop_back();
                }
            };
            rec(t, 40 - s, 40);
        }
    return out;
}

bool spectral_dual_route() {
    const auto families = full_family_grid();
    REQUIRE(families.size() > 20000, "family grid unexpectedly small: " +
                                         std::to_string(families.size()));
    for (const CliqueJoinFamily& f : families) {
        const double rq = rho_quotient(f);
        const Graph g = realize(f);
        const double rp = rho_power(g).rho;
        const double rd = rho_oracle_dense(g);
        REQUIRE(std::abs(rq - rp) <= 1e-8,
                f.literal() + ": quotient vs power differ by " + std::to_string(rq - rp));
        REQUIRE(std::abs(rq - rd) <= 1e-8,
                f.literal() + ": quotient vs dense differ by " + std::to_string(rq - rd));
        REQUIRE(std::abs(rp - rd) <= 1e-8,
                f.literal() + ": power vs dense differ by " + std::to_string(rp - rd));
    }
    std::printf("    %zu families, three routes each\n", families.size());
    return true;
}

bool concentration_margins() {
    GridRanges pinned;
    pinned.p_lo = pinned.p_hi = 1;
    std::vector<ClaimResult> rows = verify_spectral_concentration(pinned, 1e-10, "L2.3");
    const std::vector<ClaimResult> wide = verify_spectral_concentration(GridRanges{}, 1e-10, "L2.4");
    rows.insert(rows.end(), wide.begin(), wide.end());
    REQUIRE(rows.size() > 10000, "grid unexpectedly small: " + std::to_string(rows.size()));
    for (const ClaimResult& r : rows) {
        REQUIRE(r.status == ClaimStatus::verified,
                r.claim.id + " " + r.claim.params.at("parts") + ": " + to_string(r.status));
        REQUIRE(r.margin > 1e-9, r.claim.id + " s=" + r.claim.params.at("s") + " parts=" +
                                     r.claim.params.at("parts") +
                                     ": margin too thin: " + std::to_string(r.margin));
    }
    std::printf("    %zu instances, all margins above 1e-9\n", rows.size());
    return true;
}

bool spectral_threshold_margins() {
    int count = 0;
    for (int k = 1; k <= 2; ++k)
        for (int delta = k + 2; delta <= k + 5; ++delta) {
            const int bound = 8 * delta - 5 * k + 20;
            for (int n : {bound, bound + 2}) {
                const ClaimResult r = verify_spectral_threshold(k, delta, n, 1e-10);
                REQUIRE(r.status == ClaimStatus::verified,
                        "L2.5 k=" + std::to_string(k) + " delta=" + std::to_string(delta) +
                            " n=" + std::to_string(n) + ": " + to_string(r.status));
                REQUIRE(r.margin > 1e-9, "L2.5 margin too thin: " + std::to_string(r.margin));
                ++count;
            }
        }
    REQUIRE(count == 16, "expected 16 instances");
    return true;
}

bool edge_count_identities() {
    // exact counts over the concentration grid, plus the closed-form
    // difference re-derived on every instance
    const std::vector<ClaimResult> grid_rows = verify_edge_concentration(GridRanges{}, "L2.6");
    REQUIRE(grid_rows.size() > 10000, "grid unexpectedly small");
    for (const ClaimResult& r : grid_rows)
        REQUIRE(r.status == ClaimStatus::verified,
                "L2.6 parts=" + r.claim.params.at("parts") + " " + r.check + ": " +
                    to_string(r.status));

    int instances = 0;
    for (int k = 1; k <= 2; ++k)
        for (int delta = k + 2; delta <= k + 5; ++delta) {
            const int bound = 6 * delta - 5 * k + 8;
            for (int n : {bound, bound + 2}) {
                for (const ClaimResult& r : verify_edge_threshold(k, delta, n))
                    REQUIRE(r.status == ClaimStatus::verified,
                            "L2.7 k=" + std::to_string(k) + " delta=" + std::to_string(delta) +
                                " n=" + std::to_string(n) + " " + r.check + ": " +
                                to_string(r.status));
                ++instances;
            }
        }
    REQUIRE(instances == 16, "expected 16 instances");
    std::printf("    %zu grid rows and %d threshold instances, all exact\n", grid_rows.size(),
                instances);
    return true;
}

bool extremal_non_criticality() {
    int instances = 0;
    for (int k = 1; k <= 3; ++k)
        for (int delta = k + 1; delta <= k + 3; ++delta) {
            const int base = 2 * delta - k + 6;
            for (int n : {base, base + 2, base + 4}) {
                const auto rows = verify_non_criticality(k, delta, n);
                REQUIRE(rows.size() == 2, "expected two checks per instance");
                for (const ClaimResult& r : rows)
                    REQUIRE(r.status == ClaimStatus::verified,
                            "L2.8 k=" + std::to_string(k) + " delta=" + std::to_string(delta) +
                                " n=" + std::to_string(n) + " " + r.check + ": " +
                                to_string(r.status) + " (" + r.detail + ")");
                REQUIRE(rows[1].lhs == static_cast<double>(delta - k + 2),
                        "odd component count off at k=" + std::to_string(k) +
                            " delta=" + std::to_string(delta) + " n=" + std::to_string(n));
                ++instances;
            }
        }
    REQUIRE(instances == 27, "expected 27 instances");
    return true;
}

bool sharpness(SharpnessMode mode, int n, int k, int delta, const char* label) {
    const auto rows = verify_sharpness(n, k, delta, mode, 1e-10, 40);
    bool saw_augmentation = false;
    for (const ClaimResult& r : rows) {
        REQUIRE(r.status == ClaimStatus::verified,
                std::string(label) + " " + r.check + ": " + to_string(r.status) +
                    (r.detail.empty() ? "" : " (" + r.detail + ")"));
        saw_augmentation |= r.check == "augmentation";
    }
    REQUIRE(saw_augmentation, "augmentation scan missing");
    std::printf("    %s: %zu checks including the full augmentation scan\n", label, rows.size());
    return true;
}

bool spectral_sharpness() { return sharpness(SharpnessMode::spectral, 31, 1, 2, "T1.4-sharp"); }

bool size_sharpness() {
    // (15,1,2) is the smallest admissible size-mode instance: one order
    // lower fails the size bound, one below that fails parity
    REQUIRE(verify_sharpness(13, 1, 2, SharpnessMode::size, 1e-10).front().status ==
                ClaimStatus::skipped,
            "n=13 should fall below the size bound");
    REQUIRE(verify_sharpness(14, 1, 2, SharpnessMode::size, 1e-10).front().status ==
                ClaimStatus::skipped,
            "n=14 should fail parity");
    return sharpness(SharpnessMode::size, 15, 1, 2, "T1.3-sharp");
}

bool threshold_comparisons() {
    const std::vector<std::array<int, 3>> triples = {
        {9, 1, 2},  {11, 1, 2}, {13, 1, 2}, {15, 1, 2}, {11, 1, 3}, {13, 1, 3}, {15, 1, 3},
        {17, 1, 3}, {11, 2, 3}, {12, 2, 3}, {14, 2, 3}, {16, 2, 3}, {12, 2, 4}, {14, 2, 4},
        {16, 2, 4}, {18, 2, 4}, {12, 3, 4}, {13, 3, 4}, {15, 3, 4}, {17, 3, 4}};
    REQUIRE(triples.size() == 20, "expected 20 parameter triples");
    int at_boundary = 0;
    for (const auto& [n, k, delta] : triples) {
        if (n == 2 * delta - k + 6) ++at_boundary;
        for (const ClaimResult& r : verify_threshold_comparisons(n, k, delta, 1e-10)) {
            REQUIRE(r.status == ClaimStatus::verified,
                    r.claim.id + " n=" + std::to_string(n) + " k=" + std::to_string(k) +
                        " delta=" + std::to_string(delta) + ": " + to_string(r.status));
            REQUIRE(r.margin > 1e-9, r.claim.id + ": margin too thin");
        }
    }
    REQUIRE(at_boundary >= 3, "boundary orders n = 2*delta-k+6 missing from the triples");
    std::printf("    20 triples, %d at the boundary order, both comparisons strict\n",
                at_boundary);
    return true;
}

bool oracle_agreement() {
    std::mt19937 rng(811);
    int critical = 0, fractional = 0;
    for (int round = 0; round < 500; ++round) {
        const int n = 4 + static_cast<int>(rng() % 9);  // 4..12
        const double p = 0.2 + 0.15 * static_cast<double>(rng() % 5);
        const Graph g = testoracle::random_graph(rng, n, p);
        const int k = 1 + static_cast<int>(rng() % 3);

        REQUIRE(matching_size(max_matching(g)) == testoracle::max_matching_size(g),
                graph6_encode(g) + ": blossom disagrees with the exhaustive matcher");
        REQUIRE(has_fractional_perfect_matching(g) ==
                    testoracle::has_fractional_perfect_matching(g),
                graph6_encode(g) + ": fractional route disagrees with the subset scan");

        if (k > n - 2) continue;
        const auto def = is_k_factor_critical(g, k);
        const auto tutte = odd_component_criterion(g, k);
        REQUIRE(def.holds == tutte.holds,
                graph6_encode(g) + " k=" + std::to_string(k) +
                    ": odd-component route disagrees with the definition");
        const auto fdef = is_fractional_k_factor_critical(g, k);
        const auto iso = isolated_vertex_criterion(g, k);
        REQUIRE(fdef.holds == iso.holds,
                graph6_encode(g) + " k=" + std::to_string(k) +
                    ": isolated-vertex route disagrees with the definition");
        critical += def.holds ? 1 : 0;
        fractional += fdef.holds ? 1 : 0;
    }
    REQUIRE(critical > 10, "corpus produced too few critical graphs");
    REQUIRE(fractional > critical, "corpus should separate the two notions");
    std::printf("    500 graphs, %d critical, %d fractionally critical\n", critical, fractional);
    return true;
}

bool property_suite() {
    // removing edges never raises the spectral radius
    std::mt19937 rng(823);
    for (int round = 0; round < 200; ++round) {
        const int n = 4 + static_cast<int>(rng() % 13);
        const Graph g = testoracle::random_graph(rng, n, 0.5);
        if (g.edge_count() == 0) continue;
        Graph sub(n);
        int skip = static_cast<int>(rng() % static_cast<unsigned>(g.edge_count()));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(u, v) && skip-- != 0) sub.add_edge(u, v);
        REQUIRE(rho_oracle_dense(sub) <= rho_oracle_dense(g) + 1e-12,
                graph6_encode(g) + ": spanning subgraph raised the spectral radius");
    }

    for (int n : {2, 3, 5, 9, 17, 33, 40}) {
        REQUIRE(std::abs(rho_power(complete(n)).rho - (n - 1)) <= 1e-8,
                "rho(K_" + std::to_string(n) + ") should be " + std::to_string(n - 1));
        REQUIRE(std::abs(rho_quotient(CliqueJoinFamily(n - 1, {1})) - (n - 1)) <= 1e-8,
                "quotient route misses rho(K_" + std::to_string(n) + ")");
    }

    // Perron entries must be constant on each clique class of the join
    for (const auto& [n, k, delta] : {std::tuple{15, 1, 2}, {31, 1, 2}, {12, 2, 3}}) {
        const CliqueJoinFamily f = extremal_family(n, k, delta);
        const Graph g = realize(f);
        const Eigen::VectorXd x = perron_vector(g);
        int offset = f.s;
        REQUIRE(x.head(offset).maxCoeff() - x.head(offset).minCoeff() <= 1e-8,
                "core entries drift at n=" + std::to_string(n));
        for (int part : f.parts) {
            const auto seg = x.segment(offset, part);
            REQUIRE(seg.maxCoeff() - seg.minCoeff() <= 1e-8,
                    "part entries drift at n=" + std::to_string(n));
            offset += part;
        }
    }

    // parity law: n-k odd dooms criticality before any matching runs
    for (int round = 0; round < 100; ++round) {
        const int n = 4 + static_cast<int>(rng() % 9);
        const int k = 1 + static_cast<int>(rng() % 2);
        if ((n - k) % 2 == 0 || k > n - 1) continue;
        const auto v = is_k_factor_critical(testoracle::random_graph(rng, n, 0.5), k);
        REQUIRE(!v.holds && v.violation == ViolationKind::parity, "parity law violated");
    }

    // integral matchings induce fractional ones, never the other way
    for (int round = 0; round < 200; ++round) {
        const int n = 2 * (2 + static_cast<int>(rng() % 6));
        const Graph g = testoracle::random_graph(rng, n, 0.4);
        if (has_perfect_matching(g))
            REQUIRE(has_fractional_perfect_matching(g), graph6_encode(g) + ": PM without FPM");
    }
    const Graph two_pentagons = disjoint_union(cycle(5), cycle(5));
    REQUIRE(has_fractional_perfect_matching(two_pentagons), "C_5 u C_5 should have an FPM");
    REQUIRE(!has_perfect_matching(two_pentagons), "C_5 u C_5 must not have a PM");
    return true;
}

struct Check {
    const char* name;
    bool (*run)();
    double budget_seconds;  // 0 = no stated budget
};

}  // namespace

int main() {
    const std::vector<Check> checks = {
        {"spectral dual-route agreement", spectral_dual_route, 60.0},
        {"part-concentration margins (L2.3, L2.4)", concentration_margins, 60.0},
        {"spectral threshold margins (L2.5)", spectral_threshold_margins, 10.0},
        {"edge-count identities (L2.6, L2.7)", edge_count_identities, 10.0},
        {"extremal non-criticality (L2.8)", extremal_non_criticality, 0.0},
        {"spectral sharpness protocol (T1.4-sharp)", spectral_sharpness, 300.0},
        {"size sharpness protocol (T1.3-sharp)", size_sharpness, 300.0},
        {"threshold comparisons (CMP-1.2, CMP-1.5)", threshold_comparisons, 10.0},
        {"oracle agreement on random graphs", oracle_agreement, 0.0},
        {"structural property suite", property_suite, 0.0},
    };

    int failures = 0;
    for (const Check& check : checks) {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = check.run();
        } catch (const std::exception& e) {
            std::printf("    unexpected exception: %s\n", e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (ok && check.budget_seconds > 0.0 && elapsed > check.budget_seconds) {
            std::printf("    budget exceeded: %.1f s > %.0f s\n", elapsed, check.budget_seconds);
            ok = false;
        }
        std::printf("[%s] %s (%.2f s)\n", ok ? "PASS" : "FAIL", check.name, elapsed);
        failures += ok ? 0 : 1;
    }
    if (failures > 0) {
        std::printf("%d of %zu acceptance checks failed\n", failures, checks.size());
        return 1;
    }
    std::printf("all %zu acceptance checks passed\n", checks.size());
    return 0;
}
