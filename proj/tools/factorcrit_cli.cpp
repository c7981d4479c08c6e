// Command-line front end: family construction, spectral radii, criticality
// verdicts, single-claim verification, and the full campaign runner.
//
// Exit codes: 0 verified/holds, 1 refutation/failure, 2 usage or config
// error, 3 inconclusive results only.

#include "factorcrit/campaign.hpp"
#include "factorcrit/criticality.hpp"
#include "factorcrit/matching.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace factorcrit;

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

std::string format_rho(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

Graph load_graph(const std::string& g6, const std::string& edge_list_path) {
    if (!g6.empty()) return graph6_decode(g6);
    std::ifstream f(edge_list_path);
    if (!f) throw std::runtime_error("cannot open " + edge_list_path);
    std::ostringstream text;
    text << f.rdbuf();
    return parse_edge_list(text.str());
}

void print_result(const ClaimResult& r) {
    std::string params;
    for (const auto& [key, value] : r.claim.params) {
        if (!params.empty()) params += ' ';
        params += key + "=" + value;
    }
    std::printf("%s %s [%s]: %s  lhs=%.12g rhs=%.12g margin=%.6g", r.claim.id.c_str(),
                r.check.c_str(), params.c_str(), to_string(r.status).c_str(), r.lhs, r.rhs,
                r.margin);
    if (!r.detail.empty()) std::printf("  (%s)", r.detail.c_str());
    if (!r.witness.empty()) std::printf("  witness=%s", r.witness.c_str());
    std::printf("\n");
}

int results_exit_code(const std::vector<ClaimResult>& results) {
    bool inconclusive = false, skipped = false;
    for (const ClaimResult& r : results) {
        if (r.status == ClaimStatus::refuted) return kExitRefuted;
        if (r.status == ClaimStatus::inconclusive) inconclusive = true;
        if (r.status == ClaimStatus::skipped) skipped = true;
    }
    if (inconclusive) return kExitInconclusive;
    if (skipped) return kExitUsage;  // nothing was actually evaluated
    return kExitOk;
}

// Exploratory harness for the open question: can a graph with connectivity
// exactly k meet the spectral threshold for its own minimum degree and still
// fail k-factor-criticality? Samples join-shaped graphs with a small random
// side, perturbs them, and reports every hit. No claim either way.
int run_search(int n, int k, long long trials, unsigned long long seed, double tol) {
    if (k < 1 || n <= k || (n - k) % 2 != 0) {
        std::fprintf(stderr, "search: need k >= 1 and n-k positive even\n");
        return kExitUsage;
    }
    std::mt19937_64 rng(seed);
    long long candidates = 0, hits = 0;
    std::map<CliqueJoinFamily, double> thresholds;
    for (long long trial = 0; trial < trials; ++trial) {
        const int r = 3 + static_cast<int>(rng() % 4);
        if (n - k - r < 1) continue;
        Graph side(r);
        for (int u = 0; u < r; ++u)
            for (int v = u + 1; v < r; ++v)
                if (rng() % 2) side.add_edge(u, v);
        Graph g = join(complete(k), disjoint_union(complete(n - k - r), side));
        const int toggles = static_cast<int>(rng() % 4);
        for (int i = 0; i < toggles; ++i) {
            const int u = k + static_cast<int>(rng() % static_cast<unsigned>(n - k));
            const int v = k + static_cast<int>(rng() % static_cast<unsigned>(n - k));
            if (u == v) continue;
            if (g.has_edge(u, v))
                g.remove_edge(u, v);
            else
                g.add_edge(u, v);
        }
        const int delta = min_degree(g);
        if (delta < k + 1) continue;
        const long long dd = delta - k - 1;
        const long long needed =
            std::max(8LL * delta - 5LL * k + 20, 1LL * delta * dd * dd - 2LL * delta - 1);
        if (n < needed) continue;
        if (vertex_connectivity(g) != k) continue;
        const CliqueJoinFamily bound_family = extremal_shape(n, k, delta);
        auto it = thresholds.find(bound_family);
        if (it == thresholds.end())
            it = thresholds.emplace(bound_family, rho_quotient(bound_family)).first;
        const double rho = rho_power(g, tol).rho;
        if (rho < it->second - kStrictMarginFactor * tol) continue;
        ++candidates;
        const CriticalityVerdict verdict = is_k_factor_critical(g, k);
        if (verdict.holds) continue;
        ++hits;
        std::printf("hit: n=%d k=%d delta=%d rho=%s threshold=%s graph6=%s", n, k, delta,
                    format_rho(rho).c_str(), format_rho(it->second).c_str(),
                    graph6_encode(g).c_str());
        if (verdict.witness)
            std::printf("  failing-deletion=%s (%s)", format_vertex_set(*verdict.witness).c_str(),
                        to_string(*verdict.violation).c_str());
        std::printf("\n");
    }
    std::printf("search: %lld trials, %lld threshold candidates, %lld non-critical hits\n",
                trials, candidates, hits);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral and size conditions for k-factor-critical graphs"};
    app.require_subcommand(1);

    // construct
    std::string family_literal;
    int opt_n = 0, opt_k = 0, opt_delta = 0;
    std::string shape = "literal";
    auto* construct = app.add_subcommand("construct", "Emit the graph6 code of a family");
    construct->add_option("--family", family_literal, "family literal, e.g. s=2;parts=9,3,1");
    construct->add_option("--shape", shape, "one of: literal, extremal, jfl, fan-lin")
        ->check(CLI::IsMember({"literal", "extremal", "jfl", "fan-lin"}));
    construct->add_option("--n", opt_n, "order");
    construct->add_option("--k", opt_k, "criticality parameter");
    construct->add_option("--delta", opt_delta, "minimum degree");

    // rho
    std::string g6_input, edge_list_path;
    double tol = kDefaultSpectralTol;
    auto* rho_cmd = app.add_subcommand("rho", "Spectral radius of a family or graph");
    rho_cmd->add_option("--family", family_literal, "family literal (quotient route)");
    rho_cmd->add_option("--g6", g6_input, "graph6 string (power-iteration route)");
    rho_cmd->add_option("--edge-list", edge_list_path, "edge-list file (power-iteration route)");
    rho_cmd->add_option("--tol", tol, "residual tolerance");

    // edges
    auto* edges_cmd = app.add_subcommand("edges", "Edge count of a family");
    edges_cmd->add_option("--family", family_literal, "family literal")->required();

    // check-kfc / check-fkfc
    int check_k = 1;
    auto* kfc = app.add_subcommand("check-kfc", "Is the graph k-factor-critical?");
    kfc->add_option("--g6", g6_input, "graph6 string");
    kfc->add_option("--edge-list", edge_list_path, "edge-list file");
    kfc->add_option("--k", check_k, "number of deleted vertices")->required();
    auto* fkfc = app.add_subcommand("check-fkfc", "Is the graph fractionally k-factor-critical?");
    fkfc->add_option("--g6", g6_input, "graph6 string");
    fkfc->add_option("--edge-list", edge_list_path, "edge-list file");
    fkfc->add_option("--k", check_k, "number of deleted vertices")->required();

    // connectivity
    auto* conn = app.add_subcommand("connectivity", "Vertex connectivity of a graph");
    conn->add_option("--g6", g6_input, "graph6 string");
    conn->add_option("--edge-list", edge_list_path, "edge-list file");

    // verify
    std::string claim_id;
    int opt_s = 0, opt_p = 1, scan_cap = 40;
    std::vector<int> opt_parts;
    auto* verify = app.add_subcommand("verify", "Evaluate one claim instance");
    verify->add_option("claim", claim_id, "claim id, e.g. L2.5 or T1.4-sharp")->required();
    verify->add_option("--n", opt_n, "order");
    verify->add_option("--k", opt_k, "criticality parameter");
    verify->add_option("--delta", opt_delta, "minimum degree");
    verify->add_option("--s", opt_s, "join-core size");
    verify->add_option("--p", opt_p, "small-part floor");
    verify->add_option("--parts", opt_parts, "part sizes, largest first")->delimiter(',');
    verify->add_option("--tol", tol, "spectral tolerance");
    verify->add_option("--scan-cap", scan_cap, "largest order for augmentation scans");

    // campaign
    std::string config_path, out_override;
    int workers_override = -1;
    auto* campaign = app.add_subcommand("campaign", "Run a verification campaign");
    campaign->add_option("config", config_path, "JSON config file (defaults used if omitted)");
    campaign->add_option("--out", out_override, "report path override");
    campaign->add_option("--workers", workers_override, "worker-count override");

    // search
    long long trials = 200;
    unsigned long long seed = 1;
    auto* search = app.add_subcommand(
        "search", "Sample connectivity-exactly-k graphs against the spectral threshold");
    search->add_option("--n", opt_n, "order")->required();
    search->add_option("--k", opt_k, "criticality parameter")->required();
    search->add_option("--trials", trials, "number of samples");
    search->add_option("--seed", seed, "RNG seed");
    search->add_option("--tol", tol, "spectral tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (construct->parsed()) {
            CliqueJoinFamily family(0, {1});
            if (shape == "literal") {
                if (family_literal.empty())
                    throw std::runtime_error("construct: --family required for --shape literal");
                family = parse_family(family_literal);
            } else if (shape == "extremal") {
                family = extremal_family(opt_n, opt_k, opt_delta);
            } else if (shape == "jfl") {
                family = jfl_family(opt_n, opt_k);
            } else {
                family = fan_lin_family(opt_n, opt_k, opt_delta);
            }
            std::printf("%s\n", graph6_encode(realize(family)).c_str());
            return kExitOk;
        }

        if (rho_cmd->parsed()) {
            const int sources =
                !family_literal.empty() + !g6_input.empty() + !edge_list_path.empty();
            if (sources != 1)
                throw std::runtime_error("rho: pass exactly one of --family, --g6, --edge-list");
            double value;
            if (!family_literal.empty())
                value = rho_quotient(parse_family(family_literal));
            else
                value = rho_power(load_graph(g6_input, edge_list_path), tol).rho;
            std::printf("%s\n", format_rho(value).c_str());
            return kExitOk;
        }

        if (edges_cmd->parsed()) {
            std::printf("%lld\n", family_edge_count(parse_family(family_literal)));
            return kExitOk;
        }

        if (kfc->parsed() || fkfc->parsed()) {
            if (g6_input.empty() == edge_list_path.empty())
                throw std::runtime_error("pass exactly one of --g6, --edge-list");
            const Graph g = load_graph(g6_input, edge_list_path);
            const CriticalityVerdict verdict = kfc->parsed()
                                                   ? is_k_factor_critical(g, check_k)
                                                   : is_fractional_k_factor_critical(g, check_k);
            if (verdict.holds) {
                std::printf("holds\n");
                return kExitOk;
            }
            std::printf("fails: deletion %s (%s)\n", format_vertex_set(*verdict.witness).c_str(),
                        to_string(*verdict.violation).c_str());
            return kExitRefuted;
        }

        if (conn->parsed()) {
            if (g6_input.empty() == edge_list_path.empty())
                throw std::runtime_error("pass exactly one of --g6, --edge-list");
            std::printf("%d\n", vertex_connectivity(load_graph(g6_input, edge_list_path)));
            return kExitOk;
        }

        if (verify->parsed()) {
            const auto& catalog = claim_catalog();
            if (std::find(catalog.begin(), catalog.end(), claim_id) == catalog.end())
                throw std::runtime_error("verify: unknown claim id \"" + claim_id + "\"");
            std::vector<ClaimResult> results;
            if (claim_id == "L2.3" || claim_id == "L2.4") {
                if (opt_parts.empty())
                    throw std::runtime_error("verify: this claim needs --s and --parts");
                if (claim_id == "L2.3") opt_p = 1;
                results.push_back(verify_spectral_concentration_instance(opt_s, opt_p, opt_parts,
                                                                         tol, claim_id));
            } else if (claim_id == "L2.6") {
                if (opt_parts.empty())
                    throw std::runtime_error("verify: this claim needs --s and --parts");
                results = verify_edge_concentration_instance(opt_s, opt_p, opt_parts, claim_id);
            } else if (claim_id == "L2.5") {
                results.push_back(verify_spectral_threshold(opt_k, opt_delta, opt_n, tol));
            } else if (claim_id == "L2.7") {
                results = verify_edge_threshold(opt_k, opt_delta, opt_n);
            } else if (claim_id == "L2.8") {
                results = verify_non_criticality(opt_k, opt_delta, opt_n);
            } else if (claim_id == "T1.3-sharp" || claim_id == "T1.4-sharp") {
                const SharpnessMode mode = claim_id == "T1.3-sharp" ? SharpnessMode::size
                                                                    : SharpnessMode::spectral;
                results = verify_sharpness(opt_n, opt_k, opt_delta, mode, tol, scan_cap);
            } else {
                for (auto& r : verify_threshold_comparisons(opt_n, opt_k, opt_delta, tol))
                    if (r.claim.id == claim_id) results.push_back(std::move(r));
            }
            for (const ClaimResult& r : results) print_result(r);
            return results_exit_code(results);
        }

        if (campaign->parsed()) {
            nlohmann::ordered_json raw = nlohmann::ordered_json::object();
            if (!config_path.empty()) {
                std::ifstream f(config_path);
                if (!f) throw ConfigError("cannot open config file " + config_path);
                raw = nlohmann::ordered_json::parse(f, nullptr, true, false);
            }
            CampaignConfig cfg = parse_campaign_config(raw);
            if (!out_override.empty()) cfg.out = out_override;
            if (workers_override >= 0) cfg.workers = workers_override;
            const Report report = run_campaign(cfg);
            write_report_files(report, cfg.out);
            std::map<std::string, int> counts;
            for (const ClaimResult& r : report.results) ++counts[to_string(r.status)];
            std::printf("%zu results in %.2fs -> %s\n", report.results.size(),
                        report.wall_seconds, cfg.out.c_str());
            for (const auto& [status, count] : counts)
                std::printf("  %-20s %d\n", status.c_str(), count);
            for (const ClaimResult& r : report.results)
                if (r.status == ClaimStatus::refuted) print_result(r);
            return report_exit_code(report);
        }

        if (search->parsed()) return run_search(opt_n, opt_k, trials, seed, tol);
    } catch (const nlohmann::json::parse_error& e) {
        std::fprintf(stderr, "error: config is not valid JSON: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
