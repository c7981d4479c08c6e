#pragma once

#include "factorcrit/family.hpp"
#include "factorcrit/spectral.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace factorcrit {

inline constexpr const char* kToolName = "factorcrit";
inline constexpr const char* kToolVersion = "1.0.0";

/// Ids of the ten statements the campaign can certify, in report order.
const std::vector<std::string>& claim_catalog();

enum class ClaimStatus {
    verified,
    partially_verified,  // deliberate scan cap, remaining checks green
    inconclusive,        // margin inside the numerical tie band
    skipped,             // hypotheses not met
    refuted,
};

std::string to_string(ClaimStatus s);

struct Claim {
    std::string id;
    std::map<std::string, std::string> params;

    friend bool operator==(const Claim&, const Claim&) = default;
};

struct ClaimResult {
    Claim claim;
    std::string check;  // which sub-assertion of the claim this row records
    ClaimStatus status = ClaimStatus::skipped;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // positive iff the claimed direction holds
    std::string detail;
    std::string witness;  // family literal or graph6, set on refutation
};

/// Enumeration ranges for the part-concentration claims (L2.3/L2.4/L2.6):
/// all non-increasing part lists with t parts, every part >= p, order <= n_max.
struct GridRanges {
    int s_lo = 1, s_hi = 5;
    int t_lo = 2, t_hi = 4;
    int p_lo = 1, p_hi = 3;
    int n_max = 40;
};

enum class SharpnessMode { size, spectral };

/// rho(K_s v (K_{n_1} u ... u K_{n_t})) < rho of the concentrated family
/// K_s v (K_{n-s-(t-2)p-3} u K_3 u (t-2)K_p), over every grid instance with
/// n_1 >= ... >= n_t >= p >= 1, n_2 >= 3, n_1 < n-s-(t-2)p-3.
std::vector<ClaimResult> verify_spectral_concentration(const GridRanges& grid, double tol,
                                                       const std::string& claim_id);

/// Same enumeration, exact edge counts, plus the closed-form count
/// difference re-derived and matched against the direct difference.
std::vector<ClaimResult> verify_edge_concentration(const GridRanges& grid,
                                                   const std::string& claim_id);

/// One concentration instance with explicit parts; hypothesis violations
/// come back as status=skipped with the failed condition in detail.
ClaimResult verify_spectral_concentration_instance(int s, int p, const std::vector<int>& parts,
                                                   double tol, const std::string& claim_id);
std::vector<ClaimResult> verify_edge_concentration_instance(int s, int p,
                                                            const std::vector<int>& parts,
                                                            const std::string& claim_id);

/// rho(K_{k+1} v (K_{n-delta-4} u K_3 u K_{delta-k})) < rho(extremal shape),
/// for k >= 1, delta >= k+2, n >= 8*delta-5k+20.
ClaimResult verify_spectral_threshold(int k, int delta, int n, double tol);

/// Edge-count analogue for n >= 6*delta-5k+8, with the closed-form
/// difference (delta-k)(delta-k-1)/2 + 3(delta-k-1) checked exactly.
std::vector<ClaimResult> verify_edge_threshold(int k, int delta, int n);

/// The extremal graph is not k-factor-critical, and deleting its core
/// leaves exactly delta-k+2 odd components.
std::vector<ClaimResult> verify_non_criticality(int k, int delta, int n);

/// Sharpness protocol at one admissible instance: the extremal graph meets
/// every hypothesis and attains the bound but is not k-factor-critical,
/// while every single-edge augmentation exceeds the bound and is
/// k-factor-critical. Instances above scan_cap skip the augmentation scan
/// and come back partially verified.
std::vector<ClaimResult> verify_sharpness(int n, int k, int delta, SharpnessMode mode,
                                          double tol, int scan_cap = 40);

/// rho(extremal shape) strictly below each published comparison family
/// (CMP-1.2 and CMP-1.5), for delta >= k+1 and n >= 2*delta-k+6.
std::vector<ClaimResult> verify_threshold_comparisons(int n, int k, int delta, double tol);

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CampaignConfig {
    std::vector<std::string> claims;  // subset of claim_catalog(), in catalog order
    nlohmann::ordered_json grids;     // per-claim overrides, validated
    double tol = kDefaultSpectralTol;
    int workers = 0;  // 0 = hardware concurrency
    std::string out = "campaign_report.json";
};

/// Strict schema validation; throws ConfigError before any computation.
CampaignConfig parse_campaign_config(const nlohmann::ordered_json& j);

struct Report {
    std::string tool_version = kToolVersion;
    nlohmann::ordered_json grid;  // resolved grid per selected claim
    std::vector<ClaimResult> results;
    double wall_seconds = 0.0;
};

Report run_campaign(const CampaignConfig& cfg);

/// 0 all verified, 1 any refutation, 3 inconclusive results but no
/// refutation. (2 is reserved for usage/config errors at the CLI.)
int report_exit_code(const Report& r);

nlohmann::ordered_json report_json(const Report& r);

/// One row per result: claim, params, lhs, rhs, margin.
std::string report_csv(const Report& r);

/// Writes the JSON report to json_path and the CSV next to it with the
/// extension swapped to .csv.
void write_report_files(const Report& r, const std::string& json_path);

}  // namespace factorcrit
