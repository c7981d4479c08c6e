#pragma once

#include "factorcrit/family.hpp"
#include "factorcrit/graph.hpp"

#include <Eigen/Dense>

namespace factorcrit {

inline constexpr double kDefaultSpectralTol = 1e-10;
inline constexpr double kQuotientRelTol = 1e-12;
inline constexpr long kIterationCap = 1'000'000;

/// A real inequality only counts as strictly verified when the gap clears
/// 10x the eigensolver tolerance; anything smaller is a numerical tie.
inline constexpr double kStrictMarginFactor = 10.0;

struct SpectrumResult {
    double rho = 0.0;
    double residual = 0.0;  // ||Ax - rho x||_inf / ||x||_inf
    long iterations = 0;
};

Eigen::MatrixXd adjacency_matrix(const Graph& g);

/// Equitable-partition quotient of a clique-join family: one row for the
/// core, one per part. Shares its largest eigenvalue with the realized
/// graph. Requires s >= 1 or a single part.
Eigen::MatrixXd quotient_matrix(const CliqueJoinFamily& f);

/// Largest eigenvalue of the quotient matrix, via shifted power iteration
/// with two-sided Collatz-Wielandt bounds.
double rho_quotient(const CliqueJoinFamily& f, double rel_tol = kQuotientRelTol);

/// Power iteration on the adjacency relation, all-ones start. The +I shift
/// keeps the iteration aperiodic on bipartite graphs; the reported residual
/// is measured against A itself.
SpectrumResult rho_power(const Graph& g, double tol = kDefaultSpectralTol);

/// Full symmetric eigensolve, n <= 64; the independent route used by tests.
double rho_oracle_dense(const Graph& g);

/// Positive eigenvector for rho(g), normalized to max entry 1. Requires a
/// connected graph.
Eigen::VectorXd perron_vector(const Graph& g, double tol = kDefaultSpectralTol);

}  // namespace factorcrit
