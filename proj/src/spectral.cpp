#include "factorcrit/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <stdexcept>
#include <utility>

namespace factorcrit {

namespace {

// y = A x through the bitset rows; avoids materializing A for large n.
void adjacency_apply(const Graph& g, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        double sum = 0.0;
        const VertexSet& nb = g.neighbors(v);
        for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u))
            sum += x[static_cast<Eigen::Index>(u)];
        y[v] = sum;
    }
}

struct PowerOutcome {
    Eigen::VectorXd vec;
    SpectrumResult res;
};

PowerOutcome power_iterate(const Graph& g, double tol) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("rho: empty graph");
    Eigen::VectorXd x = Eigen::VectorXd::Ones(n);
    Eigen::VectorXd ax(n);
    SpectrumResult out;
    for (long it = 1; it <= kIterationCap; ++it) {
        adjacency_apply(g, x, ax);
        const double rho = x.dot(ax) / x.squaredNorm();
        const double resid =
            (ax - rho * x).lpNorm<Eigen::Infinity>() / x.lpNorm<Eigen::Infinity>();
        out.rho = rho;
        out.residual = resid;
        out.iterations = it;
        if (resid <= tol) break;
        x += ax;  // (A + I)x: aperiodic even on bipartite graphs
        x /= x.lpNorm<Eigen::Infinity>();
    }
    x /= x.lpNorm<Eigen::Infinity>();
    return {std::move(x), out};
}

}  // namespace

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
    const int n = g.order();
    if (n > 4096) throw std::invalid_argument("adjacency_matrix: order above 4096");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (int v = 0; v < n; ++v) {
        const VertexSet& nb = g.neighbors(v);
        for (auto u = nb.find_first(); u != VertexSet::npos; u = nb.find_next(u))
            a(v, static_cast<Eigen::Index>(u)) = 1.0;
    }
    return a;
}

Eigen::MatrixXd quotient_matrix(const CliqueJoinFamily& f) {
    const int s = f.s;
    const int t = f.part_count();
    if (s == 0 && t != 1)
        throw std::invalid_argument("quotient: family is disconnected without a core");
    if (s == 0) {
        Eigen::MatrixXd q(1, 1);
        q(0, 0) = f.parts[0] - 1;
        return q;
    }
    Eigen::MatrixXd q = Eigen::MatrixXd::Zero(t + 1, t + 1);
    q(0, 0) = s - 1;
    for (int j = 0; j < t; ++j) {
        q(0, j + 1) = f.parts[j];
        q(j + 1, 0) = s;
        q(j + 1, j + 1) = f.parts[j] - 1;
    }
    return q;
}

double rho_quotient(const CliqueJoinFamily& f, double rel_tol) {
    if (f.s == 0) {
        if (f.part_count() != 1)
            throw std::invalid_argument("quotient: family is disconnected without a core");
        return f.parts[0] - 1.0;
    }
    const Eigen::MatrixXd q = quotient_matrix(f);
    const Eigen::Index m = q.rows();
    // B = Q + I is irreducible with positive diagonal, so the two-sided
    // Collatz-Wielandt ratios close onto its Perron value.
    const Eigen::MatrixXd b = q + Eigen::MatrixXd::Identity(m, m);
    Eigen::VectorXd x = Eigen::VectorXd::Ones(m);
    for (long it = 0; it < kIterationCap; ++it) {
        const Eigen::VectorXd y = b * x;
        const Eigen::ArrayXd ratio = y.array() / x.array();
        const double lo = ratio.minCoeff();
        const double hi = ratio.maxCoeff();
        if (hi - lo <= rel_tol * hi) return 0.5 * (lo + hi) - 1.0;
        x = y / y.lpNorm<Eigen::Infinity>();
    }
    throw std::runtime_error("rho_quotient: bounds failed to close");
}

SpectrumResult rho_power(const Graph& g, double tol) {
    return power_iterate(g, tol).res;
}

double rho_oracle_dense(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("rho: empty graph");
    if (g.order() > 64) throw std::invalid_argument("rho_oracle_dense: order above 64");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g),
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("rho_oracle_dense: eigensolver failed");
    return solver.eigenvalues().maxCoeff();
}

Eigen::VectorXd perron_vector(const Graph& g, double tol) {
    if (!is_connected(g)) throw std::invalid_argument("perron_vector: graph not connected");
    PowerOutcome ran = power_iterate(g, tol);
    if (ran.res.residual > tol)
        throw std::runtime_error("perron_vector: power iteration did not converge");
    return std::move(ran.vec);
}

}  // namespace factorcrit
