#include "onelap/linear.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace onelap {

namespace {

constexpr double kOffDiagonalTarget = 1e-12;
constexpr int kMaxSweeps = 100;

struct JacobiResult {
    std::vector<double> values;              // unsorted diagonal
    std::vector<std::vector<double>> basis;  // basis[i][k]: component i of eigenvector k
};

double off_diagonal_norm(const std::vector<std::vector<double>>& a) {
    double sum = 0.0;
    int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) sum += a[i][j] * a[i][j];
    return std::sqrt(sum);
}

JacobiResult jacobi_eigensystem(std::vector<std::vector<double>> a) {
    int n = static_cast<int>(a.size());
    JacobiResult result;
    result.basis.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) result.basis[i][i] = 1.0;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) < kOffDiagonalTarget) {
            result.values.resize(n);
            for (int i = 0; i < n; ++i) result.values[i] = a[i][i];
            return result;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                double tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = result.basis[k][p], vkq = result.basis[k][q];
                    result.basis[k][p] = c * vkp - s * vkq;
                    result.basis[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if (off_diagonal_norm(a) >= kOffDiagonalTarget) {
        throw Error(ErrorCode::ConvergenceFailure, "Jacobi did not converge in 100 sweeps");
    }
    result.values.resize(n);
    for (int i = 0; i < n; ++i) result.values[i] = a[i][i];
    return result;
}

std::vector<std::vector<double>> normalized_laplacian(const Graph& g) {
    std::vector<std::vector<double>> a(g.n, std::vector<double>(g.n, 0.0));
    for (int i = 0; i < g.n; ++i) a[i][i] = 1.0;
    for (auto [u, v] : g.edges) {
        double w = -1.0 / std::sqrt(static_cast<double>(g.degree[u]) * g.degree[v]);
        a[u][v] = w;
        a[v][u] = w;
    }
    return a;
}

std::vector<int> ascending_order(const std::vector<double>& values) {
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return values[x] < values[y]; });
    return order;
}

} // namespace

LinearSpectrum linear_spectrum(const Graph& g) {
    JacobiResult eigen = jacobi_eigensystem(normalized_laplacian(g));
    LinearSpectrum spectrum;
    spectrum.tolerance = kOffDiagonalTarget;
    spectrum.eigenvalues = eigen.values;
    std::sort(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end());
    return spectrum;
}

std::vector<double> linear_second_eigenvector(const Graph& g) {
    JacobiResult eigen = jacobi_eigensystem(normalized_laplacian(g));
    int column = ascending_order(eigen.values)[1];
    std::vector<double> y(g.n);
    for (int i = 0; i < g.n; ++i) {
        y[i] = eigen.basis[i][column] / std::sqrt(static_cast<double>(g.degree[i]));
    }
    return y;
}

CheegerInequalityReport cheeger_inequality_check(const Graph& g) {
    CheegerInequalityReport report;
    report.lambda2 = linear_spectrum(g).eigenvalues[1];
    report.h = cheeger_exact(g).ratio;
    double h = report.h.to_double();
    report.ok = report.lambda2 / 2.0 <= h + report.slack &&
                h <= std::sqrt(2.0 * report.lambda2) + report.slack;
    return report;
}

} // namespace onelap
