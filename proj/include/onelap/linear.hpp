#pragma once

#include <vector>

#include "onelap/cheeger.hpp"
#include "onelap/graph.hpp"
#include "onelap/rational.hpp"

namespace onelap {

struct LinearSpectrum {
    std::vector<double> eigenvalues; // ascending
    double tolerance = 1e-12;        // off-diagonal norm reached by Jacobi
};

// Eigenvalues of the normalized Laplacian I - D^(-1/2) A D^(-1/2) by cyclic
// Jacobi rotations, run until the off-diagonal Frobenius norm drops below
// 1e-12. Errors: ConvergenceFailure (after 100 sweeps).
LinearSpectrum linear_spectrum(const Graph& g);

// Generalized eigenvector for the second-smallest eigenvalue: D^(-1/2) times
// the symmetric eigenvector. Errors: ConvergenceFailure.
std::vector<double> linear_second_eigenvector(const Graph& g);

struct CheegerInequalityReport {
    double lambda2 = 0.0;
    Rat h;
    bool ok = false;
    double slack = 1e-9;
};

// lambda2 / 2 <= h <= sqrt(2 lambda2), allowing `slack` of floating-point
// legroom on both sides. Errors: Disconnected, TooLarge, ConvergenceFailure.
CheegerInequalityReport cheeger_inequality_check(const Graph& g);

} // namespace onelap
