#pragma once

#include <optional>
#include <vector>

#include "onelap/flow.hpp"
#include "onelap/graph.hpp"
#include "onelap/tv.hpp"

namespace onelap {

// Witness for an eigenpair: one rational z per canonical edge, satisfying
//   |z_e| <= 1,
//   z_e = sign(x_u - x_v) whenever x_u != x_v (edge e = (u, v), u < v),
//   sum of incident z (+z at u, -z at v) = mu * d_i * sign(x_i) at every
//   vertex with x_i != 0, and within [-|mu| d_i, |mu| d_i] where x_i = 0.
struct Certificate {
    Rat mu;
    std::vector<Rat> z;
};

// Checks the three certificate conditions exactly. Only the signs of x enter,
// so any positive rescaling of x gives the same verdict. Errors:
// LengthMismatch.
bool check_certificate(const Graph& g, const VertexFunction& x, const Certificate& cert);

// Decides whether (mu, x) is an eigenpair by reducing the residual system on
// equal-value edges to an integer circulation, and returns a certificate when
// feasible. Any rational mu is accepted; values outside [0, 1] simply come
// back infeasible. Errors: ZeroVector, LengthMismatch.
std::optional<Certificate> verify_eigenpair(const Graph& g, const Rat& mu, const VertexFunction& x);

struct EigenResult {
    Rat mu;
    Certificate certificate;
};

// Rescales x onto the unit sphere, takes mu to be its total variation, and
// certifies the pair. Errors: ZeroVector, LengthMismatch.
std::optional<EigenResult> is_eigenvector(const Graph& g, const VertexFunction& x);

namespace detail {

// Same decision as verify_eigenpair but with the orientation of selected
// edges reversed internally; the certificate is still reported in canonical
// orientation. The answer must not depend on `flip` (test hook).
std::optional<Certificate> verify_eigenpair_oriented(const Graph& g, const Rat& mu,
                                                     const VertexFunction& x,
                                                     const std::vector<char>& flip);

} // namespace detail

} // namespace onelap
