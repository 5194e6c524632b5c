#include "onelap/eigen_verify.hpp"

#include <limits>

namespace onelap {

namespace {

void require_length(const Graph& g, const VertexFunction& x) {
    if (static_cast<int>(x.size()) != g.n) {
        throw Error(ErrorCode::LengthMismatch,
                    "vertex function has " + std::to_string(x.size()) + " entries, graph has " +
                        std::to_string(g.n) + " vertices");
    }
}

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
    __int128 p = static_cast<__int128>(a) * b;
    if (p > std::numeric_limits<std::int64_t>::max() || p < std::numeric_limits<std::int64_t>::min()) {
        throw Error(ErrorCode::Overflow, "flow bound does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(p);
}

// lo * scale, where scale is a multiple of lo's denominator.
std::int64_t scale_exact(const Rat& value, std::int64_t scale) {
    return mul_checked(value.num(), scale / value.den());
}

} // namespace

bool check_certificate(const Graph& g, const VertexFunction& x, const Certificate& cert) {
    require_length(g, x);
    if (static_cast<int>(cert.z.size()) != g.edge_count()) {
        throw Error(ErrorCode::LengthMismatch,
                    "certificate has " + std::to_string(cert.z.size()) + " edge values, graph has " +
                        std::to_string(g.edge_count()) + " edges");
    }
    const Rat one(1);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Rat& z = cert.z[e];
        if (z.abs() > one) return false;
        auto [u, v] = g.edges[e];
        int diff = (x[u] - x[v]).sign();
        if (diff != 0 && z != Rat(diff)) return false;
    }
    std::vector<Rat> vertex_sum(g.n);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        vertex_sum[u] += cert.z[e];
        vertex_sum[v] -= cert.z[e];
    }
    for (int i = 0; i < g.n; ++i) {
        Rat target = cert.mu * Rat(g.degree[i]);
        int s = x[i].sign();
        if (s != 0) {
            if (vertex_sum[i] != (s > 0 ? target : -target)) return false;
        } else {
            if (vertex_sum[i].abs() > target.abs()) return false;
        }
    }
    return true;
}

namespace detail {

std::optional<Certificate> verify_eigenpair_oriented(const Graph& g, const Rat& mu,
                                                     const VertexFunction& x,
                                                     const std::vector<char>& flip) {
    require_length(g, x);
    bool all_zero = true;
    for (const Rat& xi : x) {
        if (!xi.is_zero()) {
            all_zero = false;
            break;
        }
    }
    if (all_zero) {
        throw Error(ErrorCode::ZeroVector, "eigenpair candidate with zero function");
    }

    int m = g.edge_count();
    // Edges with distinct endpoint values have their z forced to +-1; the
    // rest stay as interval variables and become circulation arcs.
    std::vector<int> forced(m, 0);
    std::vector<std::int64_t> forced_sum(g.n, 0);
    std::vector<int> free_edges;
    for (int e = 0; e < m; ++e) {
        int head = g.edges[e].first;
        int tail = g.edges[e].second;
        if (e < static_cast<int>(flip.size()) && flip[e]) std::swap(head, tail);
        int diff = (x[head] - x[tail]).sign();
        if (diff == 0) {
            free_edges.push_back(e);
        } else {
            forced[e] = diff;
            forced_sum[head] += diff;
            forced_sum[tail] -= diff;
        }
    }

    // Residual bounds on the free divergence at each vertex.
    Rat mu_abs = mu.abs();
    std::vector<Rat> lower(g.n), upper(g.n);
    std::int64_t scale = 1;
    for (int i = 0; i < g.n; ++i) {
        Rat target = mu * Rat(g.degree[i]);
        Rat shift(forced_sum[i]);
        int s = x[i].sign();
        if (s > 0) {
            lower[i] = upper[i] = target - shift;
        } else if (s < 0) {
            lower[i] = upper[i] = -target - shift;
        } else {
            Rat radius = mu_abs * Rat(g.degree[i]);
            lower[i] = -radius - shift;
            upper[i] = radius - shift;
        }
        scale = lcm_checked(scale, lower[i].den());
        scale = lcm_checked(scale, upper[i].den());
    }

    FlowProblem problem;
    problem.node_count = g.n + 1;
    problem.scale = scale;
    int hub = g.n;
    for (int e : free_edges) {
        int head = g.edges[e].first;
        int tail = g.edges[e].second;
        if (e < static_cast<int>(flip.size()) && flip[e]) std::swap(head, tail);
        problem.arcs.push_back({head, tail, -scale, scale});
    }
    for (int i = 0; i < g.n; ++i) {
        problem.arcs.push_back({hub, i, scale_exact(lower[i], scale), scale_exact(upper[i], scale)});
    }

    auto flow = solve_circulation(problem);
    if (!flow) return std::nullopt;

    Certificate cert;
    cert.mu = mu;
    cert.z.assign(m, Rat());
    for (std::size_t k = 0; k < free_edges.size(); ++k) {
        int e = free_edges[k];
        Rat value((*flow)[k], scale);
        bool flipped = e < static_cast<int>(flip.size()) && flip[e];
        cert.z[e] = flipped ? -value : value;
    }
    for (int e = 0; e < m; ++e) {
        if (forced[e] != 0) {
            bool flipped = e < static_cast<int>(flip.size()) && flip[e];
            cert.z[e] = Rat(flipped ? -forced[e] : forced[e]);
        }
    }
    return cert;
}

} // namespace detail

std::optional<Certificate> verify_eigenpair(const Graph& g, const Rat& mu, const VertexFunction& x) {
    return detail::verify_eigenpair_oriented(g, mu, x, {});
}

std::optional<EigenResult> is_eigenvector(const Graph& g, const VertexFunction& x) {
    Rat norm = weighted_norm(g, x);
    if (norm.is_zero()) {
        throw Error(ErrorCode::ZeroVector, "cannot rescale the zero function");
    }
    VertexFunction scaled(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) scaled[i] = x[i] / norm;
    Rat mu = tv_energy(g, scaled);
    auto cert = verify_eigenpair(g, mu, scaled);
    if (!cert) return std::nullopt;
    return EigenResult{mu, std::move(*cert)};
}

} // namespace onelap
