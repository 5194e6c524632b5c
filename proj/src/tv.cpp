#include "onelap/tv.hpp"

#include <algorithm>

namespace onelap {

namespace {

void require_length(const Graph& g, const VertexFunction& x) {
    if (static_cast<int>(x.size()) != g.n) {
        throw Error(ErrorCode::LengthMismatch,
                    "vertex function has " + std::to_string(x.size()) + " entries, graph has " +
                        std::to_string(g.n) + " vertices");
    }
}

// Collects the connected components of {i : sign[i] == wanted}, each sorted,
// ordered by smallest vertex id.
std::vector<std::vector<int>> support_components(const Graph& g, const std::vector<int>& sign,
                                                 int wanted) {
    std::vector<std::vector<int>> domains;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack;
    for (int start = 0; start < g.n; ++start) {
        if (seen[start] || sign[start] != wanted) continue;
        std::vector<int> domain;
        stack.push_back(start);
        seen[start] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            domain.push_back(u);
            for (auto [v, e] : g.adjacency[u]) {
                (void)e;
                if (!seen[v] && sign[v] == wanted) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        std::sort(domain.begin(), domain.end());
        domains.push_back(std::move(domain));
    }
    return domains;
}

} // namespace

bool TernaryPattern::is_canonical() const {
    for (std::int8_t s : sign) {
        if (s > 0) return true;
        if (s < 0) return false;
    }
    return false; // all zero
}

Rat weighted_norm(const Graph& g, const VertexFunction& x) {
    require_length(g, x);
    Rat total;
    for (int i = 0; i < g.n; ++i) {
        total += x[i].abs() * Rat(g.degree[i]);
    }
    return total;
}

Rat tv_energy(const Graph& g, const VertexFunction& x) {
    require_length(g, x);
    Rat total;
    for (auto [u, v] : g.edges) {
        total += (x[u] - x[v]).abs();
    }
    return total;
}

NodalDecomposition nodal_decomposition(const Graph& g, const VertexFunction& x) {
    require_length(g, x);
    std::vector<int> sign(g.n);
    NodalDecomposition dec;
    for (int i = 0; i < g.n; ++i) {
        sign[i] = x[i].sign();
        if (sign[i] > 0) dec.delta_pos += g.degree[i];
        else if (sign[i] < 0) dec.delta_neg += g.degree[i];
        else {
            dec.delta_zero += g.degree[i];
            dec.null_set.push_back(i);
        }
    }
    dec.pos_domains = support_components(g, sign, 1);
    dec.neg_domains = support_components(g, sign, -1);
    return dec;
}

bool in_pi(const Graph& g, const VertexFunction& x) {
    if (weighted_norm(g, x) != Rat(1)) {
        throw Error(ErrorCode::NotOnX, "function is not on the unit sphere of the weighted norm");
    }
    std::int64_t delta_pos = 0, delta_neg = 0, delta_zero = 0;
    for (int i = 0; i < g.n; ++i) {
        int s = x[i].sign();
        (s > 0 ? delta_pos : s < 0 ? delta_neg : delta_zero) += g.degree[i];
    }
    std::int64_t gap = delta_pos - delta_neg;
    if (gap < 0) gap = -gap;
    return gap <= delta_zero;
}

VertexFunction normalize_eigenvector(const Graph& g, const VertexFunction& x) {
    require_length(g, x);
    std::int64_t delta = 0;
    for (int i = 0; i < g.n; ++i) {
        if (!x[i].is_zero()) delta += g.degree[i];
    }
    if (delta == 0) {
        throw Error(ErrorCode::ZeroVector, "cannot normalize the zero function");
    }
    VertexFunction out(g.n);
    for (int i = 0; i < g.n; ++i) {
        out[i] = Rat(x[i].sign(), delta);
    }
    return out;
}

VertexFunction pattern_to_function(const Graph& g, const TernaryPattern& p) {
    if (static_cast<int>(p.sign.size()) != g.n) {
        throw Error(ErrorCode::LengthMismatch,
                    "pattern has " + std::to_string(p.sign.size()) + " entries, graph has " +
                        std::to_string(g.n) + " vertices");
    }
    std::int64_t delta = 0;
    for (int i = 0; i < g.n; ++i) {
        if (p.sign[i] != 0) delta += g.degree[i];
    }
    if (delta == 0) {
        throw Error(ErrorCode::AllZeroPattern, "pattern has empty support");
    }
    VertexFunction out(g.n);
    for (int i = 0; i < g.n; ++i) {
        out[i] = Rat(p.sign[i], delta);
    }
    return out;
}

Rat tv_energy_nodal(const Graph& g, const NodalDecomposition& dec, const std::vector<Rat>& levels) {
    int domains = dec.r_pos() + dec.r_neg();
    if (static_cast<int>(levels.size()) != domains) {
        throw Error(ErrorCode::LengthMismatch,
                    "expected " + std::to_string(domains) + " levels, got " +
                        std::to_string(levels.size()));
    }
    for (const Rat& level : levels) {
        if (level.sign() <= 0) {
            throw Error(ErrorCode::NonpositiveLevel, "domain level " + level.str());
        }
    }

    // domain_of[i]: index into levels for positive domains, r_pos + index for
    // negative domains, -1 on the null set.
    std::vector<int> domain_of(g.n, -1);
    std::vector<int> side(g.n, 0);
    for (int a = 0; a < dec.r_pos(); ++a) {
        for (int i : dec.pos_domains[a]) {
            domain_of[i] = a;
            side[i] = 1;
        }
    }
    for (int b = 0; b < dec.r_neg(); ++b) {
        for (int i : dec.neg_domains[b]) {
            domain_of[i] = dec.r_pos() + b;
            side[i] = -1;
        }
    }

    // Only edges that cross sides contribute: (+,-) edges add both levels,
    // (+,0) and (-,0) edges add the one nonzero level. Edges inside a domain
    // and null-null edges contribute nothing; distinct domains of the same
    // sign are never adjacent.
    Rat total;
    for (auto [u, v] : g.edges) {
        if (side[u] == side[v]) continue;
        if (side[u] != 0) total += levels[domain_of[u]];
        if (side[v] != 0) total += levels[domain_of[v]];
    }
    return total;
}

} // namespace onelap
