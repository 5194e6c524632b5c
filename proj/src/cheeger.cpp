#include "onelap/cheeger.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace onelap {

namespace {

void require_connected(const Graph& g, const char* what) {
    if (connected_components(g).count != 1) {
        throw Error(ErrorCode::Disconnected, std::string(what) + " needs a connected graph");
    }
}

struct MaskCut {
    std::int64_t boundary = -1;
    std::int64_t min_vol = 1;
    std::uint32_t mask = 0;

    // Strict ratio improvement; the scan order (ascending masks) settles ties.
    bool better_than(const MaskCut& other) const {
        if (other.boundary < 0) return true;
        return boundary * other.min_vol < other.boundary * min_vol;
    }
};

MaskCut best_cut_in_range(const Graph& g, std::uint32_t begin, std::uint32_t end) {
    MaskCut best;
    std::int64_t total_volume = g.total_degree();
    for (std::uint32_t mask = begin; mask < end; mask += 2) {
        std::int64_t boundary = 0;
        for (auto [u, v] : g.edges) {
            boundary += ((mask >> u) ^ (mask >> v)) & 1u;
        }
        std::int64_t vol = 0;
        for (int i = 0; i < g.n; ++i) {
            if ((mask >> i) & 1u) vol += g.degree[i];
        }
        MaskCut candidate{boundary, std::min(vol, total_volume - vol), mask};
        if (candidate.better_than(best)) best = candidate;
    }
    return best;
}

Cut cut_from_mask(const Graph& g, std::uint32_t mask) {
    Cut cut;
    for (int i = 0; i < g.n; ++i) {
        if ((mask >> i) & 1u) {
            cut.subset.push_back(i);
            cut.vol_s += g.degree[i];
        }
    }
    cut.vol_sbar = g.total_degree() - cut.vol_s;
    for (auto [u, v] : g.edges) {
        cut.boundary_size += ((mask >> u) ^ (mask >> v)) & 1u;
    }
    cut.ratio = Rat(cut.boundary_size, std::min(cut.vol_s, cut.vol_sbar));
    return cut;
}

} // namespace

Cut cheeger_exact(const Graph& g, int max_n, int threads) {
    require_connected(g, "cheeger constant");
    if (g.n > max_n || g.n > 24) {
        throw Error(ErrorCode::TooLarge, "n = " + std::to_string(g.n) + " exceeds the subset scan guard");
    }

    // Masks with bit 0 set cover each unordered cut exactly once; the full
    // mask is excluded because the complement must be nonempty.
    std::uint32_t full = (1u << g.n) - 1;
    MaskCut best;
    threads = std::max(1, threads);
    if (threads == 1 || full <= 4096) {
        best = best_cut_in_range(g, 1, full);
    } else {
        std::uint32_t chunk = 4096;
        std::uint32_t chunk_count = (full - 1 + chunk - 1) / chunk;
        std::vector<MaskCut> per_chunk(chunk_count);
        std::atomic<std::uint32_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::uint32_t c = next.fetch_add(1);
                if (c >= chunk_count) break;
                std::uint32_t begin = 1 + c * chunk;
                per_chunk[c] = best_cut_in_range(g, begin, std::min(full, begin + chunk));
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
        for (const MaskCut& candidate : per_chunk) {
            if (candidate.boundary >= 0 && candidate.better_than(best)) best = candidate;
        }
    }
    return cut_from_mask(g, best.mask);
}

PiMinimum mu2_via_pi_min(const Graph& g, const EnumConfig& config) {
    require_connected(g, "pi minimization");
    if (g.n > config.max_n) {
        throw Error(ErrorCode::TooLarge,
                    "n = " + std::to_string(g.n) + " exceeds max_n = " + std::to_string(config.max_n));
    }

    std::int64_t total = 1;
    for (int i = 0; i < g.n; ++i) total *= 3;

    // The minimum over the median region is attained at a pattern function,
    // so scanning the canonical patterns suffices. No certification needed.
    bool have_best = false;
    Rat best_mu;
    std::int64_t best_index = 0;
    std::vector<int> sign(g.n);
    for (std::int64_t index = 1; index < total; ++index) {
        std::int64_t rest = index;
        bool canonical = false, decided = false;
        for (int i = 0; i < g.n; ++i) {
            int digit = static_cast<int>(rest % 3);
            rest /= 3;
            sign[i] = digit == 2 ? -1 : digit;
            if (!decided && digit != 0) {
                canonical = digit == 1;
                decided = true;
            }
        }
        if (!canonical) continue;

        std::int64_t delta_pos = 0, delta_neg = 0, delta_zero = 0;
        for (int i = 0; i < g.n; ++i) {
            (sign[i] > 0 ? delta_pos : sign[i] < 0 ? delta_neg : delta_zero) += g.degree[i];
        }
        std::int64_t gap = delta_pos - delta_neg;
        if (gap < 0) gap = -gap;
        if (gap > delta_zero) continue;

        std::int64_t tv_numerator = 0;
        for (auto [u, v] : g.edges) {
            int diff = sign[u] - sign[v];
            tv_numerator += diff < 0 ? -diff : diff;
        }
        Rat mu(tv_numerator, delta_pos + delta_neg);
        if (!have_best || mu < best_mu) {
            have_best = true;
            best_mu = mu;
            best_index = index;
        }
    }

    PiMinimum result;
    result.mu = best_mu;
    result.pattern.sign.resize(g.n);
    for (int i = 0; i < g.n; ++i) {
        int digit = static_cast<int>(best_index % 3);
        best_index /= 3;
        result.pattern.sign[i] = digit == 2 ? -1 : static_cast<std::int8_t>(digit);
    }
    return result;
}

namespace {

// Shared threshold scan: `order` lists vertices sorted by level, ascending;
// `group_end[j]` marks the end of the j-th equal-level block.
Cut sweep_over_order(const Graph& g, const std::vector<int>& order,
                     const std::vector<int>& group_end) {
    std::int64_t total_volume = g.total_degree();
    std::vector<char> in_subset(g.n, 0);
    Cut best;
    bool have_best = false;
    // Thresholds sit between consecutive blocks; the subset is the strictly
    // larger side, scanned from largest subset to smallest.
    int blocks = static_cast<int>(group_end.size());
    for (int j = 0; j + 1 < blocks; ++j) {
        std::fill(in_subset.begin(), in_subset.end(), 0);
        for (int k = group_end[j]; k < g.n; ++k) in_subset[order[k]] = 1;
        std::int64_t boundary = 0;
        for (auto [u, v] : g.edges) {
            boundary += in_subset[u] != in_subset[v];
        }
        std::int64_t vol = 0;
        for (int i = 0; i < g.n; ++i) {
            if (in_subset[i]) vol += g.degree[i];
        }
        std::int64_t min_vol = std::min(vol, total_volume - vol);
        if (!have_best || boundary * std::min(best.vol_s, best.vol_sbar) <
                              best.boundary_size * min_vol) {
            have_best = true;
            best.subset.clear();
            for (int i = 0; i < g.n; ++i) {
                if (in_subset[i]) best.subset.push_back(i);
            }
            best.boundary_size = boundary;
            best.vol_s = vol;
            best.vol_sbar = total_volume - vol;
        }
    }
    best.ratio = Rat(best.boundary_size, std::min(best.vol_s, best.vol_sbar));
    return best;
}

template <typename Value>
Cut sweep_impl(const Graph& g, const std::vector<Value>& y) {
    if (static_cast<int>(y.size()) != g.n) {
        throw Error(ErrorCode::LengthMismatch, "sweep function length does not match the graph");
    }
    std::vector<int> order(g.n);
    for (int i = 0; i < g.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (y[a] != y[b]) return y[a] < y[b];
        return a < b;
    });
    std::vector<int> group_end;
    for (int k = 0; k < g.n; ++k) {
        if (k + 1 == g.n || y[order[k]] != y[order[k + 1]]) group_end.push_back(k + 1);
    }
    if (group_end.size() < 2) {
        throw Error(ErrorCode::ConstantVector, "sweep needs a non-constant function");
    }
    return sweep_over_order(g, order, group_end);
}

} // namespace

Cut sweep_cut(const Graph& g, const VertexFunction& y) { return sweep_impl(g, y); }

Cut sweep_cut(const Graph& g, const std::vector<double>& y) { return sweep_impl(g, y); }

std::pair<Rat, Rat> eigenvalue_range_bound(const Graph& g) {
    require_connected(g, "eigenvalue range bound");
    if (g.n < 3) {
        throw Error(ErrorCode::TooSmall, "eigenvalue range bound needs n >= 3");
    }
    return {Rat(2, g.total_degree()), Rat(g.n - 2, g.n - 1)};
}

Rat group_upper_bound(const Graph& g, const std::vector<int>& group_a,
                      const std::vector<int>& group_b) {
    if (group_a.empty() || group_b.empty()) {
        throw Error(ErrorCode::HypothesisViolated, "groups must be nonempty");
    }
    std::vector<int> membership(g.n, 0);
    auto place = [&](const std::vector<int>& group, int tag) {
        for (int v : group) {
            if (v < 0 || v >= g.n) {
                throw Error(ErrorCode::VertexOutOfRange, "group vertex " + std::to_string(v));
            }
            if (membership[v] != 0) {
                throw Error(ErrorCode::HypothesisViolated,
                            "vertex " + std::to_string(v) + " used twice");
            }
            membership[v] = tag;
        }
    };
    place(group_a, 1);
    place(group_b, 2);

    std::int64_t vol_a = 0, vol_b = 0;
    for (int i = 0; i < g.n; ++i) {
        if (membership[i] == 1) vol_a += g.degree[i];
        else if (membership[i] == 2) vol_b += g.degree[i];
    }
    if (vol_a != vol_b) {
        throw Error(ErrorCode::HypothesisViolated,
                    "group volumes differ: " + std::to_string(vol_a) + " vs " + std::to_string(vol_b));
    }
    bool internal_edge = false;
    for (auto [u, v] : g.edges) {
        if (membership[u] != 0 && membership[u] == membership[v]) {
            internal_edge = true;
            break;
        }
    }
    if (!internal_edge) {
        throw Error(ErrorCode::HypothesisViolated, "no edge inside either group");
    }
    return Rat(2 * vol_a - 1, 2 * vol_a);
}

} // namespace onelap
