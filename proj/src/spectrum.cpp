#include "onelap/spectrum.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace onelap {

namespace {

struct Hit {
    std::int64_t index = 0;
    Rat mu;
    Certificate certificate;
};

TernaryPattern decode_pattern(std::int64_t index, int n) {
    TernaryPattern p;
    p.sign.resize(n);
    for (int i = 0; i < n; ++i) {
        int digit = static_cast<int>(index % 3);
        index /= 3;
        p.sign[i] = digit == 2 ? -1 : static_cast<std::int8_t>(digit);
    }
    return p;
}

// Scans pattern indices [begin, end); canonical patterns only (first nonzero
// entry must be +1, which halves the space).
void scan_range(const Graph& g, const EnumConfig& config, std::int64_t begin, std::int64_t end,
                std::vector<Hit>& out) {
    int n = g.n;
    std::vector<int> sign(n);
    for (std::int64_t index = begin; index < end; ++index) {
        std::int64_t rest = index;
        bool canonical = false, decided = false;
        for (int i = 0; i < n; ++i) {
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
        for (int i = 0; i < n; ++i) {
            (sign[i] > 0 ? delta_pos : sign[i] < 0 ? delta_neg : delta_zero) += g.degree[i];
        }
        std::int64_t tv_numerator = 0;
        for (auto [u, v] : g.edges) {
            int gap = sign[u] - sign[v];
            tv_numerator += gap < 0 ? -gap : gap;
        }
        if (config.median_filter && tv_numerator != 0) {
            std::int64_t gap = delta_pos - delta_neg;
            if (gap < 0) gap = -gap;
            if (gap > delta_zero) continue;
        }

        std::int64_t delta = delta_pos + delta_neg;
        Rat mu(tv_numerator, delta);
        VertexFunction x(n);
        for (int i = 0; i < n; ++i) x[i] = Rat(sign[i], delta);
        auto cert = verify_eigenpair(g, mu, x);
        if (cert) {
            out.push_back({index, mu, std::move(*cert)});
        }
    }
}

} // namespace

SpectrumReport enumerate_spectrum(const Graph& g, const EnumConfig& config) {
    if (g.n > config.max_n) {
        throw Error(ErrorCode::TooLarge,
                    "n = " + std::to_string(g.n) + " exceeds max_n = " + std::to_string(config.max_n));
    }
    std::int64_t total = 1;
    for (int i = 0; i < g.n; ++i) total *= 3;

    std::int64_t chunk = std::max(1, config.chunk_size);
    std::int64_t chunk_count = (total - 1 + chunk - 1) / chunk;
    std::vector<std::vector<Hit>> per_chunk(static_cast<std::size_t>(chunk_count));

    int threads = std::max(1, config.threads);
    if (threads == 1) {
        for (std::int64_t c = 0; c < chunk_count; ++c) {
            std::int64_t begin = 1 + c * chunk;
            scan_range(g, config, begin, std::min(total, begin + chunk), per_chunk[c]);
        }
    } else {
        std::atomic<std::int64_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::int64_t c = next.fetch_add(1);
                if (c >= chunk_count) break;
                std::int64_t begin = 1 + c * chunk;
                scan_range(g, config, begin, std::min(total, begin + chunk), per_chunk[c]);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::map<Rat, EigenvalueEntry> grouped;
    for (auto& bucket : per_chunk) {
        for (auto& hit : bucket) {
            auto [it, inserted] = grouped.try_emplace(hit.mu);
            EigenvalueEntry& entry = it->second;
            if (inserted) {
                entry.mu = hit.mu;
                entry.representative = std::move(hit.certificate);
            }
            entry.patterns.push_back(decode_pattern(hit.index, g.n));
            entry.pattern_count++;
        }
    }

    SpectrumReport report;
    report.n = g.n;
    report.m = g.edge_count();
    report.components = connected_components(g).count;
    report.eigenvalues.reserve(grouped.size());
    for (auto& [mu, entry] : grouped) {
        report.eigenvalues.push_back(std::move(entry));
    }
    return report;
}

Rat second_eigenvalue(const SpectrumReport& report) {
    if (report.components != 1) {
        throw Error(ErrorCode::Disconnected,
                    "second eigenvalue needs a connected graph, got " +
                        std::to_string(report.components) + " components");
    }
    for (const auto& entry : report.eigenvalues) {
        if (!entry.mu.is_zero()) return entry.mu;
    }
    throw Error(ErrorCode::TooSmall, "spectrum has no nonzero eigenvalue");
}

std::vector<Rat> path_spectrum_oracle(int n) {
    if (n < 2) throw Error(ErrorCode::TooSmall, "path needs n >= 2");
    std::vector<Rat> spectrum{Rat(0)};
    // Interior eigenvalues come from constant-sign blocks. A block of p
    // vertices anchored at an endpoint telescopes z to (2p - 1) mu = 1 and
    // fits when 2p <= n, giving the odd reciprocals up to 1/3. A block of k
    // vertices strictly inside forces k mu = 1 instead and needs
    // ceil((k + 1) / 2) null vertices on each side to absorb the unit z at
    // its boundary, so even reciprocals appear once 2k + 2 <= n.
    for (int k = 3; k <= n - 1; k += 2) spectrum.emplace_back(1, k);
    for (int k = 2; 2 * k + 2 <= n; k += 2) spectrum.emplace_back(1, k);
    std::sort(spectrum.begin(), spectrum.end());
    spectrum.emplace_back(1);
    return spectrum;
}

std::vector<Rat> cycle_spectrum_oracle(int n) {
    if (n < 3) throw Error(ErrorCode::TooSmall, "cycle needs n >= 3");
    std::vector<Rat> spectrum{Rat(0)};
    for (int k = n / 2; k >= 2; --k) {
        spectrum.emplace_back(1, k);
    }
    std::sort(spectrum.begin(), spectrum.end());
    spectrum.emplace_back(1);
    return spectrum;
}

std::vector<Rat> complete_spectrum_oracle(int n) {
    if (n < 3) throw Error(ErrorCode::TooSmall, "complete graph needs n >= 3");
    std::vector<Rat> spectrum{Rat(0)};
    int r = n / 2;
    for (int k = 0; k + 2 <= r; ++k) {
        int numerator = n % 2 == 0 ? r + k : r + k + 1;
        spectrum.emplace_back(numerator, n - 1);
    }
    spectrum.emplace_back(1);
    return spectrum;
}

std::vector<Rat> star_spectrum_oracle(int n) {
    if (n < 2) throw Error(ErrorCode::TooSmall, "star needs n >= 2");
    return {Rat(0), Rat(1)};
}

std::int64_t zero_eigenvalue_patterns(const Graph& g) {
    int r = connected_components(g).count;
    std::int64_t power = 1;
    for (int i = 0; i < r; ++i) power *= 3;
    return (power - 1) / 2;
}

} // namespace onelap
