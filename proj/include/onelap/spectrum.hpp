#pragma once

#include <cstdint>
#include <vector>

#include "onelap/eigen_verify.hpp"
#include "onelap/graph.hpp"
#include "onelap/tv.hpp"

namespace onelap {

struct EnumConfig {
    int max_n = 16;       // guard: 3^n patterns get scanned
    int chunk_size = 4096; // patterns per work unit; fixed chunking keeps
                           // output independent of the thread count
    int threads = 1;
    // Skip the flow solve for patterns that violate the weighted-median
    // condition, which no eigenvector with nonzero eigenvalue can. Exposed so
    // tests can confirm the shortcut never changes the result.
    bool median_filter = true;
};

struct EigenvalueEntry {
    Rat mu;
    std::int64_t pattern_count = 0;
    std::vector<TernaryPattern> patterns; // certified, in enumeration order
    Certificate representative;           // certificate of the first pattern
};

struct SpectrumReport {
    int n = 0;
    int m = 0;
    int components = 0;
    std::vector<EigenvalueEntry> eigenvalues; // strictly increasing in mu; 0 always present
};

// Scans all (3^n - 1) / 2 canonical ternary patterns, certifying each
// candidate (mu = total variation of the pattern function) with the flow
// verifier. Errors: TooLarge.
SpectrumReport enumerate_spectrum(const Graph& g, const EnumConfig& config = {});

// Smallest nonzero eigenvalue of a connected graph's report. Errors:
// Disconnected.
Rat second_eigenvalue(const SpectrumReport& report);

// Closed-form spectra for the generator families, used as independent checks
// on the enumerator. Bounds mirror the generators'.
std::vector<Rat> path_spectrum_oracle(int n);
std::vector<Rat> cycle_spectrum_oracle(int n);
std::vector<Rat> complete_spectrum_oracle(int n);
std::vector<Rat> star_spectrum_oracle(int n);

// Number of canonical patterns certified at eigenvalue 0: (3^r - 1) / 2 for a
// graph with r connected components.
std::int64_t zero_eigenvalue_patterns(const Graph& g);

} // namespace onelap
