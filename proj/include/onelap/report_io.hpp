#pragma once

#include <string>

#include "onelap/cheeger.hpp"
#include "onelap/eigen_verify.hpp"
#include "onelap/graph.hpp"
#include "onelap/linear.hpp"
#include "onelap/spectrum.hpp"

namespace onelap {

// All writers are deterministic: fixed key order, rationals as "p/q" (or "p"
// for integers), floats with 12 significant digits.

std::string format_float(double value);
std::string pattern_string(const TernaryPattern& p); // e.g. "++-0"

std::string certificate_to_json(const Graph& g, const Certificate& cert);

std::string spectrum_to_json(const Graph& g, const SpectrumReport& report);
std::string spectrum_to_csv(const Graph& g, const SpectrumReport& report); // one row per (eigenvalue, pattern)
std::string spectrum_to_text(const Graph& g, const SpectrumReport& report);

std::string cut_to_json(const Cut& cut);
std::string cut_to_csv(const Cut& cut);
std::string cut_to_text(const Cut& cut);

struct ComparisonRow {
    std::string graph; // input label: generator spec or file name
    int n = 0;
    int m = 0;
    Rat mu2;
    Rat h;
    double lambda2 = 0.0;
    bool cheeger_inequality_ok = false;
};

std::string comparison_to_json(const ComparisonRow& row);
std::string comparison_to_csv(const ComparisonRow& row); // includes header row
std::string comparison_to_text(const ComparisonRow& row);

} // namespace onelap
