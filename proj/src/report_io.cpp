#include "onelap/report_io.hpp"

#include <cstdio>

namespace onelap {

namespace {

void append_int_list(std::string& out, const std::vector<int>& values) {
    out += '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    out += ']';
}

void append_pattern_json(std::string& out, const TernaryPattern& p) {
    out += '[';
    for (std::size_t i = 0; i < p.sign.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(static_cast<int>(p.sign[i]));
    }
    out += ']';
}

void append_certificate(std::string& out, const Graph& g, const Certificate& cert) {
    out += "{\"mu\":\"" + cert.mu.str() + "\",\"z\":[";
    for (int e = 0; e < g.edge_count(); ++e) {
        if (e) out += ',';
        out += "{\"edge\":[" + std::to_string(g.edges[e].first) + ',' +
               std::to_string(g.edges[e].second) + "],\"value\":\"" + cert.z[e].str() + "\"}";
    }
    out += "]}";
}

} // namespace

std::string format_float(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

std::string pattern_string(const TernaryPattern& p) {
    std::string s;
    s.reserve(p.sign.size());
    for (std::int8_t v : p.sign) {
        s += v > 0 ? '+' : v < 0 ? '-' : '0';
    }
    return s;
}

std::string certificate_to_json(const Graph& g, const Certificate& cert) {
    std::string out;
    append_certificate(out, g, cert);
    out += '\n';
    return out;
}

std::string spectrum_to_json(const Graph& g, const SpectrumReport& report) {
    std::string out = "{\"n\":" + std::to_string(report.n) + ",\"m\":" + std::to_string(report.m) +
                      ",\"components\":" + std::to_string(report.components) + ",\"eigenvalues\":[";
    for (std::size_t k = 0; k < report.eigenvalues.size(); ++k) {
        const EigenvalueEntry& entry = report.eigenvalues[k];
        if (k) out += ',';
        out += "{\"mu\":\"" + entry.mu.str() + "\",\"mu_float\":" +
               format_float(entry.mu.to_double()) + ",\"pattern_count\":" +
               std::to_string(entry.pattern_count) + ",\"patterns\":[";
        for (std::size_t i = 0; i < entry.patterns.size(); ++i) {
            if (i) out += ',';
            append_pattern_json(out, entry.patterns[i]);
        }
        out += "],\"certificate\":";
        append_certificate(out, g, entry.representative);
        out += '}';
    }
    out += "]}\n";
    return out;
}

std::string spectrum_to_csv(const Graph& g, const SpectrumReport& report) {
    (void)g;
    std::string out = "mu,mu_float,pattern\n";
    for (const EigenvalueEntry& entry : report.eigenvalues) {
        for (const TernaryPattern& p : entry.patterns) {
            out += entry.mu.str() + ',' + format_float(entry.mu.to_double()) + ',' +
                   pattern_string(p) + '\n';
        }
    }
    return out;
}

std::string spectrum_to_text(const Graph& g, const SpectrumReport& report) {
    (void)g;
    std::string out = "n = " + std::to_string(report.n) + ", m = " + std::to_string(report.m) +
                      ", components = " + std::to_string(report.components) + "\n";
    for (const EigenvalueEntry& entry : report.eigenvalues) {
        out += "mu = " + entry.mu.str() + " (" + format_float(entry.mu.to_double()) + "), " +
               std::to_string(entry.pattern_count) + " pattern" +
               (entry.pattern_count == 1 ? "" : "s") + "\n";
        for (const TernaryPattern& p : entry.patterns) {
            out += "  " + pattern_string(p) + "\n";
        }
    }
    return out;
}

namespace {

void append_cut_fields(std::string& out, const Cut& cut) {
    out += "\"h\":\"" + cut.ratio.str() + "\",\"subset\":";
    append_int_list(out, cut.subset);
    out += ",\"boundary\":" + std::to_string(cut.boundary_size) + ",\"vol\":[" +
           std::to_string(cut.vol_s) + ',' + std::to_string(cut.vol_sbar) + ']';
}

std::string join_vertices(const std::vector<int>& subset) {
    std::string s;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(subset[i]);
    }
    return s;
}

} // namespace

std::string cut_to_json(const Cut& cut) {
    std::string out = "{";
    append_cut_fields(out, cut);
    out += "}\n";
    return out;
}

std::string cut_to_csv(const Cut& cut) {
    return "h,subset,boundary,vol_s,vol_sbar\n" + cut.ratio.str() + ',' + join_vertices(cut.subset) +
           ',' + std::to_string(cut.boundary_size) + ',' + std::to_string(cut.vol_s) + ',' +
           std::to_string(cut.vol_sbar) + '\n';
}

std::string cut_to_text(const Cut& cut) {
    return "h = " + cut.ratio.str() + " (" + format_float(cut.ratio.to_double()) + ")\nsubset = {" +
           join_vertices(cut.subset) + "}\nboundary = " + std::to_string(cut.boundary_size) +
           "\nvolumes = " + std::to_string(cut.vol_s) + " / " + std::to_string(cut.vol_sbar) + "\n";
}

std::string comparison_to_json(const ComparisonRow& row) {
    std::string out = "{\"graph\":\"" + row.graph + "\",\"n\":" + std::to_string(row.n) +
                      ",\"m\":" + std::to_string(row.m) + ",\"mu2\":\"" + row.mu2.str() +
                      "\",\"h\":\"" + row.h.str() + "\",\"lambda2\":" + format_float(row.lambda2) +
                      ",\"cheeger_ineq_ok\":" + (row.cheeger_inequality_ok ? "true" : "false") +
                      "}\n";
    return out;
}

std::string comparison_to_csv(const ComparisonRow& row) {
    return "graph,n,m,mu2,h,lambda2,cheeger_ineq_ok\n" + row.graph + ',' + std::to_string(row.n) +
           ',' + std::to_string(row.m) + ',' + row.mu2.str() + ',' + row.h.str() + ',' +
           format_float(row.lambda2) + ',' + (row.cheeger_inequality_ok ? "1" : "0") + '\n';
}

std::string comparison_to_text(const ComparisonRow& row) {
    return "graph = " + row.graph + " (n = " + std::to_string(row.n) + ", m = " +
           std::to_string(row.m) + ")\nmu2 = " + row.mu2.str() + "\nh = " + row.h.str() +
           "\nlambda2 = " + format_float(row.lambda2) + "\ncheeger inequality " +
           (row.cheeger_inequality_ok ? "holds" : "FAILS") + "\n";
}

} // namespace onelap
