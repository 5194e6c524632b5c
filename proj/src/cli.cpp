#include "onelap/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "onelap/cheeger.hpp"
#include "onelap/eigen_verify.hpp"
#include "onelap/graph.hpp"
#include "onelap/linear.hpp"
#include "onelap/report_io.hpp"
#include "onelap/spectrum.hpp"

namespace onelap {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitTooLarge = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitNotEigen = 4;

struct CommonOptions {
    std::string in_path;
    std::string gen_spec;
    std::string out_path;
    std::string format = "json";
    int threads = 1;
    int max_n = 0; // 0 keeps the per-command default
};

int default_threads() {
    const char* env = std::getenv("ONELAP_THREADS");
    if (!env || !*env) return 1;
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 1 || value > 256) {
        throw Error(ErrorCode::ParseError, "ONELAP_THREADS must be a small positive integer");
    }
    return static_cast<int>(value);
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool takes_graph) {
    if (takes_graph) {
        cmd->add_option("--in", opt.in_path, "edge-list file (\"n m\" header, one \"u v\" per line)");
        cmd->add_option("--gen", opt.gen_spec,
                        "generated graph: path:N, cycle:N, complete:N, star:N, or petersen");
    }
    cmd->add_option("--out", opt.out_path, "write the result here instead of stdout");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--threads", opt.threads, "worker threads (default: ONELAP_THREADS or 1)");
    cmd->add_option("--max-n", opt.max_n, "override the size guard");
}

Graph generate_graph(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    if (name == "petersen") {
        if (colon != std::string::npos) {
            throw Error(ErrorCode::ParseError, "petersen takes no size");
        }
        return petersen_graph();
    }
    if (colon == std::string::npos) {
        throw Error(ErrorCode::ParseError, "generator spec '" + spec + "' needs name:N");
    }
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(spec.substr(colon + 1), &used);
        if (colon + 1 + used != spec.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw Error(ErrorCode::ParseError, "bad generator size in '" + spec + "'");
    }
    if (name == "path") return path_graph(n);
    if (name == "cycle") return cycle_graph(n);
    if (name == "complete") return complete_graph(n);
    if (name == "star") return star_graph(n);
    throw Error(ErrorCode::ParseError, "unknown generator '" + name + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Graph load_graph(const CommonOptions& opt) {
    if (opt.in_path.empty() == opt.gen_spec.empty()) {
        throw Error(ErrorCode::ParseError, "need exactly one of --in or --gen");
    }
    if (!opt.gen_spec.empty()) return generate_graph(opt.gen_spec);
    return parse_edge_list(read_file(opt.in_path));
}

std::string graph_label(const CommonOptions& opt) {
    return opt.gen_spec.empty() ? opt.in_path : opt.gen_spec;
}

void write_output(const CommonOptions& opt, const std::string& payload) {
    if (opt.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out || !(out << payload) || !out.flush()) {
        throw Error(ErrorCode::ParseError, "cannot write '" + opt.out_path + "'");
    }
}

EnumConfig enum_config(const CommonOptions& opt) {
    EnumConfig config;
    if (opt.max_n > 0) config.max_n = opt.max_n;
    config.threads = opt.threads;
    return config;
}

VertexFunction parse_vector_file(const std::string& text) {
    VertexFunction values;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        values.push_back(Rat::parse(line.substr(start, end - start + 1)));
    }
    return values;
}

int run_spectrum(const CommonOptions& opt) {
    Graph g = load_graph(opt);
    SpectrumReport report = enumerate_spectrum(g, enum_config(opt));
    if (opt.format == "json") write_output(opt, spectrum_to_json(g, report));
    else if (opt.format == "csv") write_output(opt, spectrum_to_csv(g, report));
    else write_output(opt, spectrum_to_text(g, report));
    return kExitOk;
}

int run_cheeger(const CommonOptions& opt) {
    Graph g = load_graph(opt);
    Cut cut = cheeger_exact(g, opt.max_n > 0 ? opt.max_n : 24, opt.threads);
    if (opt.format == "json") write_output(opt, cut_to_json(cut));
    else if (opt.format == "csv") write_output(opt, cut_to_csv(cut));
    else write_output(opt, cut_to_text(cut));
    return kExitOk;
}

int run_mu2(const CommonOptions& opt) {
    Graph g = load_graph(opt);
    PiMinimum result = mu2_via_pi_min(g, enum_config(opt));
    std::string payload;
    if (opt.format == "json") {
        payload = "{\"mu2\":\"" + result.mu.str() + "\",\"pattern\":[";
        for (std::size_t i = 0; i < result.pattern.sign.size(); ++i) {
            if (i) payload += ',';
            payload += std::to_string(static_cast<int>(result.pattern.sign[i]));
        }
        payload += "]}\n";
    } else if (opt.format == "csv") {
        payload = "mu2,pattern\n" + result.mu.str() + ',' + pattern_string(result.pattern) + '\n';
    } else {
        payload = "mu2 = " + result.mu.str() + "\npattern = " + pattern_string(result.pattern) + "\n";
    }
    write_output(opt, payload);
    return kExitOk;
}

int run_compare(const CommonOptions& opt) {
    Graph g = load_graph(opt);
    SpectrumReport report = enumerate_spectrum(g, enum_config(opt));
    ComparisonRow row;
    row.graph = graph_label(opt);
    row.n = g.n;
    row.m = g.edge_count();
    row.mu2 = second_eigenvalue(report);
    CheegerInequalityReport inequality = cheeger_inequality_check(g);
    row.h = inequality.h;
    row.lambda2 = inequality.lambda2;
    row.cheeger_inequality_ok = inequality.ok;
    if (opt.format == "json") write_output(opt, comparison_to_json(row));
    else if (opt.format == "csv") write_output(opt, comparison_to_csv(row));
    else write_output(opt, comparison_to_text(row));
    return row.mu2 == row.h ? kExitOk : kExitMismatch;
}

int run_verify(const CommonOptions& opt, const std::string& vec_path, const std::string& mu_text) {
    Graph g = load_graph(opt);
    VertexFunction x = parse_vector_file(read_file(vec_path));
    if (static_cast<int>(x.size()) != g.n) {
        throw Error(ErrorCode::LengthMismatch,
                    "vector has " + std::to_string(x.size()) + " entries, graph has " +
                        std::to_string(g.n) + " vertices");
    }

    Rat mu;
    std::optional<Certificate> cert;
    if (!mu_text.empty()) {
        mu = Rat::parse(mu_text);
        cert = verify_eigenpair(g, mu, x);
    } else if (auto result = is_eigenvector(g, x)) {
        mu = result->mu;
        cert = std::move(result->certificate);
    }
    if (!cert) {
        write_output(opt, "NOT-EIGEN\n");
        return kExitNotEigen;
    }
    if (opt.format == "json") {
        write_output(opt, certificate_to_json(g, *cert));
    } else if (opt.format == "csv") {
        std::string payload = "mu,edge_u,edge_v,z\n";
        for (int e = 0; e < g.edge_count(); ++e) {
            payload += mu.str() + ',' + std::to_string(g.edges[e].first) + ',' +
                       std::to_string(g.edges[e].second) + ',' + cert->z[e].str() + '\n';
        }
        write_output(opt, payload);
    } else {
        std::string payload = "EIGEN\nmu = " + mu.str() + "\n";
        for (int e = 0; e < g.edge_count(); ++e) {
            payload += "z[" + std::to_string(g.edges[e].first) + ',' +
                       std::to_string(g.edges[e].second) + "] = " + cert->z[e].str() + "\n";
        }
        write_output(opt, payload);
    }
    return kExitOk;
}

int run_gen(const CommonOptions& opt) {
    if (opt.gen_spec.empty()) {
        throw Error(ErrorCode::ParseError, "gen needs --gen");
    }
    Graph g = generate_graph(opt.gen_spec);
    std::string payload;
    if (opt.format == "json") {
        payload = "{\"n\":" + std::to_string(g.n) + ",\"m\":" + std::to_string(g.edge_count()) +
                  ",\"edges\":[";
        for (int e = 0; e < g.edge_count(); ++e) {
            if (e) payload += ',';
            payload += '[' + std::to_string(g.edges[e].first) + ',' +
                       std::to_string(g.edges[e].second) + ']';
        }
        payload += "]}\n";
    } else if (opt.format == "csv") {
        payload = "u,v\n";
        for (auto [u, v] : g.edges) {
            payload += std::to_string(u) + ',' + std::to_string(v) + '\n';
        }
    } else {
        payload = serialize_edge_list(g);
    }
    write_output(opt, payload);
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"spectrum, eigenvector certification, and Cheeger constants of the graph 1-Laplacian"};
    app.require_subcommand(1);

    CommonOptions opt;
    try {
        opt.threads = default_threads();
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    }

    auto* spectrum = app.add_subcommand("spectrum", "full eigenvalue scan with certificates");
    add_common(spectrum, opt, true);
    auto* cheeger = app.add_subcommand("cheeger", "exact isoperimetric constant");
    add_common(cheeger, opt, true);
    auto* mu2 = app.add_subcommand("mu2", "second eigenvalue via the median region");
    add_common(mu2, opt, true);
    auto* compare = app.add_subcommand("compare", "mu2 vs Cheeger constant vs linear lambda2");
    add_common(compare, opt, true);
    auto* verify = app.add_subcommand("verify", "certify a vector (optionally at a given mu)");
    add_common(verify, opt, true);
    std::string vec_path, mu_text;
    verify->add_option("--vec", vec_path, "vector file, one rational or decimal per line")
        ->required();
    verify->add_option("--mu", mu_text, "candidate eigenvalue (default: total variation)");
    auto* gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
    add_common(gen, opt, true);

    try {
        app.parse(argc, argv);
        // gen defaults to the edge-list format so its output feeds --in
        if (gen->parsed() && gen->count("--format") == 0) opt.format = "text";
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (spectrum->parsed()) return run_spectrum(opt);
        if (cheeger->parsed()) return run_cheeger(opt);
        if (mu2->parsed()) return run_mu2(opt);
        if (compare->parsed()) return run_compare(opt);
        if (verify->parsed()) return run_verify(opt, vec_path, mu_text);
        if (gen->parsed()) return run_gen(opt);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return e.code() == ErrorCode::TooLarge ? kExitTooLarge : kExitError;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

} // namespace onelap
